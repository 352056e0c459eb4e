#pragma once

#include <vector>

#include <Eigen/Core>

#include "colorlink/ccomplex.hpp"

namespace colorlink {

enum class Direction { Up, Down };

/// An edge of the spine traversed upward (lower -> upper vertex) or downward.
struct DirectedEdge {
  int edge;
  Direction dir;

  DirectedEdge reversed() const { return {edge, dir == Direction::Up ? Direction::Down : Direction::Up}; }
  bool operator==(const DirectedEdge&) const = default;
};

/// Closed walk in the spine.
struct OrientedCircuit {
  std::vector<DirectedEdge> steps;

  bool operator==(const OrientedCircuit&) const = default;
};

/// epsilon in {-1,+1}^mu, indexed by color.
using SignTuple = std::vector<int>;

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// All 2^mu sign tuples in lexicographic order with -1 < +1.
std::vector<SignTuple> sign_tuples(int mu);

/// Generalized Seifert matrices A^eps[i][j] = lk(gamma_i^eps, gamma_j) in a
/// fixed homology basis, one per sign tuple (same order as sign_tuples(mu)).
struct SeifertFamily {
  int mu = 1;
  bool pairwise = false;
  std::vector<OrientedCircuit> basis;
  std::vector<SignTuple> signs;
  std::vector<IntMatrix> matrices;

  int rank() const { return static_cast<int>(basis.size()); }
  const IntMatrix& matrix(const SignTuple& eps) const;
};

/// One circuit per edge outside a breadth-first spanning tree rooted at
/// vertex 0 (lowest edge index first). Each circuit starts with its non-tree
/// edge traversed upward and returns along the tree.
std::vector<OrientedCircuit> homology_basis(const DecoratedSpine& spine);

/// Signed count of crossings of beta over the eps-push-off of alpha, read off
/// the spine drawn with all vertices to the right of all edges.
int crossing_symbol(const DecoratedSpine& spine, DirectedEdge alpha, DirectedEdge beta, const SignTuple& eps);

/// lk(gamma^eps, delta) as a sum of crossing symbols over all edge pairs.
int linking(const DecoratedSpine& spine, const OrientedCircuit& gamma, const OrientedCircuit& delta,
            const SignTuple& eps);

SeifertFamily seifert_family(const DecoratedSpine& spine);

/// Product of the handedness signs of all clasps (+1 when there are none).
int complex_sign(const DecoratedSpine& spine);

/// Euler characteristic of the union of all surfaces not of the given color.
int chi_excluding(const DecoratedSpine& spine, int color);

}  // namespace colorlink
