#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "colorlink/braid.hpp"
#include "colorlink/ccomplex.hpp"
#include "colorlink/determinant.hpp"
#include "colorlink/invariants.hpp"
#include "colorlink/laurent.hpp"
#include "colorlink/seifert.hpp"

namespace testing {

using namespace colorlink;

/// Running example: 4 strands, 3 colors, coloring read off the figure.
inline ColoredBraid running_example() { return parse_braid("[-2,-3,2,-3,-1,-2,-3]", 4, "0,1,2,0"); }

inline ColoredBraid trefoil() { return parse_braid("[1,1,1]", 2, "0,0"); }
inline ColoredBraid figure_eight() { return parse_braid("[1,-2,1,-2]", 3, "0,0,0"); }
inline ColoredBraid unknot() { return parse_braid("[]", 1, "0"); }
inline ColoredBraid hopf(int sign) {
  return parse_braid(sign > 0 ? "[1,1]" : "[-1,-1]", 2, "0,1");
}

/// Random braid with n in [min_strands, max_strands], |word| <= max_len and
/// mu <= max_mu colors distributed over the closure components.
inline ColoredBraid random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int max_len, int max_mu) {
  std::uniform_int_distribution<int> strands_dist(min_strands, max_strands);
  const int n = strands_dist(rng);
  std::vector<int> word;
  if (n > 1) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, n - 1);
    std::bernoulli_distribution sign_dist(0.5);
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) word.push_back(sign_dist(rng) ? gen_dist(rng) : -gen_dist(rng));
  }
  ColoredBraid probe{n, word, std::vector<int>(static_cast<std::size_t>(n), 0), 1};
  const auto orbits = braid_permutation(probe).orbits;
  const int mu = std::uniform_int_distribution<int>(1, std::min<int>(max_mu, static_cast<int>(orbits.size())))(rng);
  std::vector<int> orbit_color(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    orbit_color[i] = i < static_cast<std::size_t>(mu) ? static_cast<int>(i) : std::uniform_int_distribution<int>(0, mu - 1)(rng);
  std::shuffle(orbit_color.begin(), orbit_color.end(), rng);
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (int k : orbits[i]) colors[static_cast<std::size_t>(k - 1)] = orbit_color[i];
  return make_braid(n, std::move(word), std::move(colors));
}

/// Random permutation of 0..mu-1.
inline DragOrder random_drag(std::mt19937_64& rng, int mu) {
  DragOrder d = DragOrder::identity(mu);
  std::shuffle(d.order.begin(), d.order.end(), rng);
  return d;
}

/// Laplace expansion along the first row; test oracle for determinants.
inline LaurentPoly cofactor_det(const PolyMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m(0, 0);
  LaurentPoly total;
  for (Eigen::Index j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const LaurentPoly term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

/// Random Laurent polynomial with at most `max_terms` terms, exponents in [-2, 2].
inline LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int max_terms) {
  std::uniform_int_distribution<int> terms_dist(0, max_terms);
  std::uniform_int_distribution<int> exp_dist(-2, 2);
  std::uniform_int_distribution<int> coef_dist(-3, 3);
  LaurentPoly p(BigInt(0), nvars);
  const int terms = terms_dist(rng);
  for (int k = 0; k < terms; ++k) {
    Exponents e(static_cast<std::size_t>(nvars));
    for (int& x : e) x = exp_dist(rng);
    p += LaurentPoly::monomial(e, coef_dist(rng));
  }
  return p;
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, int size, int nvars, int max_terms) {
  PolyMatrix m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = random_poly(rng, nvars, max_terms);
  return m;
}

/// Full spine-to-potential route for a given drag order.
inline PotentialFunction potential_for(const ColoredBraid& braid, const DragOrder& drag, bool pairwise = false) {
  const DecoratedSpine spine = build_spine(braid, drag, pairwise);
  std::vector<int> chi;
  for (int c = 0; c < braid.mu; ++c) chi.push_back(chi_excluding(spine, c));
  return conway_potential(seifert_family(spine), complex_sign(spine), chi);
}

inline PotentialFunction potential_of(const ColoredBraid& braid) {
  return potential_for(braid, DragOrder::identity(braid.mu));
}

/// Braid keeping the given color labels (make_braid would renumber them by
/// first appearance, permuting the variables).
inline ColoredBraid same_labels(int strands, std::vector<int> word, std::vector<int> colors, int mu) {
  ColoredBraid b{strands, std::move(word), std::move(colors), mu};
  validate_coloring(b);
  return b;
}

/// Conjugate by a random generator u: w -> u w u^-1, recoloring start positions.
inline ColoredBraid conjugated(const ColoredBraid& b, std::mt19937_64& rng) {
  if (b.strands < 2) return b;
  const int k = std::uniform_int_distribution<int>(1, b.strands - 1)(rng);
  const int u = std::bernoulli_distribution(0.5)(rng) ? k : -k;
  std::vector<int> word{u};
  word.insert(word.end(), b.word.begin(), b.word.end());
  word.push_back(-u);
  std::vector<int> colors = b.colors;
  std::swap(colors[static_cast<std::size_t>(k - 1)], colors[static_cast<std::size_t>(k)]);
  return same_labels(b.strands, std::move(word), std::move(colors), b.mu);
}

/// Markov stabilization: add a strand on top and append +-n.
inline ColoredBraid stabilized(const ColoredBraid& b, int sign) {
  std::vector<int> word = b.word;
  word.push_back(sign * b.strands);
  std::vector<int> colors = b.colors;
  colors.push_back(b.colors.back());
  return same_labels(b.strands + 1, std::move(word), std::move(colors), b.mu);
}

/// Strip every factor (t_i - 1) and normalize: equality up to units of the
/// localized ring Z[t^{+-1}, (1 - t)^{-1}].
inline LaurentPoly strip_localized_units(LaurentPoly p) {
  if (p.is_zero()) return p;
  const int nvars = p.nvars();
  for (int i = 0; i < nvars; ++i) {
    const LaurentPoly factor = LaurentPoly::variable(i, nvars) - LaurentPoly(BigInt(1), nvars);
    while (true) {
      try {
        p = exact_div(p, factor);
      } catch (const NotDivisible&) {
        break;
      }
    }
  }
  return normalize_alexander(p);
}

}  // namespace testing
