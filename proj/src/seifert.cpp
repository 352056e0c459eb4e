#include "colorlink/seifert.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace colorlink {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Vertical position of a mark on the doubled integer line: vertices at even
// heights, push-off marks one unit above or below their vertex.
int vertex_height(int vertex) { return 2 * vertex; }
int pushoff_height(const DecoratedSpine& spine, int vertex, const SignTuple& eps) {
  return 2 * vertex + eps[at(spine.colors[at(vertex)])];
}

}  // namespace

std::vector<SignTuple> sign_tuples(int mu) {
  std::vector<SignTuple> out;
  const std::size_t count = std::size_t{1} << mu;
  for (std::size_t mask = 0; mask < count; ++mask) {
    SignTuple eps(at(mu));
    for (int i = 0; i < mu; ++i) eps[at(i)] = (mask >> (mu - 1 - i)) & 1U ? 1 : -1;
    out.push_back(std::move(eps));
  }
  return out;
}

const IntMatrix& SeifertFamily::matrix(const SignTuple& eps) const {
  const auto it = std::find(signs.begin(), signs.end(), eps);
  if (it == signs.end()) throw std::out_of_range("sign tuple not in family");
  return matrices[static_cast<std::size_t>(it - signs.begin())];
}

std::vector<OrientedCircuit> homology_basis(const DecoratedSpine& spine) {
  const int v = spine.vertex_count();
  // adjacency lists, in increasing edge order
  std::vector<std::vector<int>> incident(at(v));
  for (int e = 0; e < spine.edge_count(); ++e) {
    incident[at(spine.edges[at(e)].lower)].push_back(e);
    incident[at(spine.edges[at(e)].upper)].push_back(e);
  }

  std::vector<int> parent_edge(at(v), -1);
  std::vector<int> depth(at(v), -1);
  std::vector<bool> in_tree(at(spine.edge_count()), false);
  std::deque<int> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int e : incident[at(x)]) {
      const SpineEdge& edge = spine.edges[at(e)];
      const int y = edge.lower == x ? edge.upper : edge.lower;
      if (depth[at(y)] >= 0) continue;
      depth[at(y)] = depth[at(x)] + 1;
      parent_edge[at(y)] = e;
      in_tree[at(e)] = true;
      queue.push_back(y);
    }
  }

  auto step_to_parent = [&](int x) {
    const int e = parent_edge[at(x)];
    const SpineEdge& edge = spine.edges[at(e)];
    const int parent = edge.lower == x ? edge.upper : edge.lower;
    return std::pair{DirectedEdge{e, x == edge.lower ? Direction::Up : Direction::Down}, parent};
  };

  std::vector<OrientedCircuit> basis;
  for (int e = 0; e < spine.edge_count(); ++e) {
    if (in_tree[at(e)]) continue;
    const SpineEdge& edge = spine.edges[at(e)];
    OrientedCircuit circuit;
    circuit.steps.push_back({e, Direction::Up});
    // tree path upper -> lower: climb from both ends to the common ancestor
    std::vector<DirectedEdge> from_upper;
    std::vector<DirectedEdge> from_lower;
    int a = edge.upper;
    int b = edge.lower;
    while (a != b) {
      if (depth[at(a)] >= depth[at(b)]) {
        auto [step, next] = step_to_parent(a);
        from_upper.push_back(step);
        a = next;
      } else {
        auto [step, next] = step_to_parent(b);
        from_lower.push_back(step);
        b = next;
      }
    }
    circuit.steps.insert(circuit.steps.end(), from_upper.begin(), from_upper.end());
    for (auto it = from_lower.rbegin(); it != from_lower.rend(); ++it) circuit.steps.push_back(it->reversed());
    basis.push_back(std::move(circuit));
  }
  return basis;
}

int crossing_symbol(const DecoratedSpine& spine, DirectedEdge alpha, DirectedEdge beta, const SignTuple& eps) {
  int orientation = 1;
  if (alpha.dir == Direction::Down) orientation = -orientation;
  if (beta.dir == Direction::Down) orientation = -orientation;

  const SpineEdge& a = spine.edges[at(alpha.edge)];
  const SpineEdge& b = spine.edges[at(beta.edge)];
  const int u1 = pushoff_height(spine, a.lower, eps);
  const int u2 = pushoff_height(spine, a.upper, eps);
  const int v1 = vertex_height(b.lower);
  const int v2 = vertex_height(b.upper);

  const bool v_first = v1 < u1 && u1 < v2 && v2 < u2;
  const bool u_first = u1 < v1 && v1 < u2 && u2 < v2;
  if (!v_first && !u_first) return 0;

  int value = 0;
  if (alpha.edge == beta.edge) {
    // alternation forces the same push-off sign at both endpoints
    const int side = eps[at(spine.colors[at(a.lower)])];
    if (a.sign < 0) value = side > 0 ? 1 : 0;
    else value = side < 0 ? -1 : 0;
  } else {
    // beta passes over the push-off of alpha only when alpha is further left
    if (alpha.edge > beta.edge) return 0;
    value = v_first ? 1 : -1;
  }
  return orientation * value;
}

int linking(const DecoratedSpine& spine, const OrientedCircuit& gamma, const OrientedCircuit& delta,
            const SignTuple& eps) {
  int total = 0;
  for (const DirectedEdge& alpha : gamma.steps)
    for (const DirectedEdge& beta : delta.steps) total += crossing_symbol(spine, alpha, beta, eps);
  return total;
}

SeifertFamily seifert_family(const DecoratedSpine& spine) {
  SeifertFamily family;
  family.mu = spine.mu;
  family.pairwise = spine.pairwise;
  family.basis = homology_basis(spine);
  family.signs = sign_tuples(spine.mu);
  const auto g = static_cast<Eigen::Index>(family.basis.size());
  for (const SignTuple& eps : family.signs) {
    IntMatrix m(g, g);
    for (Eigen::Index i = 0; i < g; ++i)
      for (Eigen::Index j = 0; j < g; ++j)
        m(i, j) = linking(spine, family.basis[static_cast<std::size_t>(i)], family.basis[static_cast<std::size_t>(j)], eps);
    family.matrices.push_back(std::move(m));
  }
  return family;
}

int complex_sign(const DecoratedSpine& spine) {
  int sign = 1;
  for (const SpineEdge& e : spine.edges)
    if (spine.is_clasp(e)) sign *= e.sign;
  return sign;
}

int chi_excluding(const DecoratedSpine& spine, int color) {
  if (color < 0 || color >= spine.mu) throw std::out_of_range("color out of range");
  int chi = 0;
  for (int c : spine.colors)
    if (c != color) ++chi;
  for (const SpineEdge& e : spine.edges)
    if (spine.colors[at(e.lower)] != color && spine.colors[at(e.upper)] != color) --chi;
  return chi;
}

}  // namespace colorlink
