#include <cstdlib>
#include <numeric>
#include <set>

#include "colorlink/determinant.hpp"
#include "colorlink/invariants.hpp"

namespace colorlink {

namespace {

struct WirtingerCrossing {
  int over;
  int incoming;
  int outgoing;
  int sign;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

LaurentPoly oracle_alexander(const ColoredBraid& braid) {
  const int n = braid.strands;
  const int m = static_cast<int>(braid.word.size());
  if (n > 6 || m > 14) throw FixtureTooLarge("Fox-calculus oracle is limited to 6 strands and 14 crossings");
  const int mu = braid.mu;

  if (m == 0) return n == 1 ? LaurentPoly(BigInt(1), mu) : LaurentPoly(BigInt(0), mu);
  std::set<int> generators;
  for (int s : braid.word) generators.insert(std::abs(s));
  if (static_cast<int>(generators.size()) != n - 1) return LaurentPoly(BigInt(0), mu);  // split diagram

  // Arcs of the closed diagram: one per strand start, plus one after every undercrossing.
  std::vector<int> arc_color(braid.colors.begin(), braid.colors.end());
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 0);
  std::vector<WirtingerCrossing> crossings;
  for (int s : braid.word) {
    const int p = std::abs(s) - 1;
    const int over_pos = s > 0 ? p + 1 : p;
    const int under_pos = s > 0 ? p : p + 1;
    const int incoming = current[static_cast<std::size_t>(under_pos)];
    const int outgoing = static_cast<int>(arc_color.size());
    arc_color.push_back(arc_color[static_cast<std::size_t>(incoming)]);
    crossings.push_back({current[static_cast<std::size_t>(over_pos)], incoming, outgoing, s > 0 ? 1 : -1});
    current[static_cast<std::size_t>(under_pos)] = outgoing;
    std::swap(current[static_cast<std::size_t>(p)], current[static_cast<std::size_t>(p + 1)]);
  }
  std::vector<int> parent(arc_color.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int p = 0; p < n; ++p) parent[static_cast<std::size_t>(find_root(parent, current[static_cast<std::size_t>(p)]))] = find_root(parent, p);

  std::vector<int> column(arc_color.size(), -1);
  int arcs = 0;
  for (std::size_t a = 0; a < arc_color.size(); ++a) {
    const int root = find_root(parent, static_cast<int>(a));
    if (column[static_cast<std::size_t>(root)] < 0) column[static_cast<std::size_t>(root)] = arcs++;
  }
  // A component that never passes under anything can be lifted off: split link.
  if (arcs != m) return LaurentPoly(BigInt(0), mu);

  auto col = [&](int arc) { return column[static_cast<std::size_t>(find_root(parent, arc))]; };
  auto t = [&](int arc, int power = 1) {
    return LaurentPoly::variable(arc_color[static_cast<std::size_t>(arc)], mu, power);
  };
  const LaurentPoly one(BigInt(1), mu);

  // Fox derivatives of r = x a x^-1 b^-1 (positive) or x^-1 a x b^-1 (negative),
  // abelianized by color.
  PolyMatrix fox = PolyMatrix::Constant(m, arcs, LaurentPoly(BigInt(0), mu));
  for (int r = 0; r < m; ++r) {
    const WirtingerCrossing& c = crossings[static_cast<std::size_t>(r)];
    if (c.sign > 0) {
      fox(r, col(c.over)) += one - t(c.incoming);
      fox(r, col(c.incoming)) += t(c.over);
    } else {
      fox(r, col(c.over)) += t(c.over, -1) * (t(c.incoming) - one);
      fox(r, col(c.incoming)) += t(c.over, -1);
    }
    fox(r, col(c.outgoing)) -= one;
  }

  // Drop the last (redundant) relation and the column of arc 0.
  const PolyMatrix minor = fox.block(0, 1, m - 1, arcs - 1);
  LaurentPoly det = bareiss_det(minor).widened(mu);
  if (mu >= 2 && !det.is_zero()) det = exact_div(det, LaurentPoly::variable(arc_color[0], mu) - one);
  return normalize_alexander(det);
}

}  // namespace colorlink
