#include "colorlink/ccomplex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace colorlink {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // keep the smaller index as representative
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool cancels(const RawEvent& a, const RawEvent& b) {
  return a.lo == b.lo && a.hi == b.hi && a.sign == -b.sign;
}

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

DragOrder DragOrder::identity(int mu) {
  DragOrder d;
  d.order.resize(at(mu));
  std::iota(d.order.begin(), d.order.end(), 0);
  return d;
}

int DragOrder::stage(int color) const {
  const auto it = std::find(order.begin(), order.end(), color);
  if (it == order.end()) throw std::invalid_argument("color " + std::to_string(color) + " missing from drag order");
  return static_cast<int>(it - order.begin());
}

bool DragOrder::valid(int mu) const {
  if (static_cast<int>(order.size()) != mu) return false;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int c = 0; c < mu; ++c)
    if (sorted[at(c)] != c) return false;
  return true;
}

std::vector<int> disk_colors(const ColoredBraid& braid, const DragOrder& drag) {
  std::vector<int> out;
  for (int color : drag.order)
    for (int c : braid.colors)
      if (c == color) out.push_back(color);
  return out;
}

std::vector<RawEvent> sort_by_color(const ColoredBraid& braid, const DragOrder& drag) {
  if (!drag.valid(braid.mu)) throw std::invalid_argument("drag order is not a permutation of the colors");
  const int n = braid.strands;

  std::vector<int> offset(at(braid.mu), 0);
  {
    int running = 0;
    for (int color : drag.order) {
      offset[at(color)] = running;
      running += static_cast<int>(std::count(braid.colors.begin(), braid.colors.end(), color));
    }
  }

  // Strands are identified by their starting position (0-based).
  std::vector<int> occupant(at(n));
  std::iota(occupant.begin(), occupant.end(), 0);
  std::vector<int> position = occupant;
  auto color_of = [&](int strand) { return braid.colors[at(strand)]; };

  // disk_of[s]: sorted disk of strand s; within a color block strands keep
  // their current vertical order.
  std::vector<int> disk_of(at(n));
  std::vector<int> strand_on(at(n));
  auto refresh_disks = [&] {
    std::vector<int> rank(at(braid.mu), 0);
    for (int p = 0; p < n; ++p) {
      const int s = occupant[at(p)];
      const int c = color_of(s);
      disk_of[at(s)] = offset[at(c)] + rank[at(c)]++;
      strand_on[at(disk_of[at(s)])] = s;
    }
  };

  std::vector<RawEvent> events;
  for (int crossing : braid.word) {
    refresh_disks();
    const int p = std::abs(crossing) - 1;
    const int sign = crossing > 0 ? 1 : -1;
    const int over = sign > 0 ? occupant[at(p + 1)] : occupant[at(p)];
    const int under = sign > 0 ? occupant[at(p)] : occupant[at(p + 1)];
    const int c_over = color_of(over);
    const int c_under = color_of(under);

    if (c_over == c_under) {
      events.push_back(RawEvent::band(std::min(disk_of[at(over)], disk_of[at(under)]), sign));
    } else if (drag.stage(c_over) < drag.stage(c_under)) {
      const int lo = disk_of[at(over)];
      const int hi = disk_of[at(under)];
      std::vector<Pass> passes;
      for (int d = lo + 1; d < hi; ++d) {
        const int t = strand_on[at(d)];
        passes.push_back({d, position[at(t)] < p ? PassSide::Back : PassSide::Front});
      }
      events.push_back(RawEvent::finger(lo, hi, sign, std::move(passes)));
    }

    std::swap(occupant[at(p)], occupant[at(p + 1)]);
    position[at(occupant[at(p)])] = p;
    position[at(occupant[at(p + 1)])] = p + 1;
  }
  return events;
}

std::vector<RawEvent> remove_ribbons(const std::vector<RawEvent>& events) {
  std::vector<RawEvent> out;
  for (const RawEvent& ev : events) {
    std::vector<int> ribbons;
    for (const Pass& pass : ev.passes)
      if (pass.side == PassSide::Back) ribbons.push_back(pass.disk);
    std::sort(ribbons.begin(), ribbons.end());

    for (int disk : ribbons) out.push_back(RawEvent::finger(ev.lo, disk, +1));
    RawEvent clean = ev;
    clean.passes.clear();
    out.push_back(std::move(clean));
    for (auto it = ribbons.rbegin(); it != ribbons.rend(); ++it) out.push_back(RawEvent::finger(ev.lo, *it, -1));
  }
  return out;
}

std::vector<RawEvent> cleanup(const std::vector<RawEvent>& events) {
  std::vector<RawEvent> stack;
  for (const RawEvent& ev : events) {
    if (!stack.empty() && cancels(stack.back(), ev)) {
      stack.pop_back();
    } else {
      stack.push_back(ev);
    }
  }
  // The remaining word is reduced; only its two ends can still cancel.
  std::size_t front = 0;
  std::size_t back = stack.size();
  while (back - front >= 2 && cancels(stack[front], stack[back - 1])) {
    ++front;
    --back;
  }
  return {stack.begin() + static_cast<std::ptrdiff_t>(front), stack.begin() + static_cast<std::ptrdiff_t>(back)};
}

std::vector<RawEvent> ensure_connected(const std::vector<RawEvent>& events, const std::vector<int>& colors,
                                       bool pairwise) {
  const int v = static_cast<int>(colors.size());
  std::vector<RawEvent> out = events;

  // Seifert surface per color: adjacent equal-colored disks must be band-connected.
  DisjointSets bands(v);
  for (const RawEvent& ev : events)
    if (colors[at(ev.lo)] == colors[at(ev.hi)]) bands.unite(ev.lo, ev.hi);
  for (int d = 0; d + 1 < v; ++d) {
    if (colors[at(d)] != colors[at(d + 1)]) continue;
    if (bands.unite(d, d + 1)) {
      out.push_back(RawEvent::band(d, +1));
      out.push_back(RawEvent::band(d, -1));
    }
  }

  // Whole complex: join every component to the bottom-most disk. Each
  // component's representative is its bottom-most disk.
  DisjointSets all(v);
  for (const RawEvent& ev : out) all.unite(ev.lo, ev.hi);
  for (int d = 1; d < v; ++d) {
    if (all.find(d) != d) continue;
    out.push_back(RawEvent::finger(0, d, +1));
    out.push_back(RawEvent::finger(0, d, -1));
  }

  if (pairwise) {
    const int mu = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    std::set<std::pair<int, int>> clasped;
    for (const RawEvent& ev : out) {
      const int a = colors[at(ev.lo)];
      const int b = colors[at(ev.hi)];
      if (a != b) clasped.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<int> bottom(at(mu), -1);
    for (int d = v - 1; d >= 0; --d) bottom[at(colors[at(d)])] = d;
    std::vector<std::pair<int, int>> missing;
    for (int a = 0; a < mu; ++a)
      for (int b = a + 1; b < mu; ++b)
        if (!clasped.count({a, b}))
          missing.emplace_back(std::min(bottom[at(a)], bottom[at(b)]), std::max(bottom[at(a)], bottom[at(b)]));
    std::sort(missing.begin(), missing.end());
    for (const auto& [lo, hi] : missing) {
      out.push_back(RawEvent::finger(lo, hi, +1));
      out.push_back(RawEvent::finger(lo, hi, -1));
    }
  }
  return out;
}

void check_spine(const DecoratedSpine& spine) {
  const int v = spine.vertex_count();
  if (v == 0) throw DisconnectedSpine("spine has no vertices");
  DisjointSets all(v);
  DisjointSets bands(v);
  for (const SpineEdge& e : spine.edges) {
    if (e.lower < 0 || e.upper >= v || e.lower >= e.upper)
      throw DisconnectedSpine("edge endpoints out of order: " + std::to_string(e.lower) + "," + std::to_string(e.upper));
    if (e.sign != 1 && e.sign != -1) throw DisconnectedSpine("edge sign must be +1 or -1");
    all.unite(e.lower, e.upper);
    if (!spine.is_clasp(e)) bands.unite(e.lower, e.upper);
  }
  for (int d = 1; d < v; ++d)
    if (all.find(d) != all.find(0)) throw DisconnectedSpine("C-complex is not connected");
  std::vector<int> first(at(spine.mu), -1);
  for (int d = 0; d < v; ++d) {
    int& f = first[at(spine.colors[at(d)])];
    if (f < 0) f = d;
    else if (bands.find(d) != bands.find(f))
      throw DisconnectedSpine("surface of color " + std::to_string(spine.colors[at(d)]) + " is not connected");
  }
}

DecoratedSpine encode_spine(const std::vector<RawEvent>& events, const std::vector<int>& colors, int mu,
                            bool pairwise) {
  DecoratedSpine spine;
  spine.mu = mu;
  spine.colors = colors;
  spine.pairwise = pairwise;
  for (const RawEvent& ev : events) {
    if (!ev.passes.empty() &&
        std::any_of(ev.passes.begin(), ev.passes.end(), [](const Pass& p) { return p.side == PassSide::Back; }))
      throw DisconnectedSpine("finger with ribbon intersection reached the spine encoder");
    spine.edges.push_back({ev.lo, ev.hi, ev.sign});
  }
  check_spine(spine);
  return spine;
}

DecoratedSpine build_spine(const ColoredBraid& braid, const DragOrder& drag, bool pairwise) {
  const std::vector<int> colors = disk_colors(braid, drag);
  auto events = cleanup(remove_ribbons(sort_by_color(braid, drag)));
  events = ensure_connected(events, colors, pairwise);
  return encode_spine(events, colors, braid.mu, pairwise);
}

}  // namespace colorlink
