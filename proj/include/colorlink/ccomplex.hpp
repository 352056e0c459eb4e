#pragma once

#include <stdexcept>
#include <vector>

#include "colorlink/braid.hpp"

namespace colorlink {

class DisconnectedSpine : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Order in which the colors are dragged to the bottom of the braid.
/// order[k] is the color moved at stage k; the color blocks of the sorted
/// diagram are stacked bottom-to-top in this order.
struct DragOrder {
  std::vector<int> order;

  static DragOrder identity(int mu);
  int stage(int color) const;
  bool valid(int mu) const;

  bool operator==(const DragOrder&) const = default;
  auto operator<=>(const DragOrder&) const = default;
};

enum class PassSide { Front, Back };

struct Pass {
  int disk;
  PassSide side;

  bool operator==(const Pass&) const = default;
};

enum class EventKind { Band, Finger };

/// A half-twisted band between sorted disks lo and lo+1 of equal color, or a
/// finger from disk lo clasping disk hi (lo < hi, different colors). Disk
/// indices are 0-based, bottom-to-top. sign is the handedness (+1 right-handed).
struct RawEvent {
  EventKind kind;
  int lo;
  int hi;
  int sign;
  std::vector<Pass> passes;

  static RawEvent band(int disk, int sign) { return {EventKind::Band, disk, disk + 1, sign, {}}; }
  static RawEvent finger(int lo, int hi, int sign, std::vector<Pass> passes = {}) {
    return {EventKind::Finger, lo, hi, sign, std::move(passes)};
  }

  bool operator==(const RawEvent&) const = default;
};

/// Color of every sorted disk, bottom-to-top.
std::vector<int> disk_colors(const ColoredBraid& braid, const DragOrder& drag);

/// Drag the colors down across the back of the braid, in drag order, and
/// record what every crossing becomes: a band (equal colors), nothing (the
/// later-dragged color is on top), or a finger with its front/back passes.
std::vector<RawEvent> sort_by_color(const ColoredBraid& braid, const DragOrder& drag);

/// Trade every ribbon intersection (back pass) for a pair of clean fingers
/// flanking the original finger, bottom-most pass first. Front passes are dropped.
std::vector<RawEvent> remove_ribbons(const std::vector<RawEvent>& events);

/// Cancel adjacent opposite-sign events with equal endpoints, treating the
/// list as cyclic, until nothing cancels.
std::vector<RawEvent> cleanup(const std::vector<RawEvent>& events);

/// Append opposite-sign pairs so that each color's disks are band-connected,
/// the whole complex is connected, and (if `pairwise`) every two colors share
/// a clasp.
std::vector<RawEvent> ensure_connected(const std::vector<RawEvent>& events, const std::vector<int>& colors,
                                       bool pairwise);

struct SpineEdge {
  int lower;
  int upper;
  int sign;

  bool operator==(const SpineEdge&) const = default;
};

/// The C-complex as an ordered graph: vertices are disks (bottom-to-top) with
/// colors, edges are bands/fingers (left-to-right) with handedness signs. An
/// edge is a clasp exactly when its endpoints have different colors.
struct DecoratedSpine {
  int mu = 1;
  std::vector<int> colors;
  std::vector<SpineEdge> edges;
  /// Whether every two colors were forced to share a clasp.
  bool pairwise = false;

  int vertex_count() const { return static_cast<int>(colors.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int rank() const { return edge_count() - vertex_count() + 1; }
  bool is_clasp(const SpineEdge& e) const {
    return colors[static_cast<std::size_t>(e.lower)] != colors[static_cast<std::size_t>(e.upper)];
  }

  bool operator==(const DecoratedSpine&) const = default;
};

/// Throws DisconnectedSpine if the spine violates a C-complex invariant.
void check_spine(const DecoratedSpine& spine);

DecoratedSpine encode_spine(const std::vector<RawEvent>& events, const std::vector<int>& colors, int mu,
                            bool pairwise = false);

/// sort_by_color -> remove_ribbons -> cleanup -> ensure_connected -> encode_spine.
DecoratedSpine build_spine(const ColoredBraid& braid, const DragOrder& drag, bool pairwise);

}  // namespace colorlink
