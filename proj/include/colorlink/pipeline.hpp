#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "colorlink/braid.hpp"
#include "colorlink/ccomplex.hpp"
#include "colorlink/invariants.hpp"
#include "colorlink/laurent.hpp"
#include "colorlink/seifert.hpp"

namespace colorlink {

inline constexpr std::uint64_t kDefaultSeed = 20220915;
inline constexpr int kDefaultTrials = 500;

struct RunOptions {
  std::string word = "[]";
  int strands = 1;
  std::string colors = "0";
  bool pairwise = false;
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::optional<SignaturePoint> omega;
  std::optional<std::string> export_path;
  std::optional<std::string> svg_braid_path;
  std::optional<std::string> svg_spine_path;
  std::optional<std::string> json_path;
};

struct Report {
  ColoredBraid braid;
  DragOrder drag;
  DecoratedSpine spine;
  SeifertFamily family;
  int sign = 1;
  std::vector<int> chi;
  PotentialFunction conway;
  LaurentPoly alexander;
  std::optional<PolyMatrix> presentation;
  std::optional<SignaturePoint> omega;
  std::optional<SignatureResult> signature;

  int rank() const { return spine.rank(); }
  /// LaTeX rendering of the potential function and Alexander polynomial.
  std::string latex() const;
};

/// Among the identity and `trials` seeded random color permutations, the
/// drag order whose C-complex has the smallest first Betti number; ties go
/// to the lexicographically smallest permutation.
DragOrder optimize_drag_order(const ColoredBraid& braid, int trials, std::uint64_t seed, bool pairwise = false);

/// Everything downstream of the choice of drag order.
Report analyze(const ColoredBraid& braid, const DragOrder& drag, bool pairwise,
               const std::optional<SignaturePoint>& omega = std::nullopt);

/// Parse, optimize the drag order, build the C-complex and compute every
/// invariant requested by the options. Writes no files.
Report run_pipeline(const RunOptions& options);

/// Write the files requested in `options` (export, JSON, SVGs).
void write_outputs(const Report& report, const RunOptions& options);

}  // namespace colorlink
