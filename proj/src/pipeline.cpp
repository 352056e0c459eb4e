#include "colorlink/pipeline.hpp"

#include <fstream>
#include <random>

#include "colorlink/export.hpp"
#include "colorlink/svg.hpp"

namespace colorlink {

namespace {

// Fisher-Yates on the raw engine output, so a seed gives the same
// permutations with every standard library.
void shuffle(std::vector<int>& values, std::mt19937_64& engine) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(engine() % i);
    std::swap(values[i - 1], values[j]);
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::string Report::latex() const {
  return "\\nabla_L = " + conway.to_latex() + "\n\\Delta_L = " + alexander.to_latex() + "\n";
}

DragOrder optimize_drag_order(const ColoredBraid& braid, int trials, std::uint64_t seed, bool pairwise) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  DragOrder best = DragOrder::identity(braid.mu);
  if (braid.mu == 1) return best;
  int best_rank = build_spine(braid, best, pairwise).rank();

  std::mt19937_64 engine(seed);
  DragOrder candidate = DragOrder::identity(braid.mu);
  for (int trial = 0; trial < trials; ++trial) {
    candidate = DragOrder::identity(braid.mu);
    shuffle(candidate.order, engine);
    const int rank = build_spine(braid, candidate, pairwise).rank();
    if (rank < best_rank || (rank == best_rank && candidate < best)) {
      best = candidate;
      best_rank = rank;
    }
  }
  return best;
}

Report analyze(const ColoredBraid& braid, const DragOrder& drag, bool pairwise,
               const std::optional<SignaturePoint>& omega) {
  Report report;
  report.braid = braid;
  report.drag = drag;
  report.spine = build_spine(braid, drag, pairwise);
  report.family = seifert_family(report.spine);
  report.sign = complex_sign(report.spine);
  for (int c = 0; c < braid.mu; ++c) report.chi.push_back(chi_excluding(report.spine, c));
  report.conway = conway_potential(report.family, report.sign, report.chi);
  report.alexander = alexander_from_conway(report.conway);
  if (pairwise) report.presentation = presentation_matrix(report.family);
  if (omega) {
    report.omega = omega;
    report.signature = signature_nullity(hermitian_H(report.family, *omega), 1);
  }
  return report;
}

Report run_pipeline(const RunOptions& options) {
  const ColoredBraid braid = parse_braid(options.word, options.strands, options.colors);
  if (options.omega && static_cast<int>(options.omega->theta.size()) != braid.mu)
    throw std::invalid_argument("--omega needs " + std::to_string(braid.mu) + " coordinates, one per color");
  const DragOrder drag = optimize_drag_order(braid, options.trials, options.seed, options.pairwise);
  return analyze(braid, drag, options.pairwise, options.omega);
}

void write_outputs(const Report& report, const RunOptions& options) {
  if (options.export_path) export_text(report, *options.export_path);
  if (options.json_path) write_file(*options.json_path, report_json(report).dump(2) + "\n");
  if (options.svg_braid_path) write_file(*options.svg_braid_path, braid_svg(report.braid));
  if (options.svg_spine_path) write_file(*options.svg_spine_path, spine_svg(report.spine));
}

}  // namespace colorlink
