#include <iostream>

#include <CLI11.hpp>

#include "colorlink/export.hpp"
#include "colorlink/pipeline.hpp"

namespace {

void print_report(const colorlink::Report& report) {
  using namespace colorlink;
  std::cout << "braid " << word_to_string(report.braid.word) << " on " << report.braid.strands << " strands, "
            << report.braid.mu << " color(s)\n";
  std::cout << "drag order:";
  for (int c : report.drag.order) std::cout << ' ' << c;
  std::cout << "\nspine: V = " << report.spine.vertex_count() << ", E = " << report.spine.edge_count()
            << ", g = " << report.rank() << "\n\n";
  std::cout << "Generalized Seifert Matrices\n";
  for (std::size_t k = 0; k < report.family.signs.size(); ++k)
    std::cout << sign_tuple_text(report.family.signs[k]) << "  " << matrix_text(report.family.matrices[k]) << '\n';
  std::cout << "\nConway potential function: " << report.conway.to_string() << '\n';
  std::cout << "Alexander polynomial:      " << report.alexander.to_string() << '\n';
  if (report.presentation) std::cout << "Presentation matrix:       " << matrix_text(*report.presentation) << '\n';
  if (report.signature) {
    std::cout << "Signature: " << report.signature->signature << "   Nullity: " << report.signature->nullity
              << "\nEigenvalues of H(omega):";
    for (double lambda : report.signature->eigenvalues) std::cout << ' ' << lambda;
    std::cout << '\n';
  }
  std::cout << "\nLaTeX:\n" << report.latex();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Seifert matrices and colored link invariants from a colored braid"};
  colorlink::RunOptions options;
  std::string omega;

  app.add_option("--word", options.word, "crossing sequence, e.g. \"[-2,-3,2,-3,-1,-2,-3]\"")->required();
  app.add_option("--strands", options.strands, "number of strands")->required()->check(CLI::PositiveNumber);
  app.add_option("--colors", options.colors, "color of the strand starting at each position, bottom to top")
      ->required();
  app.add_flag("--pairwise", options.pairwise, "make every two Seifert surfaces intersect (needed for --export)");
  app.add_option("--trials", options.trials, "random drag orders to try")->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "seed for the drag-order search");
  app.add_option("--omega", omega, "signature point as turns, e.g. \"1/2,1/3\" for exp(2 pi i theta)");
  app.add_option("--export", options.export_path, "write presentation and Seifert matrices (SageMath format)");
  app.add_option("--json", options.json_path, "write the full report as JSON");
  app.add_option("--svg-braid", options.svg_braid_path, "write the braid diagram as SVG");
  app.add_option("--svg-spine", options.svg_spine_path, "write the spine schematic as SVG");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!omega.empty()) options.omega = colorlink::SignaturePoint::parse(omega);
    const colorlink::Report report = colorlink::run_pipeline(options);
    colorlink::write_outputs(report, options);
    print_report(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
