#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "colorlink/laurent.hpp"
#include "colorlink/pipeline.hpp"
#include "colorlink/seifert.hpp"

namespace colorlink {

/// "Matrix([[a, b], [c, d]])", or "Matrix([])" when empty.
std::string matrix_text(const IntMatrix& m);
std::string matrix_text(const PolyMatrix& m);

/// "[-1, 1, 1]"
std::string sign_tuple_text(const SignTuple& eps);

/// Presentation matrix followed by every generalized Seifert matrix under
/// its sign-tuple header. Throws PairwiseRequired without a presentation matrix.
std::string export_text(const Report& report);
void export_text(const Report& report, const std::string& path);

struct ExportedMatrices {
  PolyMatrix presentation;
  std::vector<std::pair<SignTuple, IntMatrix>> family;
};

/// Inverse of export_text. Throws MalformedInput.
ExportedMatrices parse_export(std::string_view text, int mu);

nlohmann::json report_json(const Report& report);

}  // namespace colorlink
