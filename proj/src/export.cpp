#include "colorlink/export.hpp"

#include <fstream>
#include <sstream>

namespace colorlink {

namespace {

template <typename Mat, typename Render>
std::string render_matrix(const Mat& m, Render render) {
  if (m.rows() == 0) return "Matrix([])";
  std::string out = "Matrix([";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + render(m(i, j));
    out += "]";
  }
  return out + "])";
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// "Matrix([[a, b], [c, d]])" -> rows of entry strings
std::vector<std::vector<std::string>> split_matrix(const std::string& line) {
  const std::string prefix = "Matrix([";
  const std::string suffix = "])";
  if (line.rfind(prefix, 0) != 0 || line.size() < prefix.size() + suffix.size() ||
      line.compare(line.size() - suffix.size(), suffix.size(), suffix) != 0)
    throw MalformedInput("not a matrix line: '" + line + "'");
  const std::string body = line.substr(prefix.size(), line.size() - prefix.size() - suffix.size());
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (true) {
    const auto open = body.find('[', pos);
    if (open == std::string::npos) break;
    const auto close = body.find(']', open);
    if (close == std::string::npos) throw MalformedInput("unbalanced brackets in '" + line + "'");
    std::vector<std::string> row;
    std::stringstream cells(body.substr(open + 1, close - open - 1));
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(trim(cell));
    rows.push_back(std::move(row));
    pos = close + 1;
  }
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw MalformedInput("matrix is not square: '" + line + "'");
  return rows;
}

}  // namespace

std::string matrix_text(const IntMatrix& m) {
  return render_matrix(m, [](int v) { return std::to_string(v); });
}

std::string matrix_text(const PolyMatrix& m) {
  return render_matrix(m, [](const LaurentPoly& p) { return p.to_string(); });
}

std::string sign_tuple_text(const SignTuple& eps) {
  std::string out = "[";
  for (std::size_t i = 0; i < eps.size(); ++i) out += (i ? ", " : "") + std::to_string(eps[i]);
  return out + "]";
}

std::string export_text(const Report& report) {
  if (!report.presentation)
    throw PairwiseRequired("exporting needs the presentation matrix; rerun with --pairwise");
  std::string out = "Presentation Matrix\n" + matrix_text(*report.presentation) + "\n\n\nGeneralized Seifert Matrices\n";
  for (std::size_t k = 0; k < report.family.signs.size(); ++k)
    out += "\n" + sign_tuple_text(report.family.signs[k]) + "\n" + matrix_text(report.family.matrices[k]) + "\n";
  return out;
}

void export_text(const Report& report, const std::string& path) {
  const std::string text = export_text(report);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

ExportedMatrices parse_export(std::string_view text, int mu) {
  std::vector<std::string> lines;
  {
    std::stringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
      line = trim(line);
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.size() < 3 || lines[0] != "Presentation Matrix" || lines[2] != "Generalized Seifert Matrices")
    throw MalformedInput("missing export headers");

  ExportedMatrices result;
  const auto poly_rows = split_matrix(lines[1]);
  const auto g = static_cast<Eigen::Index>(poly_rows.size());
  result.presentation.resize(g, g);
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = 0; j < g; ++j)
      result.presentation(i, j) = parse_laurent(poly_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], mu);

  if ((lines.size() - 3) % 2 != 0) throw MalformedInput("sign-tuple header without a matrix");
  for (std::size_t k = 3; k < lines.size(); k += 2) {
    const std::string& header = lines[k];
    if (header.front() != '[' || header.back() != ']') throw MalformedInput("bad sign tuple '" + header + "'");
    SignTuple eps;
    std::stringstream items(header.substr(1, header.size() - 2));
    std::string item;
    while (std::getline(items, item, ',')) {
      const std::string v = trim(item);
      if (v != "1" && v != "-1") throw MalformedInput("bad sign '" + v + "'");
      eps.push_back(std::stoi(v));
    }
    const auto rows = split_matrix(lines[k + 1]);
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        try {
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::stoi(rows[i][j]);
        } catch (const std::exception&) {
          throw MalformedInput("bad matrix entry '" + rows[i][j] + "'");
        }
      }
    result.family.emplace_back(std::move(eps), std::move(m));
  }
  return result;
}

nlohmann::json report_json(const Report& report) {
  using nlohmann::json;
  json j;
  j["braid"] = {{"strands", report.braid.strands},
                {"word", report.braid.word},
                {"colors", report.braid.colors},
                {"mu", report.braid.mu}};
  j["drag_order"] = report.drag.order;

  json edges = json::array();
  for (const SpineEdge& e : report.spine.edges)
    edges.push_back({{"lower", e.lower}, {"upper", e.upper}, {"sign", e.sign}, {"clasp", report.spine.is_clasp(e)}});
  j["spine"] = {{"vertices", report.spine.colors},
                {"edges", edges},
                {"V", report.spine.vertex_count()},
                {"E", report.spine.edge_count()},
                {"g", report.spine.rank()},
                {"pairwise", report.spine.pairwise}};

  json family = json::array();
  for (std::size_t k = 0; k < report.family.signs.size(); ++k) {
    const IntMatrix& m = report.family.matrices[k];
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    family.push_back({{"eps", report.family.signs[k]}, {"matrix", rows}});
  }
  j["seifert_matrices"] = family;
  j["complex_sign"] = report.sign;
  j["chi_excluding"] = report.chi;
  j["conway_potential"] = {{"text", report.conway.to_string()},
                           {"numerator", report.conway.numerator.to_string()},
                           {"denominator_exponents", report.conway.denominator}};
  j["alexander_polynomial"] = report.alexander.to_string();
  if (report.presentation) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < report.presentation->rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < report.presentation->cols(); ++c) row.push_back((*report.presentation)(r, c).to_string());
      rows.push_back(row);
    }
    j["presentation_matrix"] = rows;
  }
  if (report.signature) {
    j["signature"] = {{"theta", report.omega->theta},
                      {"signature", report.signature->signature},
                      {"nullity", report.signature->nullity},
                      {"eigenvalues", report.signature->eigenvalues}};
  }
  j["latex"] = report.latex();
  return j;
}

}  // namespace colorlink
