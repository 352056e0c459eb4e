#include "colorlink/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace colorlink {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* color_of(int c) { return kPalette[static_cast<std::size_t>(c) % std::size(kPalette)]; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
}

std::string header(int width, int height) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string braid_svg(const ColoredBraid& braid) {
  constexpr int kColumn = 60;
  constexpr int kRow = 40;
  constexpr int kMargin = 40;
  constexpr double kGap = 0.22;  // fraction of the crossing left open around the under-strand
  const int n = braid.strands;
  const int m = static_cast<int>(braid.word.size());
  const int width = 2 * kMargin + kColumn * std::max(m, 1);
  const int height = kRow * (n + 1);
  auto y_of = [&](int position) { return height - kRow * (position + 1); };  // 0-based, bottom-up

  std::ostringstream os;
  os << header(width, height);
  for (int p = 0; p < n; ++p)
    os << "<text x=\"8\" y=\"" << y_of(p) + 5 << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
       << color_of(braid.colors[static_cast<std::size_t>(p)]) << "\">" << braid.colors[static_cast<std::size_t>(p)]
       << "</text>\n";

  std::vector<int> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 0);
  auto line = [&](double x0, double y0, double x1, double y1, int strand) {
    os << "<line class=\"strand\" x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
       << "\" stroke=\"" << color_of(braid.colors[static_cast<std::size_t>(strand)])
       << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  };

  if (m == 0)
    for (int p = 0; p < n; ++p) line(kMargin, y_of(p), width - kMargin, y_of(p), p);

  for (int j = 0; j < m; ++j) {
    const int s = braid.word[static_cast<std::size_t>(j)];
    const int p = std::abs(s) - 1;
    const double x0 = kMargin + kColumn * j;
    const double x1 = x0 + kColumn;
    for (int q = 0; q < n; ++q)
      if (q != p && q != p + 1) line(x0, y_of(q), x1, y_of(q), occupant[static_cast<std::size_t>(q)]);
    const int over_from = s > 0 ? p + 1 : p;
    const int under_from = s > 0 ? p : p + 1;
    const int over_to = under_from;
    const int under_to = over_from;
    line(x0, y_of(over_from), x1, y_of(over_to), occupant[static_cast<std::size_t>(over_from)]);
    const double ya = y_of(under_from);
    const double yb = y_of(under_to);
    const double t0 = 0.5 - kGap;
    const double t1 = 0.5 + kGap;
    const int under = occupant[static_cast<std::size_t>(under_from)];
    line(x0, ya, x0 + (x1 - x0) * t0, ya + (yb - ya) * t0, under);
    line(x0 + (x1 - x0) * t1, ya + (yb - ya) * t1, x1, yb, under);
    os << "<text x=\"" << (x0 + x1) / 2 - 4 << "\" y=\"14\" font-family=\"sans-serif\" font-size=\"10\">" << j + 1
       << "</text>\n";
    std::swap(occupant[static_cast<std::size_t>(p)], occupant[static_cast<std::size_t>(p + 1)]);
  }
  os << "</svg>\n";
  return os.str();
}

std::string spine_svg(const DecoratedSpine& spine) {
  constexpr int kEdgeSpacing = 28;
  constexpr int kRow = 50;
  constexpr int kMargin = 30;
  constexpr int kBarWidth = 120;
  const int v = spine.vertex_count();
  const int e = spine.edge_count();
  const int bar_x = kMargin + kEdgeSpacing * (e + 1);
  const int width = bar_x + kBarWidth + 60;
  const int height = kRow * (v + 1);
  auto y_of = [&](int vertex) { return height - kRow * (vertex + 1); };

  std::ostringstream os;
  os << header(width, height);
  for (int k = 0; k < e; ++k) {
    const SpineEdge& edge = spine.edges[static_cast<std::size_t>(k)];
    const int x = kMargin + kEdgeSpacing * (k + 1);
    const int y0 = y_of(edge.lower);
    const int y1 = y_of(edge.upper);
    os << "<path class=\"edge\" d=\"M " << bar_x << ' ' << y0 << " H " << x << " V " << y1 << " H " << bar_x
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"" << (spine.is_clasp(edge) ? " stroke-dasharray=\"6 3\"" : "")
       << "/>\n";
    os << "<text class=\"sign\" x=\"" << x - 12 << "\" y=\"" << (y0 + y1) / 2 + 4
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << (edge.sign > 0 ? "+" : "&#8722;") << "</text>\n";
  }
  for (int d = 0; d < v; ++d) {
    const int c = spine.colors[static_cast<std::size_t>(d)];
    os << "<rect class=\"disk\" x=\"" << bar_x << "\" y=\"" << y_of(d) - 5 << "\" width=\"" << kBarWidth
       << "\" height=\"10\" fill=\"" << color_of(c) << "\"/>\n";
    os << "<text x=\"" << bar_x + kBarWidth + 8 << "\" y=\"" << y_of(d) + 5
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << c << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void render_svg(const ColoredBraid& braid, const DecoratedSpine& spine, const std::string& braid_path,
                const std::string& spine_path) {
  write_file(braid_path, braid_svg(braid));
  write_file(spine_path, spine_svg(spine));
}

}  // namespace colorlink
