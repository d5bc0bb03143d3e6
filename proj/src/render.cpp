#include "foldlab/render.hpp"

#include <sstream>
#include <vector>

namespace foldlab {

namespace {

bool draw_edge(const Polyomino& p, const GridSegment& s) {
  // Boundary and cut segments get outlines.
  if (s.axis == Axis::Vertical) {
    if (s.x == 0 || s.x == p.width()) return true;
  } else {
    if (s.y == 0 || s.y == p.height()) return true;
  }
  if (p.is_cut(s)) return true;
  // Edges of removed cells.
  auto [a, b] = p.edge_cells(s);
  return p.in_bounds(a) != p.in_bounds(b) ? false
                                          : (!p.cell_present(a) || !p.cell_present(b));
}

}  // namespace

std::string render_ascii(const Polyomino& p, const std::optional<Facemapping>& fm) {
  int W = p.width(), H = p.height();
  std::vector<std::string> canvas(size_t(2 * H + 1), std::string(size_t(2 * W + 1), ' '));

  for (int x = 0; x <= W; ++x)
    for (int y = 0; y < H; ++y)
      if (x == 0 || x == W || draw_edge(p, {Axis::Vertical, x, y}))
        canvas[size_t(2 * (H - 1 - y) + 1)][size_t(2 * x)] = '|';
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x)
      if (y == 0 || y == H || draw_edge(p, {Axis::Horizontal, x, y}))
        canvas[size_t(2 * (H - y))][size_t(2 * x + 1)] = '-';
  // Corners where outline meets outline.
  for (int x = 0; x <= W; ++x)
    for (int y = 0; y <= H; ++y) {
      auto filled = [&](int cx, int cy) {
        return cx >= 0 && cx <= 2 * W && cy >= 0 && cy <= 2 * H &&
               canvas[size_t(cy)][size_t(cx)] != ' ';
      };
      int cx = 2 * x, cy = 2 * (H - y);
      if (filled(cx - 1, cy) || filled(cx + 1, cy) || filled(cx, cy - 1) || filled(cx, cy + 1))
        canvas[size_t(cy)][size_t(cx)] = '+';
    }
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      char ch = ' ';
      if (p.cell_present({x, y}))
        ch = fm && fm->has({x, y}) ? char('0' + face_of(fm->at({x, y}))) : '.';
      canvas[size_t(2 * (H - 1 - y) + 1)][size_t(2 * x + 1)] = ch;
    }

  std::string out;
  for (const auto& row : canvas) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Polyomino& p, const std::optional<Facemapping>& fm) {
  int W = p.width(), H = p.height();
  const int cell = 40, margin = 10;
  auto px = [&](double gx) { return margin + gx * cell; };
  auto py = [&](double gy) { return margin + (H - gy) * cell; };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + W * cell
    << "\" height=\"" << 2 * margin + H * cell << "\">\n";
  // cells
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x)
      if (p.cell_present({x, y}))
        s << "  <rect x=\"" << px(x) << "\" y=\"" << py(y + 1) << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"#ececec\"/>\n";
  // light grid
  for (int x = 0; x <= W; ++x)
    s << "  <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
      << py(H) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (int y = 0; y <= H; ++y)
    s << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(W) << "\" y2=\""
      << py(y) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  // outlines
  auto line = [&](double x1, double y1, double x2, double y2) {
    s << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\""
      << py(y2) << "\" stroke=\"#2040c0\" stroke-width=\"3\"/>\n";
  };
  line(0, 0, W, 0);
  line(W, 0, W, H);
  line(W, H, 0, H);
  line(0, H, 0, 0);
  for (const auto& c : p.cuts()) {
    if (c.axis == Axis::Vertical)
      line(c.x, c.y, c.x, c.y + 1);
    else
      line(c.x, c.y, c.x + 1, c.y);
  }
  for (const auto& c : p.removed_cells()) {
    s << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y + 1) << "\" width=\"" << cell
      << "\" height=\"" << cell
      << "\" fill=\"white\" stroke=\"#2040c0\" stroke-width=\"3\"/>\n";
  }
  // face digits
  if (fm)
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x)
        if (fm->has({x, y}))
          s << "  <text x=\"" << px(x + 0.5) << "\" y=\"" << py(y + 0.28)
            << "\" text-anchor=\"middle\" font-size=\"22\" font-family=\"sans-serif\">"
            << face_of(fm->at({x, y})) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace foldlab
