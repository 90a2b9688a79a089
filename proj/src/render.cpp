#include "dyckatlas/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dyck {

namespace {

char tile_letter(std::size_t k) {
  k %= 52;
  return k < 26 ? static_cast<char>('A' + k) : static_cast<char>('a' + (k - 26));
}

void draw_path(std::vector<std::string>& grid, const DyckPath& path, int n, int maxh) {
  for (int i = 1; i <= path.step_count(); ++i) {
    const int x = i - 1 - n;  // column where step i starts
    const int y = path.height(x);
    if (path.step(i) == Step::Up) {
      grid[static_cast<std::size_t>(2 * maxh - 2 * y - 1)][static_cast<std::size_t>(2 * (x + n) + 1)] = '/';
    } else {
      grid[static_cast<std::size_t>(2 * maxh - 2 * y + 1)][static_cast<std::size_t>(2 * (x + n) + 1)] = '\\';
    }
  }
}

}  // namespace

std::string render_ascii(const DyckTiling& t) {
  const int n = t.order();
  if (n == 0) return "";
  const int maxh = *std::max_element(t.upper().heights().begin(), t.upper().heights().end());
  std::vector<std::string> grid(static_cast<std::size_t>(2 * maxh + 1),
                                std::string(static_cast<std::size_t>(4 * n + 1), ' '));
  draw_path(grid, t.upper(), n, maxh);
  draw_path(grid, t.lower(), n, maxh);
  for (std::size_t k = 0; k < t.tiles().size(); ++k)
    for (const Box& b : t.tiles()[k].boxes())
      grid[static_cast<std::size_t>(2 * maxh - 2 * (b.y + 1))][static_cast<std::size_t>(2 * (b.x + n))] =
          tile_letter(k);
  std::string out;
  // rows 0 and 2*maxh are always blank; every interior odd row holds a slash
  for (int r = 1; r <= 2 * maxh - 1; ++r) {
    std::string& row = grid[static_cast<std::size_t>(r)];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

namespace {

struct Pt {
  int x, y;  // svg user units
};

Pt vertex(int x, int y) { return {20 * x, -20 * y}; }

void append_points(std::ostringstream& os, const std::vector<Pt>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << pts[i].x << ',' << pts[i].y;
  }
}

}  // namespace

std::string render_svg(const DyckTiling& t) {
  const int n = t.order();
  const int maxh =
      n == 0 ? 0 : *std::max_element(t.upper().heights().begin(), t.upper().heights().end());
  std::ostringstream os;
  const int min_x = -20 * n - 10;
  const int min_y = -20 * maxh - 10;
  const int width = 40 * n + 20;
  const int height = 20 * maxh + 20;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x << ' ' << min_y << ' '
     << width << ' ' << height << "\" width=\"" << width << "\" height=\"" << height << "\">\n";

  os << "<g fill=\"#e8ecf4\" stroke=\"#9aa4b8\" stroke-width=\"1\">\n";
  for (const DyckTile& tile : t.tiles()) {
    for (const Box& b : tile.boxes()) {
      const std::vector<Pt> diamond = {vertex(b.x, b.y), vertex(b.x + 1, b.y + 1),
                                       vertex(b.x, b.y + 2), vertex(b.x - 1, b.y + 1)};
      os << "<polygon points=\"";
      append_points(os, diamond);
      os << "\"/>\n";
    }
  }
  os << "</g>\n";

  os << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n";
  for (const DyckTile& tile : t.tiles()) {
    // walk the ribbon outline: left corner, all bottom corners, right
    // corner, then the top corners right-to-left
    std::vector<Pt> outline;
    const auto& boxes = tile.boxes();
    outline.push_back(vertex(boxes.front().x - 1, boxes.front().y + 1));
    for (const Box& b : boxes) outline.push_back(vertex(b.x, b.y));
    outline.push_back(vertex(boxes.back().x + 1, boxes.back().y + 1));
    for (auto it = boxes.rbegin(); it != boxes.rend(); ++it)
      outline.push_back(vertex(it->x, it->y + 2));
    os << "<polygon points=\"";
    append_points(os, outline);
    os << "\"/>\n";
  }
  os << "</g>\n";

  std::vector<Pt> upper, lower;
  for (int x = -n; x <= n; ++x) {
    upper.push_back(vertex(x, t.upper().height(x)));
    lower.push_back(vertex(x, t.lower().height(x)));
  }
  os << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  append_points(os, upper);
  os << "\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"4\" points=\"";
  append_points(os, lower);
  os << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace dyck
