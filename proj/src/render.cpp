#include "tileforge/render.hpp"

#include <map>
#include <sstream>

namespace tileforge {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::vector<RenderItem> render_items(const Tileset& ts, const Tiling& t) {
  std::vector<RenderItem> out;
  for (const auto& p : t.placements) out.push_back({p.tile, resolve_placement(ts, p).cells});
  return out;
}

std::vector<RenderItem> render_items(const std::vector<Piece>& pieces, const Box& clip) {
  std::vector<RenderItem> out;
  for (const auto& piece : pieces) {
    Box b = piece.placement.box();
    Box c{std::max(b.x0, clip.x0), std::max(b.y0, clip.y0), std::min(b.x1, clip.x1), std::min(b.y1, clip.y1)};
    if (!c.empty()) out.push_back({piece.placement.tile, c.cells()});
  }
  return out;
}

namespace {

Box extent(const std::vector<RenderItem>& items) {
  Box b;
  bool first = true;
  for (const auto& it : items)
    for (Cell c : it.cells) {
      if (first) {
        b = {c.x, c.y, c.x, c.y};
        first = false;
      }
      b.x0 = std::min(b.x0, c.x);
      b.y0 = std::min(b.y0, c.y);
      b.x1 = std::max(b.x1, c.x);
      b.y1 = std::max(b.y1, c.y);
    }
  return b;
}

std::string ascii(const std::vector<RenderItem>& items) {
  if (items.empty()) return "";
  Box b = extent(items);
  std::vector<std::string> rows(static_cast<std::size_t>(b.height()), std::string(static_cast<std::size_t>(b.width()), '.'));
  for (const auto& it : items) {
    char ch = it.name.empty() ? '?' : it.name[0];
    for (Cell c : it.cells) rows[static_cast<std::size_t>(b.y1 - c.y)][static_cast<std::size_t>(c.x - b.x0)] = ch;
  }
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

// Closed outline loops, interior on the left.
std::string outline(const Region& r, const Box& b, int px) {
  using Pt = std::pair<int, int>;
  std::multimap<Pt, Pt> next;
  for (const Edge& e : region_boundary(r)) {
    int x = e.cell.x, y = e.cell.y;
    switch (e.side) {
      case Side::S: next.insert({{x, y}, {x + 1, y}}); break;
      case Side::E: next.insert({{x + 1, y}, {x + 1, y + 1}}); break;
      case Side::N: next.insert({{x + 1, y + 1}, {x, y + 1}}); break;
      case Side::W: next.insert({{x, y + 1}, {x, y}}); break;
    }
  }
  std::ostringstream d;
  auto at = [&](Pt p) { return std::to_string((p.first - b.x0) * px) + " " + std::to_string((b.y1 + 1 - p.second) * px); };
  while (!next.empty()) {
    auto it = next.begin();
    std::vector<Pt> loop{it->first};
    Pt cur = it->second;
    next.erase(it);
    while (cur != loop.front()) {
      loop.push_back(cur);
      auto n = next.find(cur);
      if (n == next.end()) break;
      cur = n->second;
      next.erase(n);
    }
    std::vector<Pt> corners;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      Pt a = loop[(i + n - 1) % n], p = loop[i], c = loop[(i + 1) % n];
      bool straight = (a.first == p.first && p.first == c.first) || (a.second == p.second && p.second == c.second);
      if (!straight) corners.push_back(p);
    }
    for (std::size_t i = 0; i < corners.size(); ++i) d << (i ? " L" : (d.tellp() > 0 ? " M" : "M")) << at(corners[i]);
    d << " Z";
  }
  return d.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string svg(const std::vector<RenderItem>& items, int px) {
  if (items.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"></svg>\n";
  Box b = extent(items);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << b.width() * px << "\" height=\"" << b.height() * px
    << "\" viewBox=\"0 0 " << b.width() * px << " " << b.height() * px << "\">\n";
  for (const auto& it : items) {
    std::uint32_t h = fnv1a(it.name);
    o << "  <path d=\"" << outline(it.cells, b, px) << "\" fill=\"hsl(" << h % 360 << "," << 45 + (h >> 9) % 30 << "%,"
      << 55 + (h >> 17) % 20 << "%)\" stroke=\"black\" stroke-width=\"1\" fill-rule=\"evenodd\"><title>" << xml_escape(it.name)
      << "</title></path>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace

std::string render(const std::vector<RenderItem>& items, const RenderSpec& spec) {
  if (spec.cell_px < 1) throw Error("cell_px must be positive");
  return spec.format == RenderFormat::kAscii ? ascii(items) : svg(items, spec.cell_px);
}

}  // namespace tileforge
