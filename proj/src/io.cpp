#include "tileforge/io.hpp"

#include <fstream>
#include <sstream>

namespace tileforge {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Json cell_json(Cell c) { return Json::array({c.x, c.y}); }

Cell cell_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw FormatError("cell must be [x, y] with integer coordinates");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Cell> cells_from(const Json& j) {
  if (!j.is_array()) throw FormatError("\"cells\" must be an array");
  std::vector<Cell> out;
  for (const auto& c : j) out.push_back(cell_from(c));
  return out;
}

Json cells_json(const Region& r) {
  Json a = Json::array();
  for (Cell c : r) a.push_back(cell_json(c));
  return a;
}

Json edges_json(const EdgeColors& ec) {
  Json a = Json::array();
  for (const auto& [e, c] : ec)
    a.push_back({{"cell", cell_json(e.cell)}, {"side", std::string(1, side_char(e.side))}, {"color", c.name()}});
  return a;
}

EdgeColors edges_from(const Json& j) {
  if (!j.is_array()) throw FormatError("edge list must be an array");
  EdgeColors out;
  for (const auto& e : j) out[{cell_from(e.at("cell")), parse_side(e.at("side").get<std::string>())}] = Color(e.at("color").get<std::string>());
  return out;
}

Json rect_json(Rect r) { return Json::array({r.w, r.h}); }

Rect rect_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("rect must be [w, h]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json rp_json(const RectPlacement& p) { return {{"tile", p.tile}, {"rect", rect_json(p.rect)}, {"anchor", cell_json(p.at)}}; }

RectPlacement rp_from(const Json& j) {
  return {j.at("tile").get<std::string>(), rect_from(j.at("rect")), cell_from(j.at("anchor"))};
}

std::string join(const Word& w) {
  std::string s;
  for (const auto& x : w) s += x;
  return s;
}

}  // namespace

Json to_json(const Region& r) { return {{"cells", cells_json(r)}}; }

Region region_from_json(const Json& j) {
  return guarded("region", [&] { return Region(cells_from(j.at("cells"))); });
}

Json to_json(const DecoratedRegion& d) { return {{"cells", cells_json(d.region)}, {"constraints", edges_json(d.constraints)}}; }

DecoratedRegion decorated_from_json(const Json& j) {
  return guarded("decorated region", [&] {
    DecoratedRegion d{Region(cells_from(j.at("cells"))), {}};
    if (j.contains("constraints")) d.constraints = edges_from(j.at("constraints"));
    for (const auto& [e, c] : d.constraints)
      if (!d.region.contains(e.cell) || d.region.contains(e.neighbor()))
        throw FormatError("constraint on a non-boundary edge at " + to_string(e.cell) + side_char(e.side));
    return d;
  });
}

Json to_json(const Tileset& ts) {
  Json tiles = Json::array();
  for (const auto& t : ts.tiles) {
    if (const auto* p = std::get_if<Polyomino>(&t.body)) {
      tiles.push_back({{"name", t.name}, {"cells", cells_json(p->region())}});
    } else if (const auto* w = std::get_if<WangSquare>(&t.body)) {
      tiles.push_back({{"name", t.name}, {"n", w->north.name()}, {"e", w->east.name()}, {"s", w->south.name()}, {"w", w->west.name()}});
    } else {
      const auto& g = std::get<GenWangTile>(t.body);
      tiles.push_back({{"name", t.name}, {"cells", cells_json(g.shape.region())}, {"edges", edges_json(g.edge_colors)}});
    }
  }
  return {{"kind", species_name(ts.species)}, {"tiles", tiles}};
}

Tileset tileset_from_json(const Json& j) {
  return guarded("tileset", [&] {
    Tileset ts;
    ts.species = parse_species(j.at("kind").get<std::string>());
    for (const auto& t : j.at("tiles")) {
      std::string name = t.at("name").get<std::string>();
      switch (ts.species) {
        case Species::kPolyomino: ts.tiles.push_back({name, Polyomino(cells_from(t.at("cells")))}); break;
        case Species::kWang:
          ts.tiles.push_back({name, WangSquare{Color(t.at("n").get<std::string>()), Color(t.at("e").get<std::string>()),
                                               Color(t.at("s").get<std::string>()), Color(t.at("w").get<std::string>())}});
          break;
        case Species::kGenWang: {
          std::vector<Cell> cells = cells_from(t.at("cells"));
          Normalized n = normalize_region(cells);
          if (!(n.anchor == Cell{0, 0})) throw FormatError("genwang tile '" + name + "' is not normalized");
          ts.tiles.push_back({name, GenWangTile{Polyomino(cells), edges_from(t.at("edges"))}});
          break;
        }
      }
    }
    auto problems = validate_tileset(ts);
    if (!problems.empty()) throw FormatError(problems.front());
    return ts;
  });
}

Json to_json(const Tiling& t) {
  Json a = Json::array();
  for (const auto& p : t.placements) a.push_back({{"tile", p.tile}, {"offset", cell_json(p.offset)}, {"orientation", p.orientation}});
  return {{"placements", a}};
}

Tiling tiling_from_json(const Json& j) {
  return guarded("tiling", [&] {
    Tiling t;
    for (const auto& p : j.at("placements"))
      t.placements.push_back({p.at("tile").get<std::string>(), cell_from(p.at("offset")), p.value("orientation", 0)});
    return t;
  });
}

Json to_json(const PcpInstance& p) {
  Json pairs = Json::array();
  for (const auto& [a, b] : p.pairs) pairs.push_back(Json::array({join(a), join(b)}));
  return {{"alphabet", p.alphabet}, {"pairs", pairs}};
}

PcpInstance pcp_from_json(const Json& j) {
  return guarded("pcp instance", [&] {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw FormatError("each pair must be [top, bottom]");
      pairs.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    return make_pcp(j.at("alphabet").get<std::vector<std::string>>(), pairs);
  });
}

Json to_json(const TuringMachine& m) {
  Json rules = Json::array();
  for (const auto& [k, acts] : m.delta)
    for (const auto& a : acts)
      rules.push_back({{"from", Json::array({k.first, k.second})},
                       {"to", Json::array({a.state, a.write, a.move == Move::L ? "L" : "R"})}});
  return {{"states", m.states}, {"alphabet", m.alphabet}, {"blank", m.blank}, {"start", m.start},
          {"halting", m.halting}, {"rules", rules}};
}

TuringMachine machine_from_json(const Json& j) {
  return guarded("machine", [&] {
    TuringMachine m;
    m.states = j.at("states").get<std::vector<std::string>>();
    m.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    m.blank = j.value("blank", std::string("0"));
    m.start = j.at("start").get<std::string>();
    m.halting = j.value("halting", std::vector<std::string>{});
    for (const auto& r : j.at("rules")) {
      auto from = r.at("from").get<std::vector<std::string>>();
      auto to = r.at("to").get<std::vector<std::string>>();
      if (from.size() != 2 || to.size() != 3) throw FormatError("rule needs from [q, x] and to [q2, x2, L|R]");
      if (to[2] != "L" && to[2] != "R") throw FormatError("move must be L or R");
      m.add_rule(from[0], from[1], to[0], to[1], to[2] == "L" ? Move::L : Move::R);
    }
    m.validate();
    return m;
  });
}

Json to_json(const PeriodicCertificate& c) {
  Json j;
  j["frame"] = c.frame.empty() ? Json(nullptr) : Json::array({c.frame.x0, c.frame.y0, c.frame.x1, c.frame.y1});
  j["patch"] = Json::array();
  for (const auto& p : c.patch) j["patch"].push_back(rp_json(p));
  j["strips"] = Json::array();
  for (const auto& s : c.strips) {
    Json sj = rp_json(s.base);
    sj["direction"] = std::string(1, side_char(s.direction));
    sj["period"] = s.period;
    j["strips"].push_back(sj);
  }
  j["quadrants"] = Json::array();
  for (const auto& q : c.quadrants)
    j["quadrants"].push_back({{"tile", q.tile}, {"rect", rect_json(q.rect)}, {"corner", cell_json(q.corner)},
                              {"dir", Json::array({q.dx, q.dy})}});
  return j;
}

PeriodicCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    PeriodicCertificate c;
    if (j.contains("frame") && !j.at("frame").is_null()) {
      auto f = j.at("frame").get<std::vector<int>>();
      if (f.size() != 4) throw FormatError("frame must be [x0, y0, x1, y1]");
      c.frame = {f[0], f[1], f[2], f[3]};
    }
    for (const auto& p : j.at("patch")) c.patch.push_back(rp_from(p));
    for (const auto& s : j.at("strips"))
      c.strips.push_back({rp_from(s), parse_side(s.at("direction").get<std::string>()), s.at("period").get<int>()});
    for (const auto& q : j.at("quadrants")) {
      auto d = q.at("dir").get<std::vector<int>>();
      if (d.size() != 2) throw FormatError("quadrant dir must be [dx, dy]");
      c.quadrants.push_back({q.at("tile").get<std::string>(), rect_from(q.at("rect")), cell_from(q.at("corner")), d[0], d[1]});
    }
    return c;
  });
}

Json to_json(const AugWitness& w) {
  return {{"gamma_prime", to_json(w.gamma_prime)}, {"outer", to_json(w.outer)}, {"inner", to_json(w.inner)}};
}

AugWitness aug_witness_from_json(const Json& j) {
  return guarded("witness", [&] {
    return AugWitness{region_from_json(j.at("gamma_prime")), tiling_from_json(j.at("outer")), tiling_from_json(j.at("inner"))};
  });
}

Json to_json(const ColorTable& t) {
  Json j = Json::object();
  for (const auto& [c, bits] : t.entries) j[c.name()] = bits;
  return j;
}

Json to_json(const Configuration& c, const std::string& blank) {
  Json tape = Json::object();
  for (const auto& [pos, x] : c.tape)
    if (x != blank) tape[std::to_string(pos)] = x;
  return {{"state", c.state}, {"head", c.head}, {"tape", tape}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace tileforge
