#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tileforge/augment.hpp"
#include "tileforge/cofinite.hpp"
#include "tileforge/complement.hpp"
#include "tileforge/io.hpp"
#include "tileforge/pcp.hpp"
#include "tileforge/reduce.hpp"
#include "tileforge/render.hpp"
#include "tileforge/turing.hpp"

using namespace tileforge;

namespace {

constexpr int kYes = 0, kNo = 1, kUnknown = 2, kUsage = 64, kDataErr = 65;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool g_json = false;
std::uint64_t g_budget = kDefaultNodeBudget;

int report(int code, const Json& j, const std::string& text) {
  if (g_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
  return code;
}

void write_text(const std::string& path, const std::string& s) {
  if (path.empty() || path == "-") {
    std::cout << s;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << s;
}

void write_doc(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(path, j);
  }
}

std::vector<int> parse_ints(const std::string& s, std::size_t n, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " '" + s + "'");
    }
  }
  if (n && out.size() != n) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return out;
}

// "x0,y0,w,h"
Box parse_window(const std::string& s) {
  auto v = parse_ints(s, 4, "window");
  if (v[2] < 1 || v[3] < 1) throw UsageError("window sides must be positive");
  return {v[0], v[1], v[0] + v[2] - 1, v[1] + v[3] - 1};
}

// Comma-separated symbols, or one symbol per character.
std::vector<std::string> parse_word(const std::string& s) {
  std::vector<std::string> out;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  } else {
    for (char c : s) out.emplace_back(1, c);
  }
  return out;
}

SearchOptions base_opts() {
  SearchOptions o;
  o.node_budget = g_budget;
  return o;
}

WhiteRule parse_rule(const std::string& s) {
  if (s == "free") return WhiteRule::kFree;
  if (s == "white") return WhiteRule::kWhite;
  if (s == "directional") return WhiteRule::kDirectional;
  throw UsageError("white rule must be free, white or directional");
}

std::string outcome_text(Outcome o) { return outcome_name(o); }

// Loads the target matching the tileset species.
SolveResult solve_file_target(const Tileset& ts, const Json& region, const SearchOptions& o, PackingTarget* as_target) {
  if (ts.colored()) {
    DecoratedRegion d = decorated_from_json(region);
    if (as_target) *as_target = PackingTarget::exact(d);
    return tile_region(ts, d, o);
  }
  Region r = region_from_json(region);
  if (as_target) *as_target = PackingTarget::exact(r);
  return tile_region(ts, r, o);
}

Json placements_json(const Tiling& t) { return to_json(t)["placements"]; }

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TILEFORGE_NODE_BUDGET")) {
    try {
      std::size_t used = 0;
      g_budget = std::stoull(env, &used);
      if (used != std::string(env).size() || g_budget == 0) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "TILEFORGE_NODE_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"tileforge: tiling constructions and bounded searches"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");
  std::function<int()> action;

  // tile / count / enumerate
  std::string tileset_path, region_path, out_path;
  bool iso = false, count_flag = false;
  std::size_t enum_cap = 0, list_cap = 1000;
  auto add_tile_like = [&](const std::string& name, const std::string& help, SearchMode fixed) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--tileset", tileset_path, "tileset file")->required();
    sub->add_option("--region", region_path, "region or decorated region file")->required();
    sub->add_flag("--isometries", iso, "allow rotations and reflections");
    sub->add_option("--out", out_path, "write the witness tiling here");
    sub->add_flag("--json", g_json, "machine-readable output");
    if (fixed == SearchMode::kDecide) {
      sub->add_flag("--count", count_flag, "count tilings");
      sub->add_option("--enumerate", enum_cap, "list up to N tilings");
    }
    if (fixed == SearchMode::kEnumerate) sub->add_option("--cap", list_cap, "enumeration cap")->capture_default_str();
    sub->callback([&, fixed] {
      action = [&, fixed]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        SearchOptions o = base_opts();
        o.symmetry = iso ? Symmetry::kIsometries : Symmetry::kTranslations;
        o.mode = fixed;
        if (fixed == SearchMode::kDecide && count_flag) o.mode = SearchMode::kCount;
        if (fixed == SearchMode::kDecide && enum_cap) o.mode = SearchMode::kEnumerate;
        if (o.mode == SearchMode::kEnumerate) o.enumerate_cap = fixed == SearchMode::kEnumerate ? list_cap : enum_cap;
        SolveResult r = solve_file_target(ts, read_json_file(region_path), o, nullptr);
        if (r.outcome == Outcome::kBudgetExceeded && o.mode != SearchMode::kEnumerate) {
          std::cerr << "node budget exceeded after " << r.nodes << " nodes\n";
          return report(kUnknown, {{"outcome", "budget_exceeded"}, {"nodes", r.nodes}}, "unknown");
        }
        if (r.witness && !out_path.empty()) write_json_file(out_path, to_json(*r.witness));
        Json j{{"outcome", outcome_name(r.outcome)}, {"nodes", r.nodes}};
        int code = r.count > 0 || r.outcome == Outcome::kTileable ? kYes : kNo;
        if (o.mode == SearchMode::kCount) {
          j["count"] = r.count;
          return report(code, j, std::to_string(r.count));
        }
        if (o.mode == SearchMode::kEnumerate) {
          Json all = Json::array();
          std::string text;
          for (const auto& t : r.tilings) {
            all.push_back(placements_json(t));
            text += render(render_items(ts, t), {}) + "\n";
          }
          j["tilings"] = all;
          j["count"] = r.tilings.size();
          j["cap_hit"] = r.cap_hit;
          if (r.outcome == Outcome::kBudgetExceeded) code = kUnknown;
          return report(code, j, text + std::to_string(r.tilings.size()) + (r.cap_hit ? "+ tilings (cap hit)" : " tilings"));
        }
        if (r.witness) j["tiling"] = placements_json(*r.witness);
        std::string text = outcome_text(r.outcome);
        if (r.witness) text += "\n" + render(render_items(ts, *r.witness), {});
        return report(code, j, text);
      };
    });
  };
  add_tile_like("tile", "decide, count or enumerate tilings of a region", SearchMode::kDecide);
  add_tile_like("count", "count tilings of a region", SearchMode::kCount);
  add_tile_like("enumerate", "list tilings of a region", SearchMode::kEnumerate);

  // rect-search
  int max_area = 100;
  std::string rule_name = "white";
  {
    auto* sub = app.add_subcommand("rect-search", "smallest tileable rectangle up to an area bound");
    sub->add_option("--tileset", tileset_path)->required();
    sub->add_option("--max-area", max_area)->required();
    sub->add_option("--boundary", rule_name, "free, white or directional (colored tilesets)");
    sub->add_flag("--isometries", iso);
    sub->add_option("--out", out_path);
    sub->add_flag("--json", g_json);
    sub->callback([&] {
      action = [&]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        SearchOptions o = base_opts();
        o.symmetry = iso ? Symmetry::kIsometries : Symmetry::kTranslations;
        RectSearchResult r = find_rectangle(ts, max_area, o, parse_rule(rule_name));
        if (r.found) {
          if (!out_path.empty()) write_json_file(out_path, to_json(r.tiling));
          Json j{{"found", true}, {"rect", {r.rect.w, r.rect.h}}, {"tiling", placements_json(r.tiling)}};
          return report(kYes, j,
                        std::to_string(r.rect.w) + "x" + std::to_string(r.rect.h) + "\n" +
                            render(render_items(ts, r.tiling), {}));
        }
        Json j{{"found", false}, {"searched_area", r.searched_area}, {"budget_exceeded", r.budget_exceeded}};
        return report(kUnknown, j, "none up to area " + std::to_string(r.searched_area));
      };
    });
  }

  // order
  {
    auto* sub = app.add_subcommand("order", "least number of copies of a polyomino tiling a rectangle");
    sub->add_option("--tileset", tileset_path, "polyomino tileset; its first tile is used")->required();
    sub->add_option("--max-area", max_area)->required();
    sub->add_flag("--isometries", iso);
    sub->add_flag("--json", g_json);
    sub->callback([&] {
      action = [&]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        if (ts.species != Species::kPolyomino || ts.tiles.empty()) throw Error("order needs a polyomino tileset");
        Polyomino p = ts.tiles.front().shape();
        OrderResult r = polyomino_order(p, max_area, iso ? Symmetry::kIsometries : Symmetry::kTranslations, g_budget);
        if (!r.found) return report(kUnknown, {{"found", false}, {"budget_exceeded", r.budget_exceeded}}, "unknown");
        Tileset one = polyomino_tileset({{"P", p}});
        Json j{{"found", true}, {"order", r.copies}, {"rect", {r.rect.w, r.rect.h}}, {"tiling", placements_json(r.tiling)}};
        return report(kYes, j, std::to_string(r.copies) + "\n" + render(render_items(one, r.tiling), {}));
      };
    });
  }

  // plane-search
  int max_n = 4;
  {
    auto* sub = app.add_subcommand("plane-search", "periodic or empty plane tilings for Wang tiles");
    sub->add_option("--tileset", tileset_path)->required();
    sub->add_option("--max-n", max_n)->required();
    sub->add_flag("--json", g_json);
    sub->callback([&] {
      action = [&]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        PlaneResult r = plane_semidecide(ts, max_n, g_budget);
        const char* status = r.status == PlaneStatus::kPeriodic ? "periodic" : r.status == PlaneStatus::kEmpty ? "empty" : "unknown";
        Json j{{"status", status}, {"n", r.n}};
        if (r.status == PlaneStatus::kPeriodic) j["fundamental"] = placements_json(r.fundamental);
        int code = r.status == PlaneStatus::kPeriodic ? kYes : r.status == PlaneStatus::kEmpty ? kNo : kUnknown;
        return report(code, j, std::string(status) + " " + std::to_string(r.n));
      };
    });
  }

  // reduce
  std::string profile_str = "zigzag-all", table_path;
  {
    auto* sub = app.add_subcommand("reduce", "polyomino -> genwang -> wang squares -> polyomino");
    sub->add_option("--tileset", tileset_path)->required();
    sub->add_option("--profile", profile_str, "zigzag-all or flat-white");
    sub->add_option("--out", out_path, "output tileset file (default stdout)");
    sub->add_option("--table", table_path, "color table file (wang input)");
    sub->add_flag("--json", g_json);
    sub->callback([&] {
      action = [&]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        Profile prof;
        try {
          prof = parse_profile(profile_str);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        switch (ts.species) {
          case Species::kPolyomino: write_doc(out_path, to_json(poly_to_genwang(ts))); break;
          case Species::kGenWang: write_doc(out_path, to_json(genwang_to_wangsquares(ts).squares)); break;
          case Species::kWang: {
            Encoding enc = wang_to_poly(ts, reduction_params(ts, prof));
            write_doc(out_path, to_json(enc.polys));
            Json table{{"S", enc.params.S}, {"r", enc.params.r}, {"m", enc.params.m},
                       {"profile", profile_name(enc.params.profile)}, {"colors", to_json(enc.table)}};
            if (!table_path.empty()) write_json_file(table_path, table);
            break;
          }
        }
        return kYes;
      };
    });
  }

  // pcp
  std::string instance_path, solution_str, border_str = "guarded", tiling_path;
  int depth = 10;
  {
    auto* pcp = app.add_subcommand("pcp", "Post correspondence instances as tilesets");
    pcp->require_subcommand(1);
    auto border = [&] {
      if (border_str == "guarded") return PcpBorder::kGuarded;
      if (border_str == "plain") return PcpBorder::kPlain;
      throw UsageError("border must be guarded or plain");
    };
    auto* build = pcp->add_subcommand("build", "write the tileset");
    build->add_option("--instance", instance_path)->required();
    build->add_option("--border", border_str);
    build->add_option("--out", out_path);
    build->callback([&, border] {
      action = [&, border]() -> int {
        write_doc(out_path, to_json(build_pcp_tileset(pcp_from_json(read_json_file(instance_path)), border())));
        return kYes;
      };
    });
    auto* solve = pcp->add_subcommand("solve", "bounded breadth-first search");
    solve->add_option("--instance", instance_path)->required();
    solve->add_option("--depth", depth)->required();
    solve->add_flag("--json", g_json);
    solve->callback([&] {
      action = [&]() -> int {
        PcpSearchResult r = solve_pcp_bounded(pcp_from_json(read_json_file(instance_path)), depth);
        if (!r.solution) return report(kUnknown, {{"solution", nullptr}, {"depth", r.depth}}, "none up to depth " + std::to_string(r.depth));
        std::string text;
        for (int e : *r.solution) text += (text.empty() ? "" : ",") + std::to_string(e);
        return report(kYes, {{"solution", *r.solution}, {"depth", r.depth}}, text);
      };
    });
    auto* witness = pcp->add_subcommand("witness", "tiling of a white rectangle from a solution");
    witness->add_option("--instance", instance_path)->required();
    witness->add_option("--solution", solution_str, "1-based indices, comma separated")->required();
    witness->add_option("--border", border_str);
    witness->add_option("--out", out_path);
    witness->add_flag("--json", g_json);
    witness->callback([&, border] {
      action = [&, border]() -> int {
        PcpInstance inst = pcp_from_json(read_json_file(instance_path));
        PcpSolution sol = parse_ints(solution_str, 0, "solution");
        if (!is_pcp_solution(inst, sol)) throw Error("not a solution");
        PcpWitness w = pcp_witness(inst, sol, border());
        if (!out_path.empty()) write_json_file(out_path, to_json(w.tiling));
        Tileset ts = build_pcp_tileset(inst, border());
        return report(kYes, {{"rect", {w.rect.w, w.rect.h}}, {"tiling", placements_json(w.tiling)}},
                      std::to_string(w.rect.w) + "x" + std::to_string(w.rect.h) + "\n" + render(render_items(ts, w.tiling), {}));
      };
    });
    auto* extract = pcp->add_subcommand("extract", "read the solution off a rectangle tiling");
    extract->add_option("--instance", instance_path)->required();
    extract->add_option("--tiling", tiling_path)->required();
    extract->add_option("--border", border_str);
    extract->add_flag("--json", g_json);
    extract->callback([&, border] {
      action = [&, border]() -> int {
        PcpInstance inst = pcp_from_json(read_json_file(instance_path));
        PcpSolution sol = extract_pcp_solution(inst, tiling_from_json(read_json_file(tiling_path)), border());
        std::string text;
        for (int e : sol) text += (text.empty() ? "" : ",") + std::to_string(e);
        bool ok = is_pcp_solution(inst, sol);
        return report(ok ? kYes : kNo, {{"solution", sol}, {"valid", ok}}, text);
      };
    });
  }

  // tm
  std::string machine_path, input_str;
  int steps = 1000, k = 1, aug_steps = 100000;
  std::string aug_rule = "directional";
  {
    auto* tm = app.add_subcommand("tm", "Turing machines and their emulation tiles");
    tm->require_subcommand(1);
    auto* run = tm->add_subcommand("run", "simulate");
    run->add_option("--machine", machine_path)->required();
    run->add_option("--input", input_str, "symbols, one per character or comma separated");
    run->add_option("--steps", steps);
    run->add_flag("--json", g_json);
    run->callback([&] {
      action = [&]() -> int {
        TuringMachine m = machine_from_json(read_json_file(machine_path));
        RunResult r = tm_run(m, parse_word(input_str), steps);
        Json trace = Json::array();
        std::string text;
        for (const auto& c : r.trace) {
          trace.push_back(to_json(c, m.blank));
          text += c.state + "@" + std::to_string(c.head) + " ";
          for (const auto& [pos, x] : c.tape) text += std::to_string(pos) + ":" + x + " ";
          text += "\n";
        }
        const char* status = r.halted ? "halted" : r.stuck ? "stuck" : "running";
        text += std::string(status) + " after " + std::to_string(r.steps) + " steps";
        return report(r.halted ? kYes : r.stuck ? kNo : kUnknown, {{"status", status}, {"steps", r.steps}, {"trace", trace}}, text);
      };
    });
    auto* build = tm->add_subcommand("build", "emulation tileset");
    build->add_option("--machine", machine_path)->required();
    build->add_option("--out", out_path);
    build->callback([&] {
      action = [&]() -> int {
        write_doc(out_path, to_json(build_emulation_tileset(machine_from_json(read_json_file(machine_path)))));
        return kYes;
      };
    });
    auto* verify = tm->add_subcommand("verify", "tile k rows under the input and compare with the run");
    verify->add_option("--machine", machine_path)->required();
    verify->add_option("--input", input_str);
    verify->add_option("--k", k)->required();
    verify->add_flag("--json", g_json);
    verify->callback([&] {
      action = [&]() -> int {
        TuringMachine m = machine_from_json(read_json_file(machine_path));
        EmulationCheck c = verify_emulation(m, parse_word(input_str), k, std::nullopt, g_budget);
        Json j{{"ok", c.ok}, {"diagnostic", c.diagnostic}, {"window", {c.window.lo, c.window.hi}}};
        int code = c.ok ? kYes : c.diagnostic == "node budget exceeded" ? kUnknown : kNo;
        return report(code, j, c.ok ? "ok" : c.diagnostic);
      };
    });
  }

  // ctt
  std::string out_tileset, out_region;
  bool polyomino_form = false;
  {
    auto* ctt = app.add_subcommand("ctt", "complementary tileability instances");
    ctt->require_subcommand(1);
    auto* build = ctt->add_subcommand("build", "instance bundle for a machine and input");
    build->add_option("--machine", machine_path)->required();
    build->add_option("--input", input_str);
    build->add_option("--out-tileset", out_tileset)->required();
    build->add_option("--out-region", out_region)->required();
    build->add_flag("--polyomino", polyomino_form, "emit the polyomino form");
    build->callback([&] {
      action = [&]() -> int {
        CttInstance inst = build_ctt_instance(machine_from_json(read_json_file(machine_path)), parse_word(input_str));
        if (polyomino_form) {
          CttPolyomino p = ctt_polyomino_form(inst);
          write_json_file(out_tileset, to_json(p.encoding.polys));
          write_json_file(out_region, to_json(p.hole));
        } else {
          write_json_file(out_tileset, to_json(inst.tileset));
          write_json_file(out_region, to_json(inst.hole));
        }
        return kYes;
      };
    });
    auto* fixed = ctt->add_subcommand("fixed-hole", "reduce a hole to a single punctured tile");
    fixed->add_option("--tileset", tileset_path)->required();
    fixed->add_option("--region", region_path)->required();
    fixed->add_option("--out", out_path);
    fixed->add_flag("--json", g_json);
    fixed->callback([&] {
      action = [&]() -> int {
        FixedHoleResult r = fixed_hole_transform(tileset_from_json(read_json_file(tileset_path)),
                                                 region_from_json(read_json_file(region_path)));
        write_doc(out_path, to_json(r.tiles));
        if (!out_path.empty()) report(kYes, {{"punctured", r.punctured}, {"S", r.params.S}}, "punctured " + r.punctured);
        return kYes;
      };
    });
  }

  // cofinite
  std::string cert_path, window_str;
  {
    auto* cof = app.add_subcommand("cofinite", "tilings of the plane minus a finite hole");
    cof->require_subcommand(1);
    auto* decide = cof->add_subcommand("decide", "rectangle tilesets: decide and certify");
    decide->add_option("--tileset", tileset_path)->required();
    decide->add_option("--region", region_path)->required();
    decide->add_option("--out", out_path, "certificate file");
    decide->add_flag("--json", g_json);
    decide->callback([&] {
      action = [&]() -> int {
        CofiniteDecision d = decide_complement_rect(tileset_from_json(read_json_file(tileset_path)),
                                                    region_from_json(read_json_file(region_path)), g_budget);
        if (d.budget_exceeded) return report(kUnknown, {{"decision", "unknown"}}, "unknown");
        if (!d.yes) return report(kNo, {{"decision", "no"}}, "no");
        if (!out_path.empty()) write_json_file(out_path, to_json(*d.certificate));
        return report(kYes, {{"decision", "yes"}, {"certificate", to_json(*d.certificate)}}, "yes");
      };
    });
    auto* verify = cof->add_subcommand("verify", "check a certificate on a window");
    verify->add_option("--certificate", cert_path)->required();
    verify->add_option("--region", region_path)->required();
    verify->add_option("--window", window_str, "x0,y0,w,h")->required();
    verify->add_flag("--json", g_json);
    verify->callback([&] {
      action = [&]() -> int {
        Validation v = verify_certificate(certificate_from_json(read_json_file(cert_path)),
                                          region_from_json(read_json_file(region_path)), parse_window(window_str));
        return report(v.ok ? kYes : kNo, {{"ok", v.ok}, {"diagnostic", v.diagnostic}}, v.ok ? "ok" : v.diagnostic);
      };
    });
    auto* refute = cof->add_subcommand("refute", "look for a window around the hole that cannot be covered");
    refute->add_option("--tileset", tileset_path)->required();
    refute->add_option("--region", region_path, "hole (decorated for colored tilesets)")->required();
    refute->add_option("--max-n", max_n)->required();
    refute->add_flag("--json", g_json);
    refute->callback([&] {
      action = [&]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        Json rj = read_json_file(region_path);
        RefuteResult r = ts.colored() ? cofinite_refute_bounded(ts, decorated_from_json(rj), max_n, g_budget)
                                      : cofinite_refute_bounded(ts, region_from_json(rj), max_n, g_budget);
        Json j{{"refuted", r.refuted}, {"n", r.n}, {"budget_exceeded", r.budget_exceeded}};
        if (r.refuted) return report(kNo, j, "refuted at " + std::to_string(r.n));
        return report(kUnknown, j, "unknown up to " + std::to_string(r.n));
      };
    });
  }

  // augment
  std::string box_str = "4,4";
  {
    auto* aug = app.add_subcommand("augment", "augmentability instances and searches");
    aug->require_subcommand(1);
    auto* build = aug->add_subcommand("build", "instance bundle for a 1-way machine and input");
    build->add_option("--machine", machine_path)->required();
    build->add_option("--input", input_str);
    build->add_option("--out-tileset", out_tileset)->required();
    build->add_option("--out-region", out_region)->required();
    build->callback([&] {
      action = [&]() -> int {
        AugInstance inst = build_aug_instance(machine_from_json(read_json_file(machine_path)), parse_word(input_str));
        write_json_file(out_tileset, to_json(inst.tileset));
        write_json_file(out_region, to_json(inst.hole));
        return kYes;
      };
    });
    auto* witness = aug->add_subcommand("witness", "augmentation from a halting run");
    witness->add_option("--machine", machine_path)->required();
    witness->add_option("--input", input_str);
    witness->add_option("--steps", aug_steps, "simulation limit")->capture_default_str();
    witness->add_option("--out", out_path);
    witness->add_flag("--json", g_json);
    witness->callback([&] {
      action = [&]() -> int {
        TuringMachine m = machine_from_json(read_json_file(machine_path));
        auto word = parse_word(input_str);
        RunResult run = tm_run(m, word, aug_steps);
        if (!run.halted) return report(kUnknown, {{"halted", false}}, "no halt within " + std::to_string(aug_steps) + " steps");
        AugInstance inst = build_aug_instance(m, word);
        AugWitness w = halting_witness(m, word, aug_steps);
        Validation v = validate_aug_witness(inst.tileset, inst.hole, w);
        if (!v) throw Error("internal: witness fails validation: " + v.diagnostic);
        write_doc(out_path, to_json(w));
        return kYes;
      };
    });
    auto* search = aug->add_subcommand("search", "bounded search for an augmentation");
    search->add_option("--tileset", tileset_path)->required();
    search->add_option("--region", region_path)->required();
    search->add_option("--box", box_str, "w,h");
    search->add_option("--boundary", aug_rule, "white rule for colored tilesets")->capture_default_str();
    search->add_option("--out", out_path);
    search->add_flag("--json", g_json);
    search->callback([&] {
      action = [&]() -> int {
        Tileset ts = tileset_from_json(read_json_file(tileset_path));
        auto b = parse_ints(box_str, 2, "box");
        Json rj = read_json_file(region_path);
        WhiteRule rule = parse_rule(aug_rule);
        AugSearchResult r = ts.colored() ? augmentable_bounded(ts, decorated_from_json(rj), {b[0], b[1]}, rule, g_budget)
                                         : augmentable_bounded(ts, region_from_json(rj), {b[0], b[1]}, rule, g_budget);
        Json j{{"found", r.found}, {"candidates", r.candidates}, {"budget_exceeded", r.budget_exceeded}};
        if (!r.found) return report(kUnknown, j, "unknown");
        if (!out_path.empty()) write_json_file(out_path, to_json(*r.witness));
        j["witness"] = to_json(*r.witness);
        return report(kYes, j, "yes\n" + render(render_items(ts, r.witness->outer), {}));
      };
    });
  }

  // render
  std::string format = "ascii";
  int cell_px = 16;
  {
    auto* sub = app.add_subcommand("render", "draw a tiling or a certificate window");
    sub->add_option("--tileset", tileset_path);
    sub->add_option("--tiling", tiling_path);
    sub->add_option("--certificate", cert_path);
    sub->add_option("--window", window_str, "x0,y0,w,h (certificates)");
    sub->add_option("--format", format, "ascii or svg");
    sub->add_option("--cell-px", cell_px);
    sub->add_option("--out", out_path);
    sub->callback([&] {
      action = [&]() -> int {
        RenderSpec spec;
        if (format == "ascii") {
          spec.format = RenderFormat::kAscii;
        } else if (format == "svg") {
          spec.format = RenderFormat::kSvg;
        } else {
          throw UsageError("format must be ascii or svg");
        }
        if (cell_px < 1) throw UsageError("--cell-px must be positive");
        spec.cell_px = cell_px;
        std::vector<RenderItem> items;
        if (!cert_path.empty()) {
          if (window_str.empty()) throw UsageError("--certificate needs --window");
          Box w = parse_window(window_str);
          items = render_items(materialize(certificate_from_json(read_json_file(cert_path)), w), w);
        } else {
          if (tileset_path.empty() || tiling_path.empty()) throw UsageError("need --tileset and --tiling, or --certificate");
          Tileset ts = tileset_from_json(read_json_file(tileset_path));
          Tiling t = tiling_from_json(read_json_file(tiling_path));
          Region cover;
          for (const auto& it : render_items(ts, t)) {
            if (cover.intersects(it.cells)) throw FormatError("tiling has overlapping tiles");
            cover = cover.united(it.cells);
          }
          items = render_items(ts, t);
        }
        write_text(out_path, render(items, spec));
        return kYes;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kDataErr;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataErr;
  }
}
