// foldlab: decide and verify cube foldings of rectangular polyominoes with holes.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "foldlab/analyzer.hpp"
#include "foldlab/constructions.hpp"
#include "foldlab/jsonio.hpp"
#include "foldlab/render.hpp"

namespace {

using namespace foldlab;

constexpr int kExitFoldable = 0;
constexpr int kExitUnfoldable = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_node_limit() {
  if (const char* env = std::getenv("FOLDLAB_NODE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed FOLDLAB_NODE_LIMIT\n";
  }
  return SearchConfig{}.node_limit;
}

// Accepts plain polyomino files and fixture files (whose trailing faces:/layers:
// blocks are ignored here).
Polyomino load_polyomino(const std::string& path) {
  std::string text = read_file(path);
  for (const char* block : {"\nfaces:", "\nlayers:"}) {
    auto pos = text.find(block);
    if (pos != std::string::npos) text.erase(pos + 1);
  }
  return parse_polyomino(text);
}

int verdict_exit_code(const Verdict& v) {
  switch (v.status) {
    case VerdictStatus::FoldableCertified: return kExitFoldable;
    case VerdictStatus::UnfoldableCertified: return kExitUnfoldable;
    default: return kExitInconclusive;
  }
}

int cmd_check(const std::string& file, bool json, const SearchConfig& cfg) {
  Polyomino p = load_polyomino(file);
  Verdict v = classify(p, cfg);
  if (json) {
    std::cout << to_json(v).dump() << '\n';
  } else {
    std::cout << to_string(v.status) << ": " << v.reason;
    if (!v.provenance.empty()) std::cout << " [" << v.provenance << "]";
    std::cout << '\n';
    if (v.witness) std::cout << render_ascii(p, v.witness);
  }
  return verdict_exit_code(v);
}

int cmd_search(const std::string& file, bool all, const SearchConfig& cfg) {
  Polyomino p = load_polyomino(file);
  SearchConfig run = cfg;
  run.enumerate_all = all;
  SearchStats stats = search_facemappings(p, run, [&](const Facemapping& fm) {
    Json j = to_json(fm);
    j["onto"] = covered_faces(fm).size() == 6;
    std::cout << j.dump() << '\n';
    return true;
  });
  std::cerr << "stats: nodes=" << stats.nodes << " conflicts=" << stats.conflicts
            << " emitted=" << stats.emitted << " time=" << stats.seconds << "s\n";
  return stats.node_limit_hit ? kExitInconclusive : 0;
}

int cmd_cooperate(const std::string& file, int max_set_size, bool json,
                  const SearchConfig& cfg) {
  Polyomino p = load_polyomino(file);
  CooperationReport r = minimally_cooperating_sets(p, max_set_size, cfg);
  if (json) {
    std::cout << to_json(r).dump() << '\n';
    return 0;
  }
  auto print_set = [](const CooperationEntry& e) {
    std::cout << "  {";
    for (size_t i = 0; i < e.holes.size(); ++i) std::cout << (i ? "," : "") << e.holes[i];
    std::cout << "} " << to_string(e.value) << " [" << e.provenance << "]\n";
  };
  std::cout << "cooperating sets:\n";
  for (const auto& e : r.cooperating_sets) print_set(e);
  std::cout << "minimal sets:\n";
  for (const auto& e : r.minimal_sets) print_set(e);
  return 0;
}

int cmd_generate(const std::string& family, int k, const std::string& fixture_id, bool witness) {
  if (!family.empty()) {
    if (family != "staircase") {
      std::cerr << "unknown family '" << family << "'\n";
      return kExitUsage;
    }
    Polyomino p = generate_staircase(k);
    if (witness) {
      Fixture f;
      f.polyomino = p;
      f.face_labels = staircase_witness(k);
      std::cout << serialize_fixture(f);
    } else {
      std::cout << serialize(p);
    }
    return 0;
  }
  const Fixture* f = find_fixture(fixture_id);
  if (!f) {
    std::cerr << "unknown fixture '" << fixture_id << "'\n";
    return kExitUsage;
  }
  if (witness)
    std::cout << serialize_fixture(*f);
  else
    std::cout << serialize(f->polyomino);
  return 0;
}

int cmd_render(const std::string& file, const std::string& fm_path, const std::string& format) {
  Polyomino p = load_polyomino(file);
  std::optional<Facemapping> fm;
  if (!fm_path.empty()) {
    Json j = Json::parse(read_file(fm_path));
    fm = facemapping_from_json(j);
    if (fm->width() != p.width() || fm->height() != p.height()) {
      std::cerr << "facemapping grid does not match the polyomino\n";
      return kExitBadData;
    }
    if (!is_consistent(p, *fm)) {
      std::cerr << "facemapping is not consistent on this polyomino\n";
      return kExitBadData;
    }
  }
  std::cout << (format == "svg" ? render_svg(p, fm) : render_ascii(p, fm));
  return 0;
}

int cmd_verify_fixtures(bool json) {
  bool all_pass = true;
  Json out = Json::array();
  for (const auto& f : fixtures()) {
    FixtureReport r = verify_fixture(f);
    all_pass &= r.all_pass;
    if (json) {
      out.push_back(to_json(r));
    } else {
      std::cout << r.figure_id << ": " << (r.all_pass ? "ok" : "FAIL") << '\n';
      for (const auto& c : r.checks) {
        std::cout << "  " << (c.pass ? "pass" : "FAIL") << ' ' << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
        std::cout << '\n';
      }
    }
  }
  if (json) std::cout << out.dump() << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube-foldability engine for rectangular polyominoes with holes"};
  app.require_subcommand(1);

  SearchConfig cfg;
  cfg.node_limit = default_node_limit();

  std::string file, fm_path, format = "ascii", family, fixture_id;
  bool json = false, all = false, witness = false;
  int max_set_size = 12, k = 0;

  auto add_search_flags = [&](CLI::App* c) {
    c->add_option("--node-limit", cfg.node_limit, "search node budget");
    c->add_flag_callback("--no-prune", [&] { cfg.use_lemma_pruning = false; },
                         "disable lemma-based crease pruning (oracle mode)");
    c->add_flag("--parallel", cfg.parallel, "explore top-level branches concurrently");
    c->add_flag_callback("--slit1-honest", [&] { cfg.slit1_inert = false; },
                         "do not assume length-1 slits are inert");
  };

  auto* check = app.add_subcommand("check", "classify a polyomino");
  check->add_option("file", file)->required();
  check->add_flag("--json", json);
  add_search_flags(check);

  auto* search = app.add_subcommand("search", "stream consistent facemappings as JSON lines");
  search->add_option("file", file)->required();
  search->add_flag("--all", all, "enumerate all facemappings instead of stopping at one onto");
  add_search_flags(search);

  auto* coop = app.add_subcommand("cooperate", "compute minimally cooperating hole sets");
  coop->add_option("file", file)->required();
  coop->add_option("--max-set-size", max_set_size);
  coop->add_flag("--json", json);
  add_search_flags(coop);

  auto* gen = app.add_subcommand("generate", "emit a generated family member or a fixture");
  auto* gen_family = gen->add_subcommand("family", "generated family");
  gen_family->add_option("name", family)->required();
  gen_family->add_option("--k", k)->required();
  gen_family->add_flag("--witness", witness);
  auto* gen_fixture = gen->add_subcommand("fixture", "transcribed figure");
  gen_fixture->add_option("id", fixture_id)->required();
  gen_fixture->add_flag("--witness", witness);
  gen->require_subcommand(1);

  auto* render = app.add_subcommand("render", "draw a polyomino, optionally with a facemapping");
  render->add_option("file", file)->required();
  render->add_option("--facemapping", fm_path);
  render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* verify = app.add_subcommand("verify-fixtures", "verify the transcribed figure corpus");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, json, cfg);
    if (search->parsed()) return cmd_search(file, all, cfg);
    if (coop->parsed()) return cmd_cooperate(file, max_set_size, json, cfg);
    if (gen->parsed()) {
      if (gen_family->parsed()) {
        if (k < 1) {
          std::cerr << "--k must be >= 1\n";
          return kExitUsage;
        }
        return cmd_generate(family, k, "", witness);
      }
      return cmd_generate("", 0, fixture_id, witness);
    }
    if (render->parsed()) return cmd_render(file, fm_path, format);
    if (verify->parsed()) return cmd_verify_fixtures(json);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BuildError& e) {
    std::cerr << "invalid polyomino: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << e.what() << '\n';
    return kExitInconclusive;
  } catch (const NodeLimitExceeded& e) {
    std::cerr << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadData;
  }
  return kExitUsage;
}
