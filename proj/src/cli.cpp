#include "epolab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "epolab/io.hpp"
#include "epolab/parallel.hpp"
#include "epolab/trees.hpp"

namespace epolab {

namespace {

constexpr int kCsfMaxVertices = 20;
constexpr int kMissingTypesMaxVertices = 25;
constexpr int kTreesScanMax = 14;

// Raised by a command to leave with a given exit code after printing `what`.
struct Exit {
  int code;
  std::string what;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool timing = false;
  int jobs = 1;
  std::optional<ResultCache> cache;

  // Looks the result up in the cache or computes and stores it.
  Json cached(const std::string& command, const std::string& input, const std::function<Json()>& compute) {
    if (cache) {
      if (auto hit = cache->lookup(command, input)) return *hit;
    }
    Json result = compute();
    if (cache) cache->store(command, input, result);
    return result;
  }
};

int default_jobs() {
  if (const char* env = std::getenv("EPOLAB_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

const Graph& require_graph(const GraphSpec& spec, const char* command) {
  if (const auto* g = std::get_if<Graph>(&spec.value)) return *g;
  throw Exit{kExitUsage, std::string(command) + ": needs a graph, not a bare profile"};
}

void guard_size(const Graph& g, int limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw Exit{kExitGuard, std::string(what) + ": n = " + std::to_string(g.vertex_count()) + " exceeds " +
                               std::to_string(limit)};
  }
}

Json csf_result(Context& ctx, const GraphSpec& spec, const Graph& g) {
  return ctx.cached("csf", spec.canonical, [&] { return to_json(csf_e(g, ctx.jobs)); });
}

int cmd_csf(Context& ctx, const std::string& text) {
  const GraphSpec spec = parse_graph_spec(text);
  const Graph& g = require_graph(spec, "csf");
  guard_size(g, kCsfMaxVertices, "csf");
  const Json result = csf_result(ctx, spec, g);
  if (ctx.json) {
    ctx.out << result.dump(2) << "\n";
  } else {
    ctx.out << render_expansion(expansion_from_json(result));
  }
  return kExitOk;
}

int cmd_epos(Context& ctx, const std::string& text) {
  const GraphSpec spec = parse_graph_spec(text);
  const Graph& g = require_graph(spec, "epos");
  guard_size(g, kCsfMaxVertices, "epos");
  const EposVerdict verdict = epos_verdict(expansion_from_json(csf_result(ctx, spec, g)));
  if (ctx.json) {
    Json negatives = Json::array();
    for (const auto& [lambda, coeff] : verdict.negatives) {
      negatives.push_back(Json{{"lambda", to_json(lambda)}, {"coeff", coeff.str()}});
    }
    ctx.out << Json{{"graph", spec.canonical}, {"e_positive", verdict.positive}, {"negatives", negatives}}.dump(2)
            << "\n";
  } else {
    ctx.out << spec.canonical << ": " << (verdict.positive ? "e-positive" : "not e-positive") << "\n";
    for (const auto& [lambda, coeff] : verdict.negatives) ctx.out << "  " << render_term(lambda, coeff) << "\n";
  }
  return verdict.positive ? kExitOk : kExitNegative;
}

int cmd_connparts(Context& ctx, const std::string& text, const std::string& lambda_text) {
  const GraphSpec spec = parse_graph_spec(text);
  const Graph& g = require_graph(spec, "connparts");
  if (!lambda_text.empty()) {
    guard_size(g, 64, "connparts");
    Partition lambda = parse_partition(lambda_text);
    if (lambda.total() != g.vertex_count()) {
      throw Exit{kExitUsage, "connparts: |lambda| = " + std::to_string(lambda.total()) +
                                 " but n = " + std::to_string(g.vertex_count())};
    }
    const Json result = ctx.cached("connparts", spec.canonical + "|" + to_string(lambda), [&] {
      const auto cp = has_connected_partition(g, lambda);
      return cp ? to_json(*cp) : Json(nullptr);
    });
    if (ctx.json) {
      ctx.out << Json{{"lambda", to_json(lambda)}, {"witness", result}}.dump(2) << "\n";
    } else if (result.is_null()) {
      ctx.out << "MISSING " << to_string(lambda) << "\n";
    } else {
      ctx.out << "FOUND " << to_string(lambda) << "\n";
      for (const auto& block : result["blocks"]) ctx.out << "  " << block.dump() << "\n";
    }
    return result.is_null() ? kExitNegative : kExitOk;
  }
  guard_size(g, kMissingTypesMaxVertices, "connparts");
  if (!is_connected(g)) throw Exit{kExitUsage, "connparts: graph must be connected"};
  const Json result = ctx.cached("connparts", spec.canonical, [&] {
    Json missing = Json::array();
    for (const auto& lambda : missing_types(g)) missing.push_back(to_json(lambda));
    return Json{{"types", partition_count(g.vertex_count())}, {"missing", missing}};
  });
  if (ctx.json) {
    ctx.out << result.dump(2) << "\n";
  } else {
    ctx.out << spec.canonical << ": " << result["missing"].size() << " of " << result["types"].get<std::uint64_t>()
            << " types missing\n";
    for (const auto& lambda : result["missing"]) {
      ctx.out << "  " << to_string(Partition(lambda.get<std::vector<int>>())) << "\n";
    }
  }
  return result["missing"].empty() ? kExitOk : kExitNegative;
}

int cmd_prove(Context& ctx, const std::string& text) {
  const GraphSpec spec = parse_graph_spec(text);
  std::vector<std::pair<std::optional<int>, CutProfile>> profiles;
  if (const auto* p = std::get_if<CutProfile>(&spec.value)) {
    profiles.emplace_back(std::nullopt, *p);
  } else {
    const Graph& g = std::get<Graph>(spec.value);
    if (!is_connected(g)) throw Exit{kExitUsage, "prove: graph must be connected"};
    for (const auto& vp : cut_profiles(g)) {
      const bool seen = std::any_of(profiles.begin(), profiles.end(),
                                    [&](const auto& e) { return e.second == vp.profile; });
      if (!seen) profiles.emplace_back(vp.vertex, vp.profile);
    }
  }
  std::vector<std::string> reasons;
  for (const auto& [vertex, profile] : profiles) {
    const auto cert = theorem_decide(profile);
    if (!cert) {
      reasons.push_back(to_string(profile) + ": " + theorem_inapplicable_reason(profile));
      continue;
    }
    Json j = to_json(*cert);
    if (vertex) j["vertex"] = *vertex;
    ctx.out << (ctx.json ? j.dump(2) : j.dump()) << "\n";
    return kExitOk;
  }
  if (reasons.empty()) reasons.push_back("no vertex leaves three or more components");
  if (ctx.json) {
    ctx.out << Json{{"applicable", false}, {"reasons", reasons}}.dump(2) << "\n";
  } else {
    ctx.out << "NOT-APPLICABLE:";
    for (const auto& r : reasons) ctx.out << " " << r << ";";
    ctx.out << "\n";
  }
  return kExitOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("no ..");
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(dots + 2);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return {lo, hi};
  } catch (const std::exception&) {
    throw Exit{kExitUsage, "sweep: bad range '" + text + "', expected lo..hi"};
  }
}

struct SweepArgs {
  std::string kind;
  std::string range;
  std::string mode = "full";
  std::string out_path;
  std::string csv_path;
};

int cmd_sweep(Context& ctx, const SweepArgs& args) {
  const bool c40 = args.kind == "c40";
  if (!c40 && args.kind != "c500") throw Exit{kExitUsage, "sweep: kind must be c40 or c500"};
  if (args.mode != "full" && args.mode != "sampled") throw Exit{kExitUsage, "sweep: mode must be full or sampled"};
  const auto [lo, hi] = parse_range(args.range.empty() ? (c40 ? "2..40" : "41..500") : args.range);
  if (c40 ? (lo < 2 || lo > hi) : (lo < 41 || lo > hi || hi > 500)) {
    throw Exit{kExitUsage, "sweep: range " + std::to_string(lo) + ".." + std::to_string(hi) + " out of bounds"};
  }
  if (c40 && args.mode != "full") throw Exit{kExitUsage, "sweep: c40 has no sampled mode"};
  if (!c40 && !args.csv_path.empty()) throw Exit{kExitUsage, "sweep: --csv is only available for c40"};

  const std::string input = args.kind + ":" + std::to_string(lo) + ".." + std::to_string(hi) + ":" + args.mode;
  auto compute = [&] {
    SweepReport report;
    if (c40) {
      std::ofstream csv;
      CellSink sink;
      if (!args.csv_path.empty()) {
        csv.open(args.csv_path);
        if (!csv) throw Exit{kExitUsage, "sweep: cannot write " + args.csv_path};
        csv << "b,c,n,q,x,y\n";
        sink = [&csv](const SweepCell& cell, const CellHit& hit) {
          csv << cell.b << ',' << cell.c << ',' << cell.n << ',' << hit.q << ',' << hit.x << ',' << hit.y << '\n';
        };
      }
      report = sweep_c40(lo, hi, ctx.jobs, sink);
    } else {
      report = sweep_c500(lo, hi, args.mode == "sampled" ? SweepMode::Sampled : SweepMode::Full, ctx.jobs);
    }
    return to_json(report, true);
  };
  // The CSV is a side product, so a cached result cannot stand in for it.
  Json report = args.csv_path.empty() ? ctx.cached("sweep", input, compute) : compute();
  // The report file always records timing; stdout only on request.
  if (!args.out_path.empty()) {
    std::ofstream f(args.out_path);
    if (!f) throw Exit{kExitUsage, "sweep: cannot write " + args.out_path};
    f << Json{{"sweep", input}, {"report", report}}.dump(2) << "\n";
  }
  if (!ctx.timing) report.erase("wall_time_ms");
  const auto& failures = report["failures"];
  if (ctx.json) {
    ctx.out << Json{{"sweep", input}, {"report", report}}.dump(2) << "\n";
  } else {
    ctx.out << "sweep " << input << ": rows=" << report["rows"].get<std::uint64_t>()
            << " cells=" << report["cells"].get<std::uint64_t>() << " failures=" << failures.size() << "\n";
    for (const auto& f : failures) ctx.out << "  FAIL " << f.dump() << "\n";
    if (ctx.timing) ctx.out << "wall_time_ms=" << report["wall_time_ms"].get<std::int64_t>() << "\n";
  }
  return failures.empty() ? kExitOk : kExitNegative;
}

int cmd_trees_scan(Context& ctx, int n_max) {
  if (n_max < 1) throw Exit{kExitUsage, "trees-scan: n_max must be positive"};
  if (n_max > kTreesScanMax) {
    throw Exit{kExitGuard, "trees-scan: n_max = " + std::to_string(n_max) + " exceeds " +
                               std::to_string(kTreesScanMax)};
  }
  Json rows = Json::array();
  std::vector<std::string> counterexamples;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Graph> qualifying;
    std::uint64_t trees = 0;
    for (auto& t : enumerate_free_trees(n)) {
      ++trees;
      if (max_degree(t) >= 4) qualifying.push_back(std::move(t));
    }
    std::vector<std::string> keys(qualifying.size());
    std::vector<std::optional<bool>> positive(qualifying.size());
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
      keys[i] = "tree:" + tree_canonical_form(qualifying[i]);
      if (ctx.cache) {
        if (auto hit = ctx.cache->lookup("epos", keys[i])) positive[i] = hit->get<bool>();
      }
    }
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
      if (!positive[i]) todo.push_back(i);
    }
    std::vector<char> computed(todo.size());
    parallel_for(todo.size(), ctx.jobs, [&](std::size_t k, std::size_t) {
      computed[k] = is_e_positive(qualifying[todo[k]]).positive;
    });
    for (std::size_t k = 0; k < todo.size(); ++k) {
      positive[todo[k]] = computed[k] != 0;
      if (ctx.cache) ctx.cache->store("epos", keys[todo[k]], computed[k] != 0);
    }
    std::uint64_t not_positive = 0;
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
      if (*positive[i]) {
        counterexamples.push_back(keys[i]);
      } else {
        ++not_positive;
      }
    }
    rows.push_back(Json{{"n", n},
                        {"trees", trees},
                        {"qualifying", qualifying.size()},
                        {"not_e_positive", not_positive},
                        {"counterexamples", qualifying.size() - not_positive}});
  }
  if (ctx.json) {
    ctx.out << Json{{"rows", rows}, {"counterexamples", counterexamples}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      ctx.out << "n=" << r["n"] << " trees=" << r["trees"] << " qualifying=" << r["qualifying"]
              << " not-e-positive=" << r["not_e_positive"] << " counterexamples=" << r["counterexamples"] << "\n";
    }
    ctx.out << "total counterexamples: " << counterexamples.size() << "\n";
    for (const auto& c : counterexamples) ctx.out << "  " << c << "\n";
  }
  return counterexamples.empty() ? kExitOk : kExitNegative;
}

int cmd_sixm(Context& ctx, int m, bool cross_check) {
  if (m < 1 || m > 3) throw Exit{kExitUsage, "sixm: m must lie in 1..3"};
  const Json report = ctx.cached("sixm", "m=" + std::to_string(m) + (cross_check ? ",cross-check" : ""),
                                 [&] { return to_json(sixm_full_check(m, cross_check, ctx.jobs)); });
  const auto types = report["types"].get<std::uint64_t>();
  const auto passed = report["passed"].get<std::uint64_t>();
  bool ok = passed == types;
  if (report.contains("oracle_agreements")) ok = ok && report["oracle_agreements"].get<std::uint64_t>() == types;
  if (ctx.json) {
    ctx.out << report.dump(2) << "\n";
  } else {
    ctx.out << "m=" << m << ": " << passed << "/" << types << " pass\n";
    for (const auto& [branch, count] : report["branches"].items()) {
      ctx.out << "  " << branch << ": " << count.get<std::uint64_t>() << "\n";
    }
    for (const auto& f : report["failures"]) ctx.out << "  FAIL " << f.dump() << "\n";
    if (report.contains("oracle_agreements")) {
      ctx.out << "oracle agreement: " << report["oracle_agreements"].get<std::uint64_t>() << "/" << types << "\n";
    }
  }
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic symmetric functions, connected partitions and e-positivity certificates", "epolab"};
  app.require_subcommand(1);
  bool json = false;
  bool timing = false;
  int jobs = default_jobs();
  std::string cache_path;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--jobs,-j", jobs, "Worker threads (default $EPOLAB_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--cache", cache_path, "JSON-lines result cache");
  app.add_flag("--timing", timing, "Report wall time for sweeps");

  std::string graph_text;
  std::string lambda_text;
  auto* csf = app.add_subcommand("csf", "Chromatic symmetric function in the e-basis");
  csf->add_option("graph", graph_text, "Graph spec or file")->required();
  auto* epos = app.add_subcommand("epos", "Decide e-positivity");
  epos->add_option("graph", graph_text, "Graph spec or file")->required();
  auto* connparts = app.add_subcommand("connparts", "Connected partitions: one type, or all missing types");
  connparts->add_option("graph", graph_text, "Graph spec or file")->required();
  connparts->add_option("lambda", lambda_text, "Type such as 3,2,2");
  auto* prove = app.add_subcommand("prove", "Certificate of a missing connected-partition type");
  prove->add_option("spec", graph_text, "Graph or profile spec")->required();

  SweepArgs sweep_args;
  std::string mode_flag;
  auto* sweep = app.add_subcommand("sweep", "Finite sweeps behind the middle range of b");
  sweep->add_option("kind", sweep_args.kind, "c40 or c500")->required();
  sweep->add_option("range", sweep_args.range, "c range lo..hi");
  sweep->add_option("mode_pos", sweep_args.mode, "full or sampled");
  sweep->add_option("--mode", mode_flag, "full or sampled");
  sweep->add_option("--out", sweep_args.out_path, "Write JSON report here");
  sweep->add_option("--csv", sweep_args.csv_path, "Write every c40 witness here");

  int n_max = 0;
  auto* trees = app.add_subcommand("trees-scan", "Check trees with a vertex of degree >= 4");
  trees->add_option("n_max", n_max, "Largest tree size")->required();

  int m = 0;
  bool cross_check = false;
  auto* sixm = app.add_subcommand("sixm", "Connected partitions of every type for S(6m,6m-2,1,1)");
  sixm->add_option("m", m, "1..3")->required();
  sixm->add_flag("--cross-check", cross_check, "Compare against the backtracking search");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!mode_flag.empty()) sweep_args.mode = mode_flag;

  Context ctx{out, err, false, false, 1, std::nullopt};
  ctx.json = json;
  ctx.timing = timing;
  ctx.jobs = jobs;
  try {
    if (!cache_path.empty()) ctx.cache.emplace(cache_path);
    if (*csf) return cmd_csf(ctx, graph_text);
    if (*epos) return cmd_epos(ctx, graph_text);
    if (*connparts) return cmd_connparts(ctx, graph_text, lambda_text);
    if (*prove) return cmd_prove(ctx, graph_text);
    if (*sweep) return cmd_sweep(ctx, sweep_args);
    if (*trees) return cmd_trees_scan(ctx, n_max);
    if (*sixm) return cmd_sixm(ctx, m, cross_check);
  } catch (const Exit& e) {
    err << "error: " << e.what << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace epolab
