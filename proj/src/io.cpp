#include "epolab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace epolab {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(parse_int(text.substr(pos, comma - pos), what));
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// "a=2,b=2,cs=2,2,2": cs swallows the rest of the list.
CutProfile parse_profile(std::string_view body) {
  std::optional<int> a, b;
  std::optional<std::vector<int>> cs;
  while (!body.empty()) {
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("profile: expected key=value");
    const auto key = body.substr(0, eq);
    body.remove_prefix(eq + 1);
    if (key == "cs") {
      cs = parse_int_list(body, "profile cs");
      body = {};
      continue;
    }
    const auto comma = body.find(',');
    const auto value = body.substr(0, comma);
    if (key == "a") {
      a = parse_int(value, "profile a");
    } else if (key == "b") {
      b = parse_int(value, "profile b");
    } else {
      throw ParseError("profile: unknown key '" + std::string(key) + "'");
    }
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  if (!a || !b || !cs) throw ParseError("profile: need a=, b= and cs=");
  try {
    return CutProfile(*a, *b, *cs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string render_term(const Partition& lambda, const BigInt& coeff) {
  return coeff.str() + " * e_(" + join(lambda.parts()) + ")";
}

std::string render_expansion(const ESymExpansion& x) {
  if (x.empty()) return "0\n";
  std::string out;
  for (const auto& [lambda, coeff] : x.terms()) out += render_term(lambda, coeff) + "\n";
  return out;
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const CutProfile& profile) {
  return Json{{"a", profile.a()}, {"b", profile.b()}, {"cs", profile.cs()}};
}

Json to_json(const ESymExpansion& x) {
  Json terms = Json::array();
  for (const auto& [lambda, coeff] : x.terms()) {
    terms.push_back(Json{{"lambda", to_json(lambda)}, {"coeff", coeff.str()}});
  }
  return Json{{"degree", x.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const MissingTypeCertificate& cert) {
  return Json{{"profile", to_json(cert.profile)},
              {"lambda", to_json(cert.lambda)},
              {"kind", to_string(cert.kind)},
              {"q", cert.q},
              {"x", cert.x},
              {"y", cert.y},
              {"theorem_part", cert.theorem_part},
              {"verified", cert.verified}};
}

Json to_json(const ConnectedPartition& cp) { return Json{{"blocks", cp.blocks}}; }

Json to_json(const SweepReport& report, bool with_timing) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json cell{{"b", f.b}, {"c", f.c}};
    if (f.n) cell["n"] = f.n;
    failures.push_back(std::move(cell));
  }
  Json out{{"rows", report.rows}, {"cells", report.cells}, {"failures", std::move(failures)}};
  if (with_timing) out["wall_time_ms"] = report.wall_time_ms;
  return out;
}

Json to_json(const SixmReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(to_json(f));
  Json out{{"m", report.m},
           {"types", report.types},
           {"passed", report.passed},
           {"failures", std::move(failures)},
           {"branches", report.branch_tally}};
  if (report.oracle_agreements) out["oracle_agreements"] = *report.oracle_agreements;
  return out;
}

ESymExpansion expansion_from_json(const Json& j) {
  ESymExpansion x(j.at("degree").get<int>());
  for (const auto& term : j.at("terms")) {
    x.add(Partition::from_unsorted(term.at("lambda").get<std::vector<int>>()),
          BigInt(term.at("coeff").get<std::string>()));
  }
  return x;
}

GraphSpec parse_graph_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = colon == std::string_view::npos ? std::string_view{} : text.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? text : text.substr(colon + 1);
  try {
    if (kind == "spider") {
      const Partition legs = Partition::from_unsorted(parse_int_list(body, "spider legs"));
      return {spider(legs), "spider:" + join(legs.parts())};
    }
    if (kind == "path" || kind == "star" || kind == "complete") {
      const int n = parse_int(body, std::string(kind) + " size");
      Graph g = kind == "path" ? path_graph(n) : kind == "star" ? star_graph(n) : complete_graph(n);
      return {std::move(g), std::string(kind) + ":" + std::to_string(n)};
    }
    if (kind == "profile") {
      CutProfile p = parse_profile(body);
      return {p, "profile:a=" + std::to_string(p.a()) + ",b=" + std::to_string(p.b()) + ",cs=" + join(p.cs())};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::ifstream in{std::string(text)};
  if (!in) throw ParseError("not a graph shorthand or readable file: '" + std::string(text) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Graph g = parse_graph_text(buf.str());
    std::string canonical = "graph:" + to_text(g);
    return {std::move(g), std::move(canonical)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from an interrupted run is skipped, not fatal.
    Json entry = Json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.contains("key") || !entry.contains("result")) continue;
    entries_[entry["key"].get<std::string>()] = entry["result"];
  }
}

std::string ResultCache::key(const std::string& command, const std::string& input) {
  return command + "|" + input + "|" + std::string(kVersion);
}

std::optional<Json> ResultCache::lookup(const std::string& command, const std::string& input) const {
  const auto it = entries_.find(key(command, input));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& command, const std::string& input, const Json& result) {
  const std::string k = key(command, input);
  std::ofstream out(path_, std::ios::app);
  out << Json{{"key", k}, {"result", result}}.dump() << "\n";
  entries_[k] = result;
}

}  // namespace epolab
