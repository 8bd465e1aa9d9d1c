#pragma once

// Rendering, graph shorthands and the JSON-lines result cache.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "epolab/graph.hpp"
#include "epolab/prover.hpp"
#include "epolab/sixm.hpp"
#include "epolab/sweeps.hpp"
#include "epolab/symfunc.hpp"

namespace epolab {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "1.0.0";

/// "coeff * e_(l1,l2,...)", ASCII minus for negatives.
std::string render_term(const Partition& lambda, const BigInt& coeff);
/// One term per line in partition stream order; "0" for the zero function.
std::string render_expansion(const ESymExpansion& x);

Json to_json(const Partition& lambda);
Json to_json(const CutProfile& profile);
Json to_json(const ESymExpansion& x);
Json to_json(const MissingTypeCertificate& cert);
Json to_json(const ConnectedPartition& cp);
/// Timing is left out unless asked for, so reports stay reproducible.
Json to_json(const SweepReport& report, bool with_timing);
Json to_json(const SixmReport& report);

ESymExpansion expansion_from_json(const Json& j);

/// Error raised for malformed user input (exit code 2).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parsed graph shorthand: either a concrete graph or a bare cut profile.
struct GraphSpec {
  std::variant<Graph, CutProfile> value;
  /// Canonical spelling, used as cache key.
  std::string canonical;
};

/// "spider:6,4,1,1", "path:n", "star:n" (n leaves), "complete:n",
/// "profile:a=..,b=..,cs=..", or a path to a graph text file.
GraphSpec parse_graph_spec(std::string_view text);

/// Append-only JSON-lines store keyed by (command, input, version).
/// Later lines win when a key repeats.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path path);

  std::optional<Json> lookup(const std::string& command, const std::string& input) const;
  void store(const std::string& command, const std::string& input, const Json& result);

  std::size_t size() const noexcept { return entries_.size(); }

private:
  static std::string key(const std::string& command, const std::string& input);

  std::filesystem::path path_;
  std::map<std::string, Json> entries_;
};

}  // namespace epolab
