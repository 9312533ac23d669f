#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lpvc/graph.hpp"
#include "lpvc/stats.hpp"

namespace lpvc::cli {

/// Process exit codes of the lpvc tool.
enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kInputError = 2,
  kUnsupported = 3,
};

inline constexpr int kStatsSchemaVersion = 1;

struct RunReport {
  bool yes = false;
  int k = 0;
  int l = 0;
  std::string algorithm;
  std::optional<VertexSet> certificate;
  SearchStats stats;
  double wall_ms = 0.0;
};

/// Stable stats document: schema, decision, algorithm, k, l, nodes_total,
/// leaves, max_depth, rule_fires (every rule id), certificate, wall_ms.
[[nodiscard]] nlohmann::json to_json(const RunReport& r);

/// Runs one command line (without the program name). stdout output goes to
/// `out`, diagnostics to `err`; instances named "-" or omitted come from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lpvc::cli
