#include "lpvc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lpvc/branching.hpp"
#include "lpvc/generators.hpp"
#include "lpvc/instance_io.hpp"
#include "lpvc/oracle.hpp"
#include "lpvc/solver.hpp"

namespace lpvc::cli {

namespace {

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Instance file, '-' for stdin")->capture_default_str();
  cmd->add_option("--format", in.format, "Instance format")
      ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}))
      ->capture_default_str();
}

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

// Throws std::runtime_error when the file cannot be read.
Graph load(const InputOptions& opts, std::istream& in) {
  std::string text;
  if (opts.path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(opts.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + opts.path);
    text = read_all(file);
  }
  if (opts.format == "edgelist") return parse_instance(text, InstanceFormat::EdgeList);
  if (opts.format == "dimacs") return parse_instance(text, InstanceFormat::Dimacs);
  return parse_instance(text);
}

std::string join(const VertexSet& s, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << sep;
    out << s[i];
  }
  return out.str();
}

std::string format_vector(const BranchingVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.labels.size(); ++i) {
    if (i) out << ',';
    out << v.labels[i];
  }
  out << ')';
  return out.str();
}

std::string fixed6(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << x;
  return out.str();
}

std::vector<long long> parse_numbers(const std::string& text) {
  std::vector<long long> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(0, "bad number '" + token + "'");
    }
    if (used != token.size()) throw ParseError(0, "bad number '" + token + "'");
    out.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

struct SolveArgs {
  InputOptions input;
  int l = 0;
  int k = 0;
  std::string algorithm = "paper";
  bool certificate = false;
  std::string stats_path;
};

int run_solve(const SolveArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  if (a.l < 2 || a.l > 7) {
    err << "error: l must be in 2..7\n";
    return kUnsupported;
  }
  if (a.algorithm == "paper" && (a.l < 4 || a.l > 7)) {
    err << "error: --algorithm paper supports l in 4..7; use --algorithm baseline\n";
    return kUnsupported;
  }
  const Graph g = load(a.input, in);

  RunReport report;
  report.k = a.k;
  report.l = a.l;
  report.algorithm = a.algorithm;
  const auto start = std::chrono::steady_clock::now();
  if (a.algorithm == "brute") {
    if (g.order() > kOracleMaxVertices) {
      err << "error: brute force is limited to " << kOracleMaxVertices << " vertices\n";
      return kUnsupported;
    }
    const auto oracle = brute_min_cover(g, a.l);
    report.yes = oracle.optimum <= a.k;
    if (report.yes && a.certificate) report.certificate = oracle.one_witness;
  } else {
    SolveOptions opts;
    opts.certificate = a.certificate;
    const auto r = a.algorithm == "paper" ? lpvc_paper(g, a.k, a.l, opts) : lpvc_baseline(g, a.k, a.l, opts);
    report.yes = r.yes;
    report.certificate = r.certificate;
    report.stats = r.stats;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  out << (report.yes ? "YES" : "NO") << '\n';
  if (report.yes && a.certificate && report.certificate) out << join(*report.certificate, ' ') << '\n';

  if (!a.stats_path.empty()) {
    std::ofstream file(a.stats_path);
    if (!file) {
      err << "error: cannot write " << a.stats_path << '\n';
      return kInputError;
    }
    file << to_json(report).dump(2) << '\n';
  }
  return report.yes ? kYes : kNo;
}

struct VerifyArgs {
  InputOptions input;
  int l = 0;
  std::string cover;
  std::optional<int> k;
};

int run_verify(const VerifyArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  if (a.l < 2 || a.l > 7) {
    err << "error: l must be in 2..7\n";
    return kUnsupported;
  }
  const Graph g = load(a.input, in);
  std::vector<VertexId> raw;
  for (auto x : parse_numbers(a.cover)) {
    if (x < 0) throw ValidationError(0, "negative vertex id in cover");
    raw.push_back(static_cast<VertexId>(x));
  }
  const auto cover = make_vertex_set(raw);
  for (auto v : cover) {
    if (!g.contains(v)) throw ValidationError(0, "cover names unknown vertex " + std::to_string(v));
  }
  bool valid = verify_cover(g, cover, a.l);
  if (a.k && static_cast<int>(cover.size()) > *a.k) valid = false;
  out << (valid ? "VALID" : "INVALID") << '\n';
  return valid ? kYes : kNo;
}

struct AnalyzeArgs {
  std::optional<int> l;
  std::string vector;
};

int run_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.l && a.vector.empty()) {
    err << "error: analyze needs --l or --vector\n";
    return kInputError;
  }
  if (!a.vector.empty()) {
    BranchingVector v;
    for (auto x : parse_numbers(a.vector)) v.labels.push_back(static_cast<int>(x));
    try {
      out << fixed6(branching_number(v).value) << '\n';
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  if (a.l) {
    const int l = *a.l;
    if (l < 4 || l > 7) {
      err << "error: analysis covers l in 4..7\n";
      return kUnsupported;
    }
    out << "l = " << l << '\n';
    for (int s = 1; s <= l - 2; ++s) {
      const auto v = vector_vs(l, s);
      out << "V_" << s << " = " << format_vector(v) << "  " << fixed6(branching_number(v).value) << '\n';
    }
    const auto r = rule_vectors(l);
    out << "b1 = " << format_vector(r.b1) << "  " << fixed6(branching_number(r.b1).value) << '\n';
    out << "b2 = " << format_vector(r.b2) << "  " << fixed6(branching_number(r.b2).value) << '\n';
    out << "b3 = " << format_vector(r.b3) << "  " << fixed6(branching_number(r.b3).value) << '\n';
    out << "overall = " << fixed6(overall_bound(l).value) << '\n';
  }
  return kYes;
}

struct GenerateArgs {
  std::vector<std::string> words;
  std::string format = "edgelist";
};

std::uint64_t as_count(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw ParseError(0, "bad number '" + s + "'");
  }
  if (used != s.size()) throw ParseError(0, "bad number '" + s + "'");
  return v;
}

double as_probability(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError(0, "bad probability '" + s + "'");
  }
  if (used != s.size() || !(v >= 0.0 && v <= 1.0)) throw ParseError(0, "bad probability '" + s + "'");
  return v;
}

int run_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const auto& w = a.words;
  auto need = [&](std::size_t n) {
    if (w.size() != n) throw ParseError(0, "'" + w[0] + "' takes " + std::to_string(n - 1) + " arguments");
  };
  if (w.empty()) {
    err << "error: generate needs a graph family\n";
    return kInputError;
  }
  Graph g;
  const auto& kind = w[0];
  try {
    if (kind == "gnp") {
      need(4);
      g = gnp_graph(as_count(w[1]), as_probability(w[2]), as_count(w[3]));
    } else if (kind == "path") {
      need(2);
      g = path_graph(as_count(w[1]));
    } else if (kind == "cycle") {
      need(2);
      g = cycle_graph(as_count(w[1]));
    } else if (kind == "complete") {
      need(2);
      g = complete_graph(as_count(w[1]));
    } else if (kind == "spider") {
      need(3);
      g = spider_graph(as_count(w[1]), as_count(w[2]));
    } else if (kind == "planted") {
      need(5);
      g = planted_graph(as_count(w[1]), static_cast<int>(as_count(w[2])), static_cast<int>(as_count(w[3])),
                        as_count(w[4]));
    } else {
      throw ParseError(0, "unknown graph family '" + kind + "'");
    }
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << emit_instance(g, a.format == "dimacs" ? InstanceFormat::Dimacs : InstanceFormat::EdgeList);
  return kYes;
}

}  // namespace

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json fires = nlohmann::json::object();
  for (auto rule : kAllRules) fires[std::string(rule_name(rule))] = r.stats.fires(rule);
  nlohmann::json j;
  j["schema"] = kStatsSchemaVersion;
  j["decision"] = r.yes ? "YES" : "NO";
  j["algorithm"] = r.algorithm;
  j["k"] = r.k;
  j["l"] = r.l;
  j["nodes_total"] = r.stats.nodes_total;
  j["leaves"] = r.stats.leaves;
  j["max_depth"] = r.stats.max_depth;
  j["rule_fires"] = fires;
  j["certificate"] = r.certificate ? nlohmann::json(*r.certificate) : nlohmann::json(nullptr);
  j["wall_ms"] = r.wall_ms;
  return j;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact l-path vertex cover solver", "lpvc"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide whether a cover of size at most k exists");
  add_input_options(solve, solve_args.input);
  solve->add_option("--l", solve_args.l, "Path length in vertices")->required();
  solve->add_option("--k", solve_args.k, "Cover size budget")->required();
  solve->add_option("--algorithm", solve_args.algorithm, "Decision procedure")
      ->check(CLI::IsMember({"paper", "baseline", "brute"}))
      ->capture_default_str();
  solve->add_flag("--certificate", solve_args.certificate, "Print a cover on yes");
  solve->add_option("--stats", solve_args.stats_path, "Write run statistics as JSON");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check that a vertex set is an l-path vertex cover");
  add_input_options(verify, verify_args.input);
  verify->add_option("--l", verify_args.l, "Path length in vertices")->required();
  verify->add_option("--cover", verify_args.cover, "Vertex ids, comma or space separated")->required();
  verify->add_option("--k", verify_args.k, "Also require at most k vertices");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Branching numbers of the search-tree analysis");
  analyze->add_option("--l", analyze_args.l, "Path length in vertices (4..7)");
  analyze->add_option("--vector", analyze_args.vector, "Branching vector a1,a2,...");

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand(
      "generate", "Emit an instance: gnp N P SEED | path N | cycle N | complete N | spider LEGS LEN | planted N L OPT SEED");
  generate->alias("gen");
  generate->add_option("family", gen_args.words, "Family name and its arguments")->required();
  generate->add_option("--format", gen_args.format, "Output format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args, in, out, err);
    if (verify->parsed()) return run_verify(verify_args, in, out, err);
    if (analyze->parsed()) return run_analyze(analyze_args, out, err);
    if (generate->parsed()) return run_generate(gen_args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace lpvc::cli
