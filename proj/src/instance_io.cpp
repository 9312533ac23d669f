#include "lpvc/instance_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace lpvc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::uint64_t number_at(const Line& line, std::size_t idx) {
  const auto tok = line.tokens[idx];
  std::uint64_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected \"") + shape + "\"");
}

class EdgeCollector {
 public:
  explicit EdgeCollector(std::uint64_t n) : n_(n) {}

  void add(std::size_t line, std::uint64_t u, std::uint64_t v) {
    if (u >= n_ || v >= n_) throw ValidationError(line, "vertex id out of range");
    if (u == v) throw ValidationError(line, "self-loop at vertex " + std::to_string(u));
    const Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
    if (!seen_.insert(e).second) throw ValidationError(line, "duplicate edge");
    edges_.push_back(e);
  }

  [[nodiscard]] Graph build() const { return Graph::from_edges(static_cast<std::size_t>(n_), edges_); }
  [[nodiscard]] std::size_t count() const noexcept { return edges_.size(); }

 private:
  std::uint64_t n_;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

constexpr std::uint64_t kMaxVertices = 1u << 24;

Graph parse_edgelist(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "missing header line \"n m\"");
  const auto& header = lines.front();
  expect_tokens(header, 2, "n m");
  const auto n = number_at(header, 0);
  const auto m = number_at(header, 1);
  if (n > kMaxVertices) throw ValidationError(header.number, "too many vertices");
  EdgeCollector edges(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (edges.count() == m) throw ParseError(line.number, "more edge lines than announced");
    expect_tokens(line, 2, "u v");
    edges.add(line.number, number_at(line, 0), number_at(line, 1));
  }
  if (edges.count() != m) throw ParseError(0, "fewer edge lines than announced");
  return edges.build();
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  std::optional<EdgeCollector> edges;
  std::uint64_t m = 0;
  for (const auto& line : lines) {
    const auto kind = line.tokens.front();
    if (kind == "c") continue;
    if (kind == "p") {
      if (edges) throw ParseError(line.number, "second problem line");
      expect_tokens(line, 4, "p edge n m");
      if (line.tokens[1] != "edge" && line.tokens[1] != "col") throw ParseError(line.number, "expected \"p edge n m\"");
      const auto n = number_at(line, 2);
      m = number_at(line, 3);
      if (n > kMaxVertices) throw ValidationError(line.number, "too many vertices");
      edges.emplace(n);
      continue;
    }
    if (kind == "e") {
      if (!edges) throw ParseError(line.number, "edge line before the problem line");
      expect_tokens(line, 3, "e u v");
      const auto u = number_at(line, 1);
      const auto v = number_at(line, 2);
      if (u == 0 || v == 0) throw ValidationError(line.number, "DIMACS vertex ids start at 1");
      if (edges->count() == m) throw ParseError(line.number, "more edge lines than announced");
      edges->add(line.number, u - 1, v - 1);
      continue;
    }
    throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
  }
  if (!edges) throw ParseError(0, "missing problem line \"p edge n m\"");
  if (edges->count() != m) throw ParseError(0, "fewer edge lines than announced");
  return edges->build();
}

void require_contiguous(const Graph& g) {
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != i) throw std::invalid_argument("instance writers need labels 0..n-1");
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

ValidationError::ValidationError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

InstanceFormat detect_format(std::string_view text) {
  for (const auto& line : tokenize(text)) {
    const auto t = line.tokens.front();
    return (t == "c" || t == "p") ? InstanceFormat::Dimacs : InstanceFormat::EdgeList;
  }
  return InstanceFormat::EdgeList;
}

Graph parse_instance(std::string_view text, InstanceFormat format) {
  const auto lines = tokenize(text);
  return format == InstanceFormat::Dimacs ? parse_dimacs(lines) : parse_edgelist(lines);
}

Graph parse_instance(std::string_view text) { return parse_instance(text, detect_format(text)); }

std::string emit_edgelist(const Graph& g) {
  require_contiguous(g);
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_dimacs(const Graph& g) {
  require_contiguous(g);
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string emit_instance(const Graph& g, InstanceFormat format) {
  return format == InstanceFormat::Dimacs ? emit_dimacs(g) : emit_edgelist(g);
}

}  // namespace lpvc
