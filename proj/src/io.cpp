#include "kirchhoff/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kirchhoff/error.hpp"

namespace kirchhoff {

namespace {

constexpr int kGraph6Bias = 63;
constexpr std::size_t kGraph6LongLimit = 258047;

[[noreturn]] void parseError(std::size_t line, const std::string& message) {
  fail("parse-error", "line " + std::to_string(line) + ": " + message);
}

std::vector<long long> parseIntegers(std::string_view line, std::size_t lineNumber) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc()) parseError(lineNumber, "expected an integer");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != ',') {
      parseError(lineNumber, "expected an integer");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph parseEdgeList(std::string_view text) {
  std::optional<Graph> g;
  std::size_t expected = 0;
  std::size_t seen = 0;
  std::size_t lineNumber = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNumber;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto values = parseIntegers(line, lineNumber);
    if (values.size() != 2) parseError(lineNumber, "expected exactly two integers");
    if (!g) {
      if (values[0] < 1 || values[1] < 0) parseError(lineNumber, "header needs order >= 1 and size >= 0");
      g.emplace(static_cast<std::size_t>(values[0]));
      expected = static_cast<std::size_t>(values[1]);
      continue;
    }
    const auto order = static_cast<long long>(g->order());
    if (values[0] < 1 || values[0] > order || values[1] < 1 || values[1] > order) {
      fail("index-out-of-range", "line " + std::to_string(lineNumber) + ": vertex outside [1, " +
                                     std::to_string(order) + "]");
    }
    if (values[0] == values[1]) parseError(lineNumber, "self-loop");
    if (!g->addEdge(static_cast<Vertex>(values[0] - 1), static_cast<Vertex>(values[1] - 1))) {
      fail("duplicate-edge", "line " + std::to_string(lineNumber) + ": edge listed twice");
    }
    ++seen;
  }
  if (!g) parseError(lineNumber, "missing header");
  if (seen != expected) {
    parseError(lineNumber, "header announces " + std::to_string(expected) + " edges, found " +
                               std::to_string(seen));
  }
  return std::move(*g);
}

std::string writeEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

Graph parseGraph6(std::string_view bytes) {
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);
  if (bytes.starts_with(">>graph6<<")) bytes.remove_prefix(10);
  for (char c : bytes) {
    const int v = static_cast<unsigned char>(c);
    if (v < kGraph6Bias || v > 126) fail("bad-byte", "byte value " + std::to_string(v) + " outside [63, 126]");
  }
  if (bytes.empty()) fail("bad-length", "empty graph6 string");
  std::size_t n = 0;
  std::size_t pos = 0;
  auto value = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(bytes[i])) - kGraph6Bias; };
  if (bytes[0] != 126) {
    n = value(0);
    pos = 1;
  } else {
    if (bytes.size() < 4) fail("bad-length", "truncated long-form order");
    if (bytes[1] == 126) fail("bad-length", "orders above 258047 are not supported");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t needed = (bits + 5) / 6;
  if (bytes.size() - pos != needed) {
    fail("bad-length", "expected " + std::to_string(needed) + " data bytes for order " +
                           std::to_string(n) + ", found " + std::to_string(bytes.size() - pos));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const std::size_t chunk = value(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) g.addEdge(u, v);
    }
  }
  return g;
}

std::string writeGraph6(const Graph& g) {
  const std::size_t n = g.order();
  require(n <= kGraph6LongLimit, "graph6 supports orders up to 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Bias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph readGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io-error", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (path.ends_with(".g6") || path.ends_with(".graph6")) {
    // First graph of the file.
    return parseGraph6(std::string_view(text).substr(0, text.find('\n')));
  }
  return parseEdgeList(text);
}

}  // namespace kirchhoff
