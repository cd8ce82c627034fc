#include "json.hpp"

#include "edgereg/error.hpp"
#include "edgereg/graph.hpp"

namespace edgereg {

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6MaxShort = 62;

}  // namespace

Graph from_graph6(std::string_view text) {
  // Tolerate a trailing newline from line-oriented files.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kG6Bias || c > 126) throw ParseError("illegal graph6 character code " + std::to_string(c), i);
  }
  const int n = static_cast<unsigned char>(text[0]) - kG6Bias;
  if (n > kG6MaxShort) throw ParseError("long-form graph6 (n > 62) is not supported", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() < expected)
    throw ParseError("truncated graph6 bit stream: expected " + std::to_string(expected) + " bytes", text.size());
  if (text.size() > expected) throw ParseError("trailing bytes after graph6 bit stream", expected);

  std::vector<Edge> es;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kG6Bias;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  for (; k % 6 != 0; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kG6Bias;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("non-zero graph6 padding bit", 1 + k / 6);
  }
  return Graph(n, es);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kG6MaxShort) throw DomainError("graph6 short form needs n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + kG6Bias));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
  return out;
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON needs an integer field \"n\"", 0);
  const int n = j["n"].get<int>();
  std::vector<Edge> es;
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("each edge must be a pair of integers", 0);
      es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
  return Graph(n, es, std::move(names));
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (!g.names().empty()) j["names"] = g.names();
  return j.dump();
}

Graph parse_graph(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return graph_from_json(text);
  return from_graph6(text);
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') out.push_back(from_graph6(line));
    pos = end + 1;
  }
  return out;
}

}  // namespace edgereg
