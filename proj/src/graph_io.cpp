#include "csf/graph_io.hpp"

#include <sstream>

#include "csf/errors.hpp"

namespace csf {

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 0) {
        throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'n <vertex_count>'");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    pairs.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("edge list is missing the 'n <vertex_count>' header");
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: vertex out of range in pair " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw ParseError("edge list: self-loop at " + std::to_string(u));
    if (!g.add_edge(u, v)) {
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("invalid graph6 character");
  }
  int n = text[0] - 63;
  if (n == 63) throw ParseError("graph6: only graphs with at most 62 vertices are supported");
  std::size_t need = (static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 + 5) / 6;
  if (n > 0 && text.size() != 1 + need) throw ParseError("graph6: wrong length for n = " + std::to_string(n));
  if (n == 0 && text.size() != 1) throw ParseError("graph6: wrong length for n = 0");
  Graph g(n);
  std::size_t bitpos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bitpos) {
      int byte = text[1 + bitpos / 6] - 63;
      if ((byte >> (5 - bitpos % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw DomainError("graph6 emission supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty graph input");
  auto last = text.find_last_not_of(" \t\r\n");
  std::string_view token = text.substr(first, last - first + 1);
  bool graph6 = token.find_first_of(" \n\t") == std::string_view::npos;
  return graph6 ? parse_graph6(token) : parse_edge_list(text);
}

}  // namespace csf
