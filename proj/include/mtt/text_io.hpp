#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "formal_sum.hpp"
#include "graph.hpp"

namespace mtt {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph file:
//   D n k        (or U n k)
//   a b          k lines, 1-based endpoints; line order = edge numbering
template <bool D>
void write_graph(std::ostream& os, const Multigraph<D>& g) {
  os << (D ? 'D' : 'U') << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.tail << ' ' << e.head << '\n';
}

template <bool D>
std::string to_text(const Multigraph<D>& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

using AnyGraph = std::variant<DirectedGraph, UndirectedGraph>;

namespace detail {

struct LineReader {
  std::istream& in;
  int line = 0;

  bool next(std::string& out) {
    while (std::getline(in, out)) {
      ++line;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }
};

inline std::vector<long long> parse_ints(const std::string& text, int line) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline Edge parse_edge(const std::string& text, int n, int line) {
  auto ints = parse_ints(text, line);
  if (ints.size() != 2) throw ParseError(line, "edge needs exactly two endpoints");
  for (auto v : ints)
    if (v < 1 || v > n) throw ParseError(line, "endpoint " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return {static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1])};
}

inline std::pair<int, int> parse_shape(const std::string& rest, int line) {
  auto ints = parse_ints(rest, line);
  if (ints.size() != 2) throw ParseError(line, "header needs n and k");
  if (ints[0] < 1 || ints[0] > kMaxVertices) throw ParseError(line, "vertex count must be in 1.." + std::to_string(kMaxVertices));
  if (ints[1] < 0) throw ParseError(line, "edge count must be nonnegative");
  return {static_cast<int>(ints[0]), static_cast<int>(ints[1])};
}

}  // namespace detail

inline AnyGraph read_graph(std::istream& in) {
  detail::LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line + 1, "missing header");
  std::istringstream hs(line);
  std::string tag;
  hs >> tag;
  if (tag != "D" && tag != "U") throw ParseError(reader.line, "header must start with D or U");
  std::string rest;
  std::getline(hs, rest);
  auto [n, k] = detail::parse_shape(rest, reader.line);
  std::vector<Edge> edges;
  for (int p = 0; p < k; ++p) {
    if (!reader.next(line)) throw ParseError(reader.line + 1, "expected " + std::to_string(k) + " edges, got " + std::to_string(p));
    edges.push_back(detail::parse_edge(line, n, reader.line));
  }
  if (reader.next(line)) throw ParseError(reader.line, "trailing content after " + std::to_string(k) + " edges");
  if (tag == "D") return DirectedGraph(n, std::move(edges));
  return UndirectedGraph(n, std::move(edges));
}

inline AnyGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

// Formal sum file:
//   FS n k            (FSU n k for undirected graphs)
//   p/q | a1 b1 ; a2 b2 ; ... ; ak bk
// terms sorted lexicographically by edge sequence.
template <class Graph>
void write_formal_sum(std::ostream& os, const BasicFormalSum<Graph>& s) {
  os << (Graph::directed ? "FS" : "FSU") << ' ' << s.vertex_count() << ' ' << s.degree() << '\n';
  for (const auto& [g, c] : s.terms()) {
    os << to_fraction_string(c) << " |";
    if (g.edge_count() > 0) os << ' ' << edges_to_string(g.edges());
    os << '\n';
  }
}

template <class Graph>
std::string to_text(const BasicFormalSum<Graph>& s) {
  std::ostringstream os;
  write_formal_sum(os, s);
  return os.str();
}

using AnySum = std::variant<FormalSum, UndirectedSum>;

inline AnySum read_formal_sum(std::istream& in) {
  detail::LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line + 1, "missing header");
  std::istringstream hs(line);
  std::string tag;
  hs >> tag;
  if (tag != "FS" && tag != "FSU") throw ParseError(reader.line, "header must start with FS or FSU");
  std::string rest;
  std::getline(hs, rest);
  auto [n, k] = detail::parse_shape(rest, reader.line);

  auto parse_terms = [&](auto sum) {
    using Graph = std::remove_cvref_t<decltype(sum.terms().begin()->first)>;
    while (reader.next(line)) {
      auto bar = line.find('|');
      if (bar == std::string::npos) throw ParseError(reader.line, "term needs 'coefficient | edges'");
      Coefficient c;
      try {
        c = parse_coefficient(line.substr(0, bar));
      } catch (const std::exception& e) {
        throw ParseError(reader.line, e.what());
      }
      std::vector<Edge> edges;
      std::string body = line.substr(bar + 1);
      if (body.find_first_not_of(" \t") != std::string::npos) {
        std::size_t start = 0;
        while (true) {
          auto semi = body.find(';', start);
          edges.push_back(detail::parse_edge(body.substr(start, semi - start), n, reader.line));
          if (semi == std::string::npos) break;
          start = semi + 1;
        }
      }
      if (static_cast<int>(edges.size()) != k)
        throw ParseError(reader.line, "term has " + std::to_string(edges.size()) + " edges, expected " + std::to_string(k));
      sum.add_term(Graph(n, std::move(edges)), c);
    }
    return sum;
  };
  if (tag == "FS") return parse_terms(FormalSum(n, k));
  return parse_terms(UndirectedSum(n, k));
}

inline AnySum parse_formal_sum(const std::string& text) {
  std::istringstream in(text);
  return read_formal_sum(in);
}

}  // namespace mtt
