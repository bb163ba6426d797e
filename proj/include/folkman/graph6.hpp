#ifndef FOLKMAN_GRAPH6_HPP
#define FOLKMAN_GRAPH6_HPP

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "folkman/graph.hpp"

namespace folkman {

// Malformed graph6 input.  offset is the byte position within the record,
// line is filled in by the stream readers (0 when unknown).
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t offset_, std::size_t line_ = 0)
      : std::runtime_error(what), offset(offset_), line(line_) {}
  std::size_t offset;
  std::size_t line;
};

// One-byte size header only (n <= 62); the multi-byte '~' forms are a
// documented extension point, not implemented.
inline std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6_encode: n > 62 needs multi-byte sizes");
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view s) {
  if (s.empty()) throw parse_error("empty graph6 record", 0);
  unsigned char h = static_cast<unsigned char>(s[0]);
  if (h == 126) throw parse_error("multi-byte graph6 sizes not supported", 0);
  if (h < 63 || h > 125) throw parse_error("bad graph6 size byte", 0);
  int n = h - 63;
  if (n > max_vertices) throw parse_error("graph exceeds vertex capacity", 0);
  std::size_t need = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() != need) throw parse_error("graph6 record has wrong length", s.size());
  Graph g(n);
  std::size_t pos = 1;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) throw parse_error("bad graph6 payload byte", pos);
        acc = c - 63;
        nbits = 6;
        ++pos;
      }
      if (acc & (1 << (nbits - 1))) g.toggle_edge_unchecked(i, j);
      --nbits;
    }
  return g;
}

// Reads graph6 lines, invoking fn(graph, line_number) per record.  Blank
// lines are skipped.  When lenient is set, malformed lines are counted and
// skipped instead of aborting the stream.
template <typename Fn>
std::size_t for_each_graph6_line(std::istream& in, Fn&& fn, bool lenient = false) {
  std::string line;
  std::size_t lineno = 0, bad = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') continue;  // ">>graph6<<" style headers
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (parse_error& e) {
      if (lenient) {
        ++bad;
        continue;
      }
      throw parse_error(std::string(e.what()), e.offset, lineno);
    }
    fn(g, lineno);
  }
  return bad;
}

inline void write_graph6_line(std::ostream& out, const Graph& g) {
  out << graph6_encode(g) << '\n';
}

}  // namespace folkman

#endif  // FOLKMAN_GRAPH6_HPP
