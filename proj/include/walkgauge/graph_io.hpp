#ifndef WALKGAUGE_GRAPH_IO_HPP
#define WALKGAUGE_GRAPH_IO_HPP

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"

namespace walkgauge {

namespace detail {

inline bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::vector<long long> parse_int_line(std::string_view line, int lineno, size_t want) {
  std::istringstream in{std::string(line)};
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ParseError("expected integers, got '" + std::string(line) + "'", lineno);
  if (out.size() != want)
    throw ParseError("expected " + std::to_string(want) + " integers, got " +
                         std::to_string(out.size()),
                     lineno);
  return out;
}

}  // namespace detail

// Plain-text edge list: a header line "n m", then m lines "u v" with 0-based
// endpoints. Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text, bool require_connected = true) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  for (size_t pos = 0; pos <= text.size();) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++lineno;
    if (!detail::blank_or_comment(line)) lines.emplace_back(lineno, line);
    pos = nl + 1;
    if (nl == text.size()) break;
  }
  if (lines.empty()) throw ParseError("empty edge list");

  auto header = detail::parse_int_line(lines[0].second, lines[0].first, 2);
  long long n = header[0], m = header[1];
  if (n < 1 || n > 1'000'000) throw ParseError("vertex count out of range", lines[0].first);
  if (m < 0) throw ParseError("negative edge count", lines[0].first);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1),
                     lines[0].first);

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (size_t i = 1; i < lines.size(); ++i) {
    auto uv = detail::parse_int_line(lines[i].second, lines[i].first, 2);
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw ParseError("endpoint out of range [0," + std::to_string(n) + ")", lines[i].first);
    edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
  }
  return build_graph(static_cast<int>(n), std::move(edges), require_connected);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace detail {

inline void g6_append_size(std::string& out, long long n) {
  auto push_bits = [&out](long long value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
      out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    push_bits(n, 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    push_bits(n, 6);
  }
}

inline long long g6_read_size(std::string_view s, size_t& pos) {
  auto need = [&](size_t k) {
    if (pos + k > s.size()) throw ParseError("graph6 string truncated");
  };
  auto read_bits = [&](int groups) {
    long long v = 0;
    for (int i = 0; i < groups; ++i) {
      char c = s[pos++];
      if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
      v = (v << 6) | (c - 63);
    }
    return v;
  };
  need(1);
  if (s[pos] != '~') {
    char c = s[pos++];
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
    return c - 63;
  }
  ++pos;
  need(1);
  if (s[pos] != '~') {
    need(3);
    return read_bits(3);
  }
  ++pos;
  need(6);
  return read_bits(6);
}

}  // namespace detail

// graph6 body bits: the upper triangle of the adjacency matrix in column-major
// order (pairs (0,1),(0,2),(1,2),(0,3),...), packed 6 to a byte, MSB first,
// each byte offset by 63.
inline std::string graph6_encode(const Graph& g) {
  std::string out;
  detail::g6_append_size(out, g.n());
  int bit = 5;
  char acc = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) acc |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bit = 5;
      }
    }
  if (g.n() >= 2 && bit != 5) out.push_back(static_cast<char>(acc + 63));
  return out;
}

inline Graph graph6_decode(std::string_view s, bool require_connected = true) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 string");

  size_t pos = 0;
  long long n = detail::g6_read_size(s, pos);
  if (n < 1 || n > 1'000'000) throw ParseError("graph6 vertex count out of range");

  long long pairs = n * (n - 1) / 2;
  size_t body = static_cast<size_t>((pairs + 5) / 6);
  if (s.size() - pos != body)
    throw ParseError("graph6 body length mismatch (expected " + std::to_string(body) +
                     " bytes, got " + std::to_string(s.size() - pos) + ")");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      char c = s[pos + static_cast<size_t>(k / 6)];
      if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
      if ((c - 63) >> (5 - k % 6) & 1) edges.push_back({i, j});
    }
  return build_graph(static_cast<int>(n), std::move(edges), require_connected);
}

enum class GraphTextFormat { edge_list, graph6 };

// Heuristic used by the command-line driver: an input whose first significant
// line is exactly two integers is an edge list, anything else is graph6.
inline GraphTextFormat detect_graph_format(std::string_view text) {
  for (size_t pos = 0; pos <= text.size();) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!detail::blank_or_comment(line)) {
      std::istringstream in{std::string(line)};
      long long a, b;
      if (in >> a >> b && (in >> std::ws).eof()) return GraphTextFormat::edge_list;
      return GraphTextFormat::graph6;
    }
    pos = nl + 1;
    if (nl == text.size()) break;
  }
  return GraphTextFormat::graph6;
}

}  // namespace walkgauge

#endif
