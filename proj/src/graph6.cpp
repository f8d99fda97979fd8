#include <fstream>

#include "zf/graph.hpp"

namespace zf {

namespace {
const std::string kHeader = ">>graph6<<";
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  std::size_t base = 0;
  if (s.rfind(kHeader, 0) == 0) {
    s = s.substr(kHeader.size());
    base = kHeader.size();
  }
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("empty graph6 record", base);
  unsigned char h = s[0];
  if (h == 126) throw ParseError("long-form graph6 not supported", base);
  if (h < 63 || h > 125) throw ParseError("malformed graph6 header byte", base);
  int n = h - 63;
  long long nbits = (long long)n * (n - 1) / 2;
  std::size_t need = 1 + (std::size_t)((nbits + 5) / 6);
  if (s.size() < need)
    throw ParseError("truncated graph6 bit vector", base + s.size());
  if (s.size() > need)
    throw ParseError("trailing garbage after graph6 record", base + need);
  Graph g(n);
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      unsigned char c = s[1 + k / 6];
      if (c < 63 || c > 126)
        throw ParseError("invalid graph6 data byte", base + 1 + k / 6);
      if ((c - 63) >> (5 - k % 6) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero.
  for (; k % 6 != 0; ++k) {
    unsigned char c = s[1 + k / 6];
    if ((c - 63) >> (5 - k % 6) & 1)
      throw ParseError("nonzero padding in graph6 record", base + 1 + k / 6);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out(1, char(63 + n));
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(char(63 + acc));
        acc = nb = 0;
      }
    }
  if (nb > 0) out.push_back(char(63 + (acc << (6 - nb))));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open graph6 file: " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == kHeader) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace zf
