#include "convlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "convlab/error.hpp"

namespace convlab {

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  put_size(out, n);
  int acc = 0, bits = 0;
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(const std::string& raw) {
  std::string s = trim(raw);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  if (s.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError("graph6: truncated size field");
      v = (v << 6) | (s[pos++] - kBias);
    }
    return v;
  };
  if (s[0] != '~') {
    n = take(1);
  } else if (s.size() > 1 && s[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 1'000'000) throw ParseError("graph6: order too large");
  const long long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                     std::to_string(s.size() - pos));
  std::vector<Edge> es;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), es);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw ParseError("edge list: negative header value");
  std::vector<Edge> es;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("edge list: trailing data '" + extra + "'");
  return Graph::from_edges(static_cast<int>(n), es);
}

Graph parse_graph(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) return from_edge_list(t);
  return from_graph6(t);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace convlab
