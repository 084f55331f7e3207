#include "convlab/catalog.hpp"

#include <charconv>
#include <functional>

#include "convlab/error.hpp"
#include "convlab/structure.hpp"

namespace convlab {

namespace {

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

// Generalized Petersen graph GP(n, s): outer cycle 0..n-1, spokes i -> n+i,
// inner vertex n+i joined to n+(i+s) mod n.
Graph generalized_petersen(int n, int s) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    es.emplace_back(i, (i + 1) % n);
    es.emplace_back(i, n + i);
    es.emplace_back(n + i, n + (i + s) % n);
  }
  return Graph::from_edges(2 * n, es);
}

Graph cube() {
  std::vector<Edge> es;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v & bit) == 0) es.emplace_back(v, v | bit);
  return Graph::from_edges(8, es);
}

// a_i = i, b_i = 5+i, c_i = 10+i, d_i = 15+i; b forms a 5-cycle and
// c0..c4 d0..d4 a 10-cycle.
Graph flower_snark_j5() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, 5 + i);
    es.emplace_back(i, 10 + i);
    es.emplace_back(i, 15 + i);
    es.emplace_back(5 + i, 5 + (i + 1) % 5);
  }
  for (int i = 0; i < 4; ++i) {
    es.emplace_back(10 + i, 11 + i);
    es.emplace_back(15 + i, 16 + i);
  }
  es.emplace_back(14, 15);
  es.emplace_back(19, 10);
  return Graph::from_edges(20, es);
}

Graph heawood() {
  std::vector<Edge> es;
  for (int i = 0; i < 14; ++i) {
    es.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) es.emplace_back(i, (i + 5) % 14);
  }
  return Graph::from_edges(14, es);
}

// Letters a..h map to 0..7.
Graph from_letters(std::initializer_list<const char*> pairs) {
  std::vector<Edge> es;
  for (const char* p : pairs) es.emplace_back(p[0] - 'a', p[1] - 'a');
  return Graph::from_edges(8, es);
}

struct Fixed {
  CatalogEntry entry;
  std::function<Graph()> make;
};

const std::vector<Fixed>& fixed_entries() {
  static const std::vector<Fixed> table = {
      {{"k4", "complete graph K4"}, [] { return complete(4); }},
      {{"k33", "complete bipartite K3,3; sides 0-2 and 3-5"},
       [] {
         return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
       }},
      {{"prism", "triangular prism; triangles 0-2 and 3-5, rungs i~i+3"},
       [] {
         return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
       }},
      {{"q3", "3-cube; vertices are 3-bit words"}, cube},
      {{"petersen", "Petersen graph GP(5,2)"}, [] { return generalized_petersen(5, 2); }},
      {{"dodecahedron", "dodecahedron GP(10,2), smallest fullerene"}, [] { return generalized_petersen(10, 2); }},
      {{"j5", "flower snark J5"}, flower_snark_j5},
      {{"octahedron", "octahedron K2,2,2; antipodal pairs (0,1), (2,3), (4,5)"},
       [] {
         std::vector<Edge> es;
         for (int u = 0; u < 6; ++u)
           for (int v = u + 1; v < 6; ++v)
             if (u / 2 != v / 2) es.emplace_back(u, v);
         return Graph::from_edges(6, es);
       }},
      {{"heawood", "Heawood graph, the (3,6)-cage"}, heawood},
      {{"g1", "order-8 triangle-free cubic exception (non-bipartite)"},
       [] { return from_letters({"ab", "bc", "cd", "de", "af", "fg", "ge", "eh", "ha", "hc", "bg", "df"}); }},
      {{"g2", "order-8 triangle-free cubic exception (bipartite)"},
       [] { return from_letters({"ha", "ab", "bc", "cd", "de", "af", "fg", "gd", "fe", "eh", "hc", "bg"}); }},
      {{"sharp8", "4-regular order 8 with a 3-conversion seed {0,1,2}"},
       [] {
         return Graph::from_edges(8, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 3}, {5, 1},
                                      {5, 2}, {6, 4}, {6, 0}, {6, 1}, {7, 5}, {7, 6}, {7, 0}, {7, 2}});
       }},
      {{"cubic12", "3-connected cubic graph of order 12 used as a product factor"},
       [] {
         std::vector<Edge> es;
         for (int i = 0; i < 11; ++i) es.emplace_back(i, (i + 1) % 11);
         for (Edge e : {Edge{2, 7}, Edge{4, 9}, Edge{5, 8}, Edge{6, 0}, Edge{11, 1}, Edge{11, 3}, Edge{11, 10}})
           es.push_back(e);
         return Graph::from_edges(12, es);
       }},
      {{"h1", "block H1: C5 plus chords 1-3, 2-4; vertex 0 has degree 2"},
       [] { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}, {2, 4}}); }},
      {{"h2", "block H2: C6 plus chords 1-4, 2-5; vertices 0, 3 have degree 2"},
       [] { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}, {2, 5}}); }},
      {{"h3", "block H3: C7 plus chords 1-4, 2-5, 3-6; vertex 0 has degree 2"},
       [] {
         return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 4}, {2, 5}, {3, 6}});
       }},
      {{"h4", "block H4: C6 plus chords 1-5, 2-4; vertices 0, 3 have degree 2"},
       [] { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 5}, {2, 4}}); }},
  };
  return table;
}

int family_size(const std::string& name, const std::string& prefix) {
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  int n = -1;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n < 0) throw PreconditionError("bad size in catalog name '" + name + "'");
  return n;
}

}  // namespace

Graph catalog(const std::string& name) {
  for (const auto& f : fixed_entries())
    if (f.entry.name == name) return f.make();
  auto has = [&](const std::string& p) { return name.rfind(p, 0) == 0 && name.size() > p.size(); };
  if (has("empty-")) return Graph::empty(family_size(name, "empty-"));
  if (has("complete-")) return complete(family_size(name, "complete-"));
  if (has("cycle-")) {
    const int n = family_size(name, "cycle-");
    if (n < 3) throw PreconditionError("cycles need at least 3 vertices");
    return cycle(n);
  }
  if (has("path-")) {
    const int n = family_size(name, "path-");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
  }
  if (has("matching-")) {
    const int n = family_size(name, "matching-");
    if (n % 2 != 0) throw PreconditionError("perfect matching needs an even order");
    std::vector<Edge> es;
    for (int i = 0; i < n; i += 2) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
  }
  if (has("star-")) {
    const int leaves = family_size(name, "star-");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
  }
  throw PreconditionError("unknown catalog name '" + name + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> list = [] {
    std::vector<CatalogEntry> out;
    for (const auto& f : fixed_entries()) out.push_back(f.entry);
    return out;
  }();
  return list;
}

std::vector<std::string> cubic_catalog_names() {
  std::vector<std::string> out;
  for (const auto& f : fixed_entries())
    if (is_cubic(f.make())) out.push_back(f.entry.name);
  return out;
}

}  // namespace convlab
