#include "convlab/conversion.hpp"

#include <sstream>

#include "convlab/degeneracy.hpp"
#include "convlab/error.hpp"
#include "convlab/structure.hpp"

namespace convlab {

namespace {

void require_threshold(int k) {
  if (k < 1) throw PreconditionError("threshold k must be >= 1");
}

}  // namespace

VertexSet ConversionTrace::converted_from(int from) const {
  VertexSet out(converted.universe());
  for (std::size_t t = static_cast<std::size_t>(from); t < layers.size(); ++t) out |= layers[t];
  return out;
}

ConversionTrace run_process(const Graph& g, const VertexSet& seed, int k) {
  require_threshold(k);
  ConversionTrace tr;
  tr.threshold = k;
  tr.layers.push_back(seed);
  tr.converted = seed;
  while (true) {
    VertexSet next(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (tr.converted.contains(v)) continue;
      if (g.neighbor_set(v).intersection_size(tr.converted) >= k) next.insert(v);
    }
    if (next.empty()) break;
    tr.converted |= next;
    tr.layers.push_back(std::move(next));
  }
  tr.time = static_cast<int>(tr.layers.size()) - 1;
  tr.complete = tr.converted.size() == g.order();
  return tr;
}

VertexSet conversion_closure(const Graph& g, const VertexSet& seed, int k) {
  require_threshold(k);
  std::vector<int> hits(g.order(), 0);
  VertexSet done = seed;
  std::vector<Vertex> work = seed.members();
  while (!work.empty()) {
    const Vertex v = work.back();
    work.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (done.contains(w)) continue;
      if (++hits[w] >= k) {
        done.insert(w);
        work.push_back(w);
      }
    }
  }
  return done;
}

bool is_conversion_set(const Graph& g, const VertexSet& s, int k) {
  return conversion_closure(g, s, k).size() == g.order();
}

bool is_k_immune(const Graph& g, const VertexSet& u, int k) {
  require_threshold(k);
  if (u.empty()) throw PreconditionError("immune sets are nonempty by definition");
  bool ok = true;
  u.for_each([&](Vertex v) {
    if (g.degree(v) - g.neighbor_set(v).intersection_size(u) >= k) ok = false;
  });
  return ok;
}

VertexSet residual_core(const Graph& g, const VertexSet& x, int k) {
  require_threshold(k);
  VertexSet rest = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!rest.contains(v)) continue;
      if (g.degree(v) - g.neighbor_set(v).intersection_size(rest) >= k) {
        rest.erase(v);
        changed = true;
      }
    }
  }
  return rest;
}

CharacterizationReport characterization_check(const Graph& g, const VertexSet& s, int k) {
  require_threshold(k);
  CharacterizationReport rep;
  rep.simulated = is_conversion_set(g, s, k);
  const auto d = regular_degree(g);
  if (!d || *d < k) return rep;
  const int r = *d - k;
  rep.r = r;
  const VertexSet rest = s.complement();
  rep.complement_rule = is_r_degenerate(g, rest, r).degenerate;
  rep.rule = r == 0 ? "V-S independent" : r == 1 ? "V-S forest" : "V-S " + std::to_string(r) + "-degenerate";
  return rep;
}

std::string trace_to_text(const ConversionTrace& trace) {
  std::ostringstream out;
  for (std::size_t t = 0; t < trace.layers.size(); ++t) {
    out << t << ':';
    trace.layers[t].for_each([&](Vertex v) { out << ' ' << v; });
    out << '\n';
  }
  return out.str();
}

ConversionTrace trace_from_text(const std::string& text, int n, int k) {
  ConversionTrace tr;
  tr.threshold = k;
  tr.converted = VertexSet(n);
  std::istringstream in(text);
  std::string line;
  int expect = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("trace line without ':': " + line);
    if (std::stoi(line.substr(0, colon)) != expect) throw ParseError("trace layers out of order at: " + line);
    VertexSet layer = parse_vertex_list(n, line.substr(colon + 1));
    if (layer.intersects(tr.converted)) throw ParseError("trace layers overlap at: " + line);
    tr.converted |= layer;
    tr.layers.push_back(std::move(layer));
    ++expect;
  }
  if (tr.layers.empty()) tr.layers.emplace_back(n);
  tr.time = static_cast<int>(tr.layers.size()) - 1;
  tr.complete = tr.converted.size() == n;
  return tr;
}

}  // namespace convlab
