#include "convlab/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "convlab/error.hpp"

namespace convlab {

VertexSet::VertexSet(int universe) : n_(universe) {
  if (universe < 0) throw PreconditionError("negative vertex-set universe");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
  }
}

void VertexSet::check_same(const VertexSet& other) const {
  if (other.n_ != n_) throw PreconditionError("vertex sets over different universes");
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

int VertexSet::intersection_size(const VertexSet& other) const {
  check_same(other);
  int c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & other.words_[w]);
  return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string VertexSet::to_string() const {
  std::string out;
  for_each([&](Vertex v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

VertexSet parse_vertex_list(int universe, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  VertexSet s(universe);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad vertex id '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad vertex id '" + tok + "'");
    s.insert(v);
  }
  return s;
}

}  // namespace convlab
