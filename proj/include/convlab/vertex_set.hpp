#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace convlab {

using Vertex = int;

/// Bitmask subset of {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return n_; }
  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const;
  bool empty() const;
  std::vector<Vertex> members() const;
  // Lowest member, or -1 when empty.
  Vertex first() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  int intersection_size(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  // Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  // "0,3,5"
  std::string to_string() const;

 private:
  void check(Vertex v) const;
  void check_same(const VertexSet& other) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Parses a comma/space separated id list ("0,3,5").
VertexSet parse_vertex_list(int universe, const std::string& text);

}  // namespace convlab
