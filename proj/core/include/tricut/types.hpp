#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricut {

using VertexId = int;

// Analysis failures are split by who is at fault:
//   InputError        — the caller handed us something malformed.
//   PreconditionError — the graph does not meet the standing assumptions
//                       (triconnected, |V| > 6).
//   IntegrityError    — a structural theorem failed to hold; always a bug.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex set over dense ids 0..63, backed by one word.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}
  static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<VertexId> vs) {
    VertexSet s;
    for (VertexId v : vs) s.add(v);
    return s;
  }
  static constexpr VertexSet full(int n) {
    return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(VertexId v) const { return (bits >> v) & 1; }
  constexpr void add(VertexId v) { bits |= std::uint64_t{1} << v; }
  constexpr void remove(VertexId v) { bits &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return __builtin_popcountll(bits); }
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  VertexId min_vertex() const {
    if (bits == 0) throw InputError("min_vertex of empty set");
    return __builtin_ctzll(bits);
  }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits &= ~o.bits; return *this; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits; b; b &= b - 1) f(VertexId(__builtin_ctzll(b)));
  }
};

// Unordered pair of distinct vertices, stored with a < b.
struct Edge {
  VertexId a, b;

  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw InputError("loop edge " + std::to_string(u));
  }
  VertexSet ends() const { return VertexSet::of({a, b}); }
  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool incident(VertexId v) const { return v == a || v == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(VertexSet s);
std::string to_string(const Edge& e);

}  // namespace tricut
