#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermorph {

// Dense index into a vertex or edge universe. The tag keeps vertex and edge
// indices from being mixed up.
template <typename Tag>
struct StrongIndex {
  std::size_t value = 0;

  constexpr StrongIndex() = default;
  constexpr explicit StrongIndex(std::size_t v) : value(v) {}

  friend constexpr auto operator<=>(StrongIndex, StrongIndex) = default;
};

struct VertexTag {};
struct EdgeTag {};

using VertexId = StrongIndex<VertexTag>;
using EdgeId = StrongIndex<EdgeTag>;

// Subset of a finite universe [0, universe_size). Complement is taken
// relative to that universe; binary operations require equal universes.
template <typename Tag>
class IndexSet {
 public:
  using Block = std::uint64_t;
  using Bits = boost::dynamic_bitset<Block>;
  using Id = StrongIndex<Tag>;
  static constexpr std::size_t kBlockBits = Bits::bits_per_block;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe_size) : bits_(universe_size) {}
  IndexSet(std::size_t universe_size, std::initializer_list<std::size_t> members)
      : bits_(universe_size) {
    for (std::size_t m : members) insert(m);
  }

  static IndexSet full(std::size_t universe_size) {
    IndexSet s(universe_size);
    s.bits_.set();
    return s;
  }

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }
  bool contains(Id id) const { return contains(id.value); }

  void insert(std::size_t i) {
    check(i);
    bits_.set(i);
  }
  void insert(Id id) { insert(id.value); }
  void erase(std::size_t i) {
    check(i);
    bits_.reset(i);
  }
  void erase(Id id) { erase(id.value); }
  void assign(std::size_t i, bool present) {
    check(i);
    bits_.set(i, present);
  }

  bool is_subset_of(const IndexSet& other) const {
    require_same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const IndexSet& other) const {
    require_same_universe(other);
    return bits_.intersects(other.bits_);
  }

  IndexSet complement() const {
    IndexSet out(*this);
    out.bits_.flip();
    return out;
  }

  IndexSet& operator|=(const IndexSet& o) {
    require_same_universe(o);
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    require_same_universe(o);
    bits_ &= o.bits_;
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    require_same_universe(o);
    bits_ -= o.bits_;
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
  IndexSet operator~() const { return complement(); }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.bits_ == b.bits_;
  }

  // Calls fn(std::size_t) for every member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      fn(static_cast<std::size_t>(i));
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const Bits& bits() const { return bits_; }

 private:
  void check(std::size_t i) const {
    if (i >= bits_.size()) {
      throw std::out_of_range("index " + std::to_string(i) +
                              " outside universe of size " +
                              std::to_string(bits_.size()));
    }
  }
  void require_same_universe(const IndexSet& o) const {
    if (o.bits_.size() != bits_.size()) {
      throw std::invalid_argument("set operation on different universes (" +
                                  std::to_string(bits_.size()) + " vs " +
                                  std::to_string(o.bits_.size()) + ")");
    }
  }

  Bits bits_;
};

using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

}  // namespace hypermorph
