#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace specbound {

/// Dynamic bitset over the vertex universe {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  /// Throws InvalidInput if a member is out of range.
  static VertexSet of(std::size_t universe, std::span<const std::size_t> members);
  static VertexSet of(std::size_t universe, std::initializer_list<std::size_t> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool contains(std::size_t v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(std::size_t v);
  void erase(std::size_t v);

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept;
  /// Smallest member greater than v, or universe() when none.
  std::size_t next(std::size_t v) const noexcept;

  std::vector<std::size_t> members() const;
  std::size_t intersection_count(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Removes every member of other.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// "{0,2,4}"
  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& other) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace specbound
