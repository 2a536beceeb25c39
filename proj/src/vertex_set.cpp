#include "specbound/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "specbound/errors.hpp"

namespace specbound {

namespace {
constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const std::size_t> members) {
  VertexSet s(universe);
  for (auto v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  return of(universe, std::span<const std::size_t>(members.begin(), members.size()));
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_)
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for universe of size " +
                       std::to_string(universe_));
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(std::size_t v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return universe_;
}

std::size_t VertexSet::next(std::size_t v) const noexcept {
  std::size_t start = v + 1;
  if (start >= universe_) return universe_;
  std::size_t i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++i == words_.size()) return universe_;
    w = words_[i];
  }
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (auto v = first(); v < universe_; v = next(v)) out.push_back(v);
  return out;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const noexcept {
  std::size_t c = 0;
  const auto k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const auto k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_)
    throw InvalidInput("vertex set universes differ: " + std::to_string(universe_) + " vs " +
                       std::to_string(other.universe_));
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

void VertexSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_member = true;
  for (auto v = first(); v < universe_; v = next(v)) {
    if (!first_member) s += ',';
    s += std::to_string(v);
    first_member = false;
  }
  return s + "}";
}

}  // namespace specbound
