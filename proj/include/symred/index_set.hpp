#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace symred {

/// Subset of {0, ..., 31}, used for facet sets and fixed-point half-sets.
/// Displayed 1-based: {0, 2} prints as "{1,3}".
class IndexSet {
 public:
  static constexpr std::size_t kMaxSize = 32;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> members) {
    for (auto m : members) insert(m);
  }

  static IndexSet full(std::size_t n) {
    return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }

  void insert(std::size_t i) { bits_ |= (1u << i); }
  void erase(std::size_t i) { bits_ &= ~(1u << i); }

  constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (1u << i)); }
  constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(1u << i)); }
  IndexSet complement(std::size_t n) const { return IndexSet(~bits_ & full(n).bits_); }
  constexpr bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kMaxSize; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto i : members()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  constexpr bool operator==(const IndexSet&) const = default;

  /// Size first, then lexicographic on the sorted member list.
  std::strong_ordering operator<=>(const IndexSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return members() <=> o.members();
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All k-subsets of {0..n-1} in lexicographic order of sorted members.
std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace symred
