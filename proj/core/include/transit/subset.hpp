#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace transit {

/// Largest ground set supported. Subsets are a single machine word.
inline constexpr std::size_t kMaxGround = 64;

/// A subset of a ground set {0, ..., n-1}, stored as one 64-bit word.
///
/// The width n is not stored: callers that accept subsets from outside the
/// library validate them against their GroundSet with GroundSet::contains().
class Subset {
 public:
  using word_type = std::uint64_t;

  constexpr Subset() = default;
  constexpr explicit Subset(word_type bits) : bits_(bits) {}
  Subset(std::initializer_list<std::size_t> elems) {
    for (std::size_t e : elems) insert(e);
  }

  static constexpr Subset singleton(std::size_t e) { return Subset(word_type{1} << e); }
  static constexpr Subset pair(std::size_t a, std::size_t b) {
    return Subset((word_type{1} << a) | (word_type{1} << b));
  }
  /// The full set {0, ..., n-1}.
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~word_type{0} : (word_type{1} << n) - 1);
  }
  static Subset from_indices(const std::vector<std::size_t>& elems) {
    Subset s;
    for (std::size_t e : elems) s.insert(e);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; the set must be nonempty.
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  constexpr std::size_t max() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  constexpr void insert(std::size_t e) { bits_ |= word_type{1} << e; }
  constexpr void erase(std::size_t e) { bits_ &= ~(word_type{1} << e); }

  constexpr Subset with(std::size_t e) const { return Subset(bits_ | (word_type{1} << e)); }
  constexpr Subset without(std::size_t e) const { return Subset(bits_ & ~(word_type{1} << e)); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  /// Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  /// Orders by (size, bits); the canonical order for families of sets.
  friend constexpr bool size_then_bits(Subset a, Subset b) {
    const auto sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a.bits_ < b.bits_;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  /// Iterates members in ascending order.
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

 private:
  word_type bits_ = 0;
};

/// Finite nonempty universe with optional display labels.
class GroundSet {
 public:
  /// Throws Error(kGroundTooLarge) for n > 64 and Error(kMalformedInput) for
  /// n == 0 or labels that are not n distinct strings.
  explicit GroundSet(std::size_t n, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  Subset full() const { return Subset::full(n_); }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name: the label when present, otherwise the decimal index.
  std::string name(std::size_t i) const;
  /// Index of a label; nullopt when unlabeled or not found.
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// True when every element of s is below n.
  bool contains(Subset s) const { return s.is_subset_of(full()); }
  /// Throws Error(kIndexOutOfRange) unless i < n.
  void check_index(std::size_t i) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
};

/// "{a,b,c}" using the ground set's names.
std::string format_subset(const GroundSet& ground, Subset s);

}  // namespace transit
