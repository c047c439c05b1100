#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permsub {

/// Largest ground set supported by SubsetMask (the Grassmannian lift of a
/// flag on [8] lives on [16]).
inline constexpr int kMaxGround = 16;

/// A subset of [n] stored as a bit mask; bit p-1 stands for element p.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr SubsetMask(std::uint32_t bits, int n) : bits_(bits), n_(n) {}

  static SubsetMask full(int n) { return {n == 32 ? ~0u : ((1u << n) - 1u), n}; }
  static SubsetMask from_elements(const std::vector<int>& elements, int n);
  /// Parses the compact form "134" (n <= 9) or a comma list "1,3,4".
  static SubsetMask parse(std::string_view text, int n);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int n() const { return n_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  /// 1-based membership.
  bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }

  SubsetMask with(int element) const { return {bits_ | (1u << (element - 1)), n_}; }
  SubsetMask without(int element) const { return {bits_ & ~(1u << (element - 1)), n_}; }
  SubsetMask operator|(SubsetMask o) const { return {bits_ | o.bits_, n_}; }
  SubsetMask operator&(SubsetMask o) const { return {bits_ & o.bits_, n_}; }
  SubsetMask operator^(SubsetMask o) const { return {bits_ ^ o.bits_, n_}; }
  SubsetMask minus(SubsetMask o) const { return {bits_ & ~o.bits_, n_}; }
  bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }

  /// Sorted 1-based elements.
  std::vector<int> elements() const;
  /// "134" for n <= 9, else "1,3,4"; the empty set prints as "".
  std::string to_string() const;

  friend bool operator==(SubsetMask a, SubsetMask b) { return a.bits_ == b.bits_; }
  /// Lexicographic order on sorted element lists, so 12 < 13 < 23.
  friend std::strong_ordering operator<=>(SubsetMask a, SubsetMask b);

 private:
  std::uint32_t bits_ = 0;
  int n_ = 0;
};

/// All k-subsets of [n] in lexicographic order.
std::vector<SubsetMask> k_subsets(int n, int k);

}  // namespace permsub
