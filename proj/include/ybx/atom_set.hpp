#ifndef YBX_ATOM_SET_HPP_
#define YBX_ATOM_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ybx {

/// Internal 0-based element of X (an atom of the structure monoid).
using Atom = int;

/// Upper bound on |X| for anything that indexes subsets by bitmask.
inline constexpr int kMaxAtoms = 20;

/// A subset of X = {0, .., n-1}, stored as a bitmask.
class AtomSet {
 public:
  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint32_t bits) : bits_(bits) {}
  AtomSet(std::initializer_list<Atom> atoms) {
    for (Atom a : atoms) bits_ |= std::uint32_t{1} << a;
  }

  static constexpr AtomSet full(int n) {
    return AtomSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  static constexpr AtomSet single(Atom a) {
    return AtomSet(std::uint32_t{1} << a);
  }
  static AtomSet from(const std::vector<Atom>& atoms) {
    AtomSet s;
    for (Atom a : atoms) s.insert(a);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Atom a) const { return (bits_ >> a) & 1u; }
  constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr Atom min() const { return std::countr_zero(bits_); }
  constexpr Atom max() const { return 31 - std::countl_zero(bits_); }

  void insert(Atom a) { bits_ |= std::uint32_t{1} << a; }
  void erase(Atom a) { bits_ &= ~(std::uint32_t{1} << a); }

  std::vector<Atom> atoms() const {
    std::vector<Atom> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) {
    return AtomSet(a.bits_ | b.bits_);
  }
  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) {
    return AtomSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr AtomSet operator-(AtomSet a, AtomSet b) {
    return AtomSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(AtomSet, AtomSet) = default;
  friend constexpr auto operator<=>(AtomSet, AtomSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Deterministic subset order used in every report: by size, then by the
/// lexicographic order of the sorted element lists.
bool subset_order_less(AtomSet a, AtomSet b);

/// A set partition of X, blocks ordered by their minimal element.
using Partition = std::vector<AtomSet>;

Partition normalize_partition(Partition p);

}  // namespace ybx

#endif  // YBX_ATOM_SET_HPP_
