#ifndef YBX_PERMUTATION_HPP_
#define YBX_PERMUTATION_HPP_

#include <compare>
#include <vector>

#include "ybx/atom_set.hpp"

namespace ybx {

/// A bijection of {0, .., n-1}.
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotASolution if `images` is not a bijection of {0..n-1}.
  explicit Permutation(std::vector<Atom> images);

  static Permutation identity(int n);

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2,3}} is the
  /// 4-cycle 0 -> 1 -> 2 -> 3 -> 0.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<Atom>>& cycles);

  /// True iff `images` is a bijection of {0..n-1}.
  static bool is_bijection(const std::vector<Atom>& images);

  int degree() const { return static_cast<int>(images_.size()); }
  Atom operator()(Atom x) const { return images_[x]; }
  const std::vector<Atom>& images() const { return images_; }

  Permutation inverse() const;
  /// (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Atom> images_;
};

}  // namespace ybx

#endif  // YBX_PERMUTATION_HPP_
