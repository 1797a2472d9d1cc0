#ifndef YBX_PARABOLIC_HPP_
#define YBX_PARABOLIC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ybx/garside.hpp"

namespace ybx {

/// A standard parabolic subgroup, given by its balanced simple delta with
/// Div(delta) = Div(Delta) ∩ M_support.
struct ParabolicDescriptor {
  AtomSet support;
  Word delta_word;
};

struct DeltaClassReport {
  Partition classes;
  /// One simple per class (the right lcm of the class), keyed by x_ell.
  std::vector<AtomSet> class_deltas;
  bool product_ok = false;
  bool commute_ok = false;
  bool gcd_trivial_ok = false;

  bool all_ok() const { return product_ok && commute_ok && gcd_trivial_ok; }
};

/// Membership of a simple in the submonoid generated by y, via X_l and via
/// X_r. Throws TheoremViolation if the two tests disagree.
bool member_of_MY(const DivisorLattice& lat, const Simple& s, AtomSet y);

/// Simples that can be written as words over y, found by extending words
/// over y one letter at a time and keeping those that stay simple. This is
/// the word-level view of Div(Delta) ∩ M_Y and does not use the masks.
std::vector<AtomSet> simples_over(const DivisorLattice& lat, AtomSet y);

/// The right lcm of an invariant subset y, checked to be balanced with
/// support y. Throws PreconditionError if y is not invariant and
/// TheoremViolation if the checks fail.
const Simple& parabolic_delta_of(const DivisorLattice& lat, AtomSet y);

/// Descriptor iff simple(y) is balanced and its divisors are exactly the
/// simples expressible over y.
std::optional<ParabolicDescriptor> is_standard_parabolic(
    const DivisorLattice& lat, AtomSet y);

/// All standard parabolic subgroups with nonempty support, ordered by
/// subset_order_less on the support.
std::vector<ParabolicDescriptor> standard_parabolics(const DivisorLattice& lat);

/// Y -> G_Y is a bijection from invariant subsets onto standard parabolic
/// supports, and every invariant subset gives a balanced simple with the
/// right divisor set.
bool verify_theorem_A(const DivisorLattice& lat);

/// Orbits of the group generated by {f_x} (resp. {g_x}) on X.
Partition f_orbits(const SolutionTable& s);
Partition g_orbits(const SolutionTable& s);

/// At least two f-orbits. Cross-checked against the existence of an
/// invariant bipartition; throws TheoremViolation on disagreement.
bool is_decomposable(const SolutionTable& s);

/// Classes of atoms with equal Delta_x, where Delta_x is the lcm of the
/// closure of {x} under y -> right(a, y), a != y.
DeltaClassReport delta_classes(const DivisorLattice& lat);

/// One Delta class. Throws TheoremViolation unless this equals
/// !is_decomposable.
bool is_delta_pure(const DivisorLattice& lat);

}  // namespace ybx

#endif  // YBX_PARABOLIC_HPP_
