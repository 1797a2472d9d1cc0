#ifndef YBX_GARSIDE_HPP_
#define YBX_GARSIDE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ybx/atom_set.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// A word over the atoms. Two words are the same monoid element iff
/// words_equal says so; letter-sequence equality is only sufficient.
using Word = std::vector<Atom>;

Word concat(const Word& a, const Word& b);
Word reversed(Word w);

/// Atom-level complements of the structure monoid presentation
/// x y = g_x(y) f_y(x).
///
///   right(a, b) = g_a^{-1}(b):  a * right(a, b) == b * right(b, a)
///   left(a, b)  = f_a^{-1}(b):  left(a, b) * a  == left(b, a) * b
///
/// Both are undefined on the diagonal.
class ComplementSystem {
 public:
  /// `budget` overrides the per-call reversing step budget (default
  /// 4^(|u|+|v|)). Requires a non-degenerate table.
  explicit ComplementSystem(const SolutionTable& s,
                            std::optional<std::uint64_t> budget = std::nullopt);

  int size() const { return n_; }
  Atom right(Atom a, Atom b) const { return rc_[a * n_ + b]; }
  Atom left(Atom a, Atom b) const { return lc_[a * n_ + b]; }
  std::uint64_t budget_for(std::size_t total_length) const;

 private:
  int n_ = 0;
  std::vector<Atom> rc_;
  std::vector<Atom> lc_;
  std::optional<std::uint64_t> budget_;
};

/// Result of reversing u^{-1} v (right) or u v^{-1} (left).
struct Reversal {
  Word u_comp;
  Word v_comp;
};

/// Right reversing of u^{-1} v into (u\v) (v\u)^{-1}, so that
/// u (u\v) = v (v\u) is the right lcm of u and v.
/// Returns {u\v, v\u}. Throws BudgetExceeded.
Reversal reverse_right(const Word& u, const Word& v, const ComplementSystem& c);

/// Left reversing of u v^{-1}: returns {u', v'} with u' u = v' v the left
/// lcm of u and v.
Reversal reverse_left(const Word& u, const Word& v, const ComplementSystem& c);

/// Word problem of the structure monoid, by reversing.
bool words_equal(const Word& u, const Word& v, const ComplementSystem& c);
/// u is a left divisor of v (v = u w).
bool left_divides(const Word& u, const Word& v, const ComplementSystem& c);
/// u is a right divisor of v (v = w u).
bool right_divides(const Word& u, const Word& v, const ComplementSystem& c);

/// Right lcm of a nonempty atom set, folded in increasing atom order.
Word right_lcm(AtomSet a, const ComplementSystem& c);
/// Left lcm of a nonempty atom set, folded in increasing atom order.
Word left_lcm(AtomSet a, const ComplementSystem& c);

/// Atoms that left (resp. right) divide w.
AtomSet left_atom_divisors(const Word& w, const ComplementSystem& c);
AtomSet right_atom_divisors(const Word& w, const ComplementSystem& c);

/// A divisor of the Garside element, indexed by the atom sets whose right
/// lcm (x_ell) and left lcm (x_r) it is.
struct Simple {
  AtomSet x_ell;
  AtomSet x_r;
  Word word;

  int length() const { return static_cast<int>(word.size()); }
};

/// The 2^n simples of the structure monoid with their lattice structure.
///
/// Construction computes right_lcm(A) for every A, derives x_r by
/// right-division tests and verifies that both indexings are bijections with
/// |x_ell| = |x_r|, that lcm lengths are additive and that the left lcm of
/// x_r gives back the same element. Any failure throws NotASolution.
///
/// Gcd/lcm queries reduce to mask operations; everything else goes through
/// word reversing. Immutable after construction.
class DivisorLattice {
 public:
  static constexpr int kMaxRank = 16;

  explicit DivisorLattice(const SolutionTable& s,
                          std::optional<std::uint64_t> budget = std::nullopt);

  const SolutionTable& solution() const { return solution_; }
  const ComplementSystem& complements() const { return complements_; }
  int rank() const { return solution_.size(); }
  AtomSet all_atoms() const { return AtomSet::full(rank()); }

  /// Simples indexed by x_ell bits.
  const std::vector<Simple>& simples() const { return simples_; }
  const Simple& by_left(AtomSet x_ell) const { return simples_[x_ell.bits()]; }
  const Simple& by_right(AtomSet x_r) const {
    return simples_[r_index_[x_r.bits()]];
  }
  const Simple& delta() const { return by_left(all_atoms()); }
  const Simple& identity() const { return simples_.front(); }
  const Simple& atom(Atom a) const { return by_left(AtomSet::single(a)); }

  bool left_divides(const Simple& s, const Simple& t) const {
    return s.x_ell.subset_of(t.x_ell);
  }
  bool right_divides(const Simple& s, const Simple& t) const {
    return s.x_r.subset_of(t.x_r);
  }
  /// Lattice operations for left divisibility.
  const Simple& join(const Simple& s, const Simple& t) const {
    return by_left(s.x_ell | t.x_ell);
  }
  const Simple& meet(const Simple& s, const Simple& t) const {
    return by_left(s.x_ell & t.x_ell);
  }
  /// Lattice operations for right divisibility.
  const Simple& right_join(const Simple& s, const Simple& t) const {
    return by_right(s.x_r | t.x_r);
  }
  const Simple& right_meet(const Simple& s, const Simple& t) const {
    return by_right(s.x_r & t.x_r);
  }

  /// Same set of left and right divisors.
  bool is_balanced(const Simple& s) const;
  /// A left divisor of s that does not right-divide s, or a right divisor
  /// that does not left-divide it; nullopt when s is balanced.
  std::optional<Word> balance_witness(const Simple& s) const;
  /// Atoms dividing a balanced simple. Throws PreconditionError otherwise.
  AtomSet support(const Simple& s) const;

  /// The simple represented by w, or nullptr if w is not a divisor of Delta.
  const Simple* find_simple(const Word& w) const;

  /// Maximal simple left (resp. right) divisor of w.
  const Simple& head(const Word& w) const;
  const Simple& right_head(const Word& w) const;
  /// Left (resp. right) gcd of w with the simple d.
  const Simple& left_gcd(const Word& w, const Simple& d) const;
  const Simple& right_gcd(const Word& w, const Simple& d) const;

  /// Left-greedy normal form. Two words are equal in the monoid iff their
  /// normal forms are identical.
  std::vector<const Simple*> normal_form(const Word& w) const;

  /// s\t: the simple c with s c = join(s, t), by reversing.
  const Simple& right_complement(const Simple& s, const Simple& t) const;
  /// The simple c with c s = right_join(s, t), by reversing.
  const Simple& left_complement(const Simple& s, const Simple& t) const;

 private:
  const Simple& require_simple(const Word& w) const;

  SolutionTable solution_;
  ComplementSystem complements_;
  std::vector<Simple> simples_;
  std::vector<std::uint32_t> r_index_;
};

}  // namespace ybx

#endif  // YBX_GARSIDE_HPP_
