#ifndef YBX_SOLUTION_HPP_
#define YBX_SOLUTION_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ybx/atom_set.hpp"
#include "ybx/permutation.hpp"

namespace ybx {

/// An ordered pair of elements of X.
using AtomPair = std::pair<Atom, Atom>;

/// A finite map S : X x X -> X x X, stored as an n x n table of pairs.
/// With S(x, y) = (g_x(y), f_y(x)), row x of the first coordinates is g_x and
/// column y of the second coordinates is f_y.
///
/// Construction only guarantees that S is a bijection of X x X; the solution
/// axioms are separate predicates.
class SolutionTable {
 public:
  SolutionTable() = default;

  /// `cells[x * n + y]` holds S(x, y). Throws NotASolution if the induced map
  /// on pairs is not a bijection (names the first repeated image).
  SolutionTable(int n, std::vector<AtomPair> cells);

  /// S(x, y) = (sigma_x(y), tau_y(x)).
  static SolutionTable from_permutations(const std::vector<Permutation>& sigma,
                                         const std::vector<Permutation>& tau);

  int size() const { return n_; }
  const AtomPair& operator()(Atom x, Atom y) const { return cells_[x * n_ + y]; }
  const std::vector<AtomPair>& cells() const { return cells_; }

  /// g_x(y): first coordinate of S(x, y).
  Atom g(Atom x, Atom y) const { return (*this)(x, y).first; }
  /// f_y(x): second coordinate of S(x, y).
  Atom f(Atom y, Atom x) const { return (*this)(x, y).second; }

  /// Row map y -> g_x(y); nullopt if not a bijection.
  std::optional<Permutation> g_perm(Atom x) const;
  /// Column map x -> f_y(x); nullopt if not a bijection.
  std::optional<Permutation> f_perm(Atom y) const;

  /// The table S' with S'(p x, p y) = (p a, p b) whenever S(x, y) = (a, b).
  SolutionTable relabeled(const Permutation& p) const;

  friend bool operator==(const SolutionTable&, const SolutionTable&) = default;
  friend auto operator<=>(const SolutionTable&, const SolutionTable&) = default;

 private:
  int n_ = 0;
  std::vector<AtomPair> cells_;
};

/// A 2-letter word x y.
using Word2 = std::array<Atom, 2>;

/// A defining relation lhs = rhs with both sides of length 2.
struct Relation {
  Word2 lhs{};
  Word2 rhs{};
  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

/// The non-trivial defining relations of a structure monoid. Relations are
/// stored with lhs < rhs and sorted, so equality is equality of sets of
/// unordered relations.
class RelationSet {
 public:
  RelationSet() = default;
  RelationSet(int n, std::vector<Relation> relations);

  int size() const { return n_; }
  const std::vector<Relation>& relations() const& { return relations_; }
  std::vector<Relation> relations() && { return std::move(relations_); }

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

 private:
  int n_ = 0;
  std::vector<Relation> relations_;
};

/// Witness of an isomorphism: `bijection(x)` is the image of x.
struct IsoWitness {
  Permutation bijection;
};

struct QybeReport {
  bool qybe = false;
  bool unitary = false;
};

// Axioms.
bool is_nondegenerate(const SolutionTable& s);
bool is_involutive(const SolutionTable& s);
bool is_braided(const SolutionTable& s);
bool is_symmetric(const SolutionTable& s);
bool is_square_free(const SolutionTable& s);
/// Pointwise check of R12 R13 R23 = R23 R13 R12 and R21 R = id on basis
/// triples, where R = flip o S.
QybeReport check_qybe(const SolutionTable& s);

/// Symmetric and non-degenerate.
bool is_solution(const SolutionTable& s);

/// The permutation map S(x, y) = (y, x).
SolutionTable trivial_solution(int n);

/// All nonempty invariant subsets, ordered by subset_order_less.
/// Requires a non-degenerate symmetric solution with n <= kMaxAtoms.
std::vector<AtomSet> invariant_subsets(const SolutionTable& s);
bool is_invariant(const SolutionTable& s, AtomSet y);

/// The table of S restricted to Y x Y, re-indexed by the increasing order of
/// Y. Throws NotASolution if Y is not invariant.
SolutionTable restrict(const SolutionTable& s, AtomSet y);

/// A bijection transporting `a` onto `b`, if one exists.
std::optional<IsoWitness> isomorphic(const SolutionTable& a,
                                     const SolutionTable& b);
/// True iff `w` maps S onto S2 pointwise.
bool transports(const Permutation& w, const SolutionTable& a,
                const SolutionTable& b);

/// The n(n-1)/2 relations x y = g_x(y) f_y(x) with S(x, y) != (x, y).
RelationSet presentation_of(const SolutionTable& s);

/// Inverse of presentation_of. Throws NotASolution if the relation set has
/// the wrong cardinality, repeats a 2-letter word, or does not yield a
/// non-degenerate symmetric solution.
SolutionTable solution_from_presentation(const RelationSet& r);

}  // namespace ybx

#endif  // YBX_SOLUTION_HPP_
