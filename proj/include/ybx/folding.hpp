#ifndef YBX_FOLDING_HPP_
#define YBX_FOLDING_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ybx/garside.hpp"
#include "ybx/parabolic.hpp"

namespace ybx {

/// A set of simples, each identified by its x_ell.
using SimpleSet = std::set<AtomSet>;

/// Outcome of checking the Garside submonoid conditions on a set of simples.
struct GarsideCheck {
  bool ok = false;
  /// Name of the first failing condition, empty when ok.
  std::string failed;
  /// Pair of elements (x_ell keys) witnessing the failure.
  std::optional<std::pair<AtomSet, AtomSet>> witness;
};

/// Checks, in order: closure under left join/meet, right join/meet, right
/// complements, left complements, and that the left and right gcd of every
/// product x y with the maximum of D stay in D.
GarsideCheck check_garside_generating_set(const DivisorLattice& lat,
                                          const SimpleSet& d);
bool is_garside_generating_set(const DivisorLattice& lat, const SimpleSet& d);

/// Smallest superset of `seed` (plus the identity) closed under the
/// operations checked by check_garside_generating_set.
SimpleSet garside_closure(const DivisorLattice& lat, SimpleSet seed);

/// Minimal non-identity elements of d under left divisibility.
SimpleSet minimal_elements(const SimpleSet& d);

struct GarsideSubgroup {
  SimpleSet elements;
  AtomSet delta;  // x_ell of the maximum
};

/// The Garside closure of the atoms of xi, if it passes the checks, has a
/// unique maximum and its atoms are exactly the atoms of xi.
std::optional<GarsideSubgroup> atomic_garside_subgroup(const DivisorLattice& lat,
                                                       AtomSet xi);

/// Solution on an ordered list of simples closed under right complement:
/// S_H(x, x\z) = (z, z\x) for x != z, and the leftover pair in each row is
/// fixed. Index i of the result stands for xh[i]. Throws PreconditionError
/// if xh is not complement-closed, TheoremViolation if the result is not a
/// non-degenerate symmetric solution.
SolutionTable induced_solution(const DivisorLattice& lat,
                               const std::vector<AtomSet>& xh);

/// Solution carried by the atom set xh of an atomic Garside subgroup:
/// S_H(x, y) = S(x, y) whenever both sides stay in xh, other pairs fixed.
/// Checked against induced_solution on the same atoms, and against
/// restrict() when xh is invariant.
SolutionTable restriction_solution(const DivisorLattice& lat, AtomSet xh);

struct FoldingReport {
  Partition partition;
  /// Delta_i per block, keyed by x_ell (equal to the block).
  std::vector<AtomSet> block_deltas;
  SolutionTable induced;
  bool strong = false;
  std::vector<bool> block_subgroup_atomic;
};

struct FoldingOptions {
  /// Word length bound for the injectivity certificate.
  int depth = 4;
};

/// Why a partition is or is not a folding.
struct FoldingVerdict {
  std::optional<FoldingReport> report;
  std::string failure;
};

/// Evaluates one proper partition against both folding conditions.
FoldingVerdict evaluate_folding(const DivisorLattice& lat,
                                const Partition& partition,
                                const FoldingOptions& opts = {});

/// All proper partitions of X (1 < k < n), by number of blocks then
/// lexicographically.
std::vector<Partition> proper_partitions(int n);

std::vector<FoldingReport> find_foldings(
    const DivisorLattice& lat,
    const std::optional<std::vector<Partition>>& partitions = std::nullopt,
    const FoldingOptions& opts = {});

/// Foldings whose blocks are all standard parabolic.
std::vector<FoldingReport> find_strong_foldings(const DivisorLattice& lat,
                                                const FoldingOptions& opts = {});

/// The two-block strong folding Y | X \ Y where Y is the i-th f-orbit
/// (0-based). Throws PreconditionError if S is indecomposable or X \ Y is
/// not invariant, TheoremViolation if Delta_Y Delta_Z != Delta_Z Delta_Y
/// != Delta.
FoldingReport decomposition_folding(const DivisorLattice& lat, int i,
                                    const FoldingOptions& opts = {});

struct TheoremBReport {
  /// False for n <= 2: no proper partition exists, so no folding can.
  bool applicable = true;
  bool decomposable = false;
  bool has_trivial_two_block_strong_folding = false;
  /// Checks on D = {Delta_1^e1 ... Delta_k^ek} (vacuous when indecomposable).
  bool product_lattice_ok = true;
  bool holds() const {
    return decomposable == has_trivial_two_block_strong_folding &&
           product_lattice_ok;
  }
};

TheoremBReport theorem_B_report(const DivisorLattice& lat,
                                const FoldingOptions& opts = {});
bool verify_theorem_B(const DivisorLattice& lat,
                      const FoldingOptions& opts = {});

}  // namespace ybx

#endif  // YBX_FOLDING_HPP_
