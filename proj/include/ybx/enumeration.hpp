#ifndef YBX_ENUMERATION_HPP_
#define YBX_ENUMERATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ybx/folding.hpp"
#include "ybx/garside.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct SolutionCensus {
  int n = 0;
  /// Canonical representatives when enumerated up to isomorphism, otherwise
  /// every solution in search order.
  std::vector<SolutionTable> classes;
  std::uint64_t raw_count = 0;
  std::uint64_t iso_count = 0;
};

/// Largest n for the exhaustive search.
inline constexpr int kMaxCensusN = 4;

/// All non-degenerate symmetric solutions on n points, by searching families
/// (g_x) in Sym(n)^n with f_y(x) = g_{g_x(y)}^{-1}(x). The search is split by
/// g_1 across `jobs` threads; the output does not depend on `jobs`.
SolutionCensus enumerate_solutions(int n, bool up_to_iso, int jobs = 1);

/// Independent oracle: every bijection of X x X filtered by the axioms.
/// n <= 3.
std::vector<SolutionTable> solutions_by_pair_bijections(int n);

/// Lexicographically smallest relabeling of s (row-major cells).
SolutionTable canonical_form(const SolutionTable& s);

/// Solutions on n points with every g_x a power of one random permutation
/// sigma, for spot checks where exhaustive search is out of reach.
/// Deterministic in `seed`; duplicates are removed.
std::vector<SolutionTable> random_solutions(int n, int attempts,
                                            std::uint64_t seed);

/// One representative per left divisor class of u, found by extending
/// prefixes one atom at a time and testing divisibility by reversing.
/// Sorted by length, then lexicographically. |u| <= 8.
std::vector<Word> brute_left_divisors(const Word& u, const ComplementSystem& c);

/// Longest common left divisor of w and Delta, from brute_left_divisors.
Word brute_head(const DivisorLattice& lat, const Word& w);

/// Greedy normal form built from brute_head.
std::vector<Word> brute_normal_form(const DivisorLattice& lat, const Word& w);

struct PropertyResult {
  std::string name;
  bool passed = false;
  /// Not run because the statement does not apply; `witness` says why.
  bool skipped = false;
  std::string witness;
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  /// Every entry passed or was skipped.
  bool all_passed() const;
  std::vector<PropertyResult> failures() const;
  std::vector<PropertyResult> skipped() const;
};

struct PropertyOptions {
  FoldingOptions folding;
  /// Random words checked against the brute head / normal form.
  int random_words = 20;
  int max_word_length = 6;
  std::uint64_t seed = 1;
};

/// Runs every cross-module invariant on s and collects the outcomes.
PropertyReport run_property_suite(const SolutionTable& s,
                                  const PropertyOptions& opts = {});

}  // namespace ybx

#endif  // YBX_ENUMERATION_HPP_
