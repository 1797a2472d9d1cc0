#ifndef YBX_SOLUTION_IO_HPP_
#define YBX_SOLUTION_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybx/enumeration.hpp"
#include "ybx/folding.hpp"
#include "ybx/garside.hpp"
#include "ybx/parabolic.hpp"
#include "ybx/solution.hpp"

namespace ybx {

using Json = nlohmann::json;

// Solution documents (all indices 1-based):
//   {"kind":"table","n":N,"S":[[[k,l],...],...]}
//   {"kind":"permutations","sigma":[[...],...],"tau":[[...],...]}
//   {"kind":"relations","n":N,"relations":[[[i,j],[k,l]],...]}
//
// Schema problems throw ParseError. A well-formed document whose content is
// not a bijection of X x X (or, for relations, not a solution) throws
// NotASolution.
SolutionTable load_solution(const Json& doc);
SolutionTable load_solution_text(const std::string& text);
SolutionTable load_solution_file(const std::string& path);

/// The table document of s.
Json solution_document(const SolutionTable& s);

Json word_json(const Word& w);
Json set_json(AtomSet s);
Json partition_json(const Partition& p);

/// [{x_ell, x_r, word, balanced}] in x_ell bit order.
Json lattice_dump(const DivisorLattice& lat);

/// {invariant_subsets, parabolics, decomposable, delta_pure, delta_classes,
///  f_orbits, g_orbits, warnings}.
Json analysis_report(const DivisorLattice& lat);

/// {partition, deltas, induced, strong}.
Json folding_json(const DivisorLattice& lat, const FoldingReport& f);

/// Axioms and QYBE check.
Json check_report(const SolutionTable& s);

/// One relation per line, "x1 x2 = x3 x4".
std::string relation_text(const RelationSet& r);

/// One canonical solution document per line, then {n, raw_count, iso_count}.
void write_census(std::ostream& out, const SolutionCensus& census);

/// Solution documents from a census file; the summary line is skipped.
std::vector<SolutionTable> read_census(std::istream& in);

/// "1,2,3,4|5" -> {{0,1,2,3},{4}}. Throws ParseError on bad syntax,
/// out-of-range atoms or repeated atoms.
Partition parse_partition(const std::string& spec, int n);

/// Renders a JSON value as indented plain text.
std::string render_text(const Json& j);

}  // namespace ybx

#endif  // YBX_SOLUTION_IO_HPP_
