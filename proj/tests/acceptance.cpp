// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "ybx/enumeration.hpp"
#include "ybx/folding.hpp"
#include "ybx/parabolic.hpp"
#include "ybx/solution_io.hpp"

using namespace ybx;
using namespace ybx::test;

namespace {

using Clock = std::chrono::steady_clock;

// Collects the failed sub-checks of one criterion.
struct Gate {
  std::vector<std::string> failed;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

bool report(const std::string& id, const std::string& title, double limit_s,
            const std::function<void(Gate&)>& body) {
  Gate g;
  auto t0 = Clock::now();
  try {
    body(g);
  } catch (const std::exception& e) {
    g.failed.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0) {
    std::ostringstream lim;
    lim << "runtime " << secs << " s >= " << limit_s << " s";
    g.expect(secs < limit_s, lim.str());
  }
  bool ok = g.failed.empty();
  std::cout << id << " " << (ok ? "PASS" : "FAIL") << " " << title << " ("
            << secs << " s)";
  if (!g.note.empty()) std::cout << " [" << g.note << "]";
  for (const auto& f : g.failed) std::cout << "\n    failed: " << f;
  std::cout << std::endl;
  return ok;
}

Word rel_word(int a, int b) { return w({a, b}); }

// A relation as an unordered pair of words.
std::pair<Word, Word> unordered(Word u, Word v) {
  if (v < u) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

void ac1(Gate& g) {
  SolutionTable s = load_solution_file(fixture("e5.json"));
  g.expect(s == e5(), "fixture matches the permutation description");
  Json rep = check_report(s);
  for (const char* k : {"nondegenerate", "involutive", "braided", "qybe"}) {
    g.expect(rep[k] == true, std::string(k) + " holds");
  }
  g.expect(rep["solution"] == true, "check passes");

  std::set<std::pair<Word, Word>> got;
  for (const Relation& r : presentation_of(s).relations()) {
    Word l{r.lhs[0], r.lhs[1]}, rr{r.rhs[0], r.rhs[1]};
    got.insert(unordered(l, rr));
  }
  const int table[10][4] = {{1, 1, 2, 2}, {1, 2, 3, 4}, {1, 3, 4, 2}, {1, 5, 5, 1},
                            {2, 1, 4, 3}, {2, 4, 3, 1}, {2, 5, 5, 2}, {3, 3, 4, 4},
                            {3, 5, 5, 3}, {4, 5, 5, 4}};
  std::set<std::pair<Word, Word>> want;
  for (const auto& r : table) {
    want.insert(unordered(rel_word(r[0], r[1]), rel_word(r[2], r[3])));
  }
  g.expect(got == want, "presentation equals the 10 relations");
}

void ac2(Gate& g) {
  DivisorLattice lat(e5());
  g.expect(lat.simples().size() == 32, "32 simples");
  g.expect(lat.delta().length() == 5, "Delta has length 5");
  g.expect(words_equal(lat.delta().word, w({1, 1, 1, 1, 5}), lat.complements()),
           "Delta = x1^4 x5");
  const Simple& cube = lat.by_left(set({1, 2, 3}));
  g.expect(words_equal(cube.word, w({1, 1, 1}), lat.complements()),
           "simple {1,2,3} is x1^3");
  g.expect(cube.x_r == set({1, 2, 3}), "X_r of x1^3 is {1,2,3}");
  g.expect(!lat.is_balanced(cube), "x1^3 is not balanced");
  auto wit = lat.balance_witness(cube);
  g.expect(wit && words_equal(*wit, w({1, 2}), lat.complements()), "witness x1 x2");
}

void ac3(Gate& g) {
  SolutionTable s = e5();
  DivisorLattice lat(s);
  std::vector<AtomSet> want{set({5}), set({1, 2, 3, 4}), set({1, 2, 3, 4, 5})};
  g.expect(invariant_subsets(s) == want, "invariant subsets {5}, {1,2,3,4}, X");
  std::vector<AtomSet> supp;
  for (const auto& p : standard_parabolics(lat)) supp.push_back(p.support);
  g.expect(supp == want, "standard parabolic supports coincide");
  g.expect(verify_theorem_A(lat), "verify_theorem_A");
}

void ac4(Gate& g) {
  SolutionTable s = e5();
  DivisorLattice lat(s);
  g.expect(f_orbits(s) == Partition{set({1, 2, 3, 4}), set({5})}, "f-orbits");
  g.expect(is_decomposable(s), "decomposable");
  DeltaClassReport d = delta_classes(lat);
  g.expect(d.all_ok(), "Delta-class flags");
  g.expect(d.classes.size() == 2, "two Delta classes");
  if (d.class_deltas.size() == 2) {
    Word prod = concat(lat.by_left(d.class_deltas[0]).word,
                       lat.by_left(d.class_deltas[1]).word);
    g.expect(words_equal(prod, lat.delta().word, lat.complements()),
             "Delta = Delta_1 Delta_2");
  }
  bool found = false;
  for (const auto& f : find_strong_foldings(lat)) {
    if (f.partition.size() == 2 && isomorphic(f.induced, trivial_solution(2))) {
      found = true;
    }
  }
  g.expect(found, "strong two-block folding with trivial induced solution");
}

void ac5(Gate& g) {
  SolutionTable s = load_solution_file(fixture("e4.json"));
  g.expect(s == e4(), "fixture matches the relations");
  DivisorLattice lat(s);
  auto par = standard_parabolics(lat);
  g.expect(par.size() == 1 && par[0].support == lat.all_atoms(),
           "no proper standard parabolic");
  g.expect(is_delta_pure(lat), "Delta-pure");
  g.expect(!is_decomposable(s), "indecomposable");
  auto fs = find_foldings(lat);
  bool found = false;
  for (const auto& f : fs) {
    if (f.partition != Partition{set({1, 2}), set({3, 4})}) continue;
    found = true;
    RelationSet r = presentation_of(f.induced);
    g.expect(r.relations().size() == 1 &&
                 r.relations()[0].lhs[0] == r.relations()[0].lhs[1] &&
                 r.relations()[0].rhs[0] == r.relations()[0].rhs[1],
             "induced presentation is x^2 = y^2");
    g.expect(!f.strong, "folding is not strong");
  }
  g.expect(found, "{1,2}|{3,4} is a folding");
  g.expect(verify_theorem_B(lat), "verify_theorem_B");
}

void ac6(Gate& g) {
  int classes = 0, skipped = 0;
  std::string reason;
  for (int n = 1; n <= kMaxCensusN; ++n) {
    SolutionCensus c = enumerate_solutions(n, true);
    if (n <= 3) {
      std::set<SolutionTable> a, b;
      for (const auto& s : solutions_by_pair_bijections(n)) a.insert(s);
      for (const auto& s : enumerate_solutions(n, false).classes) b.insert(s);
      g.expect(a == b, "oracles agree for n = " + std::to_string(n));
    }
    for (const auto& s : c.classes) {
      ++classes;
      PropertyReport r = run_property_suite(s);
      for (const auto& f : r.failures()) {
        g.failed.push_back("n=" + std::to_string(n) + " " + f.name + ": " + f.witness);
      }
      for (const auto& k : r.skipped()) {
        ++skipped;
        reason = k.witness;
      }
    }
  }
  g.note = std::to_string(classes) + " classes, " + std::to_string(skipped) +
           " inapplicable checks skipped (" + reason + ")";
}

void ac7(Gate& g) {
  for (const auto& s : {e5(), e4()}) {
    DivisorLattice lat(s);
    const ComplementSystem& c = lat.complements();
    auto divs = brute_left_divisors(lat.delta().word, c);
    g.expect(divs.size() == lat.simples().size(),
             "divisor count on n = " + std::to_string(s.size()));
    for (const Word& d : divs) {
      g.expect(words_equal(lat.by_left(lat.head(d).x_ell).word, d, c),
               "brute divisor is a simple");
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<Atom> atom(0, s.size() - 1);
    for (int i = 0; i < 100; ++i) {
      Word u(len(rng));
      for (Atom& a : u) a = atom(rng);
      g.expect(words_equal(brute_head(lat, u), lat.head(u).word, c), "head");
      auto brute = brute_normal_form(lat, u);
      auto fast = lat.normal_form(u);
      bool same = brute.size() == fast.size();
      for (std::size_t k = 0; same && k < brute.size(); ++k) {
        same = words_equal(brute[k], fast[k]->word, c);
      }
      g.expect(same, "normal form");
    }
  }
}

void ac8(Gate& g) {
  int checked = 0;
  for (int n = 2; n <= kMaxCensusN; ++n) {
    for (const auto& s : enumerate_solutions(n, true).classes) {
      if (!is_square_free(s)) continue;
      ++checked;
      g.expect(is_decomposable(s), "square-free class is decomposable");
    }
  }
  g.note = std::to_string(checked) + " square-free classes";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report("AC1", "E5 axioms and presentation", 1.0, ac1);
  ok &= report("AC2", "E5 divisor lattice", 1.0, ac2);
  ok &= report("AC3", "E5 invariant subsets and parabolics", 0, ac3);
  ok &= report("AC4", "E5 decomposition and folding", 0, ac4);
  ok &= report("AC5", "E4 foldings", 1.0, ac5);
  ok &= report("AC6", "census n = 1..4 and property suite", 300.0, ac6);
  ok &= report("AC7", "brute-force oracles on E5 and E4", 0, ac7);
  ok &= report("AC8", "square-free implies decomposable", 0, ac8);
  return ok ? 0 : 1;
}
