#include "ybx/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ybx/error.hpp"
#include "ybx/parabolic.hpp"

namespace ybx {

namespace {

using Perm = std::vector<Atom>;

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm invert(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Atom>(i);
  return q;
}

// Builds S from the family g and the forced f, or nullopt if the result is
// not a non-degenerate symmetric solution.
std::optional<SolutionTable> from_g_family(int n,
                                           const std::vector<const Perm*>& g,
                                           const std::vector<const Perm*>& ginv) {
  std::vector<Atom> f(n * n);  // f[y * n + x] = f_y(x)
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) f[y * n + x] = (*ginv[(*g[x])[y]])[x];
  }
  for (Atom y = 0; y < n; ++y) {
    std::uint32_t seen = 0;
    for (Atom x = 0; x < n; ++x) seen |= std::uint32_t{1} << f[y * n + x];
    if (seen != (std::uint32_t{1} << n) - 1) return std::nullopt;
  }
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) {
      const Atom a = (*g[x])[y], b = f[y * n + x];
      if (f[b * n + a] != y) return std::nullopt;
    }
  }
  std::vector<AtomPair> cells(n * n);
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) cells[x * n + y] = {(*g[x])[y], f[y * n + x]};
  }
  SolutionTable s(n, std::move(cells));
  if (!is_braided(s)) return std::nullopt;
  return s;
}

std::vector<SolutionTable> search_with_first(int n, const std::vector<Perm>& perms,
                                             const std::vector<Perm>& invs,
                                             std::size_t first) {
  std::vector<SolutionTable> out;
  std::vector<const Perm*> g(n), gi(n);
  g[0] = &perms[first];
  gi[0] = &invs[first];
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      if (auto s = from_g_family(n, g, gi)) out.push_back(std::move(*s));
      return;
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      g[x] = &perms[i];
      gi[x] = &invs[i];
      rec(x + 1);
    }
  };
  rec(1);
  return out;
}

}  // namespace

SolutionCensus enumerate_solutions(int n, bool up_to_iso, int jobs) {
  if (n < 1 || n > kMaxCensusN) {
    throw PreconditionError("enumerate_solutions supports 1 <= n <= " +
                            std::to_string(kMaxCensusN));
  }
  const auto perms = all_perms(n);
  std::vector<Perm> invs;
  for (const Perm& p : perms) invs.push_back(invert(p));

  std::vector<std::vector<SolutionTable>> parts(perms.size());
  const int workers = std::max(1, std::min<int>(jobs, perms.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      parts[i] = search_with_first(n, perms, invs, i);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < perms.size(); i += workers) {
          parts[i] = search_with_first(n, perms, invs, i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SolutionCensus census;
  census.n = n;
  std::set<SolutionTable> canon;
  for (auto& part : parts) {
    for (auto& s : part) {
      if (!is_solution(s)) {
        throw TheoremViolation("search produced a table failing the axioms");
      }
      ++census.raw_count;
      canon.insert(canonical_form(s));
      if (!up_to_iso) census.classes.push_back(std::move(s));
    }
  }
  census.iso_count = canon.size();
  if (up_to_iso) census.classes.assign(canon.begin(), canon.end());
  return census;
}

std::vector<SolutionTable> solutions_by_pair_bijections(int n) {
  if (n < 1 || n > 3) {
    throw PreconditionError("pair-bijection search supports 1 <= n <= 3");
  }
  const int m = n * n;
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<SolutionTable> out;
  do {
    std::vector<AtomPair> cells(m);
    for (int k = 0; k < m; ++k) cells[k] = {img[k] / n, img[k] % n};
    SolutionTable s(n, std::move(cells));
    if (is_nondegenerate(s) && is_involutive(s) && is_braided(s)) {
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

SolutionTable canonical_form(const SolutionTable& s) {
  const int n = s.size();
  std::vector<Atom> q(n);  // new label i stands for old label q[i]
  std::iota(q.begin(), q.end(), 0);
  std::vector<AtomPair> best = s.cells();
  std::vector<AtomPair> cur(n * n);
  std::vector<Atom> p(n);
  do {
    for (Atom i = 0; i < n; ++i) p[q[i]] = i;
    bool smaller = false;
    bool abort = false;
    for (int k = 0; k < n * n && !abort; ++k) {
      auto [a, b] = s(q[k / n], q[k % n]);
      cur[k] = {p[a], p[b]};
      if (!smaller) {
        if (cur[k] < best[k]) {
          smaller = true;
        } else if (best[k] < cur[k]) {
          abort = true;
        }
      }
    }
    if (smaller) best = cur;
  } while (std::next_permutation(q.begin(), q.end()));
  return SolutionTable(n, std::move(best));
}

std::vector<SolutionTable> random_solutions(int n, int attempts,
                                            std::uint64_t seed) {
  if (n < 1 || n > kMaxAtoms) {
    throw PreconditionError("random_solutions supports 1 <= n <= " +
                            std::to_string(kMaxAtoms));
  }
  std::mt19937_64 rng(seed);
  std::set<SolutionTable> found;
  for (int t = 0; t < attempts; ++t) {
    Perm sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Perm> powers{Perm(n)};
    std::iota(powers[0].begin(), powers[0].end(), 0);
    for (;;) {
      Perm next(n);
      for (Atom x = 0; x < n; ++x) next[x] = sigma[powers.back()[x]];
      if (next == powers[0]) break;
      powers.push_back(std::move(next));
    }
    std::vector<Perm> invs;
    for (const Perm& p : powers) invs.push_back(invert(p));
    std::uniform_int_distribution<std::size_t> pick(0, powers.size() - 1);
    std::vector<const Perm*> g(n), gi(n);
    for (Atom x = 0; x < n; ++x) {
      const std::size_t k = pick(rng);
      g[x] = &powers[k];
      gi[x] = &invs[k];
    }
    if (auto s = from_g_family(n, g, gi)) found.insert(std::move(*s));
  }
  return {found.begin(), found.end()};
}

std::vector<Word> brute_left_divisors(const Word& u, const ComplementSystem& c) {
  if (u.size() > 8) {
    throw PreconditionError("brute_left_divisors supports |u| <= 8");
  }
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= u.size(); ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Atom a = 0; a < c.size(); ++a) {
        Word v = w;
        v.push_back(a);
        if (!left_divides(v, u, c)) continue;
        const bool known = std::any_of(next.begin(), next.end(), [&](const Word& x) {
          return words_equal(x, v, c);
        });
        if (!known) next.push_back(std::move(v));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Word brute_head(const DivisorLattice& lat, const Word& w) {
  const ComplementSystem& c = lat.complements();
  Word best;
  for (const Word& d : brute_left_divisors(w, c)) {
    if (d.size() > best.size() && left_divides(d, lat.delta().word, c)) best = d;
  }
  return best;
}

std::vector<Word> brute_normal_form(const DivisorLattice& lat, const Word& w) {
  std::vector<Word> out;
  Word rest = w;
  while (!rest.empty()) {
    Word h = brute_head(lat, rest);
    if (h.empty()) throw TheoremViolation("nonempty word without atom divisor");
    rest = reverse_right(h, rest, lat.complements()).u_comp;
    out.push_back(std::move(h));
  }
  return out;
}

bool PropertyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed || r.skipped; });
}

std::vector<PropertyResult> PropertyReport::failures() const {
  std::vector<PropertyResult> out;
  for (const auto& r : results) {
    if (!r.passed && !r.skipped) out.push_back(r);
  }
  return out;
}

std::vector<PropertyResult> PropertyReport::skipped() const {
  std::vector<PropertyResult> out;
  for (const auto& r : results) {
    if (r.skipped) out.push_back(r);
  }
  return out;
}

namespace {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Atom a : w) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(a + 1);
  }
  return s;
}

std::string set_str(AtomSet s) {
  std::string out = "{";
  for (Atom a : s.atoms()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(a + 1);
  }
  return out + "}";
}

class Suite {
 public:
  // Runs `check`, which returns an empty string on success and a witness
  // otherwise. Exceptions count as failures.
  void run(const std::string& name, const std::function<std::string()>& check) {
    PropertyResult r{name, false, false, ""};
    try {
      r.witness = check();
      r.passed = r.witness.empty();
    } catch (const std::exception& e) {
      r.witness = std::string("exception: ") + e.what();
    }
    report.results.push_back(std::move(r));
  }
  void skip(const std::string& name, const std::string& reason) {
    report.results.push_back({name, false, true, reason});
  }
  PropertyReport report;
};

}  // namespace

PropertyReport run_property_suite(const SolutionTable& s,
                                  const PropertyOptions& opts) {
  Suite suite;
  suite.run("solution axioms", [&]() -> std::string {
    if (!is_nondegenerate(s)) return "degenerate";
    if (!is_involutive(s)) return "not involutive";
    if (!is_braided(s)) return "not braided";
    QybeReport q = check_qybe(s);
    if (!q.qybe || !q.unitary) return "R = flip o S fails QYBE or unitarity";
    return "";
  });
  if (!suite.report.all_passed()) return suite.report;

  const int n = s.size();
  suite.run("presentation round trip", [&]() -> std::string {
    RelationSet r = presentation_of(s);
    if (static_cast<int>(r.relations().size()) != n * (n - 1) / 2) {
      return "relation count " + std::to_string(r.relations().size());
    }
    return solution_from_presentation(r) == s ? "" : "tables differ";
  });
  suite.run("canonical form", [&]() -> std::string {
    SolutionTable c = canonical_form(s);
    if (canonical_form(c) != c) return "not idempotent";
    if (!isomorphic(s, c)) return "no isomorphism to the canonical form";
    return "";
  });

  std::optional<DivisorLattice> lat;
  suite.run("lattice bijections", [&]() -> std::string {
    lat.emplace(s);
    const std::size_t count = std::size_t{1} << n;
    if (lat->simples().size() != count) return "wrong number of simples";
    std::set<std::uint32_t> rights;
    for (const Simple& x : lat->simples()) {
      rights.insert(x.x_r.bits());
      if (&lat->by_right(x.x_r) != &x) return "by_right mismatch at " + set_str(x.x_ell);
    }
    if (rights.size() != count) return "x_r is not a bijection";
    if (lat->delta().length() != n) return "|Delta| != n";
    return "";
  });
  if (!lat) return suite.report;
  const ComplementSystem& c = lat->complements();

  suite.run("mask divisibility agrees with reversing", [&]() -> std::string {
    const auto& all = lat->simples();
    for (const Simple& a : all) {
      // Above 8 atoms only atom-vs-simple pairs are compared.
      if (n > 8 && a.length() > 1) continue;
      for (const Simple& b : all) {
        if (lat->left_divides(a, b) != left_divides(a.word, b.word, c) ||
            lat->right_divides(a, b) != right_divides(a.word, b.word, c)) {
          return word_str(a.word) + " vs " + word_str(b.word);
        }
      }
    }
    return "";
  });
  if (n <= 8) {
    suite.run("brute divisors of Delta", [&]() -> std::string {
      auto divs = brute_left_divisors(lat->delta().word, c);
      if (divs.size() != lat->simples().size()) {
        return std::to_string(divs.size()) + " divisor classes";
      }
      for (const Word& d : divs) {
        if (lat->find_simple(d) == nullptr) return word_str(d) + " is not simple";
      }
      return "";
    });
  }
  suite.run("head and normal form oracle", [&]() -> std::string {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> len(0, opts.max_word_length);
    std::uniform_int_distribution<Atom> atom(0, n - 1);
    for (int t = 0; t < opts.random_words; ++t) {
      Word w(len(rng));
      for (Atom& a : w) a = atom(rng);
      if (!words_equal(lat->head(w).word, brute_head(*lat, w), c)) {
        return "head of " + word_str(w);
      }
      auto nf = lat->normal_form(w);
      auto bf = brute_normal_form(*lat, w);
      if (nf.size() != bf.size()) return "normal form length of " + word_str(w);
      for (std::size_t i = 0; i < nf.size(); ++i) {
        if (!words_equal(nf[i]->word, bf[i], c)) return "normal form of " + word_str(w);
      }
    }
    return "";
  });

  suite.run("invariant subsets closed under intersection", [&]() -> std::string {
    auto inv = invariant_subsets(s);
    std::set<AtomSet> known(inv.begin(), inv.end());
    for (AtomSet a : inv) {
      for (AtomSet b : inv) {
        AtomSet m = a & b;
        if (!m.empty() && known.count(m) == 0) return set_str(a) + " & " + set_str(b);
      }
    }
    return "";
  });
  suite.run("theorem A", [&]() -> std::string {
    return verify_theorem_A(*lat) ? "" : "invariant subsets != parabolic supports";
  });
  constexpr const char* kNoProperPartition =
      "n <= 2: no partition with 1 < k < n exists";
  auto theorem_b = [&]() -> std::string {
    TheoremBReport b = theorem_B_report(*lat, opts.folding);
    if (b.holds()) return "";
    std::ostringstream out;
    out << "decomposable=" << b.decomposable
        << " trivial_strong_folding=" << b.has_trivial_two_block_strong_folding
        << " product_lattice=" << b.product_lattice_ok;
    return out.str();
  };
  if (n < 3) {
    suite.skip("theorem B", kNoProperPartition);
  } else {
    suite.run("theorem B", theorem_b);
  }
  suite.run("delta classes", [&]() -> std::string {
    DeltaClassReport d = delta_classes(*lat);
    if (!d.product_ok) return "product of class deltas != Delta";
    if (!d.commute_ok) return "class deltas do not commute";
    if (!d.gcd_trivial_ok) return "class deltas have nontrivial gcd";
    is_delta_pure(*lat);
    return "";
  });
  if (n < 3) {
    suite.skip("decomposition foldings", kNoProperPartition);
  } else if (is_decomposable(s)) {
    suite.run("decomposition foldings", [&]() -> std::string {
      const Partition orbits = f_orbits(s);
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        decomposition_folding(*lat, static_cast<int>(i), opts.folding);
      }
      return "";
    });
  }
  if (n >= 2 && is_square_free(s)) {
    suite.run("square-free implies decomposable", [&]() -> std::string {
      return is_decomposable(s) ? "" : "indecomposable square-free solution";
    });
  }
  return suite.report;
}

}  // namespace ybx
