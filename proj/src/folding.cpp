#include "ybx/folding.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

namespace {

std::string set_str(AtomSet s) {
  std::string out = "{";
  for (Atom a : s.atoms()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(a + 1);
  }
  return out + "}";
}

AtomSet max_key(const SimpleSet& d) {
  AtomSet m;
  for (AtomSet k : d) m = m | k;
  return m;
}

}  // namespace

GarsideCheck check_garside_generating_set(const DivisorLattice& lat,
                                          const SimpleSet& d) {
  GarsideCheck out;
  if (d.empty()) {
    out.failed = "empty set";
    return out;
  }
  for (AtomSet k : d) {
    if (!k.subset_of(lat.all_atoms())) {
      out.failed = "element outside Div(Delta)";
      return out;
    }
  }
  auto in = [&](AtomSet k) { return d.count(k) != 0; };

  using Rule = std::function<bool(const Simple&, const Simple&)>;
  const Simple& top = lat.by_left(max_key(d));
  const std::vector<std::pair<std::string, Rule>> rules = {
      {"left join",
       [&](const Simple& x, const Simple& y) { return in(lat.join(x, y).x_ell); }},
      {"left meet",
       [&](const Simple& x, const Simple& y) { return in(lat.meet(x, y).x_ell); }},
      {"right join",
       [&](const Simple& x, const Simple& y) {
         return in(lat.right_join(x, y).x_ell);
       }},
      {"right meet",
       [&](const Simple& x, const Simple& y) {
         return in(lat.right_meet(x, y).x_ell);
       }},
      {"right complement",
       [&](const Simple& x, const Simple& y) {
         return x.x_ell == y.x_ell || in(lat.right_complement(x, y).x_ell);
       }},
      {"left complement",
       [&](const Simple& x, const Simple& y) {
         return x.x_ell == y.x_ell || in(lat.left_complement(x, y).x_ell);
       }},
      {"left gcd of product",
       [&](const Simple& x, const Simple& y) {
         return in(lat.left_gcd(concat(x.word, y.word), top).x_ell);
       }},
      {"right gcd of product",
       [&](const Simple& x, const Simple& y) {
         return in(lat.right_gcd(concat(x.word, y.word), top).x_ell);
       }},
  };
  for (const auto& [name, rule] : rules) {
    for (AtomSet a : d) {
      for (AtomSet b : d) {
        if (!rule(lat.by_left(a), lat.by_left(b))) {
          out.failed = name;
          out.witness = {a, b};
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

bool is_garside_generating_set(const DivisorLattice& lat, const SimpleSet& d) {
  return check_garside_generating_set(lat, d).ok;
}

SimpleSet garside_closure(const DivisorLattice& lat, SimpleSet seed) {
  SimpleSet d = std::move(seed);
  d.insert(lat.identity().x_ell);
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<AtomSet> snapshot(d.begin(), d.end());
    const Simple& top = lat.by_left(max_key(d));
    auto add = [&](const Simple& s) {
      if (d.insert(s.x_ell).second) changed = true;
    };
    for (AtomSet a : snapshot) {
      for (AtomSet b : snapshot) {
        const Simple& x = lat.by_left(a);
        const Simple& y = lat.by_left(b);
        add(lat.join(x, y));
        add(lat.meet(x, y));
        add(lat.right_join(x, y));
        add(lat.right_meet(x, y));
        if (a != b) {
          add(lat.right_complement(x, y));
          add(lat.left_complement(x, y));
        }
        const Word xy = concat(x.word, y.word);
        add(lat.left_gcd(xy, top));
        add(lat.right_gcd(xy, top));
      }
    }
  }
  return d;
}

SimpleSet minimal_elements(const SimpleSet& d) {
  SimpleSet out;
  for (AtomSet a : d) {
    if (a.empty()) continue;
    bool minimal = true;
    for (AtomSet b : d) {
      if (!b.empty() && b != a && b.subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(a);
  }
  return out;
}

std::optional<GarsideSubgroup> atomic_garside_subgroup(const DivisorLattice& lat,
                                                       AtomSet xi) {
  if (xi.empty()) throw PreconditionError("block must be nonempty");
  SimpleSet seed;
  for (Atom a : xi.atoms()) seed.insert(AtomSet::single(a));
  SimpleSet d = garside_closure(lat, std::move(seed));
  if (!is_garside_generating_set(lat, d)) return std::nullopt;
  SimpleSet expected;
  for (Atom a : xi.atoms()) expected.insert(AtomSet::single(a));
  if (minimal_elements(d) != expected) return std::nullopt;
  // The maximum is the join of everything; it must itself lie in d.
  const AtomSet top = max_key(d);
  if (d.count(top) == 0) return std::nullopt;
  return GarsideSubgroup{std::move(d), top};
}

SolutionTable induced_solution(const DivisorLattice& lat,
                               const std::vector<AtomSet>& xh) {
  const int k = static_cast<int>(xh.size());
  if (k == 0) throw PreconditionError("induced_solution needs a nonempty set");
  std::map<AtomSet, int> index;
  for (int i = 0; i < k; ++i) {
    if (xh[i].empty() || !index.emplace(xh[i], i).second) {
      throw PreconditionError("induced_solution needs distinct non-identity "
                              "simples");
    }
  }
  auto locate = [&](const Simple& s) {
    auto it = index.find(s.x_ell);
    if (it == index.end()) {
      throw PreconditionError("set is not closed under right complement");
    }
    return it->second;
  };
  std::vector<AtomPair> cells(k * k, {-1, -1});
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const Simple& x = lat.by_left(xh[i]);
      const Simple& z = lat.by_left(xh[j]);
      const int y = locate(lat.right_complement(x, z));
      const int t = locate(lat.right_complement(z, x));
      AtomPair& c = cells[i * k + y];
      if (c.first >= 0) {
        throw TheoremViolation("two complements of one element coincide");
      }
      c = {j, t};
    }
  }
  for (int i = 0; i < k; ++i) {
    int leftover = 0;
    for (int y = 0; y < k; ++y) {
      if (cells[i * k + y].first < 0) {
        cells[i * k + y] = {i, y};
        ++leftover;
      }
    }
    if (leftover != 1) {
      throw TheoremViolation("induced table row has " +
                             std::to_string(leftover) + " fixed pairs");
    }
  }
  try {
    SolutionTable s(k, std::move(cells));
    if (!is_solution(s)) {
      throw TheoremViolation("induced table is not a non-degenerate symmetric "
                             "solution");
    }
    return s;
  } catch (const NotASolution& e) {
    throw TheoremViolation(std::string("induced table: ") + e.what());
  }
}

SolutionTable restriction_solution(const DivisorLattice& lat, AtomSet xh) {
  auto sub = atomic_garside_subgroup(lat, xh);
  if (!sub) {
    throw PreconditionError(set_str(xh) +
                            " is not the atom set of an atomic Garside "
                            "subgroup");
  }
  const SolutionTable& s = lat.solution();
  const auto atoms = xh.atoms();
  const int k = static_cast<int>(atoms.size());
  std::vector<Atom> index(s.size(), -1);
  for (int i = 0; i < k; ++i) index[atoms[i]] = i;
  std::vector<AtomPair> cells(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto [z, t] = s(atoms[i], atoms[j]);
      if (xh.contains(z) && xh.contains(t)) {
        cells[i * k + j] = {index[z], index[t]};
      } else {
        cells[i * k + j] = {i, j};
      }
    }
  }
  SolutionTable direct(k, std::move(cells));

  std::vector<AtomSet> singletons;
  for (Atom a : atoms) singletons.push_back(AtomSet::single(a));
  if (induced_solution(lat, singletons) != direct) {
    throw TheoremViolation("restriction disagrees with the induced solution");
  }
  if (is_invariant(s, xh) && restrict(s, xh) != direct) {
    throw TheoremViolation("restriction disagrees with restrict()");
  }
  return direct;
}

namespace {

bool lex_partition_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a[i].atoms(), y = b[i].atoms();
    if (x != y) return x < y;
  }
  return false;
}

// Words over {0..k-1} of length 1..depth.
std::vector<Word> all_words(int k, int depth) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Atom a = 0; a < k; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<AtomSet> nf_keys(const DivisorLattice& lat, const Word& w) {
  std::vector<AtomSet> out;
  for (const Simple* s : lat.normal_form(w)) out.push_back(s->x_ell);
  return out;
}

// The induced structure must embed into M: its Garside element maps to Delta,
// its relations hold in M, and words up to `depth` are identified in the
// induced monoid exactly when their images are identified in M.
void certify_embedding(const DivisorLattice& lat,
                       const std::vector<AtomSet>& deltas,
                       const SolutionTable& induced, int depth) {
  const ComplementSystem& c = lat.complements();
  auto image = [&](const Word& w) {
    Word out;
    for (Atom a : w) out = concat(out, lat.by_left(deltas[a]).word);
    return out;
  };
  DivisorLattice sub(induced);
  if (!words_equal(image(sub.delta().word), lat.delta().word, c)) {
    throw TheoremViolation("Garside element of the folding is not Delta");
  }
  const int k = induced.size();
  for (Atom i = 0; i < k; ++i) {
    for (Atom j = 0; j < k; ++j) {
      auto [p, q] = induced(i, j);
      if (!words_equal(image({i, j}), image({p, q}), c)) {
        throw TheoremViolation("induced relation does not hold in M");
      }
    }
  }
  std::map<std::vector<AtomSet>, std::vector<AtomSet>> forward, backward;
  for (const Word& w : all_words(k, depth)) {
    auto a = nf_keys(sub, w);
    auto b = nf_keys(lat, image(w));
    auto [fi, fnew] = forward.emplace(a, b);
    auto [bi, bnew] = backward.emplace(b, a);
    if (fi->second != b || bi->second != a) {
      throw TheoremViolation("folding morphism is not injective on short "
                             "words");
    }
  }
}

class FoldingSearch {
 public:
  FoldingSearch(const DivisorLattice& lat, const FoldingOptions& opts)
      : lat_(lat), opts_(opts) {}

  const std::optional<GarsideSubgroup>& block(AtomSet b) {
    auto it = blocks_.find(b);
    if (it == blocks_.end()) {
      it = blocks_.emplace(b, atomic_garside_subgroup(lat_, b)).first;
    }
    return it->second;
  }

  bool parabolic(AtomSet b) {
    auto it = parabolic_.find(b);
    if (it == parabolic_.end()) {
      it = parabolic_.emplace(b, is_standard_parabolic(lat_, b).has_value())
               .first;
    }
    return it->second;
  }

  FoldingVerdict evaluate(const Partition& p) {
    FoldingVerdict v;
    const int n = lat_.rank();
    AtomSet seen;
    for (AtomSet b : p) {
      if (b.empty() || !(b & seen).empty()) {
        v.failure = "blocks must be nonempty and disjoint";
        return v;
      }
      seen = seen | b;
    }
    const int k = static_cast<int>(p.size());
    if (seen != lat_.all_atoms() || k <= 1 || k >= n) {
      v.failure = "not a proper partition of X";
      return v;
    }

    std::vector<AtomSet> deltas;
    for (int i = 0; i < k; ++i) {
      const auto& sub = block(p[i]);
      if (!sub) {
        v.failure = "block " + set_str(p[i]) +
                    " does not generate an atomic Garside subgroup";
        return v;
      }
      deltas.push_back(sub->delta);
    }

    SimpleSet fold(deltas.begin(), deltas.end());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        const Simple& x = lat_.by_left(deltas[i]);
        const Simple& z = lat_.by_left(deltas[j]);
        if (fold.count(lat_.right_complement(x, z).x_ell) == 0) {
          v.failure = "block deltas are not closed under right complement";
          return v;
        }
        if (fold.count(lat_.left_complement(x, z).x_ell) == 0) {
          v.failure = "block deltas are not closed under left complement";
          return v;
        }
      }
    }
    SimpleSet closure = garside_closure(lat_, fold);
    auto check = check_garside_generating_set(lat_, closure);
    if (!check.ok) {
      v.failure = "block deltas do not generate a Garside subgroup (" +
                  check.failed + ")";
      return v;
    }
    if (minimal_elements(closure) != fold) {
      v.failure = "block deltas are not the atoms of their Garside subgroup";
      return v;
    }

    FoldingReport rep;
    rep.partition = p;
    rep.block_deltas = deltas;
    rep.induced = induced_solution(lat_, deltas);
    certify_embedding(lat_, deltas, rep.induced, opts_.depth);
    rep.strong = std::all_of(p.begin(), p.end(),
                             [&](AtomSet b) { return parabolic(b); });
    rep.block_subgroup_atomic.assign(k, true);
    v.report = std::move(rep);
    return v;
  }

 private:
  const DivisorLattice& lat_;
  FoldingOptions opts_;
  std::map<AtomSet, std::optional<GarsideSubgroup>> blocks_;
  std::map<AtomSet, bool> parabolic_;
};

}  // namespace

FoldingVerdict evaluate_folding(const DivisorLattice& lat,
                                const Partition& partition,
                                const FoldingOptions& opts) {
  FoldingSearch search(lat, opts);
  return search.evaluate(partition);
}

std::vector<Partition> proper_partitions(int n) {
  std::vector<Partition> out;
  if (n < 3) return out;
  std::vector<int> rgs(n, 0);
  // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      if (blocks > 1 && blocks < n) {
        Partition p(blocks);
        for (Atom a = 0; a < n; ++a) p[rgs[a]].insert(a);
        out.push_back(std::move(p));
      }
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), lex_partition_less);
  return out;
}

std::vector<FoldingReport> find_foldings(
    const DivisorLattice& lat,
    const std::optional<std::vector<Partition>>& partitions,
    const FoldingOptions& opts) {
  constexpr int kMaxExhaustive = 10;
  if (!partitions && lat.rank() > kMaxExhaustive) {
    throw PreconditionError("exhaustive folding search supports n <= " +
                            std::to_string(kMaxExhaustive));
  }
  FoldingSearch search(lat, opts);
  std::vector<FoldingReport> out;
  const auto candidates = partitions ? *partitions : proper_partitions(lat.rank());
  for (const Partition& p : candidates) {
    auto v = search.evaluate(p);
    if (v.report) out.push_back(std::move(*v.report));
  }
  return out;
}

std::vector<FoldingReport> find_strong_foldings(const DivisorLattice& lat,
                                                const FoldingOptions& opts) {
  FoldingSearch search(lat, opts);
  std::vector<AtomSet> blocks;
  for (const auto& d : standard_parabolics(lat)) blocks.push_back(d.support);

  // Partitions of X into standard parabolic supports: the block holding the
  // smallest uncovered atom is chosen first.
  std::vector<Partition> candidates;
  Partition cur;
  const int n = lat.rank();
  std::function<void(AtomSet)> rec = [&](AtomSet covered) {
    if (covered == lat.all_atoms()) {
      const int k = static_cast<int>(cur.size());
      if (k > 1 && k < n) candidates.push_back(cur);
      return;
    }
    const Atom first = (lat.all_atoms() - covered).min();
    for (AtomSet b : blocks) {
      if (b.contains(first) && (b & covered).empty()) {
        cur.push_back(b);
        rec(covered | b);
        cur.pop_back();
      }
    }
  };
  rec(AtomSet{});
  std::sort(candidates.begin(), candidates.end(), lex_partition_less);

  std::vector<FoldingReport> out;
  for (const Partition& p : candidates) {
    auto v = search.evaluate(p);
    if (v.report && v.report->strong) out.push_back(std::move(*v.report));
  }
  return out;
}

FoldingReport decomposition_folding(const DivisorLattice& lat, int i,
                                    const FoldingOptions& opts) {
  const SolutionTable& s = lat.solution();
  if (lat.rank() < 3) {
    throw PreconditionError("n <= 2 admits no proper partition");
  }
  const Partition orbits = f_orbits(s);
  if (orbits.size() < 2) {
    throw PreconditionError("decomposition_folding needs a decomposable "
                            "solution");
  }
  if (i < 0 || i >= static_cast<int>(orbits.size())) {
    throw PreconditionError("orbit index out of range");
  }
  const AtomSet y = orbits[i];
  const AtomSet z = lat.all_atoms() - y;
  if (!is_invariant(s, y) || !is_invariant(s, z)) {
    throw PreconditionError("bipartition " + set_str(y) + " | " + set_str(z) +
                            " is not invariant on both sides");
  }
  auto v = evaluate_folding(lat, {y, z}, opts);
  if (!v.report) {
    throw TheoremViolation("invariant bipartition is not a folding: " +
                           v.failure);
  }
  const Word& dy = lat.by_left(y).word;
  const Word& dz = lat.by_left(z).word;
  const ComplementSystem& c = lat.complements();
  if (!words_equal(concat(dy, dz), lat.delta().word, c) ||
      !words_equal(concat(dz, dy), lat.delta().word, c)) {
    throw TheoremViolation("Delta_i Delta_i^ != Delta_i^ Delta_i != Delta");
  }
  if (!v.report->strong || !isomorphic(v.report->induced, trivial_solution(2))) {
    throw TheoremViolation("decomposition folding is not a strong trivial "
                           "folding");
  }
  return std::move(*v.report);
}

namespace {

// D = {Delta_1^e1 ... Delta_k^ek} for the invariant blocks of a decomposable
// solution, with its meet, join and product-gcd identities.
bool product_lattice_holds(const DivisorLattice& lat, const Partition& blocks) {
  const ComplementSystem& c = lat.complements();
  const int k = static_cast<int>(blocks.size());
  const std::uint32_t count = std::uint32_t{1} << k;
  auto union_of = [&](std::uint32_t eps) {
    AtomSet u;
    for (int i = 0; i < k; ++i) {
      if ((eps >> i) & 1u) u = u | blocks[i];
    }
    return u;
  };
  auto product = [&](std::uint32_t eps) {
    Word w;
    for (int i = 0; i < k; ++i) {
      if ((eps >> i) & 1u) w = concat(w, lat.by_left(blocks[i]).word);
    }
    return w;
  };
  SimpleSet d;
  for (std::uint32_t e = 0; e < count; ++e) {
    if (!words_equal(product(e), lat.by_left(union_of(e)).word, c)) {
      return false;
    }
    d.insert(union_of(e));
  }
  if (!is_garside_generating_set(lat, d)) return false;
  for (std::uint32_t e = 0; e < count; ++e) {
    for (std::uint32_t f = 0; f < count; ++f) {
      const Simple& x = lat.by_left(union_of(e));
      const Simple& y = lat.by_left(union_of(f));
      if (!words_equal(lat.meet(x, y).word, product(e & f), c) ||
          !words_equal(lat.join(x, y).word, product(e | f), c) ||
          !words_equal(lat.left_gcd(concat(product(e), product(f)),
                                    lat.delta())
                           .word,
                       product(e | f), c)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TheoremBReport theorem_B_report(const DivisorLattice& lat,
                                const FoldingOptions& opts) {
  TheoremBReport rep;
  rep.applicable = lat.rank() >= 3;
  rep.decomposable = is_decomposable(lat.solution());
  const SolutionTable trivial2 = trivial_solution(2);
  for (const auto& f : find_strong_foldings(lat, opts)) {
    if (f.partition.size() == 2 && isomorphic(f.induced, trivial2)) {
      rep.has_trivial_two_block_strong_folding = true;
      break;
    }
  }
  if (rep.decomposable) {
    rep.product_lattice_ok = product_lattice_holds(lat, f_orbits(lat.solution()));
  }
  return rep;
}

bool verify_theorem_B(const DivisorLattice& lat, const FoldingOptions& opts) {
  return theorem_B_report(lat, opts).holds();
}

}  // namespace ybx
