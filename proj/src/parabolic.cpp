#include "ybx/parabolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ybx/error.hpp"

namespace ybx {

std::vector<AtomSet> simples_over(const DivisorLattice& lat, AtomSet y) {
  // Every prefix of a word for a simple is a simple, so growing words one
  // letter at a time from the identity reaches all of them.
  std::set<AtomSet> seen{lat.identity().x_ell};
  std::vector<const Simple*> frontier{&lat.identity()};
  while (!frontier.empty()) {
    std::vector<const Simple*> next;
    for (const Simple* p : frontier) {
      for (Atom a : y.atoms()) {
        Word w = p->word;
        w.push_back(a);
        const Simple* q = lat.find_simple(w);
        if (q != nullptr && seen.insert(q->x_ell).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool member_of_MY(const DivisorLattice& lat, const Simple& s, AtomSet y) {
  const bool by_left = s.x_ell.subset_of(y);
  const bool by_right = s.x_r.subset_of(y);
  if (by_left == by_right) return by_left;
  if (is_invariant(lat.solution(), y)) {
    throw TheoremViolation("X_l and X_r membership disagree for an invariant "
                           "subset");
  }
  // Outside invariant subsets the masks say nothing; ask the words.
  auto over = simples_over(lat, y);
  return std::binary_search(over.begin(), over.end(), s.x_ell);
}

namespace {

std::vector<AtomSet> divisor_keys(AtomSet y) {
  std::vector<AtomSet> out;
  const std::uint32_t m = y.bits();
  for (std::uint32_t a = m;; a = (a - 1) & m) {
    out.emplace_back(a);
    if (a == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const Simple& parabolic_delta_of(const DivisorLattice& lat, AtomSet y) {
  if (y.empty() || !is_invariant(lat.solution(), y)) {
    throw PreconditionError("parabolic_delta_of needs an invariant subset");
  }
  const Simple& d = lat.by_left(y);
  if (!lat.is_balanced(d) || lat.support(d) != y || d.x_r != y) {
    throw TheoremViolation("lcm of an invariant subset is not balanced with "
                           "the expected support");
  }
  if (simples_over(lat, y) != divisor_keys(y)) {
    throw TheoremViolation("Div(delta) != Div(Delta) ∩ M_Y for an invariant "
                           "subset");
  }
  return d;
}

std::optional<ParabolicDescriptor> is_standard_parabolic(
    const DivisorLattice& lat, AtomSet y) {
  if (y.empty()) return std::nullopt;
  const Simple& d = lat.by_left(y);
  if (!lat.is_balanced(d)) return std::nullopt;
  if (simples_over(lat, y) != divisor_keys(y)) return std::nullopt;
  return ParabolicDescriptor{lat.support(d), d.word};
}

std::vector<ParabolicDescriptor> standard_parabolics(const DivisorLattice& lat) {
  std::vector<ParabolicDescriptor> out;
  const std::uint32_t top = std::uint32_t{1} << lat.rank();
  for (std::uint32_t m = 1; m < top; ++m) {
    if (auto p = is_standard_parabolic(lat, AtomSet(m))) out.push_back(*p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return subset_order_less(a.support, b.support);
  });
  return out;
}

bool verify_theorem_A(const DivisorLattice& lat) {
  auto inv = invariant_subsets(lat.solution());
  std::vector<AtomSet> par;
  for (const auto& p : standard_parabolics(lat)) par.push_back(p.support);
  try {
    for (AtomSet y : inv) parabolic_delta_of(lat, y);
  } catch (const TheoremViolation&) {
    return false;
  }
  // Both lists use the same deterministic order.
  return inv == par;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <typename Map>
Partition orbits_of(int n, Map image) {
  UnionFind uf(n);
  for (Atom k = 0; k < n; ++k) {
    for (Atom x = 0; x < n; ++x) uf.unite(x, image(k, x));
  }
  std::map<int, AtomSet> blocks;
  for (Atom x = 0; x < n; ++x) blocks[uf.find(x)].insert(x);
  Partition p;
  for (auto& [root, b] : blocks) p.push_back(b);
  return normalize_partition(std::move(p));
}

}  // namespace

Partition f_orbits(const SolutionTable& s) {
  return orbits_of(s.size(), [&](Atom y, Atom x) { return s.f(y, x); });
}

Partition g_orbits(const SolutionTable& s) {
  return orbits_of(s.size(), [&](Atom x, Atom y) { return s.g(x, y); });
}

bool is_decomposable(const SolutionTable& s) {
  const bool by_orbits = f_orbits(s).size() >= 2;
  const AtomSet all = AtomSet::full(s.size());
  bool by_subsets = false;
  for (AtomSet y : invariant_subsets(s)) {
    if (y != all && is_invariant(s, all - y)) {
      by_subsets = true;
      break;
    }
  }
  if (by_orbits != by_subsets) {
    throw TheoremViolation("f-orbit decomposability criterion disagrees with "
                           "invariant bipartitions");
  }
  return by_orbits;
}

DeltaClassReport delta_classes(const DivisorLattice& lat) {
  const ComplementSystem& c = lat.complements();
  const int n = lat.rank();
  std::vector<AtomSet> closure(n);
  for (Atom x = 0; x < n; ++x) {
    AtomSet cl = AtomSet::single(x);
    std::vector<Atom> stack{x};
    while (!stack.empty()) {
      Atom y = stack.back();
      stack.pop_back();
      for (Atom a = 0; a < n; ++a) {
        if (a == y) continue;
        Atom z = c.right(a, y);
        if (!cl.contains(z)) {
          cl.insert(z);
          stack.push_back(z);
        }
      }
    }
    closure[x] = cl;
  }
  std::map<AtomSet, AtomSet> by_closure;
  for (Atom x = 0; x < n; ++x) by_closure[closure[x]].insert(x);

  DeltaClassReport rep;
  for (auto& [cl, members] : by_closure) rep.classes.push_back(members);
  rep.classes = normalize_partition(std::move(rep.classes));
  std::vector<const Simple*> deltas;
  for (AtomSet cls : rep.classes) {
    deltas.push_back(&lat.by_left(cls));
    rep.class_deltas.push_back(cls);
  }

  Word product;
  for (const Simple* d : deltas) product = concat(product, d->word);
  rep.product_ok = words_equal(product, lat.delta().word, c);

  rep.commute_ok = true;
  rep.gcd_trivial_ok = true;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    for (std::size_t j = i + 1; j < deltas.size(); ++j) {
      const Simple& a = *deltas[i];
      const Simple& b = *deltas[j];
      if (!words_equal(concat(a.word, b.word), concat(b.word, a.word), c)) {
        rep.commute_ok = false;
      }
      if (!lat.meet(a, b).x_ell.empty() ||
          !lat.right_meet(a, b).x_ell.empty()) {
        rep.gcd_trivial_ok = false;
      }
    }
  }
  return rep;
}

bool is_delta_pure(const DivisorLattice& lat) {
  const bool pure = delta_classes(lat).classes.size() == 1;
  if (pure == is_decomposable(lat.solution())) {
    throw TheoremViolation("Delta-purity disagrees with indecomposability");
  }
  return pure;
}

}  // namespace ybx
