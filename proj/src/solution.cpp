#include "ybx/solution.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

namespace {

std::string pair_str(Atom x, Atom y) {
  return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
}

using Triple = std::array<Atom, 3>;

}  // namespace

SolutionTable::SolutionTable(int n, std::vector<AtomPair> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ < 1) throw NotASolution("solution size must be positive");
  if (cells_.size() != static_cast<std::size_t>(n_) * n_) {
    throw NotASolution("table must have n*n cells");
  }
  std::vector<int> owner(cells_.size(), -1);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    auto [a, b] = cells_[c];
    if (a < 0 || a >= n_ || b < 0 || b >= n_) {
      throw NotASolution("table cell " +
                         pair_str(static_cast<Atom>(c / n_),
                                  static_cast<Atom>(c % n_)) +
                         " is out of range");
    }
    int& o = owner[a * n_ + b];
    if (o >= 0) {
      throw NotASolution(
          "not a bijection on pairs: " + pair_str(a, b) + " is the image of " +
          pair_str(o / n_, o % n_) + " and of " +
          pair_str(static_cast<Atom>(c / n_), static_cast<Atom>(c % n_)));
    }
    o = static_cast<int>(c);
  }
}

SolutionTable SolutionTable::from_permutations(
    const std::vector<Permutation>& sigma, const std::vector<Permutation>& tau) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0 || static_cast<int>(tau.size()) != n) {
    throw NotASolution("sigma and tau must both hold n permutations");
  }
  for (int i = 0; i < n; ++i) {
    if (sigma[i].degree() != n || tau[i].degree() != n) {
      throw NotASolution("permutation " + std::to_string(i + 1) +
                         " has the wrong degree");
    }
  }
  std::vector<AtomPair> cells(n * n);
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) cells[x * n + y] = {sigma[x](y), tau[y](x)};
  }
  return SolutionTable(n, std::move(cells));
}

std::optional<Permutation> SolutionTable::g_perm(Atom x) const {
  std::vector<Atom> v(n_);
  for (Atom y = 0; y < n_; ++y) v[y] = g(x, y);
  if (!Permutation::is_bijection(v)) return std::nullopt;
  return Permutation(std::move(v));
}

std::optional<Permutation> SolutionTable::f_perm(Atom y) const {
  std::vector<Atom> v(n_);
  for (Atom x = 0; x < n_; ++x) v[x] = f(y, x);
  if (!Permutation::is_bijection(v)) return std::nullopt;
  return Permutation(std::move(v));
}

SolutionTable SolutionTable::relabeled(const Permutation& p) const {
  std::vector<AtomPair> cells(cells_.size());
  for (Atom x = 0; x < n_; ++x) {
    for (Atom y = 0; y < n_; ++y) {
      auto [a, b] = (*this)(x, y);
      cells[p(x) * n_ + p(y)] = {p(a), p(b)};
    }
  }
  return SolutionTable(n_, std::move(cells));
}

RelationSet::RelationSet(int n, std::vector<Relation> relations) : n_(n) {
  for (auto& r : relations) {
    if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
  }
  std::sort(relations.begin(), relations.end());
  relations_ = std::move(relations);
}

bool is_nondegenerate(const SolutionTable& s) {
  for (Atom x = 0; x < s.size(); ++x) {
    if (!s.g_perm(x) || !s.f_perm(x)) return false;
  }
  return true;
}

bool is_involutive(const SolutionTable& s) {
  for (Atom x = 0; x < s.size(); ++x) {
    for (Atom y = 0; y < s.size(); ++y) {
      auto [a, b] = s(x, y);
      if (s(a, b) != AtomPair{x, y}) return false;
    }
  }
  return true;
}

bool is_braided(const SolutionTable& s) {
  auto s12 = [&](Triple t) {
    auto [a, b] = s(t[0], t[1]);
    return Triple{a, b, t[2]};
  };
  auto s23 = [&](Triple t) {
    auto [b, c] = s(t[1], t[2]);
    return Triple{t[0], b, c};
  };
  const int n = s.size();
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) {
      for (Atom z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (s12(s23(s12(t))) != s23(s12(s23(t)))) return false;
      }
    }
  }
  return true;
}

bool is_symmetric(const SolutionTable& s) {
  return is_involutive(s) && is_braided(s);
}

bool is_solution(const SolutionTable& s) {
  return is_nondegenerate(s) && is_symmetric(s);
}

bool is_square_free(const SolutionTable& s) {
  for (Atom x = 0; x < s.size(); ++x) {
    if (s(x, x) != AtomPair{x, x}) return false;
  }
  return true;
}

QybeReport check_qybe(const SolutionTable& s) {
  // R = flip o S on basis vectors.
  auto r = [&](Atom x, Atom y) {
    auto [a, b] = s(x, y);
    return AtomPair{b, a};
  };
  auto r12 = [&](Triple t) {
    auto [a, b] = r(t[0], t[1]);
    return Triple{a, b, t[2]};
  };
  auto r13 = [&](Triple t) {
    auto [a, c] = r(t[0], t[2]);
    return Triple{a, t[1], c};
  };
  auto r23 = [&](Triple t) {
    auto [b, c] = r(t[1], t[2]);
    return Triple{t[0], b, c};
  };
  const int n = s.size();
  QybeReport rep{true, true};
  for (Atom x = 0; x < n && rep.qybe; ++x) {
    for (Atom y = 0; y < n && rep.qybe; ++y) {
      for (Atom z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (r12(r13(r23(t))) != r23(r13(r12(t)))) {
          rep.qybe = false;
          break;
        }
      }
    }
  }
  // R21 = flip R flip.
  for (Atom x = 0; x < n && rep.unitary; ++x) {
    for (Atom y = 0; y < n; ++y) {
      auto [a, b] = r(x, y);
      auto [c, d] = r(b, a);
      if (AtomPair{d, c} != AtomPair{x, y}) {
        rep.unitary = false;
        break;
      }
    }
  }
  return rep;
}

SolutionTable trivial_solution(int n) {
  if (n < 1) throw PreconditionError("trivial_solution needs n >= 1");
  std::vector<AtomPair> cells(n * n);
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) cells[x * n + y] = {y, x};
  }
  return SolutionTable(n, std::move(cells));
}

bool is_invariant(const SolutionTable& s, AtomSet y) {
  for (Atom a : y.atoms()) {
    for (Atom b : y.atoms()) {
      auto [c, d] = s(a, b);
      if (!y.contains(c) || !y.contains(d)) return false;
    }
  }
  return true;
}

std::vector<AtomSet> invariant_subsets(const SolutionTable& s) {
  if (s.size() > kMaxAtoms) {
    throw PreconditionError("invariant_subsets supports n <= " +
                            std::to_string(kMaxAtoms));
  }
  if (!is_solution(s)) {
    throw PreconditionError(
        "invariant_subsets needs a non-degenerate symmetric solution");
  }
  std::vector<AtomSet> out;
  const std::uint32_t top = std::uint32_t{1} << s.size();
  for (std::uint32_t m = 1; m < top; ++m) {
    if (is_invariant(s, AtomSet(m))) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end(), subset_order_less);
  // Finite invariant subsets are non-degenerate; checked, not assumed.
  for (AtomSet y : out) {
    if (!is_nondegenerate(restrict(s, y))) {
      throw TheoremViolation("invariant subset is degenerate");
    }
  }
  return out;
}

SolutionTable restrict(const SolutionTable& s, AtomSet y) {
  if (y.empty() || !is_invariant(s, y)) {
    throw NotASolution("restrict: subset is not invariant");
  }
  const auto atoms = y.atoms();
  std::vector<Atom> index(s.size(), -1);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    index[atoms[i]] = static_cast<Atom>(i);
  }
  const int m = static_cast<int>(atoms.size());
  std::vector<AtomPair> cells(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto [a, b] = s(atoms[i], atoms[j]);
      cells[i * m + j] = {index[a], index[b]};
    }
  }
  return SolutionTable(m, std::move(cells));
}

bool transports(const Permutation& w, const SolutionTable& a,
                const SolutionTable& b) {
  if (a.size() != b.size() || w.degree() != a.size()) return false;
  for (Atom x = 0; x < a.size(); ++x) {
    for (Atom y = 0; y < a.size(); ++y) {
      auto [c, d] = a(x, y);
      if (b(w(x), w(y)) != AtomPair{w(c), w(d)}) return false;
    }
  }
  return true;
}

namespace {

// Relabel-invariant statistics of one element, used to prune the search.
std::vector<int> element_profile(const SolutionTable& s, Atom x) {
  const int n = s.size();
  int fixed_row = 0, fixed_col = 0, g_fix = 0, f_fix = 0;
  std::vector<char> row_img(n, 0), col_img(n, 0);
  for (Atom y = 0; y < n; ++y) {
    if (s(x, y) == AtomPair{x, y}) ++fixed_row;
    if (s(y, x) == AtomPair{y, x}) ++fixed_col;
    if (s.g(x, y) == y) ++g_fix;
    if (s.f(x, y) == y) ++f_fix;
    row_img[s.g(x, y)] = 1;
    col_img[s.f(x, y)] = 1;
  }
  int row_size = static_cast<int>(std::count(row_img.begin(), row_img.end(), 1));
  int col_size = static_cast<int>(std::count(col_img.begin(), col_img.end(), 1));
  // Orbit length of x under repeated diagonal application.
  int orbit = 1;
  for (AtomPair p = s(x, x); p != AtomPair{x, x} && orbit <= n * n; ++orbit) {
    p = s(p.first, p.second);
  }
  return {s(x, x) == AtomPair{x, x}, fixed_row, fixed_col, g_fix,
          f_fix,                     row_size,  col_size,  orbit};
}

}  // namespace

std::optional<IsoWitness> isomorphic(const SolutionTable& a,
                                     const SolutionTable& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<std::vector<int>> pa(n), pb(n);
  for (Atom x = 0; x < n; ++x) {
    pa[x] = element_profile(a, x);
    pb[x] = element_profile(b, x);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Atom> img(n, -1);
  std::vector<char> used(n, 0);

  // Checks every pair whose four atoms are already mapped.
  auto consistent = [&](Atom last) {
    for (Atom x = 0; x <= last; ++x) {
      for (Atom y = 0; y <= last; ++y) {
        if (x != last && y != last) continue;
        auto [c, d] = a(x, y);
        auto [c2, d2] = b(img[x], img[y]);
        if (img[c] >= 0 ? img[c] != c2 : used[c2] != 0) return false;
        if (img[d] >= 0 ? img[d] != d2 : used[d2] != 0) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Atom x) -> bool {
    if (x == n) return transports(Permutation(img), a, b);
    for (Atom t = 0; t < n; ++t) {
      if (used[t] || pa[x] != pb[t]) continue;
      img[x] = t;
      used[t] = 1;
      if (consistent(x) && self(self, x + 1)) return true;
      used[t] = 0;
      img[x] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return IsoWitness{Permutation(img)};
}

RelationSet presentation_of(const SolutionTable& s) {
  if (!is_solution(s)) {
    throw PreconditionError(
        "presentation_of needs a non-degenerate symmetric solution");
  }
  std::vector<Relation> rels;
  for (Atom x = 0; x < s.size(); ++x) {
    for (Atom y = 0; y < s.size(); ++y) {
      AtomPair img = s(x, y);
      if (AtomPair{x, y} < img) {
        rels.push_back({{x, y}, {img.first, img.second}});
      }
    }
  }
  return RelationSet(s.size(), std::move(rels));
}

SolutionTable solution_from_presentation(const RelationSet& r) {
  const int n = r.size();
  if (n < 1) throw NotASolution("relation set needs n >= 1");
  const auto& rels = r.relations();
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (rels.size() != expected) {
    throw NotASolution("expected " + std::to_string(expected) +
                       " relations, got " + std::to_string(rels.size()));
  }
  std::vector<AtomPair> cells(n * n, {-1, -1});
  auto claim = [&](Word2 from, Word2 to, std::size_t idx) {
    for (Atom a : {from[0], from[1], to[0], to[1]}) {
      if (a < 0 || a >= n) {
        throw NotASolution("relation " + std::to_string(idx + 1) +
                           " uses a letter outside 1.." + std::to_string(n));
      }
    }
    AtomPair& c = cells[from[0] * n + from[1]];
    if (c.first >= 0) {
      throw NotASolution("relation " + std::to_string(idx + 1) + ": word x" +
                         std::to_string(from[0] + 1) + "x" +
                         std::to_string(from[1] + 1) + " appears twice");
    }
    c = {to[0], to[1]};
  };
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rels[i].lhs == rels[i].rhs) {
      throw NotASolution("relation " + std::to_string(i + 1) + " is trivial");
    }
    claim(rels[i].lhs, rels[i].rhs, i);
    claim(rels[i].rhs, rels[i].lhs, i);
  }
  // Unmatched pairs are fixed points of S.
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) {
      if (cells[x * n + y].first < 0) cells[x * n + y] = {x, y};
    }
  }
  SolutionTable s(n, std::move(cells));
  if (!is_nondegenerate(s)) {
    throw NotASolution("relations do not define a non-degenerate solution");
  }
  if (!is_symmetric(s)) {
    throw NotASolution("relations do not define a symmetric solution");
  }
  return s;
}

}  // namespace ybx
