#include "ybx/garside.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

ComplementSystem::ComplementSystem(const SolutionTable& s,
                                   std::optional<std::uint64_t> budget)
    : n_(s.size()), rc_(n_ * n_, -1), lc_(n_ * n_, -1), budget_(budget) {
  for (Atom a = 0; a < n_; ++a) {
    auto g = s.g_perm(a);
    auto f = s.f_perm(a);
    if (!g || !f) {
      throw PreconditionError("complement system needs a non-degenerate table");
    }
    auto ginv = g->inverse();
    auto finv = f->inverse();
    for (Atom b = 0; b < n_; ++b) {
      if (a == b) continue;
      rc_[a * n_ + b] = ginv(b);
      lc_[a * n_ + b] = finv(b);
    }
  }
}

std::uint64_t ComplementSystem::budget_for(std::size_t total_length) const {
  if (budget_) return *budget_;
  // 4^len, saturating.
  if (total_length >= 31) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (2 * total_length);
}

namespace {

// Reverses u^{-1} v with single-letter complements `comp`. Each letter of u
// is pushed through the current right-hand word; the leftover letter (if
// any) is the next letter of v\u.
template <typename Comp>
Reversal reverse_with(const Word& u, const Word& v, Comp comp,
                      std::uint64_t budget) {
  Word cur = v;
  Word v_comp;
  Word next;
  std::uint64_t steps = 0;
  for (Atom a : u) {
    next.clear();
    Atom pending = a;
    bool live = true;
    for (Atom b : cur) {
      if (!live) {
        next.push_back(b);
        continue;
      }
      if (++steps > budget) throw BudgetExceeded();
      if (pending == b) {
        live = false;
        continue;
      }
      Atom c1 = comp(pending, b);
      Atom c2 = comp(b, pending);
      if (c1 < 0 || c2 < 0) throw BudgetExceeded();
      next.push_back(c1);
      pending = c2;
    }
    if (live) v_comp.push_back(pending);
    std::swap(cur, next);
  }
  return {std::move(cur), std::move(v_comp)};
}

}  // namespace

Reversal reverse_right(const Word& u, const Word& v, const ComplementSystem& c) {
  return reverse_with(
      u, v, [&c](Atom a, Atom b) { return c.right(a, b); },
      c.budget_for(u.size() + v.size()));
}

Reversal reverse_left(const Word& u, const Word& v, const ComplementSystem& c) {
  // Left reversing in M is right reversing in the opposite monoid, whose
  // right complements are the left complements of M.
  Reversal r = reverse_with(
      reversed(u), reversed(v), [&c](Atom a, Atom b) { return c.left(a, b); },
      c.budget_for(u.size() + v.size()));
  return {reversed(std::move(r.u_comp)), reversed(std::move(r.v_comp))};
}

bool words_equal(const Word& u, const Word& v, const ComplementSystem& c) {
  if (u.size() != v.size()) return false;
  Reversal r = reverse_right(u, v, c);
  return r.u_comp.empty() && r.v_comp.empty();
}

bool left_divides(const Word& u, const Word& v, const ComplementSystem& c) {
  if (u.size() > v.size()) return false;
  return reverse_right(u, v, c).v_comp.empty();
}

bool right_divides(const Word& u, const Word& v, const ComplementSystem& c) {
  if (u.size() > v.size()) return false;
  return reverse_left(u, v, c).v_comp.empty();
}

Word right_lcm(AtomSet a, const ComplementSystem& c) {
  if (a.empty()) throw PreconditionError("right_lcm of an empty set");
  Word w;
  for (Atom x : a.atoms()) {
    Word tail = reverse_right(w, {x}, c).u_comp;
    w.insert(w.end(), tail.begin(), tail.end());
  }
  return w;
}

Word left_lcm(AtomSet a, const ComplementSystem& c) {
  if (a.empty()) throw PreconditionError("left_lcm of an empty set");
  Word w;
  for (Atom x : a.atoms()) {
    w = concat(reverse_left(w, {x}, c).u_comp, w);
  }
  return w;
}

AtomSet left_atom_divisors(const Word& w, const ComplementSystem& c) {
  AtomSet out;
  for (Atom a = 0; a < c.size(); ++a) {
    if (left_divides({a}, w, c)) out.insert(a);
  }
  return out;
}

AtomSet right_atom_divisors(const Word& w, const ComplementSystem& c) {
  AtomSet out;
  for (Atom a = 0; a < c.size(); ++a) {
    if (right_divides({a}, w, c)) out.insert(a);
  }
  return out;
}

DivisorLattice::DivisorLattice(const SolutionTable& s,
                               std::optional<std::uint64_t> budget)
    : solution_(s), complements_(s, budget) {
  const int n = s.size();
  if (n > kMaxRank) {
    throw PreconditionError("divisor lattice supports n <= " +
                            std::to_string(kMaxRank));
  }
  if (!is_solution(s)) {
    throw NotASolution("divisor lattice needs a non-degenerate symmetric "
                       "solution");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  simples_.resize(count);
  r_index_.assign(count, count);
  r_index_[0] = 0;

  for (std::uint32_t m = 1; m < count; ++m) {
    AtomSet set(m);
    Atom top = set.max();
    const Simple& prev = simples_[(set - AtomSet::single(top)).bits()];
    Simple& cur = simples_[m];
    cur.x_ell = set;
    cur.word = prev.word;
    Word tail = reverse_right(prev.word, {top}, complements_).u_comp;
    cur.word.insert(cur.word.end(), tail.begin(), tail.end());

    if (cur.length() != set.size()) {
      throw NotASolution("lcm of " + std::to_string(set.size()) +
                         " atoms has length " + std::to_string(cur.length()));
    }
    if (left_atom_divisors(cur.word, complements_) != set) {
      throw NotASolution("two atom sets share the same right lcm");
    }
    cur.x_r = right_atom_divisors(cur.word, complements_);
    if (cur.x_r.size() != set.size()) {
      throw NotASolution("|X_l| != |X_r| for a simple");
    }
    if (r_index_[cur.x_r.bits()] != count) {
      throw NotASolution("two simples share the same X_r");
    }
    r_index_[cur.x_r.bits()] = m;
    if (!words_equal(left_lcm(cur.x_r, complements_), cur.word, complements_)) {
      throw NotASolution("simple is not the left lcm of its X_r");
    }
  }
  if (delta().x_r != all_atoms()) {
    throw NotASolution("X_r(Delta) != X");
  }
}

bool DivisorLattice::is_balanced(const Simple& s) const {
  return !balance_witness(s).has_value();
}

std::optional<Word> DivisorLattice::balance_witness(const Simple& s) const {
  // Left divisors: x_ell inside s.x_ell. Right divisors: x_r inside s.x_r.
  std::vector<std::uint32_t> left, right;
  const std::uint32_t lm = s.x_ell.bits(), rm = s.x_r.bits();
  for (std::uint32_t a = lm;; a = (a - 1) & lm) {
    left.push_back(a);
    if (a == 0) break;
  }
  for (std::uint32_t b = rm;; b = (b - 1) & rm) {
    right.push_back(r_index_[b]);
    if (b == 0) break;
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::vector<std::uint32_t> diff;
  std::set_symmetric_difference(left.begin(), left.end(), right.begin(),
                                right.end(), std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  // Prefer the shortest witness.
  auto best = std::min_element(diff.begin(), diff.end(),
                               [](std::uint32_t a, std::uint32_t b) {
                                 return subset_order_less(AtomSet(a), AtomSet(b));
                               });
  return simples_[*best].word;
}

AtomSet DivisorLattice::support(const Simple& s) const {
  if (!is_balanced(s)) {
    throw PreconditionError("support is only defined for balanced simples");
  }
  return s.x_ell;
}

const Simple* DivisorLattice::find_simple(const Word& w) const {
  if (static_cast<int>(w.size()) > rank()) return nullptr;
  AtomSet atoms = left_atom_divisors(w, complements_);
  if (atoms.size() != static_cast<int>(w.size())) return nullptr;
  return &by_left(atoms);
}

const Simple& DivisorLattice::require_simple(const Word& w) const {
  const Simple* s = find_simple(w);
  if (s == nullptr) {
    throw TheoremViolation("complement of two simples is not a simple");
  }
  return *s;
}

const Simple& DivisorLattice::head(const Word& w) const {
  return by_left(left_atom_divisors(w, complements_));
}

const Simple& DivisorLattice::right_head(const Word& w) const {
  return by_right(right_atom_divisors(w, complements_));
}

const Simple& DivisorLattice::left_gcd(const Word& w, const Simple& d) const {
  return by_left(left_atom_divisors(w, complements_) & d.x_ell);
}

const Simple& DivisorLattice::right_gcd(const Word& w, const Simple& d) const {
  return by_right(right_atom_divisors(w, complements_) & d.x_r);
}

std::vector<const Simple*> DivisorLattice::normal_form(const Word& w) const {
  std::vector<const Simple*> out;
  Word rest = w;
  while (!rest.empty()) {
    const Simple& h = head(rest);
    Reversal r = reverse_right(h.word, rest, complements_);
    if (h.x_ell.empty() || !r.v_comp.empty()) {
      throw TheoremViolation("head is not a left divisor of the word");
    }
    out.push_back(&h);
    rest = std::move(r.u_comp);
  }
  return out;
}

const Simple& DivisorLattice::right_complement(const Simple& s,
                                               const Simple& t) const {
  return require_simple(reverse_right(s.word, t.word, complements_).u_comp);
}

const Simple& DivisorLattice::left_complement(const Simple& s,
                                              const Simple& t) const {
  return require_simple(reverse_left(s.word, t.word, complements_).u_comp);
}

}  // namespace ybx
