#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "ybx/enumeration.hpp"
#include "ybx/error.hpp"

using namespace ybx;
using namespace ybx::test;

TEST_CASE("atom complements") {
  ComplementSystem c5(e5());
  CHECK(c5.right(0, 2) + 1 == 2);
  ComplementSystem c4(e4());
  CHECK(c4.right(0, 1) + 1 == 1);
  ComplementSystem t(trivial_solution(3));
  for (Atom a = 0; a < 3; ++a) {
    for (Atom b = 0; b < 3; ++b) {
      if (a != b) CHECK(t.right(a, b) == b);
    }
  }
}

TEST_CASE("complements give defining relations") {
  for (const auto& s : {e5(), e4()}) {
    ComplementSystem c(s);
    for (Atom a = 0; a < s.size(); ++a) {
      for (Atom b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        CHECK(words_equal({a, c.right(a, b)}, {b, c.right(b, a)}, c));
        CHECK(words_equal({c.left(a, b), a}, {c.left(b, a), b}, c));
      }
    }
  }
}

TEST_CASE("right reversing") {
  ComplementSystem c5(e5());
  Reversal r = reverse_right(w({1}), w({3}), c5);
  CHECK(r.u_comp == w({2}));
  CHECK(r.v_comp == w({4}));
  Reversal same = reverse_right(w({1, 2, 5}), w({1, 2, 5}), c5);
  CHECK(same.u_comp.empty());
  CHECK(same.v_comp.empty());

  ComplementSystem c4(e4());
  Reversal q = reverse_right(w({1, 1}), w({3, 3}), c4);
  const Word lcm = concat(w({1, 1}), q.u_comp);
  CHECK(lcm.size() == 4);
  CHECK(words_equal(lcm, concat(w({3, 3}), q.v_comp), c4));
  CHECK(words_equal(lcm, DivisorLattice(e4()).delta().word, c4));
}

TEST_CASE("word problem") {
  ComplementSystem c(e5());
  CHECK(words_equal(w({1, 1, 1, 1, 5}), DivisorLattice(e5()).delta().word, c));
  CHECK_FALSE(words_equal(w({1}), w({2}), c));
  CHECK(words_equal(w({1, 2}), w({3, 4}), c));
  CHECK(words_equal(w({1, 1}), w({2, 2}), c));
  CHECK_FALSE(words_equal(w({1, 2}), w({2, 1}), c));
}

TEST_CASE("explicit budget is enforced") {
  ComplementSystem c(e5(), std::uint64_t{2});
  CHECK_THROWS_AS(reverse_right(w({1, 1}), w({3, 3}), c), BudgetExceeded);
  ComplementSystem roomy(e5());
  CHECK_NOTHROW(reverse_right(w({1, 1}), w({3, 3}), roomy));
}

TEST_CASE("lcm of atom sets") {
  ComplementSystem c(e5());
  CHECK(words_equal(right_lcm(set({1, 2, 3}), c), w({1, 1, 1}), c));
  CHECK(words_equal(left_lcm(set({1, 2, 3}), c), w({1, 1, 1}), c));
  CHECK(right_lcm(set({4}), c) == w({4}));
  CHECK(words_equal(right_lcm(set({1, 2, 3, 4, 5}), c), w({1, 1, 1, 1, 5}), c));
}

TEST_CASE("E5 divisor lattice") {
  DivisorLattice lat(e5());
  CHECK(lat.simples().size() == 32);
  CHECK(lat.delta().length() == 5);
  CHECK(lat.delta().x_ell == lat.all_atoms());
  CHECK(lat.delta().x_r == lat.all_atoms());

  const Simple& s13 = lat.by_left(set({1, 3}));
  CHECK(s13.word == w({1, 2}));
  CHECK(s13.x_r == set({2, 4}));

  const Simple& cube = lat.by_left(set({1, 2, 3}));
  CHECK(words_equal(cube.word, w({1, 1, 1}), lat.complements()));
  CHECK(cube.x_r == set({1, 2, 3}));
  CHECK_FALSE(lat.is_balanced(cube));
  auto witness = lat.balance_witness(cube);
  REQUIRE(witness);
  CHECK(words_equal(*witness, w({1, 2}), lat.complements()));

  CHECK(lat.left_divides(s13, cube));
  CHECK_FALSE(lat.right_divides(s13, cube));
  CHECK(lat.left_divides(cube, cube));
}

TEST_CASE("small lattices") {
  DivisorLattice t(trivial_solution(2));
  CHECK(t.simples().size() == 4);
  for (const Simple& s : t.simples()) {
    CHECK(s.x_ell == s.x_r);
    CHECK(t.is_balanced(s));
  }
  DivisorLattice l4(e4());
  CHECK(l4.simples().size() == 16);
  // Delta is x1^4 = x3^4, the lcm of x1^2 and x3^2; x1^2 x3^2 is a different
  // element of length 4.
  CHECK(words_equal(l4.delta().word, w({1, 1, 1, 1}), l4.complements()));
  CHECK(words_equal(l4.delta().word, w({3, 3, 3, 3}), l4.complements()));
  CHECK_FALSE(words_equal(l4.delta().word, w({1, 1, 3, 3}), l4.complements()));
}

TEST_CASE("lattice rejects non-solutions") {
  std::vector<AtomPair> cells{{0, 1}, {1, 0}, {0, 0}, {1, 1}};
  CHECK_THROWS_AS(DivisorLattice(SolutionTable(2, cells)), NotASolution);
}

TEST_CASE("meet and join") {
  DivisorLattice lat(e5());
  CHECK(lat.join(lat.atom(0), lat.atom(2)).x_ell == set({1, 3}));
  for (const Simple& s : lat.simples()) {
    CHECK(&lat.meet(s, lat.delta()) == &s);
    CHECK(&lat.right_meet(s, lat.delta()) == &s);
  }
  CHECK(lat.meet(lat.by_left(set({1, 2})), lat.by_left(set({2, 3}))).x_ell == set({2}));
}

TEST_CASE("meet and join agree with word-level divisors") {
  // The meet is the longest common left divisor among all simples; the join
  // is the shortest common left multiple.
  DivisorLattice lat(e5());
  const ComplementSystem& c = lat.complements();
  const auto& all = lat.simples();
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const Simple& s = all[i];
      const Simple& t = all[j];
      Word best_meet;
      std::size_t join_len = 99;
      for (const Simple& d : all) {
        if (left_divides(d.word, s.word, c) && left_divides(d.word, t.word, c) &&
            d.word.size() >= best_meet.size()) {
          best_meet = d.word;
        }
        if (left_divides(s.word, d.word, c) && left_divides(t.word, d.word, c)) {
          join_len = std::min(join_len, d.word.size());
        }
      }
      CHECK(words_equal(lat.meet(s, t).word, best_meet, c));
      CHECK(static_cast<std::size_t>(lat.join(s, t).length()) == join_len);
      CHECK(lat.join(s, t).length() == (s.x_ell | t.x_ell).size());
    }
  }
}

TEST_CASE("balancedness and support") {
  DivisorLattice lat(e5());
  CHECK(lat.is_balanced(lat.delta()));
  CHECK(lat.support(lat.delta()) == lat.all_atoms());
  const Simple& sq = lat.by_left(set({1, 2}));
  CHECK(words_equal(sq.word, w({1, 1}), lat.complements()));
  CHECK(lat.is_balanced(sq));
  CHECK(lat.support(sq) == set({1, 2}));
  CHECK(lat.support(lat.atom(4)) == set({5}));
  CHECK_THROWS_AS(lat.support(lat.by_left(set({1, 2, 3}))), PreconditionError);
  for (const Simple& s : lat.simples()) {
    if (lat.is_balanced(s)) CHECK(s.x_ell == s.x_r);
  }
}

TEST_CASE("head") {
  DivisorLattice lat(e5());
  CHECK(&lat.head(lat.delta().word) == &lat.delta());
  CHECK(lat.head(w({1, 2})).x_ell == set({1, 3}));
  CHECK(lat.head(w({1})).x_ell == set({1}));
  CHECK(lat.head({}).x_ell.empty());
}

TEST_CASE("normal form") {
  DivisorLattice lat(e5());
  const ComplementSystem& c = lat.complements();
  auto nf = lat.normal_form(lat.delta().word);
  REQUIRE(nf.size() == 1);
  CHECK(nf[0] == &lat.delta());

  auto cube = lat.normal_form(w({1, 1, 1}));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0]->x_ell == set({1, 2, 3}));

  auto five = lat.normal_form(w({1, 1, 1, 1, 1}));
  REQUIRE(five.size() == 2);
  CHECK(five[0]->length() + five[1]->length() == 5);
  CHECK(words_equal(concat(five[0]->word, five[1]->word), w({1, 1, 1, 1, 1}), c));
}

TEST_CASE("normal form decides the word problem") {
  for (const auto& s : {e5(), e4()}) {
    DivisorLattice lat(s);
    const ComplementSystem& c = lat.complements();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<Atom> atom(0, s.size() - 1);
    std::vector<Word> words;
    for (int i = 0; i < 60; ++i) {
      Word u(len(rng));
      for (Atom& a : u) a = atom(rng);
      words.push_back(u);
    }
    // Add equal pairs on purpose so both outcomes occur.
    words.push_back(w({1, 2}));
    words.push_back(w({3, 4}));
    for (const Word& u : words) {
      Word flat;
      for (const Simple* f : lat.normal_form(u)) flat = concat(flat, f->word);
      CHECK(words_equal(flat, u, c));
      for (const Word& v : words) {
        CHECK(words_equal(u, v, c) == (lat.normal_form(u) == lat.normal_form(v)));
      }
    }
  }
}

TEST_CASE("lattice invariants across the census") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_solutions(n, true).classes) {
      DivisorLattice lat(s);
      CHECK(lat.simples().size() == (std::size_t{1} << n));
      const ComplementSystem& c = lat.complements();
      for (const Simple& a : lat.simples()) {
        CHECK(a.length() == a.x_ell.size());
        CHECK(a.x_r.size() == a.x_ell.size());
        for (const Simple& b : lat.simples()) {
          CHECK(lat.left_divides(a, b) == left_divides(a.word, b.word, c));
          CHECK(lat.right_divides(a, b) == right_divides(a.word, b.word, c));
        }
      }
      CHECK(lat.is_balanced(lat.delta()));
    }
  }
}
