#ifndef YBX_TESTS_SUPPORT_HPP_
#define YBX_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "ybx/garside.hpp"
#include "ybx/solution.hpp"

namespace ybx::test {

inline std::string fixture(const std::string& name) {
  return std::string(YBX_FIXTURES_DIR) + "/" + name;
}

// 1-based helpers, matching how the examples are written down.
inline Word w(std::initializer_list<int> letters) {
  Word out;
  for (int a : letters) out.push_back(a - 1);
  return out;
}

inline AtomSet set(std::initializer_list<int> atoms) {
  AtomSet s;
  for (int a : atoms) s.insert(a - 1);
  return s;
}

inline Permutation perm(std::initializer_list<int> images) {
  std::vector<Atom> img;
  for (int a : images) img.push_back(a - 1);
  return Permutation(img);
}

// sigma_1 = sigma_3 = tau_1 = tau_3 = (1,2,3,4), sigma_2 = sigma_4 = tau_2 =
// tau_4 = (1,4,3,2), sigma_5 = tau_5 = id.
inline SolutionTable e5() {
  const Permutation a = perm({2, 3, 4, 1, 5});
  const Permutation b = perm({4, 1, 2, 3, 5});
  const Permutation id = Permutation::identity(5);
  const std::vector<Permutation> s{a, b, a, b, id};
  return SolutionTable::from_permutations(s, s);
}

inline RelationSet e4_relations() {
  auto r = [](int a, int b, int c, int d) {
    return Relation{{a - 1, b - 1}, {c - 1, d - 1}};
  };
  return RelationSet(4, {r(1, 1, 2, 2), r(1, 2, 3, 4), r(1, 3, 4, 2),
                         r(3, 3, 4, 4), r(2, 4, 3, 1), r(2, 1, 4, 3)});
}

inline SolutionTable e4() { return solution_from_presentation(e4_relations()); }

inline AtomPair cell(const SolutionTable& s, int x, int y) {
  auto [a, b] = s(x - 1, y - 1);
  return {a + 1, b + 1};
}

}  // namespace ybx::test

#endif  // YBX_TESTS_SUPPORT_HPP_
