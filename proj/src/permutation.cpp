#include "ybx/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ybx/error.hpp"

namespace ybx {

bool subset_order_less(AtomSet a, AtomSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.atoms() < b.atoms();
}

Partition normalize_partition(Partition p) {
  std::erase_if(p, [](AtomSet b) { return b.empty(); });
  std::sort(p.begin(), p.end(),
            [](AtomSet a, AtomSet b) { return a.min() < b.min(); });
  return p;
}

bool Permutation::is_bijection(const std::vector<Atom>& images) {
  std::vector<char> seen(images.size(), 0);
  for (Atom y : images) {
    if (y < 0 || y >= static_cast<Atom>(images.size()) || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<Atom> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw NotASolution("image list of length " + std::to_string(images_.size()) +
                       " is not a permutation");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Atom> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(
    int n, const std::vector<std::vector<Atom>>& cycles) {
  std::vector<Atom> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      v[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<Atom> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    inv[images_[x]] = static_cast<Atom>(x);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::vector<Atom> v(q.images_.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = p(q(static_cast<Atom>(x)));
  Permutation r;
  r.images_ = std::move(v);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<Atom>(x)) return false;
  }
  return true;
}

}  // namespace ybx
