#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// A bijection of {1..degree()}.  images()[i-1] is the image of point i;
/// points above the stored degree are fixed, so permutations of different
/// degrees compare and compose by padding with fixed points.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: image sequence is not a bijection");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of a 1-based point; points beyond the degree are fixed.
  int operator()(int point) const {
    return point <= degree() ? img_[point - 1] : point;
  }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  Permutation padded(int degree) const {
    if (degree <= this->degree()) return *this;
    std::vector<int> img = img_;
    for (int i = this->degree() + 1; i <= degree; ++i) img.push_back(i);
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    int d = std::max(a.degree(), b.degree());
    for (int i = 1; i <= d; ++i)
      if (a(i) != b(i)) return false;
    return true;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  std::vector<int> img_;
};

/// r(i) = q(p(i)): the LEFT factor is applied first, so compose(p, q) is the
/// product pq in word order.  Fixed by (1,2)(2,3) = (1,3,2).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  int d = std::max(p.degree(), q.degree());
  std::vector<int> img(d);
  for (int i = 1; i <= d; ++i) img[i - 1] = q(p(i));
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[p(i) - 1] = i;
  return Permutation(std::move(img));
}

/// g^{-1} p g under the compose convention: the result maps g(i) to g(p(i)).
/// Conjugating a transposition (i,j) yields (g(i), g(j)).
inline Permutation conjugate_by(const Permutation& p, const Permutation& g) {
  int d = std::max(p.degree(), g.degree());
  std::vector<int> img(d);
  for (int i = 1; i <= d; ++i) img[g(i) - 1] = g(p(i));
  return Permutation(std::move(img));
}

inline int order_of(const Permutation& p) {
  Permutation q = p;
  int k = 1;
  while (!q.is_identity()) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

/// Cycle notation, fixed points omitted: "(1 2)(3 4)".  Identity prints "()".
inline std::string cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (int i = 1; i <= p.degree(); ++i) {
    if (done[i - 1] || p(i) == i) continue;
    any = true;
    out << '(' << i;
    done[i - 1] = true;
    for (int j = p(i); j != i; j = p(j)) {
      out << ' ' << j;
      done[j - 1] = true;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

/// Lexicographic order on padded image sequences; the canonical element key.
inline bool perm_key_less(const Permutation& a, const Permutation& b) {
  int d = std::max(a.degree(), b.degree());
  for (int i = 1; i <= d; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

struct Transposition {
  int a, b;  // stored with a < b

  Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y || std::min(x, y) < 1)
      throw std::invalid_argument("Transposition: points must be distinct and >= 1");
  }

  Permutation as_permutation() const {
    std::vector<int> img(b);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[a - 1], img[b - 1]);
    return Permutation(std::move(img));
  }

  auto operator<=>(const Transposition&) const = default;
};

/// Disjoint supports, equivalently tk = kt.
inline bool commute(const Transposition& t, const Transposition& k) {
  return t.a != k.a && t.a != k.b && t.b != k.a && t.b != k.b;
}

namespace detail {
struct VecIntHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
}  // namespace detail

/// A fully enumerated permutation group.  Elements are listed breadth-first
/// from the identity (index 0) by word length in the generators; within a
/// level they are sorted by image sequence, which makes the ordering
/// independent of the closure schedule.  parent/via_generator record one
/// shortest word per element: element[i] = generator[via_generator[i]] *
/// element[parent[i]].
struct PermutationGroup {
  int degree = 0;
  std::vector<Transposition> generators;
  std::vector<Permutation> elements;
  std::vector<int> parent;
  std::vector<int> via_generator;

  std::size_t order() const { return elements.size(); }

  int index_of(const Permutation& p) const {
    auto it = index_.find(p.padded(degree).images());
    return it == index_.end() ? -1 : it->second;
  }

  const Permutation& element(int i) const { return elements[i]; }

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < elements.size(); ++i)
      index_.emplace(elements[i].images(), static_cast<int>(i));
  }

 private:
  std::unordered_map<std::vector<int>, int, detail::VecIntHash> index_;
};

/// Breadth-first closure of the generators, applied by left multiplication
/// so that levels coincide with Cayley-graph distance from the identity.
inline PermutationGroup generate_group(std::vector<Transposition> gens,
                                       std::uint64_t cap = kDefaultGroupCap) {
  if (gens.empty()) throw std::invalid_argument("generate_group: empty generator set");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  PermutationGroup grp;
  grp.degree = 0;
  for (const auto& t : gens) grp.degree = std::max(grp.degree, t.b);
  grp.generators = gens;

  std::vector<Permutation> gen_perms;
  gen_perms.reserve(gens.size());
  for (const auto& t : gens) gen_perms.push_back(t.as_permutation().padded(grp.degree));

  grp.elements.push_back(Permutation::identity(grp.degree));
  grp.parent.push_back(-1);
  grp.via_generator.push_back(-1);
  grp.rebuild_index();

  std::vector<int> level = {0};
  while (!level.empty()) {
    // key -> (parent element, generator applied); first discovery wins.
    std::map<std::vector<int>, std::pair<int, int>> next;
    for (int u : level) {
      for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
        Permutation w = compose(gen_perms[gi], grp.elements[u]);
        if (grp.index_of(w) >= 0) continue;
        next.try_emplace(w.images(), u, static_cast<int>(gi));
      }
    }
    level.clear();
    for (auto& [key, via] : next) {
      if (grp.elements.size() >= cap)
        throw CapExceeded("generate_group: closure exceeds cap of " + std::to_string(cap));
      grp.elements.push_back(Permutation(key));
      grp.parent.push_back(via.first);
      grp.via_generator.push_back(via.second);
      level.push_back(static_cast<int>(grp.elements.size()) - 1);
    }
    grp.rebuild_index();
  }
  return grp;
}

/// True iff map(g*h) = map(g)*map(h) for all g,h in H, checked exhaustively.
/// `map` is an index bijection on H's canonical element list.
inline bool is_group_automorphism(const std::vector<int>& map, const PermutationGroup& h) {
  const std::size_t n = h.order();
  if (map.size() != n) throw std::invalid_argument("is_group_automorphism: size mismatch");
  std::vector<bool> hit(n, false);
  for (int v : map) {
    if (v < 0 || v >= static_cast<int>(n) || hit[v])
      throw std::invalid_argument("is_group_automorphism: map is not a bijection");
    hit[v] = true;
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t k = 0; k < n; ++k) {
      int prod = h.index_of(compose(h.element(static_cast<int>(g)), h.element(static_cast<int>(k))));
      int mapped_prod = h.index_of(compose(h.element(map[g]), h.element(map[k])));
      if (map[prod] != mapped_prod) return false;
    }
  }
  return true;
}

}  // namespace cayley
