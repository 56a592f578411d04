#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "cayley/perm.hpp"
#include "cayley/suites.hpp"
#include "cayley/transposition_set.hpp"

using namespace cayley;

namespace {
Permutation tp(int a, int b) { return Transposition(a, b).as_permutation(); }
}  // namespace

TEST_CASE("compose applies the left factor first") {
  // (1,2)(2,3) = (1,3,2): 1->3, 3->2, 2->1.
  Permutation r = compose(tp(1, 2), tp(2, 3));
  CHECK(r(1) == 3);
  CHECK(r(3) == 2);
  CHECK(r(2) == 1);

  Permutation p = compose(tp(1, 4), tp(2, 3));
  CHECK(compose(p, Permutation::identity(4)) == p);
  CHECK(compose(tp(1, 2), tp(1, 2)).is_identity());
}

TEST_CASE("compose pads mismatched degrees with fixed points") {
  Permutation r = compose(tp(1, 2), tp(4, 5));
  CHECK(r.degree() == 5);
  CHECK(r(1) == 2);
  CHECK(r(4) == 5);
  CHECK(tp(1, 2) == tp(1, 2).padded(7));
}

TEST_CASE("inverse") {
  CHECK(inverse(tp(1, 2)) == tp(1, 2));
  CHECK(inverse(Permutation::identity(3)).is_identity());

  // Inverting (1,3,2) by flipping the image sequence gives 1->2, 2->3, 3->1.
  Permutation c = compose(tp(1, 2), tp(2, 3));
  Permutation ci = inverse(c);
  CHECK(ci(1) == 2);
  CHECK(ci(2) == 3);
  CHECK(ci(3) == 1);
  CHECK(compose(c, ci).is_identity());
}

TEST_CASE("compose is associative, exhaustively on S_4") {
  PermutationGroup s4 = generate_group({Transposition(1, 2), Transposition(2, 3), Transposition(3, 4)});
  REQUIRE(s4.order() == 24);
  for (const auto& a : s4.elements)
    for (const auto& b : s4.elements)
      for (const auto& c : s4.elements)
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("conjugation") {
  CHECK(conjugate_by(tp(1, 2), tp(2, 3)) == tp(1, 3));

  Permutation p = compose(tp(1, 3), tp(3, 4));
  CHECK(conjugate_by(p, Permutation::identity(4)) == p);

  // Conjugating the cycle 1->3,3->2,2->1 by (1,2) gives 2->3,3->1,1->2.
  Permutation c = compose(tp(1, 2), tp(2, 3));
  Permutation cc = conjugate_by(c, tp(1, 2));
  CHECK(cc(2) == 3);
  CHECK(cc(3) == 1);
  CHECK(cc(1) == 2);

  // (i,j)^g = (g(i), g(j)) for arbitrary g.
  PermutationGroup s4 = generate_group({Transposition(1, 2), Transposition(2, 3), Transposition(3, 4)});
  for (const auto& g : s4.elements) {
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        CHECK(conjugate_by(tp(i, j), g) == Transposition(g(i), g(j)).as_permutation());
  }
}

TEST_CASE("generate_group: orders of small closures") {
  CHECK(generate_group({Transposition(1, 2), Transposition(2, 3), Transposition(1, 3)}).order() == 6);
  CHECK(generate_group({Transposition(1, 2)}).order() == 2);

  // Two disjoint commuting involutions close to the Klein four-group.
  PermutationGroup klein = generate_group({Transposition(1, 2), Transposition(3, 4)});
  REQUIRE(klein.order() == 4);
  for (const auto& a : klein.elements) {
    if (!a.is_identity()) CHECK(order_of(a) == 2);
    for (const auto& b : klein.elements) CHECK(compose(a, b) == compose(b, a));
  }
}

TEST_CASE("generate_group: canonical ordering") {
  PermutationGroup s3 = generate_group({Transposition(1, 2), Transposition(2, 3)});
  REQUIRE(s3.order() == 6);
  CHECK(s3.elements[0].is_identity());
  // BFS level then image-sequence order; for this instance that is full
  // lexicographic order of the image sequences.
  std::vector<std::vector<int>> expect = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                          {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (std::size_t i = 0; i < 6; ++i) CHECK(s3.elements[i].images() == expect[i]);

  // Generator input order must not matter.
  PermutationGroup again = generate_group(
      {Transposition(2, 3), Transposition(1, 2), Transposition(2, 3)});
  REQUIRE(again.order() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(again.elements[i] == s3.elements[i]);

  // The BFS word tree reproduces each element.
  for (std::size_t i = 1; i < s3.order(); ++i) {
    Permutation rebuilt = compose(s3.generators[s3.via_generator[i]].as_permutation(),
                                  s3.elements[s3.parent[i]]);
    CHECK(rebuilt == s3.elements[i]);
  }
}

TEST_CASE("generate_group: cap is enforced") {
  std::vector<Transposition> path5 = {Transposition(1, 2), Transposition(2, 3),
                                      Transposition(3, 4), Transposition(4, 5)};
  CHECK_THROWS_AS(generate_group(path5, 100), CapExceeded);
  CHECK(generate_group(path5).order() == 120);
}

TEST_CASE("closure order is the product of component factorials (points <= 5)") {
  for (const auto& s : all_transposition_sets(5)) {
    auto comps = connected_components(transposition_graph(s));
    std::uint64_t expect = 1;
    for (const auto& c : comps) {
      std::uint64_t f = 1;
      for (int i = 2; i <= c.graph.n; ++i) f *= i;
      expect *= f;
    }
    PermutationGroup h = generate_group(s);
    REQUIRE(h.order() == expect);
    if (comps.size() == 1) {
      std::uint64_t f = 1;
      for (int i = 2; i <= static_cast<int>(s.support.size()); ++i) f *= i;
      REQUIRE(h.order() == f);  // connected transposition graph on n vertices: n!
    }
  }
}

TEST_CASE("is_group_automorphism") {
  PermutationGroup s3 = generate_group({Transposition(1, 2), Transposition(2, 3), Transposition(1, 3)});

  std::vector<int> ident(s3.order());
  std::iota(ident.begin(), ident.end(), 0);
  CHECK(is_group_automorphism(ident, s3));

  // Swapping the two 3-cycles while fixing everything else is inversion,
  // an anti-automorphism only: some product must break.
  std::vector<int> swap_cycles = ident;
  int c1 = s3.index_of(Permutation({2, 3, 1}));
  int c2 = s3.index_of(Permutation({3, 1, 2}));
  REQUIRE(c1 >= 0);
  REQUIRE(c2 >= 0);
  std::swap(swap_cycles[c1], swap_cycles[c2]);
  CHECK_FALSE(is_group_automorphism(swap_cycles, s3));

  CHECK_THROWS_AS(is_group_automorphism(std::vector<int>(6, 0), s3), std::invalid_argument);
}

TEST_CASE("conjugation by any transposition-graph automorphism is a group automorphism") {
  for (const char* text : {"1-2,2-3,1-3", "1-2,1-3,1-4,1-5", "1-2,2-3,3-4,4-5,1-5"}) {
    TranspositionSet s = make_transposition_set(parse_inline_pairs(text));
    PermutationGroup h = generate_group(s);
    GraphGroup aut_t = automorphism_group(transposition_graph(s));
    for (const auto& vmap : aut_t.elements) {
      Permutation g = point_permutation(s, vmap);
      std::vector<int> emap(h.order());
      for (std::size_t i = 0; i < h.order(); ++i)
        emap[i] = h.index_of(conjugate_by(h.element(static_cast<int>(i)), g));
      CHECK(is_group_automorphism(emap, h));
      for (const auto& t : s.pairs)  // the conjugate of each generator stays in S
        CHECK(s.contains(Transposition(g(t.a), g(t.b))));
    }
  }
}
