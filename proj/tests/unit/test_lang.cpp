#include <doctest.h>

#include "ppcount/enumeration.hpp"
#include "ppcount/errors.hpp"
#include "ppcount/lang.hpp"

using namespace ppcount;

namespace {

QSqrt5 squared_distance(const ExactVector& x, const ExactVector& y) {
  const auto d = x - y;
  return dot(d, d);
}

}  // namespace

TEST_CASE("fundamental weights are fixed by all but one simple reflection") {
  for (const char* spec : {"A3", "B3", "H3", "B4", "A1xB2"}) {
    const auto g = parse_group_spec(spec);
    const auto s = generators(g).simple_reflections;
    for (int k = 1; k <= g.rank(); ++k) {
      const auto wk = fundamental_weight(g, k);
      for (int i = 1; i <= g.rank(); ++i) {
        const bool fixed = matrix_rep(g, s[i - 1]).apply(wk) == wk;
        CHECK(fixed == (i != k));
      }
    }
  }
}

TEST_CASE("facet orbits have the size of the coset space") {
  for (const char* spec : {"A3", "B3", "H3"}) {
    const auto g = parse_group_spec(spec);
    CountingContext ctx(g);
    for (const IndexSet& I : {IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{2, 3}, IndexSet{}}) {
      CHECK(facet_orbit(g, I, false).size() == g.order() / ctx.subgroup_order(I));
      if (I.empty()) CHECK(facet_orbit(g, I, true).size() == g.order() / 2);
    }
  }
}

TEST_CASE("B4 facet orbit of type {1,3,4} is {±e_i ± e_j}") {
  const auto b4 = parse_group_spec("B4");
  const auto orbit = facet_orbit(b4, {1, 3, 4}, false);
  CHECK(orbit.size() == 24);
  for (const auto& v : orbit) {
    int nonzero = 0;
    for (const auto& x : v) {
      if (!x.is_zero()) {
        ++nonzero;
        CHECK((x == QSqrt5(1) || x == QSqrt5(-1)));
      }
    }
    CHECK(nonzero == 2);
  }
}

TEST_CASE("lang_length_classes") {
  const auto b4 = parse_group_spec("B4");
  const auto ot = make_orbit_type(b4, {1, 3, 4}, {1, 3, 4});
  const auto lengths = lang_length_classes(ot, Convention::Full);
  const auto orbits = strut_orbit_count(b4, ot);
  CHECK(lengths < orbits);
  CHECK(lengths == 4);
  CHECK(orbits == 5);
  CHECK_THROWS_AS(lang_length_classes(make_orbit_type(parse_group_spec("A1xI2(6)"), {1, 2}, {1, 2})),
                  UnsupportedFactor);
}

TEST_CASE("lang_length_classes with a single partner point") {
  // A1 has two ∅ facets: one strut, one length.
  const auto a1 = parse_group_spec("A1");
  CHECK(lang_length_classes(make_orbit_type(a1, {}, {}), Convention::Full) == 1);
}

TEST_CASE("counterexample in B4") {
  const auto r = lang_counterexample_check();
  CHECK(r.a == ExactVector{0, 0, 1, 1});
  CHECK(r.b == ExactVector{1, 1, 0, 0});
  CHECK(r.c == ExactVector{0, 0, 1, -1});
  CHECK(r.ab_squared == QSqrt5(4));
  CHECK(r.ac_squared == QSqrt5(4));
  CHECK(squared_distance(r.a, r.b) == squared_distance(r.a, r.c));
  CHECK(r.equal_lengths);
  CHECK(r.distinct_orbits);
  CHECK(r.elements_checked == 384);
  CHECK_FALSE(r.support_note.empty());
  CHECK(r.length_classes < r.true_orbits);
}

// ---- invariants ----

TEST_CASE("property: length classes equal orbits for every rank-3 type with matrix support") {
  for (const char* spec : {"A3", "B3", "H3"}) {
    const auto g = parse_group_spec(spec);
    CountingContext ctx(g);
    const std::vector<IndexSet> subsets{{1, 2}, {1, 3}, {2, 3}, {}};
    for (auto conv : {Convention::Lang, Convention::Full})
      for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a; b < subsets.size(); ++b) {
          const auto ot = make_orbit_type(g, subsets[a], subsets[b]);
          CAPTURE(ot.name());
          CHECK(lang_length_classes(ot, conv) == ctx.strut_orbit_count(ot, conv));
        }
  }
}

TEST_CASE("property: H3 matrices are orthogonal over Q(sqrt 5)") {
  const auto h3 = parse_group_spec("H3");
  for (const auto& u : enumerate_elements(h3)) {
    const auto m = matrix_rep(h3, u);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        QSqrt5 s(0);
        for (std::size_t k = 0; k < 3; ++k) s += m(k, i) * m(k, j);
        REQUIRE(s == QSqrt5(i == j ? 1 : 0));
      }
  }
}
