#include <doctest.h>

#include "../support/brute.hpp"
#include "ppcount/errors.hpp"
#include "ppcount/groups.hpp"

using namespace ppcount;

namespace {

Element single(FactorElement part) { return Element{{std::move(part)}}; }

ExactMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  return m;
}

// Supported groups of order at most 1000.
std::vector<GroupDescriptor> small_groups() {
  std::vector<GroupDescriptor> out;
  for (const char* s : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(8)",
                        "I2(11)", "H3", "A1xA1", "A1xI2(6)", "A1xB2", "A2xA1", "I2(5)xA2"})
    out.push_back(parse_group_spec(s));
  return out;
}

}  // namespace

TEST_CASE("parse_group_spec") {
  CHECK(parse_group_spec("H3").name() == "H3");
  CHECK(parse_group_spec("H3").order() == 120);
  CHECK(parse_group_spec("B4").order() == 384);
  const auto g = parse_group_spec("A1xB2");
  CHECK(g.rank() == 3);
  CHECK(g.order() == 16);
  CHECK(g.factors.size() == 2);
  CHECK(parse_group_spec(" a1 x i2(6) ") == parse_group_spec("A1xI2(6)"));
  CHECK_THROWS_AS(parse_group_spec("Q3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("A3x"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("A0"), RangeError);
}

TEST_CASE("parse_index_list") {
  CHECK(parse_index_list("1,2,4") == IndexSet{1, 2, 4});
  CHECK(parse_index_list("empty").empty());
  CHECK(normalize_subset(parse_group_spec("A4"), {3, 1}) == IndexSet{1, 3});
  CHECK_THROWS(normalize_subset(parse_group_spec("A3"), {4}));
}

TEST_CASE("enumerate_elements") {
  CHECK(enumerate_elements(parse_group_spec("A1")).size() == 2);
  CHECK(enumerate_elements(parse_group_spec("H3")).size() == 120);
  CHECK(enumerate_elements(parse_group_spec("B3")).size() == 48);
  CHECK(enumerate_elements(parse_group_spec("A1xI2(6)")).size() == 24);
  const auto a = enumerate_elements(parse_group_spec("A3"));
  CHECK(std::is_sorted(a.begin(), a.end(), element_less));
  CHECK_THROWS_AS(enumerate_elements(parse_group_spec("B9"), Limits{1000}), CapExceeded);
}

TEST_CASE("multiply, inverse, element_order") {
  const auto b3 = parse_group_spec("B3");
  const Element flip = single(SignedPerm{{0, 1, 2}, {1, 1, -1}});
  CHECK(is_identity(b3, multiply(b3, flip, flip)));
  for (const auto& u : enumerate_elements(b3)) {
    CHECK(multiply(b3, identity(b3), u) == u);
    CHECK(is_identity(b3, multiply(b3, u, inverse(b3, u))));
  }
  const auto h3 = parse_group_spec("H3");
  CHECK(element_order(h3, single(H3Elem{{1, 2, 3, 4, 0}, 1})) == 5);
  CHECK(element_order(h3, single(H3Elem{{0, 1, 2, 3, 4}, -1})) == 2);
  CHECK_THROWS_AS(multiply(b3, flip, single(Perm{{1, 0, 2, 3}})), ShapeMismatch);
}

TEST_CASE("element_sign") {
  for (const auto& g : small_groups()) {
    CHECK(element_sign(g, identity(g)) == 1);
    for (const auto& s : generators(g).simple_reflections) CHECK(element_sign(g, s) == -1);
  }
  const auto b3 = parse_group_spec("B3");
  CHECK(element_sign(b3, single(SignedPerm{{1, 0, 2}, {1, 1, -1}})) == 1);
}

TEST_CASE("rotation_subgroup") {
  const auto h3 = rotation_subgroup(parse_group_spec("H3"));
  CHECK(h3.size() == 60);
  CHECK(rotation_subgroup(parse_group_spec("B3")).size() == 24);
  for (const auto& g : small_groups()) {
    const auto rot = rotation_subgroup(g);
    CHECK(rot.size() * 2 == g.order());
    CHECK(std::find(rot.begin(), rot.end(), identity(g)) != rot.end());
  }
}

TEST_CASE("parabolic") {
  const auto b4 = parse_group_spec("B4");
  const auto emb = parabolic(b4, {1, 3, 4});
  CHECK(emb.subgroup().name() == "A1xB2");
  CHECK(emb.subgroup().order() == 16);
  CHECK(parabolic(b4, {}).subgroup().order() == 1);
  CHECK(parabolic(parse_group_spec("H3"), {1, 2}).subgroup() == parse_group_spec("I2(5)"));
  CHECK(parabolic(parse_group_spec("H3"), {2, 3}).subgroup() == parse_group_spec("A2"));

  // The embedded subgroup is exactly the subgroup generated by those reflections.
  const brute::Group w(b4);
  const auto expected = brute::parabolic_elements(w, {1, 3, 4});
  std::set<std::size_t> got;
  for (const auto& x : enumerate_elements(emb.subgroup())) got.insert(w.of(emb.include(x)));
  CHECK(got == expected);
}

TEST_CASE("duality and opposition") {
  const auto a3 = parse_group_spec("A3");
  CHECK(is_self_dual(a3));
  CHECK_FALSE(is_self_dual(parse_group_spec("B3")));
  CHECK(dual_subset(a3, {1, 2}) == IndexSet{2, 3});
  CHECK(opposition_subset(a3, {1, 2}) == IndexSet{2, 3});
  CHECK(opposition_subset(parse_group_spec("B3"), {1, 2}) == IndexSet{1, 2});
  CHECK(opposition_subset(parse_group_spec("H3"), {1, 3}) == IndexSet{1, 3});
  CHECK_THROWS_AS(dual_map(parse_group_spec("A1xA2"), identity(parse_group_spec("A1xA2"))), std::invalid_argument);
}

TEST_CASE("centre_is_trivial") {
  CHECK_FALSE(centre_is_trivial(Factor::H3()));
  CHECK(centre_is_trivial(Factor::A(3)));
  CHECK_FALSE(centre_is_trivial(Factor::I2(6)));
  CHECK(centre_is_trivial(Factor::I2(5)));
  CHECK_FALSE(centre_is_trivial(Factor::B(3)));
}

TEST_CASE("matrix_rep") {
  const auto b4 = parse_group_spec("B4");
  CHECK(matrix_rep(b4, identity(b4)) == ExactMatrix::identity(4));
  const auto s = generators(b4).simple_reflections;
  CHECK(matrix_rep(b4, s[0]) == from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  CHECK(matrix_rep(b4, s[1]) == from_ints({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(matrix_rep(b4, s[2]) == from_ints({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(matrix_rep(b4, s[3]) == from_ints({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

  for (const char* spec : {"A3", "B3", "H3", "A1xB2"}) {
    const auto g = parse_group_spec(spec);
    for (const auto& r : generators(g).simple_reflections) {
      const auto m = matrix_rep(g, r);
      CHECK(m * m == ExactMatrix::identity(m.size()));
    }
  }
  CHECK_THROWS_AS(matrix_rep(parse_group_spec("I2(5)"), identity(parse_group_spec("I2(5)"))), UnsupportedFactor);
}

TEST_CASE("words") {
  for (const auto& g : small_groups())
    for (const auto& u : enumerate_elements(g)) CHECK(evaluate_word(g, word_for(g, u)) == u);
}

// ---- invariants ----

TEST_CASE("property: Coxeter relations hold for every group of order <= 1000") {
  for (const auto& g : small_groups()) {
    CAPTURE(g.name());
    const auto s = generators(g).simple_reflections;
    for (int i = 1; i <= g.rank(); ++i) {
      CHECK(element_order(g, s[i - 1]) == 2);
      for (int j = i + 1; j <= g.rank(); ++j) {
        const auto m = static_cast<std::uint64_t>(coxeter_m(g, i, j));
        CHECK(element_order(g, multiply(g, s[i - 1], s[j - 1])) == m);
      }
    }
  }
}

TEST_CASE("property: element_sign is a homomorphism (1000 random pairs)") {
  for (const auto& g : small_groups()) {
    const auto elems = enumerate_elements(g);
    for (int k = 0; k < 1000; ++k) {
      const auto& u = elems[brute::pick(elems.size())];
      const auto& v = elems[brute::pick(elems.size())];
      REQUIRE(element_sign(g, multiply(g, u, v)) == element_sign(g, u) * element_sign(g, v));
    }
  }
}

TEST_CASE("property: matrix_rep is a faithful homomorphism") {
  auto check_pairs = [](const GroupDescriptor& g, bool exhaustive) {
    CAPTURE(g.name());
    const auto elems = enumerate_elements(g);
    std::set<ExactMatrix> images;
    for (const auto& u : elems) images.insert(matrix_rep(g, u));
    CHECK(images.size() == elems.size());
    if (exhaustive) {
      for (const auto& u : elems)
        for (const auto& v : elems) REQUIRE(matrix_rep(g, multiply(g, u, v)) == matrix_rep(g, u) * matrix_rep(g, v));
    } else {
      for (int k = 0; k < 500; ++k) {
        const auto& u = elems[brute::pick(elems.size())];
        const auto& v = elems[brute::pick(elems.size())];
        REQUIRE(matrix_rep(g, multiply(g, u, v)) == matrix_rep(g, u) * matrix_rep(g, v));
      }
    }
  };
  check_pairs(parse_group_spec("A3"), true);
  check_pairs(parse_group_spec("B3"), true);
  check_pairs(parse_group_spec("B4"), false);
  check_pairs(parse_group_spec("H3"), false);
}

TEST_CASE("property: dual relabelling is an involution") {
  for (const char* spec : {"A1", "A2", "A3", "A6", "B2", "B3", "B5", "I2(7)", "H3"}) {
    const auto g = parse_group_spec(spec);
    for (int i = 1; i <= g.rank(); ++i) CHECK(dual_index(g, dual_index(g, i)) == i);
  }
  for (const char* spec : {"A3", "A4", "I2(5)"}) {
    const auto g = parse_group_spec(spec);
    for (const auto& u : enumerate_elements(g)) CHECK(dual_map(g, dual_map(g, u)) == u);
  }
}

TEST_CASE("property: parabolic of all generators is the group, of none is trivial") {
  for (const auto& g : small_groups()) {
    IndexSet all(g.rank());
    std::iota(all.begin(), all.end(), 1);
    CHECK(parabolic(g, all).subgroup().order() == g.order());
    CHECK(parabolic(g, {}).subgroup().order() == 1);
  }
}
