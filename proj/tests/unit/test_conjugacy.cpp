#include <doctest.h>

#include "../support/brute.hpp"
#include "ppcount/conjugacy.hpp"
#include "ppcount/published.hpp"

using namespace ppcount;

namespace {

Element single(FactorElement part) { return Element{{std::move(part)}}; }

std::multiset<std::uint64_t> sizes(const std::vector<ClassDatum>& cs) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : cs) out.insert(c.class_size);
  return out;
}

const ClassDatum& class_of(const std::vector<ClassDatum>& cs, const GroupDescriptor& g, const Element& u) {
  const auto inv = class_invariant(g, u);
  for (const auto& c : cs)
    if (c.invariant == inv) return c;
  throw std::logic_error("class not found");
}

// Supported groups of order at most 10 000.
std::vector<GroupDescriptor> groups_to_10000() {
  std::vector<GroupDescriptor> out;
  for (const char* s : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "I2(3)", "I2(4)", "I2(5)",
                        "I2(6)", "I2(9)", "I2(12)", "H3", "A1xA1", "A1xI2(6)", "A1xB2", "A2xA1", "H3xA2", "B3xI2(4)"})
    out.push_back(parse_group_spec(s));
  return out;
}

}  // namespace

TEST_CASE("cycle_type") {
  CHECK(cycle_type(std::vector<int>{0, 1, 2, 3, 4}).counts == std::vector<int>{5, 0, 0, 0, 0});
  CHECK(cycle_type(std::vector<int>{1, 0, 3, 2, 4}).counts == std::vector<int>{1, 2, 0, 0, 0});
  CHECK(cycle_type(std::vector<int>{1, 2, 0, 3, 4}).counts == std::vector<int>{2, 0, 1, 0, 0});
}

TEST_CASE("sym_centralizer and sym_class_size") {
  CHECK(sym_centralizer(5, CycleType{{5, 0, 0, 0, 0}}) == 120);
  CHECK(sym_centralizer(5, CycleType{{3, 1, 0, 0, 0}}) == 12);
  CHECK(sym_centralizer(5, CycleType{{1, 2, 0, 0, 0}}) == 8);
  CHECK(sym_class_size(5, CycleType{{1, 2, 0, 0, 0}}) == 15);
  CHECK_THROWS_AS(sym_centralizer(5, CycleType{{1, 1, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("flip_parity and signed_cycle_type") {
  CHECK(flip_parity(SignedPerm{{0, 1, 2}, {1, 1, 1}}, {0}) == 1);
  CHECK(flip_parity(SignedPerm{{0, 1, 2}, {1, 1, -1}}, {2}) == -1);
  const SignedPerm w{{1, 0, 2}, {1, 1, -1}};  // (001,(12))
  CHECK(flip_parity(w, {0, 1}) == 1);
  CHECK(flip_parity(w, {2}) == -1);

  const auto id = signed_cycle_type(SignedPerm{{0, 1, 2}, {1, 1, 1}});
  CHECK(id.total == std::vector<int>{3, 0, 0});
  CHECK(id.positive == std::vector<int>{3, 0, 0});
  const auto neg = signed_cycle_type(SignedPerm{{0, 1, 2}, {-1, -1, -1}});
  CHECK(neg.total == std::vector<int>{3, 0, 0});
  CHECK(neg.positive == std::vector<int>{0, 0, 0});
  const auto t = signed_cycle_type(w);
  CHECK(t.total == std::vector<int>{1, 1, 0});
  CHECK(t.positive == std::vector<int>{0, 1, 0});
}

TEST_CASE("beta_centralizer") {
  CHECK(beta_centralizer(3, SignedCycleType{{3, 0, 0}, {3, 0, 0}}) == 48);
  CHECK(beta_centralizer(3, SignedCycleType{{3, 0, 0}, {2, 0, 0}}) == 16);
  CHECK(beta_centralizer(3, SignedCycleType{{1, 1, 0}, {1, 1, 0}}) == 8);
}

TEST_CASE("h3_classes") {
  const auto h3 = parse_group_spec("H3");
  const auto cs = h3_classes();
  CHECK(cs.size() == 10);
  CHECK(class_of(cs, h3, identity(h3)).centralizer_size == 120);
  CHECK(class_of(cs, h3, single(H3Elem{{1, 2, 3, 4, 0}, 1})).centralizer_size == 10);
  CHECK(class_of(cs, h3, single(H3Elem{{1, 0, 3, 2, 4}, 1})).centralizer_size == 8);
  CHECK(class_of(cs, h3, single(H3Elem{{0, 1, 2, 3, 4}, -1})).centralizer_size == 120);
}

TEST_CASE("dihedral_classes") {
  CHECK(sizes(dihedral_classes(5)) == std::multiset<std::uint64_t>{1, 2, 2, 5});
  CHECK(sizes(dihedral_classes(6)) == std::multiset<std::uint64_t>{1, 2, 2, 1, 3, 3});
  for (int d = 3; d <= 12; ++d) {
    const auto cs = dihedral_classes(d);
    CHECK(cs.front().centralizer_size == static_cast<std::uint64_t>(2 * d));
  }
}

TEST_CASE("product_classes") {
  const auto s = sym_classes(1);  // A1
  CHECK(sizes(product_classes({conjugacy_classes(GroupDescriptor{}), s})) == sizes(s));
  CHECK(sizes(product_classes({s})) == sizes(s));
  const auto aa = product_classes({s, s});
  CHECK(aa.size() == 4);
  CHECK(sizes(aa) == std::multiset<std::uint64_t>{1, 1, 1, 1});
  CHECK(sizes(product_classes({sym_classes(2), s})) == std::multiset<std::uint64_t>{1, 1, 2, 2, 3, 3});
  CHECK(conjugacy_classes(GroupDescriptor{}).size() == 1);
  CHECK(sizes(conjugacy_classes(parse_group_spec("A1xH3"))).size() == 20);
}

TEST_CASE("conjugacy_classes") {
  CHECK(conjugacy_classes(parse_group_spec("B3")).size() == 10);
  CHECK(conjugacy_classes(parse_group_spec("H3")).size() == 10);
  CHECK(conjugacy_classes(parse_group_spec("A3")).size() == 5);
  const auto cs = conjugacy_classes(parse_group_spec("A4"));
  CHECK(std::is_sorted(cs.begin(), cs.end(), [](const auto& x, const auto& y) { return x.invariant < y.invariant; }));
  CHECK(cs.front().class_size == 1);
}

TEST_CASE("is_conjugate") {
  const auto b2 = parse_group_spec("B2");
  const Element u = single(SignedPerm{{0, 1}, {1, -1}});
  const Element v = single(SignedPerm{{0, 1}, {-1, 1}});
  CHECK(is_conjugate(b2, u, u));
  CHECK(is_conjugate(b2, u, v));
  // Swap with no flips versus swap with both coordinates flipped: both
  // 2-cycles have flip parity +1, and brute force agrees they are conjugate.
  const Element x = single(SignedPerm{{1, 0}, {1, 1}});
  const Element y = single(SignedPerm{{1, 0}, {-1, -1}});
  const brute::Group w(b2);
  bool found = false;
  for (const auto& c : brute::classes(w)) found = found || (c.count(w.of(x)) && c.count(w.of(y)));
  CHECK(found);
  CHECK(is_conjugate(b2, x, y) == found);
  const Element z = single(SignedPerm{{1, 0}, {1, -1}});
  CHECK_FALSE(is_conjugate(b2, x, z));
}

TEST_CASE("class_fusion_count") {
  const auto a3 = parse_group_spec("A3");
  const auto emb = parabolic(a3, {1, 3});
  const auto cs = conjugacy_classes(a3);
  for (const auto& c : cs) {
    if (c.class_size == 1) CHECK(class_fusion_count(a3, emb, c) == 1);
    if (c.invariant == class_invariant(a3, single(Perm{{1, 0, 3, 2}}))) CHECK(class_fusion_count(a3, emb, c) == 1);
  }
  const auto h3 = parse_group_spec("H3");
  const auto dih5 = parabolic(h3, {1, 2});
  const auto hc = conjugacy_classes(h3);
  CHECK(class_fusion_count(h3, dih5, class_of(hc, h3, single(H3Elem{{1, 2, 3, 4, 0}, 1}))) == 2);
  CHECK(class_fusion_count(h3, dih5, class_of(hc, h3, single(H3Elem{{2, 3, 4, 0, 1}, 1}))) == 2);

  // One-pass profile agrees with per-class counts.
  const ConjugacyTable table(h3);
  const auto profile = fusion_profile(table, dih5);
  for (std::size_t c = 0; c < table.classes().size(); ++c)
    CHECK(profile[c] == class_fusion_count(h3, dih5, table.classes()[c]));
}

TEST_CASE("golden: printed centraliser tables") {
  const auto a4 = parse_group_spec("A4");
  const auto& alpha = published::alpha4_table();
  const std::vector<std::vector<int>> alpha_reps{{0, 1, 2, 3, 4}, {1, 0, 2, 3, 4}, {1, 2, 0, 3, 4}, {1, 0, 3, 2, 4}};
  for (std::size_t k = 0; k < alpha_reps.size(); ++k) {
    const auto t = cycle_type(alpha_reps[k]);
    CHECK(static_cast<std::int64_t>(sym_centralizer(5, t)) == alpha.rows[0][k]);
    CHECK(class_of(conjugacy_classes(a4), a4, single(Perm{alpha_reps[k]})).centralizer_size ==
          static_cast<std::uint64_t>(alpha.rows[0][k]));
  }

  const auto& beta = published::beta3_table();
  const std::vector<SignedPerm> beta_reps{{{0, 1, 2}, {1, 1, 1}},  {{1, 0, 2}, {1, 1, 1}},   {{1, 0, 2}, {1, 1, -1}},
                                          {{0, 1, 2}, {1, 1, -1}}, {{0, 1, 2}, {1, -1, -1}}, {{0, 1, 2}, {-1, -1, -1}}};
  for (std::size_t k = 0; k < beta_reps.size(); ++k) {
    CAPTURE(beta.representatives[k]);
    CHECK(static_cast<std::int64_t>(beta_centralizer(3, signed_cycle_type(beta_reps[k]))) == beta.rows[0][k]);
  }

  const auto h3 = parse_group_spec("H3");
  const auto& ht = published::h3_table();
  const std::vector<H3Elem> h3_reps{{{0, 1, 2, 3, 4}, 1}, {{1, 0, 3, 2, 4}, -1}, {{1, 2, 3, 4, 0}, 1}, {{2, 3, 4, 0, 1}, 1}};
  const auto hc = h3_classes();
  for (std::size_t k = 0; k < h3_reps.size(); ++k) {
    const Element u = single(h3_reps[k]);
    CHECK(static_cast<std::int64_t>(class_of(hc, h3, u).centralizer_size) == ht.rows[0][k]);
    CHECK(static_cast<std::int64_t>(class_of(hc, h3, multiply(h3, u, u)).centralizer_size) == ht.rows[2][k]);
  }
}

// ---- invariants ----

TEST_CASE("property: class equation and class_size * centralizer = |G|") {
  for (const auto& g : groups_to_10000()) {
    CAPTURE(g.name());
    std::uint64_t total = 0;
    for (const auto& c : conjugacy_classes(g)) {
      total += c.class_size;
      CHECK(c.class_size * c.centralizer_size == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("property: signed cycle type decides conjugacy in B(n), n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const auto g = GroupDescriptor{{Factor::B(n)}};
    const brute::Group w(g);
    std::vector<std::size_t> cls(w.elems.size());
    const auto bc = brute::classes(w);
    for (std::size_t k = 0; k < bc.size(); ++k)
      for (auto x : bc[k]) cls[x] = k;
    std::vector<SignedCycleType> types;
    for (const auto& e : w.elems) types.push_back(signed_cycle_type(std::get<SignedPerm>(e.parts[0])));
    for (std::size_t x = 0; x < w.elems.size(); ++x)
      for (std::size_t y = 0; y < w.elems.size(); ++y) REQUIRE((types[x] == types[y]) == (cls[x] == cls[y]));
  }
}

TEST_CASE("property: centraliser formulas equal exhaustive counts for |G| <= 500") {
  for (const auto& g : groups_to_10000()) {
    if (g.order() > 500) continue;
    CAPTURE(g.name());
    const brute::Group w(g);
    for (const auto& c : conjugacy_classes(g)) CHECK(c.centralizer_size == brute::centralizer(w, w.of(c.representative)));
  }
  for (int n = 1; n <= 4; ++n) {
    const brute::Group w(GroupDescriptor{{Factor::A(n)}});
    for (std::size_t u = 0; u < w.elems.size(); ++u)
      CHECK(sym_centralizer(n + 1, cycle_type(std::get<Perm>(w.elems[u].parts[0]))) == brute::centralizer(w, u));
  }
}

TEST_CASE("property: class invariants partition the group (|G| <= 500)") {
  for (const auto& g : groups_to_10000()) {
    if (g.order() > 500) continue;
    CAPTURE(g.name());
    const brute::Group w(g);
    const auto cs = conjugacy_classes(g);
    const ConjugacyTable table(g);
    for (const auto& cls : brute::classes(w)) {
      // Every element of a true class maps to the same table class, of the same size.
      const auto k = table.index_of(w.elems[*cls.begin()]);
      CHECK(table.classes()[k].class_size == cls.size());
      for (auto x : cls) REQUIRE(table.index_of(w.elems[x]) == k);
    }
    CHECK(cs.size() == brute::classes(w).size());
  }
}

TEST_CASE("property: the 5-cycle classes of H3 split in two per sign") {
  const auto h3 = parse_group_spec("H3");
  const brute::Group w(h3);
  int five_cycle_classes = 0;
  for (const auto& cls : brute::classes(w)) {
    if (element_order(h3, w.elems[*cls.begin()]) % 5 != 0) continue;
    ++five_cycle_classes;
    CHECK(cls.size() == 12);
  }
  CHECK(five_cycle_classes == 4);
}
