#include "ppcount/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppcount/errors.hpp"

namespace ppcount {

namespace {

std::string braced(const IndexSet& s) { return s.empty() ? std::string("{}") : "{" + format_subset(s) + "}"; }

}  // namespace

std::string to_string(Convention c) { return c == Convention::Full ? "full" : "lang"; }

Convention parse_convention(const std::string& text) {
  if (text == "full") return Convention::Full;
  if (text == "lang") return Convention::Lang;
  throw std::invalid_argument("unknown convention '" + text + "' (expected full or lang)");
}

std::string OrbitType::name() const {
  return "(" + group.name() + ", " + braced(I) + ", " + braced(J) + ")";
}

OrbitType make_orbit_type(const GroupDescriptor& g, IndexSet I, IndexSet J) {
  OrbitType ot{g, normalize_subset(g, std::move(I)), normalize_subset(g, std::move(J))};
  const auto ok = [&](const IndexSet& s) {
    return s.empty() || static_cast<int>(s.size()) == g.rank() - 1;
  };
  if (!ok(ot.I) || !ok(ot.J))
    throw std::invalid_argument("orbit type " + ot.name() + ": each subset must be empty or of size rank-1 = " +
                                std::to_string(g.rank() - 1));
  return ot;
}

CountingContext::CountingContext(GroupDescriptor g, Limits limits)
    : group_(std::move(g)), limits_(limits), table_(group_) {
  const auto& cls = table_.classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const Element& u = cls[c].representative;
    square_.push_back(table_.index_of(multiply(group_, u, u)));
    sign_.push_back(element_sign(group_, u));
    order_.push_back(element_order(group_, u));
    if (is_identity(group_, u)) identity_ = c;
  }
}

std::uint64_t CountingContext::centralizer(std::size_t c) const {
  auto it = overrides_.find(c);
  return it != overrides_.end() ? it->second : classes()[c].centralizer_size;
}

const std::vector<std::uint64_t>& CountingContext::profile(const IndexSet& I) {
  const IndexSet key = normalize_subset(group_, I);
  auto it = fusion_.find(key);
  if (it != fusion_.end()) return it->second;
  const auto emb = parabolic(group_, key);
  auto prof = fusion_profile(table_, emb, limits_);
  std::uint64_t total = 0;
  for (auto x : prof) total += x;
  subgroup_order_[key] = total;
  return fusion_.emplace(key, std::move(prof)).first->second;
}

std::uint64_t CountingContext::subgroup_order(const IndexSet& I) {
  profile(I);
  return subgroup_order_.at(normalize_subset(group_, I));
}

std::uint64_t CountingContext::fusion(const IndexSet& I, std::size_t c) { return profile(I).at(c); }

std::optional<Rational> CountingContext::effective_centralizer(const IndexSet& I, std::size_t c) {
  const std::uint64_t fus = fusion(I, c);
  if (fus == 0) return std::nullopt;
  return Rational(static_cast<std::int64_t>(subgroup_order(I)), static_cast<std::int64_t>(fus));
}

std::uint64_t CountingContext::fixed_endpoints(const IndexSet& I, std::size_t c, Convention conv) {
  if (conv == Convention::Lang && I.empty()) {
    // W* acts regularly on its own orbit of ∅ facets.
    return c == identity_ ? group_.order() / 2 : 0;
  }
  // Counting pairs (x, v) with x fixed by v and v conjugate to u:
  // |Conj(u)| f_I(u) = [W:W_I] |Conj(u) ∩ W_I|.
  const std::uint64_t numerator = centralizer(c) * fusion(I, c);
  const std::uint64_t order_I = subgroup_order(I);
  if (numerator % order_I != 0)
    throw IntegralityError("fixed endpoint count for class " + classes()[c].invariant.label + " is not an integer");
  return numerator / order_I;
}

std::uint64_t CountingContext::fixed_struts(const OrbitType& ot, std::size_t c, Convention conv) {
  const std::uint64_t f = fixed_endpoints(ot.I, c, conv);
  if (!ot.homoorbital()) return f * fixed_endpoints(ot.J, c, conv);
  // Unordered pairs {x, y}, x != y, with u fixing both or swapping them.
  const auto fi = static_cast<std::int64_t>(f);
  const auto f_sq = static_cast<std::int64_t>(fixed_endpoints(ot.I, square_[c], conv));
  const std::int64_t twice = fi * (fi - 2) + f_sq;
  if (twice < 0 || twice % 2 != 0)
    throw IntegralityError("fixed strut count for class " + classes()[c].invariant.label + " is not an integer");
  return twice / 2;
}

std::vector<std::size_t> CountingContext::relevant_classes(const OrbitType& ot) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes().size(); ++c) {
    const bool keep = ot.homoorbital() ? fusion(ot.I, square_[c]) > 0
                                       : fusion(ot.I, c) > 0 && fusion(ot.J, c) > 0;
    if (keep) out.push_back(c);
  }
  return out;
}

bool CountingContext::acts_by_rotations(const OrbitType& ot, Convention conv) const {
  return conv == Convention::Lang && (ot.I.empty() || ot.J.empty());
}

std::uint64_t CountingContext::strut_orbit_count(const OrbitType& ot, Convention conv) {
  const bool rotations = acts_by_rotations(ot, conv);
  std::uint64_t sum = 0;
  for (std::size_t c = 0; c < classes().size(); ++c) {
    if (rotations && sign_[c] != 1) continue;
    sum += classes()[c].class_size * fixed_struts(ot, c, conv);
  }
  const std::uint64_t acting = rotations ? group_.order() / 2 : group_.order();
  if (sum % acting != 0)
    throw IntegralityError("Burnside sum for " + ot.name() + " is " + std::to_string(sum) +
                           ", not divisible by " + std::to_string(acting));
  return sum / acting;
}

std::uint64_t CountingContext::involutions(int sign) {
  std::uint64_t n = 0;
  for (std::size_t c = 0; c < classes().size(); ++c)
    if (order_[c] == 2 && sign_[c] == sign) n += classes()[c].class_size;
  return n;
}

std::uint64_t CountingContext::univalent_count(const OrbitType& ot, Convention conv) {
  if (ot.mixed_empty()) return strut_orbit_count(ot, conv);  // every such strut is univalent
  if (ot.I.empty()) {
    // Seed {e, g}: with g a rotation the endpoint e is univalent iff g is an
    // involution; with g odd both endpoints are always univalent. Under the Lang
    // convention only rotations g occur.
    if (conv == Convention::Lang) return involutions(1);
    const std::uint64_t odd_orbits = (group_.order() / 2 + involutions(-1)) / 2;
    return odd_orbits + involutions(1);
  }
  // Exactly one univalent seed when J is the image of I under the longest element.
  return opposition_subset(group_, ot.I) == ot.J ? 1 : 0;
}

CountReport CountingContext::count(const OrbitType& ot, Convention conv) {
  CountReport r;
  r.orbit_type = ot;
  r.convention = conv;
  r.strut_orbits = strut_orbit_count(ot, conv);
  r.univalent = univalent_count(ot, conv);
  if (r.univalent > r.strut_orbits)
    throw IntegralityError("univalent count exceeds strut orbit count for " + ot.name());
  r.p_count = r.strut_orbits - r.univalent;
  if (ot.homoorbital()) r.quasi_homoorbital = r.strut_orbits + 1;
  if (ot.mixed_empty()) r.reason = "empty-endpoint-univalent";
  return r;
}

MainResultBreakdown CountingContext::main_result(const OrbitType& ot) {
  MainResultBreakdown b;
  b.orbit_type = ot;
  const auto cw = [&](std::size_t c) { return centralizer(c); };
  Rational first(0), second(0);
  for (std::size_t c = 0; c < classes().size(); ++c) {
    const auto label = classes()[c].invariant.label;
    if (!ot.homoorbital()) {
      auto ci = effective_centralizer(ot.I, c);
      auto cj = effective_centralizer(ot.J, c);
      if (!ci || !cj) continue;
      MainResultTerm t{label, cw(c), {*cj, *ci}, Rational(static_cast<std::int64_t>(cw(c))) / (*cj * *ci)};
      first += t.value;
      b.first_sum.push_back(t);
      continue;
    }
    if (auto ci = effective_centralizer(ot.I, c)) {
      MainResultTerm t{label, cw(c), {*ci, *ci}, Rational(static_cast<std::int64_t>(cw(c))) / (*ci * *ci)};
      first += t.value;
      b.first_sum.push_back(t);
    }
    const std::size_t sq = square_[c];
    if (auto ci2 = effective_centralizer(ot.I, sq)) {
      const Rational cu(static_cast<std::int64_t>(cw(c)));
      MainResultTerm t{label, cw(sq), {*ci2, cu}, Rational(static_cast<std::int64_t>(cw(sq))) / (*ci2 * cu)};
      second += t.value;
      b.second_sum.push_back(t);
    }
  }
  b.strut_orbits = ot.homoorbital() ? (first + second) / Rational(2) - Rational(1) : first;
  b.univalent = univalent_count(ot, Convention::Full);
  b.p = b.strut_orbits - Rational(static_cast<std::int64_t>(b.univalent));
  return b;
}

std::uint64_t fixed_endpoints(const GroupDescriptor& g, const ParabolicEmbedding& emb, const ClassDatum& c) {
  CountingContext ctx(g);
  return ctx.fixed_endpoints(emb.generator_subset(), ctx.table().index_of(c.invariant));
}

std::uint64_t fixed_struts(const GroupDescriptor& g, const OrbitType& ot, const ClassDatum& c) {
  CountingContext ctx(g);
  return ctx.fixed_struts(ot, ctx.table().index_of(c.invariant));
}

std::vector<ClassDatum> relevant_classes(const GroupDescriptor& g, const OrbitType& ot) {
  CountingContext ctx(g);
  std::vector<ClassDatum> out;
  for (auto c : ctx.relevant_classes(ot)) out.push_back(ctx.classes()[c]);
  return out;
}

std::uint64_t strut_orbit_count(const GroupDescriptor& g, const OrbitType& ot, Convention conv) {
  return CountingContext(g).strut_orbit_count(ot, conv);
}

std::uint64_t univalent_count(const GroupDescriptor& g, const OrbitType& ot, Convention conv) {
  return CountingContext(g).univalent_count(ot, conv);
}

CountReport polypolyhedron_count(const GroupDescriptor& g, const OrbitType& ot, Convention conv) {
  return CountingContext(g).count(ot, conv);
}

std::uint64_t quasi_homoorbital_count(const GroupDescriptor& g, const IndexSet& I) {
  if (static_cast<int>(I.size()) != g.rank() - 1)
    throw std::invalid_argument("quasi-homoorbital types need |I| = rank-1");
  return strut_orbit_count(g, make_orbit_type(g, I, I), Convention::Lang) + 1;
}

std::string TableRow::label() const {
  if (kind == RowKind::Quasi) return "quasi " + braced(I);
  return braced(I) + " " + braced(J);
}

std::vector<TableRow> rank3_rows() {
  const IndexSet a{1, 2}, b{1, 3}, c{2, 3}, e{};
  return {
      {RowKind::Orbit, a, a}, {RowKind::Quasi, a, a}, {RowKind::Orbit, a, b}, {RowKind::Orbit, a, c},
      {RowKind::Orbit, b, b}, {RowKind::Quasi, b, b}, {RowKind::Orbit, b, c}, {RowKind::Orbit, c, c},
      {RowKind::Quasi, c, c}, {RowKind::Orbit, e, e},
  };
}

std::vector<GroupDescriptor> default_rank3_groups() {
  return {parse_group_spec("A1xI2(6)"), parse_group_spec("A3"), parse_group_spec("B3"), parse_group_spec("H3")};
}

std::uint64_t Rank3Tables::raw_total() const {
  std::uint64_t s = 0;
  for (const auto& c : columns) s += c.raw_total;
  return s;
}

std::uint64_t Rank3Tables::univalent_total() const {
  std::uint64_t s = 0;
  for (const auto& c : columns) s += c.univalent_total;
  return s;
}

std::uint64_t Rank3Tables::non_univalent_total() const {
  std::uint64_t s = 0;
  for (const auto& c : columns) s += c.non_univalent_total;
  return s;
}

Rank3Tables rank3_tables(const std::vector<GroupDescriptor>& groups, Convention conv, const Limits& limits) {
  Rank3Tables t;
  t.rows = rank3_rows();
  t.convention = conv;
  for (const auto& g : groups) {
    if (g.rank() != 3) throw std::invalid_argument("rank-3 tables need rank-3 groups; " + g.name() + " has rank " +
                                                   std::to_string(g.rank()));
    CountingContext ctx(g, limits);
    Rank3Column col;
    col.group = g;
    std::uint64_t last_homo = 0;
    for (const auto& row : t.rows) {
      if (row.kind == RowKind::Quasi) {
        col.raw.push_back(last_homo + 1);
        col.univalent.push_back(0);
        col.non_univalent.push_back(0);
        col.raw_total += last_homo + 1;
        continue;
      }
      const auto r = ctx.count(make_orbit_type(g, row.I, row.J), conv);
      if (row.I == row.J) last_homo = r.strut_orbits;
      col.raw.push_back(r.strut_orbits);
      col.univalent.push_back(r.univalent);
      col.non_univalent.push_back(r.p_count);
      col.raw_total += r.strut_orbits;
      col.univalent_total += r.univalent;
      col.non_univalent_total += r.p_count;
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

}  // namespace ppcount
