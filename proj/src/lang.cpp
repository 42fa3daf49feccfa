#include "ppcount/lang.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ppcount/errors.hpp"

namespace ppcount {

namespace {

constexpr std::int64_t kGenericCoefficients[] = {1, 3, 11, 41, 167, 677, 2729, 10949};

std::size_t factor_dimension(const Factor& f) {
  switch (f.family) {
    case Family::A:
      return static_cast<std::size_t>(f.param) + 1;
    case Family::B:
      return static_cast<std::size_t>(f.param);
    case Family::H3:
      return 3;
    case Family::I2:
      break;
  }
  throw UnsupportedFactor("no exact coordinates for " + f.name());
}

ExactVector factor_weight(const Factor& f, int k) {
  if (f.family == Family::A) {
    ExactVector w(f.param + 1);
    for (int c = k; c <= f.param; ++c) w[c] = 1;
    return w;
  }
  // w = sum_j c_j alpha_j with Gram(alpha) c = e_k.
  const auto roots = simple_roots(f);
  const std::size_t n = roots.size();
  ExactMatrix gram(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(roots[i], roots[j]);
  ExactVector rhs(n);
  rhs[k - 1] = 1;
  const ExactVector c = solve(gram, rhs);
  ExactVector w(factor_dimension(f));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t x = 0; x < w.size(); ++x) w[x] += c[j] * roots[j][x];
  return w;
}

QSqrt5 squared_distance(const ExactVector& p, const ExactVector& q) {
  const ExactVector d = p - q;
  return dot(d, d);
}

std::set<ExactVector> orbit_set(const GroupDescriptor& g, const ExactVector& p, bool rotations_only,
                                const Limits& limits) {
  std::set<ExactVector> out;
  for (const auto& w : enumerate_elements(g, limits)) {
    if (rotations_only && element_sign(g, w) != 1) continue;
    out.insert(matrix_rep(g, w).apply(p));
  }
  return out;
}

}  // namespace

ExactVector fundamental_weight(const GroupDescriptor& g, int k) {
  const auto [f, local] = g.locate(k);
  ExactVector out;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i == f) {
      const ExactVector w = factor_weight(g.factors[i], local);
      out.insert(out.end(), w.begin(), w.end());
    } else {
      out.resize(out.size() + factor_dimension(g.factors[i]));
    }
  }
  return out;
}

ExactVector facet_point(const GroupDescriptor& g, const IndexSet& subset) {
  const IndexSet I = normalize_subset(g, subset);
  std::size_t dim = 0;
  for (const auto& f : g.factors) dim += factor_dimension(f);
  ExactVector p(dim);
  const bool generic = static_cast<int>(I.size()) != g.rank() - 1;
  int missing = 0;
  for (int k = 1; k <= g.rank(); ++k) {
    if (std::binary_search(I.begin(), I.end(), k)) continue;
    const std::size_t slot = static_cast<std::size_t>(missing++);
    if (generic && slot >= std::size(kGenericCoefficients))
      throw std::invalid_argument("no generic coefficients for rank " + std::to_string(g.rank()));
    const QSqrt5 coef = generic ? QSqrt5(kGenericCoefficients[slot]) : QSqrt5(1);
    const ExactVector w = fundamental_weight(g, k);
    for (std::size_t x = 0; x < dim; ++x) p[x] += coef * w[x];
  }
  return p;
}

std::vector<ExactVector> facet_orbit(const GroupDescriptor& g, const IndexSet& I, bool rotations_only,
                                     const Limits& limits) {
  const auto s = orbit_set(g, facet_point(g, I), rotations_only, limits);
  return {s.begin(), s.end()};
}

std::uint64_t lang_length_classes(const OrbitType& ot, Convention conv, const Limits& limits) {
  const GroupDescriptor& g = ot.group;
  const ExactVector p = facet_point(g, ot.I);
  const bool restrict_j = conv == Convention::Lang && ot.J.empty();
  std::set<QSqrt5> lengths;
  for (const auto& q : facet_orbit(g, ot.J, restrict_j, limits)) {
    const QSqrt5 d = squared_distance(p, q);
    if (!d.is_zero()) lengths.insert(d);
  }
  return lengths.size();
}

LangCounterexample lang_counterexample_check(const Limits& limits) {
  const GroupDescriptor b4 = parse_group_spec("B4");
  LangCounterexample r;
  r.a = {0, 0, 1, 1};
  r.b = {1, 1, 0, 0};
  r.c = {0, 0, 1, -1};
  r.ab_squared = squared_distance(r.a, r.b);
  r.ac_squared = squared_distance(r.a, r.c);
  r.equal_lengths = r.ab_squared == r.ac_squared;

  const std::set<ExactVector> target{r.a, r.c};
  bool found = false;
  for (const auto& w : enumerate_elements(b4, limits)) {
    const ExactMatrix m = matrix_rep(b4, w);
    ++r.elements_checked;
    if (std::set<ExactVector>{m.apply(r.a), m.apply(r.b)} == target) found = true;
  }
  r.distinct_orbits = !found;
  r.support_note =
      "signed permutations map coordinate supports to coordinate supports; "
      "a and b have disjoint supports {3,4} and {1,2}, while a and c share the support {3,4}";

  const OrbitType ot = make_orbit_type(b4, {1, 3, 4}, {1, 3, 4});
  r.length_classes = lang_length_classes(ot, Convention::Lang, limits);
  r.true_orbits = strut_orbit_count(b4, ot, Convention::Lang);

  if (!r.equal_lengths) throw std::logic_error("B4 counterexample: |a-b|^2 != |a-c|^2");
  if (!r.distinct_orbits) throw std::logic_error("B4 counterexample: {a,b} and {a,c} are in the same orbit");
  return r;
}

}  // namespace ppcount
