#include "ppcount/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "factor_ops.hpp"
#include "ppcount/errors.hpp"
#include "ppcount/quadratic.hpp"

namespace ppcount {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& image) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !seen[j]; j = image[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Partitions of m in non-increasing order, generated in reverse lexicographic order.
void partitions(int m, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (m == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(m, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(m - p, p, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(m, m, cur, out);
  return out;
}

// Class codes. Each factor contributes a fixed-length block starting with a
// family tag, so concatenated codes of a product are unambiguous.

std::vector<int> sym_code(const CycleType& t) {
  std::vector<int> code{0};
  for (auto it = t.counts.rbegin(); it != t.counts.rend(); ++it) code.push_back(*it);
  return code;
}

std::vector<int> beta_code(const SignedCycleType& t) {
  std::vector<int> code{1};
  for (std::size_t j = t.total.size(); j-- > 0;) {
    code.push_back(t.total[j]);
    code.push_back(t.total[j] - t.positive[j]);
  }
  return code;
}

/// 0 identity, 1 double transposition, 2 three-cycle, 3 and 4 the two five-cycle classes.
int a5_class(const std::array<int, 5>& p) {
  const CycleType t = cycle_type(std::vector<int>(p.begin(), p.end()));
  if (t.counts[0] == 5) return 0;
  if (t.counts[1] == 2) return 1;
  if (t.counts[2] == 1) return 2;
  // 5-cycles sigma: the A5-class is the parity of i -> sigma^i(0), which changes
  // only under odd conjugators.
  std::vector<int> walk(5);
  int x = 0;
  for (int i = 0; i < 5; ++i) {
    walk[i] = x;
    x = p[x];
  }
  return detail::permutation_parity(walk) == 1 ? 3 : 4;
}

constexpr std::array<std::array<int, 5>, 5> kA5Reps{{
    {0, 1, 2, 3, 4},
    {1, 0, 3, 2, 4},
    {1, 2, 0, 3, 4},
    {1, 2, 3, 4, 0},
    {2, 3, 4, 0, 1},  // square of the previous one
}};
constexpr std::array<std::uint64_t, 5> kA5Centralizers{60, 4, 3, 5, 5};

std::vector<int> factor_code(const Factor& f, const FactorElement& e) {
  switch (f.family) {
    case Family::A:
      return sym_code(cycle_type(std::get<Perm>(e)));
    case Family::B:
      return beta_code(signed_cycle_type(std::get<SignedPerm>(e)));
    case Family::I2: {
      const auto& d = std::get<DihedralElem>(e);
      if (!d.reflection) return {2, 0, std::min(d.rotation, f.param - d.rotation)};
      return {2, 1, f.param % 2 == 0 ? d.rotation % 2 : 0};
    }
    case Family::H3: {
      const auto& h = std::get<H3Elem>(e);
      return {3, a5_class(h.perm), h.sign < 0 ? 1 : 0};
    }
  }
  return {};
}

Perm sym_representative(const std::vector<int>& parts) {
  Perm p;
  int at = 0;
  for (int len : parts) {
    for (int t = 0; t < len; ++t) p.image.push_back(at + (t + 1) % len);
    at += len;
  }
  return p;
}

/// Cycles on consecutive coordinates, longest first and positive before negative;
/// a negative cycle carries its single minus sign on its first coordinate.
SignedPerm beta_representative(const std::vector<std::pair<int, int>>& cycles) {
  SignedPerm s;
  int at = 0;
  for (auto [len, negative] : cycles) {
    for (int t = 0; t < len; ++t) {
      s.image.push_back(at + (t + 1) % len);
      s.sign.push_back(t == 0 && negative ? -1 : 1);
    }
    at += len;
  }
  return s;
}

FactorElement factor_representative(const Factor& f, const std::vector<int>& code) {
  switch (f.family) {
    case Family::A: {
      std::vector<int> parts;
      const int n = f.param + 1;
      for (int j = n; j >= 1; --j)
        for (int c = 0; c < code[1 + n - j]; ++c) parts.push_back(j);
      return sym_representative(parts);
    }
    case Family::B: {
      std::vector<std::pair<int, int>> cycles;
      const int n = f.param;
      for (int j = n; j >= 1; --j) {
        const int total = code[1 + 2 * (n - j)];
        const int negative = code[2 + 2 * (n - j)];
        for (int c = 0; c < total - negative; ++c) cycles.push_back({j, 0});
        for (int c = 0; c < negative; ++c) cycles.push_back({j, 1});
      }
      return beta_representative(cycles);
    }
    case Family::I2:
      return code[1] == 0 ? DihedralElem{code[2], 0} : DihedralElem{code[2], 1};
    case Family::H3:
      return H3Elem{kA5Reps[code[1]], code[2] ? -1 : 1};
  }
  return Perm{};
}

ClassDatum make_datum(FactorElement rep, std::uint64_t order, std::uint64_t centralizer, std::vector<int> code) {
  ClassDatum c;
  c.representative = Element{{rep}};
  c.centralizer_size = centralizer;
  c.class_size = order / centralizer;
  c.invariant = ClassInvariant{std::move(code), to_string(rep)};
  return c;
}

void sort_classes(std::vector<ClassDatum>& classes) {
  std::sort(classes.begin(), classes.end(),
            [](const ClassDatum& a, const ClassDatum& b) { return a.invariant < b.invariant; });
}

}  // namespace

int CycleType::letters() const {
  int s = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) s += static_cast<int>(j + 1) * counts[j];
  return s;
}

int SignedCycleType::letters() const {
  int s = 0;
  for (std::size_t j = 0; j < total.size(); ++j) s += static_cast<int>(j + 1) * total[j];
  return s;
}

CycleType cycle_type(const std::vector<int>& image) {
  CycleType t;
  t.counts.assign(image.size(), 0);
  for (const auto& c : cycles_of(image)) ++t.counts[c.size() - 1];
  return t;
}

CycleType cycle_type(const Perm& p) { return cycle_type(p.image); }

std::uint64_t sym_centralizer(int n, const CycleType& t) {
  if (t.letters() != n) throw std::invalid_argument("cycle type does not partition the letters");
  std::uint64_t r = 1;
  for (std::size_t j = 0; j < t.counts.size(); ++j) {
    for (int k = 0; k < t.counts[j]; ++k) r *= static_cast<std::uint64_t>(j + 1);
    r *= factorial(t.counts[j]);
  }
  return r;
}

std::uint64_t sym_class_size(int n, const CycleType& t) { return factorial(n) / sym_centralizer(n, t); }

int flip_parity(const SignedPerm& w, const std::vector<int>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("flip parity of an empty cycle");
  // The cycle must be exactly the orbit of its first letter.
  std::vector<int> orbit;
  int x = cycle.front();
  do {
    orbit.push_back(x);
    x = w.image.at(x);
  } while (x != cycle.front() && orbit.size() <= w.image.size());
  auto a = orbit, b = cycle;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("index set is not a cycle of the signed permutation");
  int parity = 1;
  for (int k : cycle) parity *= w.sign[k];
  return parity;
}

SignedCycleType signed_cycle_type(const SignedPerm& w) {
  SignedCycleType t;
  t.total.assign(w.image.size(), 0);
  t.positive.assign(w.image.size(), 0);
  for (const auto& c : cycles_of(w.image)) {
    ++t.total[c.size() - 1];
    if (flip_parity(w, c) == 1) ++t.positive[c.size() - 1];
  }
  return t;
}

std::uint64_t beta_centralizer(int n, const SignedCycleType& t) {
  if (t.letters() != n || t.positive.size() != t.total.size())
    throw std::invalid_argument("signed cycle type does not partition the coordinates");
  Rational r(1);
  for (int k = 0; k < n; ++k) r *= 2;
  for (std::size_t idx = 0; idx < t.total.size(); ++idx) {
    const int j = static_cast<int>(idx) + 1;
    const int A = t.total[idx];
    const int B = t.positive[idx];
    if (B < 0 || B > A) throw std::invalid_argument("signed cycle type has B_j outside [0, A_j]");
    r *= Rational(static_cast<std::int64_t>(factorial(B) * factorial(A - B)));
    const Rational per_cycle(j, std::int64_t{1} << (j - 1));
    for (int c = 0; c < A; ++c) r *= per_cycle;
  }
  if (r.denominator() != 1 || r.numerator() <= 0)
    throw IntegralityError("beta centralizer formula produced a non-integer");
  return static_cast<std::uint64_t>(r.numerator());
}

ClassInvariant class_invariant(const GroupDescriptor& g, const Element& u) {
  check_shape(g, u);
  ClassInvariant inv;
  Element rep;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    auto code = factor_code(g.factors[f], u.parts[f]);
    rep.parts.push_back(factor_representative(g.factors[f], code));
    inv.code.insert(inv.code.end(), code.begin(), code.end());
  }
  inv.label = to_string(rep);
  return inv;
}

std::vector<ClassDatum> sym_classes(int n) {
  const Factor f = Factor::A(n);
  std::vector<ClassDatum> out;
  for (const auto& parts : partitions_of(n + 1)) {
    Perm rep = sym_representative(parts);
    const CycleType t = cycle_type(rep);
    out.push_back(make_datum(rep, f.order(), sym_centralizer(n + 1, t), sym_code(t)));
  }
  sort_classes(out);
  return out;
}

std::vector<ClassDatum> beta_classes(int n) {
  const Factor f = Factor::B(n);
  std::vector<ClassDatum> out;
  for (const auto& parts : partitions_of(n)) {
    // Each cycle length j with multiplicity A_j splits by the number of negative cycles.
    std::vector<std::pair<int, int>> lengths;  // (j, A_j), longest first
    for (int p : parts) {
      if (lengths.empty() || lengths.back().first != p) lengths.push_back({p, 0});
      ++lengths.back().second;
    }
    std::vector<int> negatives(lengths.size(), 0);
    while (true) {
      std::vector<std::pair<int, int>> cycles;
      for (std::size_t k = 0; k < lengths.size(); ++k) {
        for (int c = 0; c < lengths[k].second - negatives[k]; ++c) cycles.push_back({lengths[k].first, 0});
        for (int c = 0; c < negatives[k]; ++c) cycles.push_back({lengths[k].first, 1});
      }
      SignedPerm rep = beta_representative(cycles);
      const SignedCycleType t = signed_cycle_type(rep);
      out.push_back(make_datum(rep, f.order(), beta_centralizer(n, t), beta_code(t)));
      std::size_t k = 0;
      while (k < lengths.size() && negatives[k] == lengths[k].second) negatives[k++] = 0;
      if (k == lengths.size()) break;
      ++negatives[k];
    }
  }
  sort_classes(out);
  return out;
}

std::vector<ClassDatum> dihedral_classes(int d) {
  const Factor f = Factor::I2(d);
  const std::uint64_t order = f.order();
  std::vector<ClassDatum> out;
  for (int k = 0; 2 * k <= d; ++k) {
    const bool central = k == 0 || 2 * k == d;
    out.push_back(make_datum(DihedralElem{k, 0}, order, central ? order : static_cast<std::uint64_t>(d), {2, 0, k}));
  }
  if (d % 2 == 1) {
    out.push_back(make_datum(DihedralElem{0, 1}, order, 2, {2, 1, 0}));
  } else {
    out.push_back(make_datum(DihedralElem{0, 1}, order, 4, {2, 1, 0}));
    out.push_back(make_datum(DihedralElem{1, 1}, order, 4, {2, 1, 1}));
  }
  sort_classes(out);
  return out;
}

std::vector<ClassDatum> h3_classes() {
  std::vector<ClassDatum> out;
  for (int c = 0; c < 5; ++c)
    for (int s = 0; s < 2; ++s)
      out.push_back(make_datum(H3Elem{kA5Reps[c], s ? -1 : 1}, 120, 2 * kA5Centralizers[c], {3, c, s}));
  sort_classes(out);
  return out;
}

std::vector<ClassDatum> product_classes(const std::vector<std::vector<ClassDatum>>& parts) {
  std::vector<ClassDatum> out{ClassDatum{Element{}, 1, 1, ClassInvariant{{}, ""}}};
  for (const auto& factor_classes : parts) {
    std::vector<ClassDatum> next;
    for (const auto& prefix : out)
      for (const auto& c : factor_classes) {
        ClassDatum d = prefix;
        d.representative.parts.insert(d.representative.parts.end(), c.representative.parts.begin(),
                                      c.representative.parts.end());
        d.class_size *= c.class_size;
        d.centralizer_size *= c.centralizer_size;
        d.invariant.code.insert(d.invariant.code.end(), c.invariant.code.begin(), c.invariant.code.end());
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  for (auto& d : out) d.invariant.label = to_string(d.representative);
  sort_classes(out);
  return out;
}

std::vector<ClassDatum> conjugacy_classes(const GroupDescriptor& g) {
  std::vector<std::vector<ClassDatum>> parts;
  for (const auto& f : g.factors) {
    switch (f.family) {
      case Family::A:
        parts.push_back(sym_classes(f.param));
        break;
      case Family::B:
        parts.push_back(beta_classes(f.param));
        break;
      case Family::I2:
        parts.push_back(dihedral_classes(f.param));
        break;
      case Family::H3:
        parts.push_back(h3_classes());
        break;
    }
  }
  return product_classes(parts);
}

bool is_conjugate(const GroupDescriptor& g, const Element& u, const Element& v) {
  return class_invariant(g, u).code == class_invariant(g, v).code;
}

ConjugacyTable::ConjugacyTable(GroupDescriptor g) : group_(std::move(g)), classes_(conjugacy_classes(group_)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) index_[classes_[i].invariant.code] = i;
}

std::size_t ConjugacyTable::index_of(const ClassInvariant& inv) const {
  auto it = index_.find(inv.code);
  if (it == index_.end()) throw std::logic_error("class invariant not found in the class table");
  return it->second;
}

std::size_t ConjugacyTable::index_of(const Element& u) const { return index_of(class_invariant(group_, u)); }

std::vector<std::uint64_t> fusion_profile(const ConjugacyTable& table, const ParabolicEmbedding& emb,
                                          const Limits& limits) {
  std::vector<std::uint64_t> counts(table.classes().size(), 0);
  for (const auto& x : enumerate_elements(emb.subgroup(), limits)) ++counts[table.index_of(emb.include(x))];
  return counts;
}

std::uint64_t class_fusion_count(const GroupDescriptor& g, const ParabolicEmbedding& emb, const ClassDatum& c,
                                 const Limits& limits) {
  std::uint64_t n = 0;
  for (const auto& x : enumerate_elements(emb.subgroup(), limits))
    if (is_conjugate(g, emb.include(x), c.representative)) ++n;
  return n;
}

}  // namespace ppcount
