#include "ppcount/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "factor_ops.hpp"
#include "ppcount/errors.hpp"

namespace ppcount {

namespace detail {

int permutation_parity(const std::vector<int>& image) {
  const std::size_t n = image.size();
  std::vector<bool> seen(n, false);
  int parity = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

namespace {

bool is_permutation_image(const std::vector<int>& image, std::size_t n) {
  if (image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : image) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

const Perm& as_perm(const FactorElement& e) { return std::get<Perm>(e); }
const SignedPerm& as_signed(const FactorElement& e) { return std::get<SignedPerm>(e); }
const DihedralElem& as_dihedral(const FactorElement& e) { return std::get<DihedralElem>(e); }
const H3Elem& as_h3(const FactorElement& e) { return std::get<H3Elem>(e); }

int mod(int a, int d) { return ((a % d) + d) % d; }

std::array<int, 5> compose5(const std::array<int, 5>& a, const std::array<int, 5>& b) {
  std::array<int, 5> r{};
  for (int i = 0; i < 5; ++i) r[i] = a[b[i]];
  return r;
}

/// Shortest words for every H3 element, by breadth-first search from the identity.
const std::unordered_map<std::vector<int>, std::vector<int>, EncodingHash>& h3_words() {
  static const auto table = [] {
    std::unordered_map<std::vector<int>, std::vector<int>, EncodingHash> words;
    const Factor h3 = Factor::H3();
    auto key = [](const FactorElement& e) { return encode(Element{{e}}); };
    FactorElement id = factor_identity(h3);
    words[key(id)] = {};
    std::deque<FactorElement> queue{id};
    while (!queue.empty()) {
      FactorElement cur = queue.front();
      queue.pop_front();
      const std::vector<int> base = words.at(key(cur));
      for (int j = 1; j <= 3; ++j) {
        FactorElement next = factor_multiply(h3, cur, factor_generator(h3, j));
        auto k = key(next);
        if (words.count(k)) continue;
        auto w = base;
        w.push_back(j);
        words.emplace(std::move(k), std::move(w));
        queue.push_back(next);
      }
    }
    return words;
  }();
  return table;
}

}  // namespace

void check_factor_element(const Factor& f, const FactorElement& e) {
  const std::string where = " for factor " + f.name();
  switch (f.family) {
    case Family::A: {
      if (!std::holds_alternative<Perm>(e)) throw ShapeMismatch("expected a permutation" + where);
      if (!is_permutation_image(as_perm(e).image, static_cast<std::size_t>(f.param + 1)))
        throw ShapeMismatch("malformed permutation" + where);
      return;
    }
    case Family::B: {
      if (!std::holds_alternative<SignedPerm>(e)) throw ShapeMismatch("expected a signed permutation" + where);
      const auto& s = as_signed(e);
      if (!is_permutation_image(s.image, static_cast<std::size_t>(f.param)) ||
          s.sign.size() != static_cast<std::size_t>(f.param) ||
          std::any_of(s.sign.begin(), s.sign.end(), [](int x) { return x != 1 && x != -1; }))
        throw ShapeMismatch("malformed signed permutation" + where);
      return;
    }
    case Family::I2: {
      if (!std::holds_alternative<DihedralElem>(e)) throw ShapeMismatch("expected a dihedral element" + where);
      const auto& d = as_dihedral(e);
      if (d.rotation < 0 || d.rotation >= f.param || (d.reflection != 0 && d.reflection != 1))
        throw ShapeMismatch("malformed dihedral element" + where);
      return;
    }
    case Family::H3: {
      if (!std::holds_alternative<H3Elem>(e)) throw ShapeMismatch("expected an H3 element" + where);
      const auto& h = as_h3(e);
      std::vector<int> img(h.perm.begin(), h.perm.end());
      if (!is_permutation_image(img, 5) || permutation_parity(img) != 1 || (h.sign != 1 && h.sign != -1))
        throw ShapeMismatch("malformed H3 element" + where);
      return;
    }
  }
}

FactorElement factor_identity(const Factor& f) {
  switch (f.family) {
    case Family::A: {
      Perm p;
      p.image.resize(f.param + 1);
      std::iota(p.image.begin(), p.image.end(), 0);
      return p;
    }
    case Family::B: {
      SignedPerm p;
      p.image.resize(f.param);
      std::iota(p.image.begin(), p.image.end(), 0);
      p.sign.assign(f.param, 1);
      return p;
    }
    case Family::I2:
      return DihedralElem{};
    case Family::H3:
      return H3Elem{};
  }
  return Perm{};
}

FactorElement factor_multiply(const Factor& f, const FactorElement& a, const FactorElement& b) {
  switch (f.family) {
    case Family::A: {
      const auto& u = as_perm(a).image;
      const auto& v = as_perm(b).image;
      Perm r;
      r.image.resize(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) r.image[i] = u[v[i]];
      return r;
    }
    case Family::B: {
      // (u v)(e_i) = v.sign[i] * u(e_{v(i)})
      const auto& u = as_signed(a);
      const auto& v = as_signed(b);
      SignedPerm r;
      r.image.resize(v.image.size());
      r.sign.resize(v.image.size());
      for (std::size_t i = 0; i < v.image.size(); ++i) {
        r.image[i] = u.image[v.image[i]];
        r.sign[i] = v.sign[i] * u.sign[v.image[i]];
      }
      return r;
    }
    case Family::I2: {
      const auto& u = as_dihedral(a);
      const auto& v = as_dihedral(b);
      const int k = u.reflection ? u.rotation - v.rotation : u.rotation + v.rotation;
      return DihedralElem{mod(k, f.param), u.reflection ^ v.reflection};
    }
    case Family::H3: {
      const auto& u = as_h3(a);
      const auto& v = as_h3(b);
      return H3Elem{compose5(u.perm, v.perm), u.sign * v.sign};
    }
  }
  return a;
}

FactorElement factor_inverse(const Factor& f, const FactorElement& a) {
  switch (f.family) {
    case Family::A: {
      const auto& u = as_perm(a).image;
      Perm r;
      r.image.resize(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) r.image[u[i]] = static_cast<int>(i);
      return r;
    }
    case Family::B: {
      const auto& u = as_signed(a);
      SignedPerm r;
      r.image.resize(u.image.size());
      r.sign.resize(u.image.size());
      for (std::size_t i = 0; i < u.image.size(); ++i) {
        r.image[u.image[i]] = static_cast<int>(i);
        r.sign[u.image[i]] = u.sign[i];
      }
      return r;
    }
    case Family::I2: {
      const auto& u = as_dihedral(a);
      if (u.reflection) return u;
      return DihedralElem{mod(-u.rotation, f.param), 0};
    }
    case Family::H3: {
      const auto& u = as_h3(a);
      H3Elem r;
      for (int i = 0; i < 5; ++i) r.perm[u.perm[i]] = i;
      r.sign = u.sign;
      return r;
    }
  }
  return a;
}

int factor_sign(const Factor& f, const FactorElement& a) {
  switch (f.family) {
    case Family::A:
      return permutation_parity(as_perm(a).image);
    case Family::B: {
      const auto& u = as_signed(a);
      int s = permutation_parity(u.image);
      for (int x : u.sign) s *= x;
      return s;
    }
    case Family::I2:
      return as_dihedral(a).reflection ? -1 : 1;
    case Family::H3:
      return as_h3(a).sign;
  }
  return 1;
}

FactorElement factor_generator(const Factor& f, int j) {
  if (j < 1 || j > f.rank()) throw RangeError("generator index out of range for " + f.name());
  switch (f.family) {
    case Family::A: {
      auto p = std::get<Perm>(factor_identity(f));
      std::swap(p.image[j - 1], p.image[j]);
      return p;
    }
    case Family::B: {
      // s_j (j < n) swaps coordinates n-j and n-j+1; s_n negates coordinate 1.
      auto p = std::get<SignedPerm>(factor_identity(f));
      const int n = f.param;
      if (j == n) {
        p.sign[0] = -1;
      } else {
        std::swap(p.image[n - j - 1], p.image[n - j]);
      }
      return p;
    }
    case Family::I2:
      return j == 1 ? DihedralElem{0, 1} : DihedralElem{1, 1};
    case Family::H3:
      return H3Elem{kH3Involutions[j - 1], -1};
  }
  return factor_identity(f);
}

std::vector<FactorElement> factor_elements(const Factor& f) {
  std::vector<FactorElement> out;
  switch (f.family) {
    case Family::A: {
      std::vector<int> p(f.param + 1);
      std::iota(p.begin(), p.end(), 0);
      do {
        out.push_back(Perm{p});
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::B: {
      const int n = f.param;
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          SignedPerm s{p, std::vector<int>(n, 1)};
          // Encoding puts sign bits after the image, most significant coordinate first.
          for (int i = 0; i < n; ++i)
            if (mask & (1u << (n - 1 - i))) s.sign[i] = -1;
          out.push_back(std::move(s));
        }
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::I2:
      for (int refl = 0; refl < 2; ++refl)
        for (int k = 0; k < f.param; ++k) out.push_back(DihedralElem{k, refl});
      break;
    case Family::H3: {
      std::array<int, 5> p{0, 1, 2, 3, 4};
      do {
        if (permutation_parity_of(p) != 1) continue;
        out.push_back(H3Elem{p, 1});
        out.push_back(H3Elem{p, -1});
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
  }
  return out;
}

std::vector<int> factor_word(const Factor& f, const FactorElement& a) {
  std::vector<int> word;
  switch (f.family) {
    case Family::A: {
      // Peel off right descents: w = (w s_i) s_i whenever w(i) > w(i+1).
      auto p = as_perm(a).image;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          if (p[i] > p[i + 1]) {
            std::swap(p[i], p[i + 1]);
            word.push_back(static_cast<int>(i) + 1);
            changed = true;
          }
        }
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    case Family::B: {
      // Simple roots: alpha_j = e_{n-j+1} - e_{n-j} (j < n), alpha_n = e_1. A root is
      // positive iff its highest nonzero coordinate is positive; s_j is a right
      // descent of w iff w(alpha_j) is negative.
      const int n = f.param;
      FactorElement cur = a;
      while (true) {
        const auto& w = as_signed(cur);
        int descent = 0;
        for (int j = 1; j <= n && !descent; ++j) {
          std::vector<int> image(n, 0);
          if (j == n) {
            image[w.image[0]] += w.sign[0];
          } else {
            image[w.image[n - j]] += w.sign[n - j];
            image[w.image[n - j - 1]] -= w.sign[n - j - 1];
          }
          for (int c = n - 1; c >= 0; --c) {
            if (image[c] == 0) continue;
            if (image[c] < 0) descent = j;
            break;
          }
        }
        if (!descent) break;
        word.push_back(descent);
        cur = factor_multiply(f, cur, factor_generator(f, descent));
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    case Family::I2: {
      const auto& d = as_dihedral(a);
      for (int k = 0; k < d.rotation; ++k) {
        word.push_back(2);
        word.push_back(1);
      }
      if (d.reflection) word.push_back(1);
      return word;
    }
    case Family::H3:
      return h3_words().at(encode(Element{{a}}));
  }
  return word;
}

int factor_m(const Factor& f, int i, int j) {
  if (i < 1 || j < 1 || i > f.rank() || j > f.rank()) throw RangeError("generator index out of range");
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  switch (f.family) {
    case Family::A:
      return j == i + 1 ? 3 : 2;
    case Family::B:
      if (j != i + 1) return 2;
      return j == f.param ? 4 : 3;
    case Family::I2:
      return f.param;
    case Family::H3:
      if (i == 1 && j == 2) return 5;
      if (i == 2 && j == 3) return 3;
      return 2;
  }
  return 2;
}

}  // namespace detail

using namespace detail;

Limits Limits::from_environment() {
  Limits l;
  if (const char* env = std::getenv("PPCOUNT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) l.group_order_cap = v;
  }
  return l;
}

void check_shape(const GroupDescriptor& g, const Element& u) {
  if (u.parts.size() != g.factors.size())
    throw ShapeMismatch("element has " + std::to_string(u.parts.size()) + " parts but " + g.name() +
                        " has " + std::to_string(g.factors.size()) + " factors");
  for (std::size_t i = 0; i < u.parts.size(); ++i) check_factor_element(g.factors[i], u.parts[i]);
}

Element identity(const GroupDescriptor& g) {
  Element e;
  for (const auto& f : g.factors) e.parts.push_back(factor_identity(f));
  return e;
}

Element multiply(const GroupDescriptor& g, const Element& u, const Element& v) {
  check_shape(g, u);
  check_shape(g, v);
  Element r;
  r.parts.reserve(u.parts.size());
  for (std::size_t i = 0; i < u.parts.size(); ++i)
    r.parts.push_back(factor_multiply(g.factors[i], u.parts[i], v.parts[i]));
  return r;
}

Element inverse(const GroupDescriptor& g, const Element& u) {
  check_shape(g, u);
  Element r;
  for (std::size_t i = 0; i < u.parts.size(); ++i) r.parts.push_back(factor_inverse(g.factors[i], u.parts[i]));
  return r;
}

Element power(const GroupDescriptor& g, const Element& u, std::uint64_t k) {
  Element result = identity(g);
  Element base = u;
  while (k) {
    if (k & 1) result = multiply(g, result, base);
    base = multiply(g, base, base);
    k >>= 1;
  }
  return result;
}

bool is_identity(const GroupDescriptor& g, const Element& u) { return u == identity(g); }

std::uint64_t element_order(const GroupDescriptor& g, const Element& u) {
  check_shape(g, u);
  const Element id = identity(g);
  Element cur = u;
  std::uint64_t k = 1;
  while (!(cur == id)) {
    cur = multiply(g, cur, u);
    ++k;
  }
  return k;
}

int element_sign(const GroupDescriptor& g, const Element& w) {
  check_shape(g, w);
  int s = 1;
  for (std::size_t i = 0; i < w.parts.size(); ++i) s *= factor_sign(g.factors[i], w.parts[i]);
  return s;
}

std::vector<Element> enumerate_elements(const GroupDescriptor& g, const Limits& limits) {
  const std::uint64_t order = g.order();
  if (order > limits.group_order_cap) throw CapExceeded(order, limits.group_order_cap, "group " + g.name());
  std::vector<Element> out{Element{}};
  for (const auto& f : g.factors) {
    const auto part = factor_elements(f);
    std::vector<Element> next;
    next.reserve(out.size() * part.size());
    for (const auto& prefix : out)
      for (const auto& p : part) {
        Element e = prefix;
        e.parts.push_back(p);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Element> rotation_subgroup(const GroupDescriptor& g, const Limits& limits) {
  std::vector<Element> out;
  for (auto& e : enumerate_elements(g, limits))
    if (element_sign(g, e) == 1) out.push_back(std::move(e));
  return out;
}

GeneratorSet generators(const GroupDescriptor& g) {
  GeneratorSet s;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    for (int j = 1; j <= g.factors[f].rank(); ++j) {
      Element e = identity(g);
      e.parts[f] = factor_generator(g.factors[f], j);
      s.simple_reflections.push_back(std::move(e));
    }
  }
  return s;
}

int coxeter_m(const GroupDescriptor& g, int i, int j) {
  auto [fi, li] = g.locate(i);
  auto [fj, lj] = g.locate(j);
  if (fi != fj) return 2;
  return factor_m(g.factors[fi], li, lj);
}

std::vector<int> word_for(const GroupDescriptor& g, const Element& w) {
  check_shape(g, w);
  std::vector<int> word;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    const int off = g.offset(f);
    for (int j : factor_word(g.factors[f], w.parts[f])) word.push_back(off + j);
  }
  return word;
}

Element evaluate_word(const GroupDescriptor& g, const std::vector<int>& word) {
  const auto gens = generators(g).simple_reflections;
  Element e = identity(g);
  for (int j : word) {
    if (j < 1 || j > static_cast<int>(gens.size())) throw RangeError("generator index out of range in word");
    e = multiply(g, e, gens[j - 1]);
  }
  return e;
}

bool centre_is_trivial(const Factor& f) {
  switch (f.family) {
    case Family::A:
      return f.param >= 2;
    case Family::B:
    case Family::H3:
      return false;
    case Family::I2:
      return f.param % 2 == 1;
  }
  return false;
}

bool centre_is_trivial(const GroupDescriptor& g) {
  return std::all_of(g.factors.begin(), g.factors.end(),
                     [](const Factor& f) { return centre_is_trivial(f); });
}

int dual_index(const GroupDescriptor& g, int i) {
  if (!g.irreducible()) throw std::invalid_argument("dual map is defined per irreducible factor; " + g.name() + " is reducible");
  const int n = g.rank();
  if (i < 1 || i > n) throw RangeError("generator index out of range");
  return n - i + 1;
}

IndexSet dual_subset(const GroupDescriptor& g, const IndexSet& subset) {
  IndexSet out;
  for (int i : normalize_subset(g, subset)) out.push_back(dual_index(g, i));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_self_dual(const GroupDescriptor& g) {
  const int n = g.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (coxeter_m(g, i, j) != coxeter_m(g, dual_index(g, i), dual_index(g, j))) return false;
  return true;
}

Element dual_map(const GroupDescriptor& g, const Element& w) {
  if (!is_self_dual(g)) throw std::invalid_argument(g.name() + " is not self-dual");
  // Rewrite w as a word and relabel each letter; valid because the relabelling
  // preserves every relation.
  std::vector<int> word = word_for(g, w);
  for (int& j : word) j = dual_index(g, j);
  return evaluate_word(g, word);
}

IndexSet opposition_subset(const GroupDescriptor& g, const IndexSet& subset) {
  IndexSet out;
  for (int i : normalize_subset(g, subset)) {
    auto [f, local] = g.locate(i);
    const Factor& fac = g.factors[f];
    int image = local;
    if (centre_is_trivial(fac)) image = fac.rank() - local + 1;
    out.push_back(g.offset(f) + image);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ppcount
