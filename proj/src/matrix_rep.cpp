#include <map>
#include <mutex>

#include "factor_ops.hpp"
#include "ppcount/errors.hpp"
#include "ppcount/groups.hpp"

namespace ppcount {

namespace {

ExactMatrix h3_matrix(const FactorElement& e) {
  // Products of root reflections, memoised per element.
  static std::mutex mutex;
  static std::map<std::vector<int>, ExactMatrix> cache;
  const auto key = encode(Element{{e}});
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const Factor h3 = Factor::H3();
  const auto roots = simple_roots(h3);
  ExactMatrix m = ExactMatrix::identity(3);
  for (int j : detail::factor_word(h3, e)) m = m * ExactMatrix::reflection(roots[j - 1]);
  cache.emplace(key, m);
  return m;
}

ExactMatrix factor_matrix(const Factor& f, const FactorElement& e) {
  switch (f.family) {
    case Family::A: {
      const auto& p = std::get<Perm>(e).image;
      ExactMatrix m(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) m(p[x], x) = 1;
      return m;
    }
    case Family::B: {
      const auto& s = std::get<SignedPerm>(e);
      ExactMatrix m(s.image.size());
      for (std::size_t x = 0; x < s.image.size(); ++x) m(s.image[x], x) = s.sign[x];
      return m;
    }
    case Family::H3:
      return h3_matrix(e);
    case Family::I2:
      break;
  }
  throw UnsupportedFactor("no exact matrix representation for " + f.name());
}

}  // namespace

std::vector<ExactVector> simple_roots(const Factor& f) {
  std::vector<ExactVector> roots;
  switch (f.family) {
    case Family::A:
      for (int i = 1; i <= f.param; ++i) {
        ExactVector r(f.param + 1);
        r[i] = 1;
        r[i - 1] = -1;
        roots.push_back(r);
      }
      return roots;
    case Family::B: {
      const int n = f.param;
      for (int i = 1; i < n; ++i) {
        ExactVector r(n);
        r[n - i] = 1;
        r[n - i - 1] = -1;
        roots.push_back(r);
      }
      ExactVector last(n);
      last[0] = 1;
      roots.push_back(last);
      return roots;
    }
    case Family::H3: {
      const QSqrt5 tau = QSqrt5::golden_ratio();
      roots.push_back({QSqrt5(2), QSqrt5(0), QSqrt5(0)});
      roots.push_back({-tau, tau - QSqrt5(1), QSqrt5(-1)});
      roots.push_back({QSqrt5(0), QSqrt5(0), QSqrt5(2)});
      return roots;
    }
    case Family::I2:
      break;
  }
  throw UnsupportedFactor("no exact root system for " + f.name());
}

ExactMatrix matrix_rep(const GroupDescriptor& g, const Element& w) {
  check_shape(g, w);
  std::vector<ExactMatrix> blocks;
  for (std::size_t f = 0; f < g.factors.size(); ++f) blocks.push_back(factor_matrix(g.factors[f], w.parts[f]));
  return ExactMatrix::block_diagonal(blocks);
}

}  // namespace ppcount
