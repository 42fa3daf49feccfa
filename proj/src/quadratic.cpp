#include "ppcount/quadratic.hpp"

#include <sstream>
#include <stdexcept>

namespace ppcount {

namespace {

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  // Multiply by the conjugate a - b*sqrt5 over the norm a^2 - 5b^2, which is
  // non-zero for every non-zero element since sqrt 5 is irrational.
  const Rational norm = o.a_ * o.a_ - Rational(5) * o.b_ * o.b_;
  if (norm.numerator() == 0) throw std::domain_error("division by zero in Q(sqrt 5)");
  *this *= QSqrt5(o.a_, -o.b_);
  a_ /= norm;
  b_ /= norm;
  return *this;
}

std::string QSqrt5::to_string() const {
  // Integer comparisons go through numerators: boost::rational's mixed-type
  // operators recurse under C++20 rewritten comparisons.
  if (b_.numerator() == 0) return rational_text(a_);
  std::string s;
  const bool negative = b_.numerator() < 0;
  if (a_.numerator() != 0) s = rational_text(a_) + (negative ? "-" : "+");
  else if (negative) s = "-";
  const Rational mag = negative ? -b_ : b_;
  if (mag != Rational(1)) s += rational_text(mag) + "*";
  return s + "sqrt5";
}

std::ostream& operator<<(std::ostream& os, const QSqrt5& x) { return os << x.to_string(); }

QSqrt5 dot(const ExactVector& u, const ExactVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: dimension mismatch");
  QSqrt5 s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

ExactVector operator-(const ExactVector& u, const ExactVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector difference: dimension mismatch");
  ExactVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::reflection(const ExactVector& root) {
  // x -> x - 2 (x.r / r.r) r
  const std::size_t n = root.size();
  const QSqrt5 rr = dot(root, root);
  ExactMatrix m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= QSqrt5(2) * root[i] * root[j] / rr;
  return m;
}

ExactMatrix ExactMatrix::block_diagonal(const std::vector<ExactMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  ExactMatrix m(n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(at + i, at + j) = b(i, j);
    at += b.size();
  }
  return m;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (v.size() != n_) throw std::invalid_argument("matrix-vector: dimension mismatch");
  ExactVector r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix product: dimension mismatch");
  ExactMatrix r(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t k = 0; k < x.n_; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.n_; ++j)
        if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

ExactVector solve(ExactMatrix a, ExactVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("solve: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    const QSqrt5 p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) /= p;
    b[col] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const QSqrt5 factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }
  return b;
}

}  // namespace ppcount
