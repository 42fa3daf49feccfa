#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ppcount {

using Rational = boost::rational<std::int64_t>;

/// Exact element a + b*sqrt(5) of the quadratic field Q(sqrt 5).
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(std::int64_t a) : a_(a), b_(0) {}  // NOLINT: implicit from integers is intended
  QSqrt5(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}

  static QSqrt5 golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_zero() const { return a_.numerator() == 0 && b_.numerator() == 0; }

  QSqrt5 operator-() const { return {-a_, -b_}; }
  QSqrt5& operator+=(const QSqrt5& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt5& operator-=(const QSqrt5& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt5& operator*=(const QSqrt5& o) {
    Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
  }
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt5& x, const QSqrt5& y) { return !(x == y); }

  /// Lexicographic on (rational part, sqrt5 part). A container order, not the real order.
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const QSqrt5& x);

using ExactVector = std::vector<QSqrt5>;

QSqrt5 dot(const ExactVector& u, const ExactVector& v);
ExactVector operator-(const ExactVector& u, const ExactVector& v);

/// Dense square matrix over Q(sqrt 5), row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix reflection(const ExactVector& root);
  static ExactMatrix block_diagonal(const std::vector<ExactMatrix>& blocks);

  std::size_t size() const { return n_; }
  QSqrt5& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const QSqrt5& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  ExactVector apply(const ExactVector& v) const;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.n_ == y.n_ && x.data_ == y.data_;
  }
  friend bool operator<(const ExactMatrix& x, const ExactMatrix& y) { return x.data_ < y.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<QSqrt5> data_;
};

/// Solves the square system `a * x = b` by Gaussian elimination. Throws
/// std::domain_error when `a` is singular.
ExactVector solve(ExactMatrix a, ExactVector b);

}  // namespace ppcount
