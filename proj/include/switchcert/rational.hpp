#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "switchcert/layout.hpp"
#include "switchcert/operator.hpp"

namespace switchcert {

/// Gaussian rational: complex number with exact rational real/imaginary parts.
struct GQ {
  mpq_class re, im;

  GQ() : re(0), im(0) {}
  GQ(int v) : re(v), im(0) {}  // NOLINT: implicit by design, mirrors arithmetic literals
  GQ(long v) : re(v), im(0) {}
  GQ(mpq_class r) : re(std::move(r)), im(0) {}
  GQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GQ from_ratio(long num, long den) { return GQ(mpq_class(num, den)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GQ conj() const { return GQ(re, -im); }
  /// |z|^2 as an exact rational.
  mpq_class norm2() const { return re * re + im * im; }

  GQ operator-() const { return GQ(-re, -im); }
  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(const GQ& a, const GQ& b) {
    return GQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GQ operator/(const GQ& a, const GQ& b) {
    mpq_class n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("GQ: division by zero");
    GQ num = a * b.conj();
    return GQ(num.re / n2, num.im / n2);
  }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  Complex to_complex() const { return Complex(re.get_d(), im.get_d()); }
};

/// Dense matrix over Gaussian rationals; all arithmetic is exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix zero(long rows, long cols) { return RationalMatrix(rows, cols); }
  static RationalMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  GQ& operator()(long r, long c) { return data_[r * cols_ + c]; }
  const GQ& operator()(long r, long c) const { return data_[r * cols_ + c]; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix scaled(const GQ& s) const;
  RationalMatrix adjoint() const;
  RationalMatrix transpose() const;
  GQ trace() const;
  bool operator==(const RationalMatrix& o) const;
  bool is_hermitian() const;

  Matrix to_complex() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<GQ> data_;
};

/// Exact counterpart of Operator for the certification pipeline.
struct RationalOperator {
  SpaceLayout layout;
  RationalMatrix mat;

  RationalOperator() = default;
  RationalOperator(SpaceLayout l, RationalMatrix m);
  static RationalOperator zero(SpaceLayout l);
  static RationalOperator identity(SpaceLayout l);
  long dim() const { return layout.total_dim(); }
  Operator to_operator() const { return Operator(layout, mat.to_complex()); }
};

RationalOperator kron(const RationalOperator& a, const RationalOperator& b);
RationalOperator partial_trace(const RationalOperator& m, const std::vector<std::string>& labels);
RationalOperator partial_transpose(const RationalOperator& m, const std::vector<std::string>& labels);
RationalOperator trace_and_replace(const RationalOperator& m, const std::vector<std::string>& labels);
RationalOperator permute_systems(const RationalOperator& m, const std::vector<std::string>& order);
RationalOperator link(const RationalOperator& f, const RationalOperator& g);
RationalOperator relabeled(const RationalOperator& m, const std::vector<std::string>& new_labels);

/// Truncation of a double to n decimal digits as an exact fraction
/// (toward zero); the double is first converted exactly.
mpq_class truncate_decimal(double x, int digits);

/// Exact rational from "p/q" or decimal-integer strings.
mpq_class rational_from_string(const std::string& s);
std::string rational_to_string(const mpq_class& q);

}  // namespace switchcert
