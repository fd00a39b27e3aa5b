#pragma once

#include "idem2/series.hpp"

namespace idem2 {

/// 2x2 matrix with truncated-series entries, all sharing one context.
struct Mat2 {
  Series a11, a12, a21, a22;

  Mat2(Series e11, Series e12, Series e21, Series e22);

  static Mat2 identity(const TruncationContext& ctx);
  static Mat2 zero(const TruncationContext& ctx);

  const TruncationContext& context() const noexcept { return a11.context(); }

  bool operator==(const Mat2&) const = default;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 scale(const Residue& c, const Mat2& a);

Series trace(const Mat2& a);
Series det(const Mat2& a);

/// A^2 - tr(A)*A + det(A)*I. Identically zero for 2x2 matrices over any
/// commutative ring; exposed so tests can assert exactly that.
Mat2 cayley_hamilton_residual(const Mat2& a);

bool is_idempotent(const Mat2& a);

Mat2 reduce_mod(const Mat2& a, const Modulus& target);

/// Dense coefficient key: entries a11, a12, a21, a22, each over the window
/// in graded-lex order. Canonical total order for sorting and set diffs.
std::vector<std::uint64_t> window_coeffs(const Mat2& a);

}  // namespace idem2
