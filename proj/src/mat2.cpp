#include "idem2/mat2.hpp"

namespace idem2 {

Mat2::Mat2(Series e11, Series e12, Series e21, Series e22)
    : a11(std::move(e11)), a12(std::move(e12)), a21(std::move(e21)), a22(std::move(e22)) {
  if (!(a11.context() == a12.context()) || !(a11.context() == a21.context()) ||
      !(a11.context() == a22.context())) {
    raise("MismatchedContext", "matrix entries live in different truncated rings");
  }
}

Mat2 Mat2::identity(const TruncationContext& ctx) {
  return Mat2(Series::constant(ctx, 1), Series(ctx), Series(ctx), Series::constant(ctx, 1));
}

Mat2 Mat2::zero(const TruncationContext& ctx) {
  return Mat2(Series(ctx), Series(ctx), Series(ctx), Series(ctx));
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2(a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22);
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2(a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22);
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2(a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
              a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22);
}

Mat2 scale(const Residue& c, const Mat2& a) {
  return Mat2(scale(c, a.a11), scale(c, a.a12), scale(c, a.a21), scale(c, a.a22));
}

Series trace(const Mat2& a) { return a.a11 + a.a22; }

Series det(const Mat2& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

Mat2 cayley_hamilton_residual(const Mat2& a) {
  const TruncationContext& ctx = a.context();
  Series tr = trace(a);
  Mat2 tr_a(tr * a.a11, tr * a.a12, tr * a.a21, tr * a.a22);
  Series d = det(a);
  Mat2 det_i(d, Series(ctx), Series(ctx), d);
  return a * a - tr_a + det_i;
}

bool is_idempotent(const Mat2& a) { return a * a == a; }

Mat2 reduce_mod(const Mat2& a, const Modulus& target) {
  return Mat2(reduce_mod(a.a11, target), reduce_mod(a.a12, target),
              reduce_mod(a.a21, target), reduce_mod(a.a22, target));
}

std::vector<std::uint64_t> window_coeffs(const Mat2& a) {
  std::vector<std::uint64_t> key;
  key.reserve(4 * a.context().window_size());
  for (const Series* entry : {&a.a11, &a.a12, &a.a21, &a.a22}) {
    auto dense = entry->window_coeffs();
    key.insert(key.end(), dense.begin(), dense.end());
  }
  return key;
}

}  // namespace idem2
