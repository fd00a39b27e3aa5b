#include <algorithm>

#include "doctest.h"
#include "idem2/idempotent.hpp"
#include "idem2/oracle.hpp"
#include "testutil.hpp"

using namespace idem2;
using test::Rng;
using test::make_ctx;
using test::random_valid_spec;

namespace {

Series constant(std::uint64_t n, std::uint32_t vars, std::uint32_t deg,
                std::uint64_t c) {
  return Series::constant(make_ctx(n, vars, deg), c);
}

// Scalar spec with P > 1 from plain numbers.
IdempotentSpec scalar_spec(std::uint64_t n, std::vector<Role> roles,
                           std::uint64_t alpha, std::uint64_t beta,
                           std::uint64_t gamma) {
  CoprimeSplit split(Modulus(n), std::move(roles));
  std::uint64_t p = split.part(Role::P);
  return IdempotentSpec(split, constant(p, 0, 0, alpha), constant(p, 0, 0, beta),
                        constant(p, 0, 0, gamma));
}

Mat2 constant_mat(const TruncationContext& ctx, std::uint64_t a11, std::uint64_t a12,
                  std::uint64_t a21, std::uint64_t a22) {
  return Mat2(Series::constant(ctx, a11), Series::constant(ctx, a12),
              Series::constant(ctx, a21), Series::constant(ctx, a22));
}

}  // namespace

TEST_CASE("constraint validation") {
  CHECK(validate_spec(scalar_spec(4, {Role::P}, 0, 0, 0)));
  CHECK(validate_spec(scalar_spec(3, {Role::P}, 2, 1, 1)));
  CHECK(!validate_spec(scalar_spec(3, {Role::P}, 1, 1, 1)));
  // Parameter-free specs are vacuously valid.
  CHECK(validate_spec(IdempotentSpec(CoprimeSplit(Modulus(6), {Role::Q, Role::R}), 0, 0)));
}

TEST_CASE("solving for gamma") {
  auto p3 = make_ctx(3, 0, 0);
  CHECK(solve_gamma(Series(p3), Series::constant(p3, 1)) == Series(p3));
  CHECK(solve_gamma(Series::constant(p3, 2), Series::constant(p3, 1)) ==
        Series::constant(p3, 1));

  auto p2 = make_ctx(2, 1, 2);
  Series x = Series::variable(p2, 0);
  CHECK(solve_gamma(x, Series::constant(p2, 1)) == x + x * x);

  // Solved gamma always satisfies the constraint, including for series
  // inverses of non-constant units.
  Rng rng(20240930);
  for (int i = 0; i < 500; ++i) {
    auto ctx = make_ctx(9, 1, 3);
    Series alpha = test::random_series(rng, ctx);
    Series beta = test::random_series(rng, ctx);
    if (!test::unit_mod(constant_term(beta).value(), 9)) continue;
    Series gamma = solve_gamma(alpha, beta);
    CHECK(beta * gamma == alpha * (Series::constant(ctx, 1) - alpha));
  }

  CHECK_THROWS_AS(solve_gamma(x, x), Error);
  auto p4 = make_ctx(4, 0, 0);
  CHECK_THROWS_AS(solve_gamma(Series::constant(p4, 1), Series::constant(p4, 2)), Error);
}

TEST_CASE("construction on frozen scalar inputs") {
  auto ctx6 = make_ctx(6, 0, 0);

  // Q = 2, R = 3: diagonal lift of the scalar idempotent 3 mod 6.
  IdempotentSpec qr(CoprimeSplit(Modulus(6), {Role::Q, Role::R}), 0, 0);
  CHECK(construct_case(qr) == constant_mat(ctx6, 3, 0, 0, 3));

  // P = 3, Q = 2 with alpha=2, beta=1, gamma=1.
  Mat2 pq = construct_case(scalar_spec(6, {Role::Q, Role::P}, 2, 1, 1));
  CHECK(pq == constant_mat(ctx6, 5, 4, 4, 5));
  CHECK(reduce_mod(pq, Modulus(2)) == Mat2::identity(make_ctx(2, 0, 0)));
  CHECK(reduce_mod(pq, Modulus(3)) == constant_mat(make_ctx(3, 0, 0), 2, 1, 1, 2));

  // Q = n gives the identity, R = n the zero matrix.
  CHECK(construct_case(IdempotentSpec(CoprimeSplit(Modulus(6), {Role::Q, Role::Q}), 0,
                                      0)) == Mat2::identity(ctx6));
  CHECK(construct_case(IdempotentSpec(CoprimeSplit(Modulus(6), {Role::R, Role::R}), 0,
                                      0)) == Mat2::zero(ctx6));

  // P = n reproduces the parameters verbatim.
  CHECK(construct_case(scalar_spec(4, {Role::P}, 3, 2, 1)) ==
        constant_mat(make_ctx(4, 0, 0), 3, 2, 1, 2));

  // Three-part split: P=2, Q=3, R=5 with alpha=1, beta=1, gamma=0.
  Mat2 pqr = construct_case(scalar_spec(30, {Role::P, Role::Q, Role::R}, 1, 1, 0));
  CHECK(pqr == constant_mat(make_ctx(30, 0, 0), 25, 15, 0, 10));

  // P=2, R=5: everything scaled into the kernel of reduction mod 5.
  Mat2 pr = construct_case(scalar_spec(10, {Role::P, Role::R}, 1, 1, 0));
  CHECK(pr == constant_mat(make_ctx(10, 0, 0), 5, 5, 0, 0));
}

TEST_CASE("construction with series parameters") {
  // P=3, Q=2 over Z_6[x], D=2, alpha=x, beta=1, gamma = x+2x^2 mod 3.
  auto p3 = make_ctx(3, 1, 2);
  Series alpha = Series::variable(p3, 0);
  Series beta = Series::constant(p3, 1);
  Series gamma = solve_gamma(alpha, beta);
  CHECK(gamma == Series::from_terms(p3, {Term{Monomial{{1}}, 1}, Term{Monomial{{2}}, 2}}));

  IdempotentSpec spec(CoprimeSplit(Modulus(6), {Role::Q, Role::P}), alpha, beta, gamma);
  Mat2 a = construct_case(spec);
  CHECK(is_idempotent(a));

  auto ctx6 = make_ctx(6, 1, 2);
  CHECK(a.a11 == Series::from_terms(ctx6, {Term{Monomial{{0}}, 3}, Term{Monomial{{1}}, 4}}));
  CHECK(a.a12 == Series::constant(ctx6, 4));
  CHECK(a.a21 == Series::from_terms(ctx6, {Term{Monomial{{1}}, 4}, Term{Monomial{{2}}, 2}}));
  CHECK(a.a22 == Series::from_terms(ctx6, {Term{Monomial{{0}}, 1}, Term{Monomial{{1}}, 2}}));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(construct_case(scalar_spec(3, {Role::P}, 1, 1, 1)), Error);
  CHECK_THROWS_AS(construct_crt(scalar_spec(30, {Role::P, Role::Q, Role::R}, 1, 1, 1)),
                  Error);
}

TEST_CASE("both construction paths agree") {
  // Frozen examples.
  IdempotentSpec qr(CoprimeSplit(Modulus(6), {Role::Q, Role::R}), 0, 0);
  CHECK(construct_crt(qr) == construct_case(qr));

  IdempotentSpec pn = scalar_spec(4, {Role::P}, 3, 2, 1);
  CHECK(construct_crt(pn) == construct_case(pn));

  IdempotentSpec pqr = scalar_spec(30, {Role::P, Role::Q, Role::R}, 1, 1, 0);
  CHECK(construct_crt(pqr) == construct_case(pqr));

  // Randomized, scalars and series.
  Rng rng(20240931);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = test::pick(rng, 2, 400);
    std::uint32_t vars = static_cast<std::uint32_t>(test::pick(rng, 0, 2));
    std::uint32_t deg = static_cast<std::uint32_t>(test::pick(rng, 0, 2));
    IdempotentSpec spec = random_valid_spec(rng, n, vars, deg);
    CHECK(construct_case(spec) == construct_crt(spec));
  }
}

TEST_CASE("constructed matrices satisfy the residue conditions") {
  Rng rng(20240932);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = test::pick(rng, 2, 400);
    std::uint32_t vars = static_cast<std::uint32_t>(test::pick(rng, 0, 2));
    std::uint32_t deg = static_cast<std::uint32_t>(test::pick(rng, 0, 2));
    IdempotentSpec spec = random_valid_spec(rng, n, vars, deg);
    Mat2 a = construct_case(spec);
    CHECK(is_idempotent(a));

    const CoprimeSplit& split = spec.split();
    std::uint64_t p = split.part(Role::P), q = split.part(Role::Q),
                  r = split.part(Role::R);
    if (q > 1) {
      CHECK(reduce_mod(a, Modulus(q)) == Mat2::identity(make_ctx(q, vars, deg)));
    }
    if (r > 1) {
      CHECK(reduce_mod(a, Modulus(r)) == Mat2::zero(make_ctx(r, vars, deg)));
    }
    if (p > 1) {
      const SpecParams& params = spec.params();
      Mat2 expected(params.alpha, params.beta, params.gamma,
                    Series::constant(params.alpha.context(), 1) - params.alpha);
      CHECK(reduce_mod(a, Modulus(p)) == expected);
    }
  }
}

TEST_CASE("classification of frozen matrices") {
  auto ctx6 = make_ctx(6, 0, 0);

  IdempotentSpec id_spec = classify(Mat2::identity(ctx6));
  CHECK(id_spec.split().part(Role::Q) == 6);
  CHECK(!id_spec.has_params());

  IdempotentSpec diag_spec = classify(constant_mat(ctx6, 3, 0, 0, 3));
  CHECK(diag_spec.split().part(Role::Q) == 2);
  CHECK(diag_spec.split().part(Role::R) == 3);

  IdempotentSpec pq_spec = classify(constant_mat(ctx6, 5, 4, 4, 5));
  CHECK(pq_spec.split().part(Role::P) == 3);
  CHECK(pq_spec.split().part(Role::Q) == 2);
  CHECK(pq_spec.params().alpha == constant(3, 0, 0, 2));
  CHECK(pq_spec.params().beta == constant(3, 0, 0, 1));
  CHECK(pq_spec.params().gamma == constant(3, 0, 0, 1));

  // (5,4;4,2) is idempotent but its reduction mod 2 is (1,0;0,0), which is
  // the constrained normal form, not the identity; both factors land in P.
  Mat2 e = constant_mat(ctx6, 5, 4, 4, 2);
  CHECK(is_idempotent(e));
  IdempotentSpec e_spec = classify(e);
  CHECK(e_spec.split().part(Role::P) == 6);
  CHECK(e_spec.params().alpha == constant(6, 0, 0, 5));
  CHECK(e_spec.params().beta == constant(6, 0, 0, 4));
  CHECK(e_spec.params().gamma == constant(6, 0, 0, 4));

  IdempotentSpec zero_spec = classify(Mat2::zero(make_ctx(12, 0, 0)));
  CHECK(zero_spec.split().part(Role::R) == 12);
  CHECK(zero_spec.split().roles() == std::vector<Role>{Role::R, Role::R});
}

TEST_CASE("classification rejects non-idempotents") {
  auto ctx3 = make_ctx(3, 0, 0);
  Mat2 bad = constant_mat(ctx3, 1, 1, 0, 1);
  try {
    classify(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotIdempotent");
  }
  // The shape check alone pinpoints the offending factor.
  try {
    classify_shape(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "ShapeViolation");
    CHECK(e.detail().find("mod 3") != std::string::npos);
  }
}

TEST_CASE("classify inverts construct") {
  Rng rng(20240933);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = test::pick(rng, 2, 400);
    std::uint32_t vars = static_cast<std::uint32_t>(test::pick(rng, 0, 2));
    std::uint32_t deg = static_cast<std::uint32_t>(test::pick(rng, 0, 2));
    IdempotentSpec spec = random_valid_spec(rng, n, vars, deg);
    CHECK(classify(construct_case(spec)) == spec);
  }
}

TEST_CASE("enumeration counts and oracle agreement on small rings") {
  CHECK(enumerate_all(make_ctx(2, 0, 0)).size() == 8);
  CHECK(enumerate_all(make_ctx(6, 0, 0)).size() == 112);

  auto ctx = make_ctx(2, 1, 1);
  auto classified = enumerate_all(ctx);
  std::vector<Mat2> constructed;
  for (const auto& ci : classified) {
    CHECK(is_idempotent(ci.matrix));
    CHECK(construct_case(ci.spec) == ci.matrix);
    constructed.push_back(ci.matrix);
  }
  auto report = compare_sets(constructed, brute_force_idempotents(ctx));
  CHECK(report.passed);
}

TEST_CASE("enumeration output is sorted and duplicate-free") {
  auto classified = enumerate_all(make_ctx(12, 0, 0));
  for (std::size_t i = 0; i + 1 < classified.size(); ++i) {
    CHECK(window_coeffs(classified[i].matrix) <
          window_coeffs(classified[i + 1].matrix));
  }
}

TEST_CASE("determinant dichotomy across the factors") {
  for (auto ctx : {make_ctx(12, 0, 0), make_ctx(6, 1, 1)}) {
    for (const auto& ci : enumerate_all(ctx)) {
      const auto& split = ci.spec.split();
      const auto& factors = split.modulus().factors();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Modulus target(factors[i].value);
        Series d = reduce_mod(det(ci.matrix), target);
        auto small = TruncationContext(target, ctx.vars(), ctx.max_degree());
        if (split.roles()[i] == Role::Q) {
          CHECK(d == Series::constant(small, 1));
        } else {
          CHECK(d == Series(small));
        }
      }
    }
  }
}

TEST_CASE("enumeration respects the budget") {
  CHECK_THROWS_WITH_AS(enumerate_all(make_ctx(6, 1, 1), 10),
                       doctest::Contains("budget"), Error);
}
