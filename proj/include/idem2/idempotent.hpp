#pragma once

#include <optional>

#include "idem2/mat2.hpp"

namespace idem2 {

/// Every idempotent of M2 over the truncated series ring mod n is pinned
/// down by a coprime split n = P*Q*R plus, when P > 1, three series
/// alpha, beta, gamma mod P with alpha*(1 - alpha) = beta*gamma. The
/// idempotent reduces to (alpha, beta; gamma, 1-alpha) mod P, to the
/// identity mod Q and to the zero matrix mod R.
struct SpecParams {
  Series alpha;
  Series beta;
  Series gamma;

  bool operator==(const SpecParams&) const = default;
};

class IdempotentSpec {
 public:
  /// Parameter-free spec; requires P == 1.
  IdempotentSpec(CoprimeSplit split, std::uint32_t vars, std::uint32_t max_degree);
  /// Parameterized spec; requires P > 1 and series contexts (P, vars, deg).
  IdempotentSpec(CoprimeSplit split, Series alpha, Series beta, Series gamma);

  const CoprimeSplit& split() const noexcept { return split_; }
  std::uint32_t vars() const noexcept { return vars_; }
  std::uint32_t max_degree() const noexcept { return max_degree_; }
  bool has_params() const noexcept { return params_.has_value(); }
  const SpecParams& params() const;

  /// Ring of the constructed matrix: (n, vars, max_degree).
  TruncationContext matrix_context() const;

  bool operator==(const IdempotentSpec&) const = default;

 private:
  CoprimeSplit split_;
  std::uint32_t vars_;
  std::uint32_t max_degree_;
  std::optional<SpecParams> params_;
};

struct ClassifiedIdempotent {
  IdempotentSpec spec;
  Mat2 matrix;

  bool operator==(const ClassifiedIdempotent&) const = default;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// True iff alpha*(1 - alpha) == beta*gamma mod P within the window
/// (vacuously true when P == 1).
bool validate_spec(const IdempotentSpec& spec);

/// gamma = beta^{-1} * alpha * (1 - alpha), so that the constraint holds.
/// Requires the constant term of beta to be a unit mod P.
Series solve_gamma(const Series& alpha, const Series& beta);

/// Build the idempotent by the explicit lifting formulas, dispatching on
/// which of P, Q, R exceed 1. Scalar lifts use Euler-totient exponents:
/// P^phi(Q) = 1 mod Q and (PQ)^phi(R) = 1 mod R make the diagonal land on
/// alpha mod P, 1 mod Q, 0 mod R (and on 1-alpha, 1, 0 for the bottom-right).
Mat2 construct_case(const IdempotentSpec& spec);

/// Independent construction: assemble the per-factor residue matrices
/// ((alpha, beta; gamma, 1-alpha) mod P, identity mod Q, zero mod R) and
/// fuse every coefficient with the Chinese remainder theorem. Must agree
/// with construct_case.
Mat2 construct_crt(const IdempotentSpec& spec);

/// Recover the canonical spec of an idempotent: reduce mod each prime
/// power, sort factors into Q (identity), R (zero) or P (normal-form
/// shape), then read alpha, beta, gamma off the reduction mod P.
/// Throws NotIdempotent if the input is not idempotent.
IdempotentSpec classify(const Mat2& a);

/// classify without the idempotency precondition check; throws
/// ShapeViolation if some reduction matches none of the three shapes
/// (which certifies the input was not idempotent).
IdempotentSpec classify_shape(const Mat2& a);

/// The complete duplicate-free list of idempotents of the truncated ring,
/// built constructively: every coprime split, every valid parameter triple
/// over the window. Sorted by dense coefficient key. Per split with P > 1
/// the search costs P^(3*window), which must stay within budget.
std::vector<ClassifiedIdempotent> enumerate_all(const TruncationContext& ctx,
                                                std::uint64_t budget = kDefaultBudget);

}  // namespace idem2
