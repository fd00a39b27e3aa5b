#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "idem2/zn.hpp"

namespace idem2 {

struct Monomial {
  std::vector<std::uint32_t> exps;

  std::uint32_t degree() const noexcept;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: by total degree, ties broken by ascending
/// exponent vector. This is the canonical term and serialization order.
bool graded_lex_less(const Monomial& a, const Monomial& b) noexcept;

/// Fixes the ring everything is computed in: Z_n coefficients, `vars`
/// commuting variables, and a hard total-degree cutoff `max_degree`.
/// Products silently drop terms beyond the cutoff (quotient semantics).
class TruncationContext {
 public:
  TruncationContext(Modulus modulus, std::uint32_t vars, std::uint32_t max_degree);

  const Modulus& modulus() const noexcept { return data_->modulus; }
  std::uint32_t vars() const noexcept { return data_->vars; }
  std::uint32_t max_degree() const noexcept { return data_->max_degree; }

  /// All monomials of total degree <= max_degree, graded-lex ascending.
  const std::vector<Monomial>& window() const noexcept { return data_->window; }
  std::size_t window_size() const noexcept { return data_->window.size(); }

  bool operator==(const TruncationContext& other) const noexcept {
    return modulus() == other.modulus() && vars() == other.vars() &&
           max_degree() == other.max_degree();
  }

 private:
  struct Data {
    Modulus modulus;
    std::uint32_t vars;
    std::uint32_t max_degree;
    std::vector<Monomial> window;
  };
  std::shared_ptr<const Data> data_;
};

struct Term {
  Monomial monomial;
  std::uint64_t coeff = 0;

  bool operator==(const Term&) const = default;
};

/// Truncated multivariate power series over Z_n in canonical sparse form:
/// terms sorted graded-lex, no zero coefficients, all within the window.
class Series {
 public:
  explicit Series(TruncationContext ctx) : ctx_(std::move(ctx)) {}

  static Series constant(const TruncationContext& ctx, std::uint64_t c);
  static Series variable(const TruncationContext& ctx, std::uint32_t index);
  /// Canonicalizes: reduces coefficients mod n, merges duplicate monomials,
  /// sorts, strips zeros. Rejects terms outside the window.
  static Series from_terms(TruncationContext ctx, std::vector<Term> terms);
  /// Dense constructor; coeffs aligned with ctx.window().
  static Series from_window_coeffs(const TruncationContext& ctx,
                                   std::span<const std::uint64_t> coeffs);

  const TruncationContext& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::uint64_t coeff(const Monomial& m) const noexcept;
  std::vector<std::uint64_t> window_coeffs() const;
  bool is_zero() const noexcept { return terms_.empty(); }

  bool operator==(const Series& other) const noexcept {
    return ctx_ == other.ctx_ && terms_ == other.terms_;
  }

 private:
  TruncationContext ctx_;
  std::vector<Term> terms_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);
/// Coefficientwise multiplication by a scalar of the same modulus.
Series scale(const Residue& c, const Series& f);

Residue constant_term(const Series& f);
/// The degree-i graded piece; 0 <= i <= max_degree.
Series homogeneous_component(const Series& f, std::uint32_t degree);
/// True iff f*f == f within the truncation window.
bool is_idempotent(const Series& f);

/// Ring map Z_n -> Z_m for m | n, applied coefficientwise.
Series reduce_mod(const Series& f, const Modulus& target);
/// Canonical lift along Z_m -> Z_n for m | n: same coefficients, bigger ring.
Series lift_to(const Series& f, const TruncationContext& target);

}  // namespace idem2
