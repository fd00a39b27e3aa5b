#include "idem2/idempotent.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace idem2 {

namespace {

void require_param_context(const Series& s, std::uint64_t p, std::uint32_t vars,
                           std::uint32_t max_degree, const char* name) {
  if (s.context().modulus().value() != p || s.context().vars() != vars ||
      s.context().max_degree() != max_degree) {
    raise("InvalidSpec", std::string(name) + " must live in the (P, vars, trunc) ring");
  }
}

// Multiplicative inverse of a series with unit constant term, degree by
// degree: b_0 = a_0^{-1}, b_k = -b_0 * sum_{i=1..k} a_i b_{k-i}.
Series invert_unit_series(const Series& a) {
  const TruncationContext& ctx = a.context();
  Residue inv0 = constant_term(a).inverse();
  Series b = scale(inv0, Series::constant(ctx, 1));
  for (std::uint32_t k = 1; k <= ctx.max_degree(); ++k) {
    Series acc(ctx);
    for (std::uint32_t i = 1; i <= k; ++i) {
      acc = acc + homogeneous_component(a, i) * homogeneous_component(b, k - i);
    }
    b = b + scale(-inv0, acc);
  }
  return b;
}

}  // namespace

IdempotentSpec::IdempotentSpec(CoprimeSplit split, std::uint32_t vars,
                               std::uint32_t max_degree)
    : split_(std::move(split)), vars_(vars), max_degree_(max_degree) {
  if (split_.part(Role::P) != 1) {
    raise("InvalidSpec", "split has P > 1 but no parameter series were given");
  }
}

IdempotentSpec::IdempotentSpec(CoprimeSplit split, Series alpha, Series beta, Series gamma)
    : split_(std::move(split)),
      vars_(alpha.context().vars()),
      max_degree_(alpha.context().max_degree()) {
  const std::uint64_t p = split_.part(Role::P);
  if (p == 1) {
    raise("InvalidSpec", "split has P = 1; parameter series are not allowed");
  }
  require_param_context(alpha, p, vars_, max_degree_, "alpha");
  require_param_context(beta, p, vars_, max_degree_, "beta");
  require_param_context(gamma, p, vars_, max_degree_, "gamma");
  params_ = SpecParams{std::move(alpha), std::move(beta), std::move(gamma)};
}

const SpecParams& IdempotentSpec::params() const {
  if (!params_) raise("InvalidSpec", "spec with P = 1 carries no parameters");
  return *params_;
}

TruncationContext IdempotentSpec::matrix_context() const {
  return TruncationContext(split_.modulus(), vars_, max_degree_);
}

bool validate_spec(const IdempotentSpec& spec) {
  if (!spec.has_params()) return true;
  const SpecParams& p = spec.params();
  Series one = Series::constant(p.alpha.context(), 1);
  return p.alpha * (one - p.alpha) == p.beta * p.gamma;
}

Series solve_gamma(const Series& alpha, const Series& beta) {
  if (!(alpha.context() == beta.context())) {
    raise("MismatchedContext", "alpha and beta live in different rings");
  }
  Series one = Series::constant(alpha.context(), 1);
  return invert_unit_series(beta) * alpha * (one - alpha);
}

Mat2 construct_case(const IdempotentSpec& spec) {
  if (!validate_spec(spec)) {
    raise("InvalidSpec", "alpha*(1-alpha) != beta*gamma mod P");
  }
  const CoprimeSplit& split = spec.split();
  const std::uint64_t n = split.modulus().value();
  const std::uint64_t P = split.part(Role::P);
  const std::uint64_t Q = split.part(Role::Q);
  const std::uint64_t R = split.part(Role::R);
  TruncationContext ctx = spec.matrix_context();

  if (P == 1) {
    if (Q > 1 && R > 1) {
      // diagonal constant: 1 mod Q, 0 mod R via 1 - Q^phi(R)
      Residue c = Residue(1, split.modulus()) - Residue(Q, split.modulus()).pow(totient(R));
      Series d = Series::constant(ctx, c.value());
      return Mat2(d, Series(ctx), Series(ctx), d);
    }
    if (Q > 1) return Mat2::identity(ctx);  // Q == n
    return Mat2::zero(ctx);                 // R == n
  }

  const SpecParams& prm = spec.params();
  Series one = Series::constant(ctx, 1);
  Series alpha = lift_to(prm.alpha, ctx);
  Series beta = lift_to(prm.beta, ctx);
  Series gamma = lift_to(prm.gamma, ctx);
  Series delta = one - alpha;
  Residue unit(1, split.modulus());

  if (Q > 1 && R > 1) {
    Residue p_phi_q = Residue(P, split.modulus()).pow(totient(Q));
    Residue pq_phi_r = Residue(P * Q, split.modulus()).pow(totient(R));
    Residue off = unit - p_phi_q.pow(totient(R));  // 1 - P^(phi(Q)phi(R))
    auto diag = [&](const Series& s) {
      return scale(unit - pq_phi_r, s + scale(p_phi_q, one - s));
    };
    return Mat2(diag(alpha), scale(off, beta), scale(off, gamma), diag(delta));
  }
  if (Q > 1) {  // R == 1
    Residue p_phi_q = Residue(P, split.modulus()).pow(totient(Q));
    Residue off = unit - p_phi_q;
    auto diag = [&](const Series& s) { return s + scale(p_phi_q, one - s); };
    return Mat2(diag(alpha), scale(off, beta), scale(off, gamma), diag(delta));
  }
  if (R > 1) {  // Q == 1
    Residue f = unit - Residue(P, split.modulus()).pow(totient(R));
    return Mat2(scale(f, alpha), scale(f, beta), scale(f, gamma), scale(f, delta));
  }
  // P == n
  return Mat2(alpha, beta, gamma, delta);
}

Mat2 construct_crt(const IdempotentSpec& spec) {
  if (!validate_spec(spec)) {
    raise("InvalidSpec", "alpha*(1-alpha) != beta*gamma mod P");
  }
  const CoprimeSplit& split = spec.split();
  const Modulus& n = split.modulus();
  TruncationContext ctx = spec.matrix_context();
  const std::uint64_t P = split.part(Role::P);

  // Normal-form matrix mod P, when present.
  std::optional<Mat2> mat_p;
  if (P > 1) {
    const SpecParams& prm = spec.params();
    Series one_p = Series::constant(prm.alpha.context(), 1);
    mat_p = Mat2(prm.alpha, prm.beta, prm.gamma, one_p - prm.alpha);
  }

  const auto& factors = n.factors();
  const auto& window = ctx.window();
  const Monomial constant_monomial{std::vector<std::uint32_t>(ctx.vars(), 0)};

  auto fuse_entry = [&](int row, int col) {
    const Series* p_entry = nullptr;
    if (mat_p) {
      p_entry = row == 0 ? (col == 0 ? &mat_p->a11 : &mat_p->a12)
                         : (col == 0 ? &mat_p->a21 : &mat_p->a22);
    }
    std::vector<Term> terms;
    std::vector<std::uint64_t> parts(factors.size(), 0);
    for (const Monomial& mono : window) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::uint64_t m = factors[i].value;
        switch (split.roles()[i]) {
          case Role::P:
            parts[i] = p_entry->coeff(mono) % m;
            break;
          case Role::Q:
            parts[i] = (row == col && mono == constant_monomial) ? 1 : 0;
            break;
          case Role::R:
            parts[i] = 0;
            break;
        }
      }
      std::uint64_t c = crt_combine(n, parts).value();
      if (c != 0) terms.push_back({mono, c});
    }
    return Series::from_terms(ctx, std::move(terms));
  };

  return Mat2(fuse_entry(0, 0), fuse_entry(0, 1), fuse_entry(1, 0), fuse_entry(1, 1));
}

IdempotentSpec classify_shape(const Mat2& a) {
  const TruncationContext& ctx = a.context();
  const Modulus& n = ctx.modulus();
  std::vector<Role> roles;
  roles.reserve(n.factors().size());

  for (const auto& factor : n.factors()) {
    Modulus m(factor.value);
    Mat2 comp = reduce_mod(a, m);
    const TruncationContext& cctx = comp.context();
    if (comp == Mat2::identity(cctx)) {
      roles.push_back(Role::Q);
    } else if (comp == Mat2::zero(cctx)) {
      roles.push_back(Role::R);
    } else {
      Series one = Series::constant(cctx, 1);
      bool shape_ok = comp.a22 == one - comp.a11 &&
                      comp.a11 * (one - comp.a11) == comp.a12 * comp.a21;
      if (!shape_ok) {
        raise("ShapeViolation",
              "reduction mod " + std::to_string(factor.value) +
                  " is neither the identity, the zero matrix, nor of the form "
                  "(a, b; c, 1-a) with a(1-a) = bc; the input is not idempotent");
      }
      roles.push_back(Role::P);
    }
  }

  CoprimeSplit split(n, std::move(roles));
  const std::uint64_t P = split.part(Role::P);
  if (P == 1) return IdempotentSpec(std::move(split), ctx.vars(), ctx.max_degree());
  Modulus mp(P);
  return IdempotentSpec(std::move(split), reduce_mod(a.a11, mp), reduce_mod(a.a12, mp),
                        reduce_mod(a.a21, mp));
}

IdempotentSpec classify(const Mat2& a) {
  if (!is_idempotent(a)) {
    raise("NotIdempotent", "matrix does not satisfy A*A = A");
  }
  return classify_shape(a);
}

std::vector<ClassifiedIdempotent> enumerate_all(const TruncationContext& ctx,
                                                std::uint64_t budget) {
  const Modulus& n = ctx.modulus();
  const std::size_t window = ctx.window_size();
  auto splits = CoprimeSplit::all_splits(n);

  for (const auto& split : splits) {
    const std::uint64_t P = split.part(Role::P);
    if (P == 1) continue;
    std::uint64_t cost = saturating_pow(P, 3 * window);
    if (cost > budget) {
      raise("BudgetExceeded",
            "split P=" + std::to_string(P) + " needs P^(3*" + std::to_string(window) +
                ") = " + std::to_string(cost) + " candidates, budget is " +
                std::to_string(budget));
    }
  }

  std::map<std::vector<std::uint64_t>, ClassifiedIdempotent> found;
  for (const auto& split : splits) {
    const std::uint64_t P = split.part(Role::P);
    if (P == 1) {
      IdempotentSpec spec(split, ctx.vars(), ctx.max_degree());
      Mat2 mat = construct_case(spec);
      auto key = window_coeffs(mat);
      found.try_emplace(std::move(key), ClassifiedIdempotent{std::move(spec), std::move(mat)});
      continue;
    }
    TruncationContext pctx(Modulus(P), ctx.vars(), ctx.max_degree());
    // Odometer over the 3*window coefficients of (alpha, beta, gamma).
    std::vector<std::uint64_t> digits(3 * window, 0);
    while (true) {
      std::span<const std::uint64_t> all(digits);
      Series alpha = Series::from_window_coeffs(pctx, all.subspan(0, window));
      Series beta = Series::from_window_coeffs(pctx, all.subspan(window, window));
      Series gamma = Series::from_window_coeffs(pctx, all.subspan(2 * window, window));
      IdempotentSpec spec(split, std::move(alpha), std::move(beta), std::move(gamma));
      if (validate_spec(spec)) {
        Mat2 mat = construct_case(spec);
        auto key = window_coeffs(mat);
        found.try_emplace(std::move(key),
                          ClassifiedIdempotent{std::move(spec), std::move(mat)});
      }
      std::size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] + 1 == P) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }

  std::vector<ClassifiedIdempotent> result;
  result.reserve(found.size());
  for (auto& [key, value] : found) result.push_back(std::move(value));
  return result;
}

}  // namespace idem2
