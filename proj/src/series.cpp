#include "idem2/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace idem2 {

std::uint32_t Monomial::degree() const noexcept {
  return std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
}

bool graded_lex_less(const Monomial& a, const Monomial& b) noexcept {
  std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

namespace {

void emit_compositions(std::uint32_t pos, std::uint32_t vars, std::uint32_t remaining,
                       Monomial& cur, std::vector<Monomial>& out) {
  if (pos == vars) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (pos + 1 == vars) {
    cur.exps[pos] = remaining;
    out.push_back(cur);
    cur.exps[pos] = 0;
    return;
  }
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    cur.exps[pos] = e;
    emit_compositions(pos + 1, vars, remaining - e, cur, out);
  }
  cur.exps[pos] = 0;
}

std::vector<Monomial> build_window(std::uint32_t vars, std::uint32_t max_degree) {
  std::vector<Monomial> window;
  Monomial cur;
  cur.exps.assign(vars, 0);
  for (std::uint32_t deg = 0; deg <= max_degree; ++deg) {
    emit_compositions(0, vars, deg, cur, window);
    if (vars == 0) break;  // only the empty monomial exists
  }
  return window;
}

void require_same_context(const Series& f, const Series& g) {
  if (!(f.context() == g.context())) {
    raise("MismatchedContext", "series operands live in different truncated rings");
  }
}

}  // namespace

TruncationContext::TruncationContext(Modulus modulus, std::uint32_t vars,
                                     std::uint32_t max_degree)
    : data_(std::make_shared<const Data>(
          Data{std::move(modulus), vars, max_degree, build_window(vars, max_degree)})) {}

Series Series::constant(const TruncationContext& ctx, std::uint64_t c) {
  Series s(ctx);
  c %= ctx.modulus().value();
  if (c != 0) s.terms_.push_back({Monomial{std::vector<std::uint32_t>(ctx.vars(), 0)}, c});
  return s;
}

Series Series::variable(const TruncationContext& ctx, std::uint32_t index) {
  if (index >= ctx.vars()) {
    raise("InvalidArgument", "variable index " + std::to_string(index) +
                                 " out of range for " + std::to_string(ctx.vars()) +
                                 " variables");
  }
  if (ctx.max_degree() < 1) return Series(ctx);  // x truncates to 0
  Monomial m{std::vector<std::uint32_t>(ctx.vars(), 0)};
  m.exps[index] = 1;
  Series s(ctx);
  if (ctx.modulus().value() > 1) s.terms_.push_back({std::move(m), 1});
  return s;
}

Series Series::from_terms(TruncationContext ctx, std::vector<Term> terms) {
  const std::uint64_t n = ctx.modulus().value();
  std::map<Monomial, std::uint64_t, decltype(&graded_lex_less)> acc(&graded_lex_less);
  for (auto& t : terms) {
    if (t.monomial.exps.size() != ctx.vars()) {
      raise("InvalidArgument", "monomial has wrong number of variables");
    }
    if (t.monomial.degree() > ctx.max_degree()) {
      raise("DegreeOutOfRange", "monomial of degree " +
                                    std::to_string(t.monomial.degree()) +
                                    " exceeds truncation bound " +
                                    std::to_string(ctx.max_degree()));
    }
    auto [it, inserted] = acc.try_emplace(t.monomial, 0);
    it->second = (it->second + t.coeff % n) % n;
  }
  Series s(std::move(ctx));
  for (auto& [mono, c] : acc) {
    if (c != 0) s.terms_.push_back({mono, c});
  }
  return s;
}

Series Series::from_window_coeffs(const TruncationContext& ctx,
                                  std::span<const std::uint64_t> coeffs) {
  const auto& window = ctx.window();
  if (coeffs.size() != window.size()) {
    raise("InvalidArgument", "expected " + std::to_string(window.size()) +
                                 " window coefficients, got " +
                                 std::to_string(coeffs.size()));
  }
  const std::uint64_t n = ctx.modulus().value();
  Series s(ctx);
  for (std::size_t i = 0; i < window.size(); ++i) {
    std::uint64_t c = coeffs[i] % n;
    if (c != 0) s.terms_.push_back({window[i], c});
  }
  return s;
}

std::uint64_t Series::coeff(const Monomial& m) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return graded_lex_less(t.monomial, key);
                             });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::vector<std::uint64_t> Series::window_coeffs() const {
  const auto& window = ctx_.window();
  std::vector<std::uint64_t> dense(window.size(), 0);
  std::size_t pos = 0;
  for (const auto& t : terms_) {
    while (pos < window.size() && !(window[pos] == t.monomial)) ++pos;
    dense[pos] = t.coeff;
  }
  return dense;
}

namespace {

// Merge two canonical term lists with a coefficient combiner.
template <typename Combine>
Series merge_terms(const Series& f, const Series& g, Combine combine) {
  const std::uint64_t n = f.context().modulus().value();
  std::vector<Term> out;
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t i = 0, j = 0;
  out.reserve(a.size() + b.size());
  while (i < a.size() || j < b.size()) {
    bool take_a = j >= b.size() ||
                  (i < a.size() && graded_lex_less(a[i].monomial, b[j].monomial));
    bool take_b = i >= a.size() ||
                  (j < b.size() && graded_lex_less(b[j].monomial, a[i].monomial));
    if (take_a) {
      std::uint64_t c = combine(a[i].coeff, 0) % n;
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
    } else if (take_b) {
      std::uint64_t c = combine(0, b[j].coeff) % n;
      if (c != 0) out.push_back({b[j].monomial, c});
      ++j;
    } else {
      std::uint64_t c = combine(a[i].coeff, b[j].coeff) % n;
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return Series::from_terms(f.context(), std::move(out));
}

}  // namespace

Series operator+(const Series& f, const Series& g) {
  require_same_context(f, g);
  return merge_terms(f, g, [](std::uint64_t x, std::uint64_t y) { return x + y; });
}

Series operator-(const Series& f, const Series& g) {
  require_same_context(f, g);
  const std::uint64_t n = f.context().modulus().value();
  return merge_terms(f, g,
                     [n](std::uint64_t x, std::uint64_t y) { return x + n - y; });
}

Series operator-(const Series& f) {
  return Series(f.context()) - f;
}

Series operator*(const Series& f, const Series& g) {
  require_same_context(f, g);
  const TruncationContext& ctx = f.context();
  const std::uint64_t n = ctx.modulus().value();
  std::map<Monomial, std::uint64_t, decltype(&graded_lex_less)> acc(&graded_lex_less);
  for (const auto& a : f.terms()) {
    const std::uint32_t da = a.monomial.degree();
    for (const auto& b : g.terms()) {
      if (da + b.monomial.degree() > ctx.max_degree()) continue;  // truncated away
      Monomial prod{a.monomial.exps};
      for (std::size_t k = 0; k < prod.exps.size(); ++k) prod.exps[k] += b.monomial.exps[k];
      auto [it, inserted] = acc.try_emplace(std::move(prod), 0);
      it->second = (it->second + mul_mod(a.coeff, b.coeff, n)) % n;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) out.push_back({mono, c});
  }
  return Series::from_terms(ctx, std::move(out));
}

Series scale(const Residue& c, const Series& f) {
  if (!(c.modulus() == f.context().modulus())) {
    raise("MismatchedModulus", "scalar and series moduli differ");
  }
  const std::uint64_t n = c.modulus().value();
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::uint64_t v = mul_mod(c.value(), t.coeff, n);
    if (v != 0) out.push_back({t.monomial, v});
  }
  return Series::from_terms(f.context(), std::move(out));
}

Residue constant_term(const Series& f) {
  Monomial one{std::vector<std::uint32_t>(f.context().vars(), 0)};
  return Residue(f.coeff(one), f.context().modulus());
}

Series homogeneous_component(const Series& f, std::uint32_t degree) {
  if (degree > f.context().max_degree()) {
    raise("DegreeOutOfRange", "degree " + std::to_string(degree) +
                                  " exceeds truncation bound " +
                                  std::to_string(f.context().max_degree()));
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() == degree) out.push_back(t);
  }
  return Series::from_terms(f.context(), std::move(out));
}

bool is_idempotent(const Series& f) { return f * f == f; }

Series reduce_mod(const Series& f, const Modulus& target) {
  const std::uint64_t n = f.context().modulus().value();
  const std::uint64_t m = target.value();
  if (n % m != 0) {
    raise("InvalidArgument", "reduce_mod target " + std::to_string(m) +
                                 " does not divide " + std::to_string(n));
  }
  TruncationContext ctx(target, f.context().vars(), f.context().max_degree());
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::uint64_t c = t.coeff % m;
    if (c != 0) out.push_back({t.monomial, c});
  }
  return Series::from_terms(std::move(ctx), std::move(out));
}

Series lift_to(const Series& f, const TruncationContext& target) {
  const std::uint64_t m = f.context().modulus().value();
  const std::uint64_t n = target.modulus().value();
  if (n % m != 0 || f.context().vars() != target.vars() ||
      f.context().max_degree() != target.max_degree()) {
    raise("InvalidArgument", "lift target is not a compatible extension");
  }
  return Series::from_terms(target, f.terms());
}

}  // namespace idem2
