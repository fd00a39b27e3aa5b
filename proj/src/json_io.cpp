#include "idem2/json_io.hpp"

#include <algorithm>
#include <string>

namespace idem2 {

namespace {

[[noreturn]] void bad(const std::string& detail) { raise("ParseError", detail); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object with key '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) bad("missing key '" + std::string(key) + "'");
  return *it;
}

// Accepts any integer representation as long as the value is non-negative
// (in-memory documents built from int literals store signed numbers).
std::uint64_t get_u64(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  bad("'" + std::string(key) + "' must be a non-negative integer");
}

std::uint32_t get_u32(const Json& j, const char* key) {
  std::uint64_t v = get_u64(j, key);
  if (v > UINT32_MAX) bad("'" + std::string(key) + "' out of range");
  return static_cast<std::uint32_t>(v);
}

// Signed coefficients in input are folded into [0, n).
std::uint64_t coef_mod_n(const Json& v, std::uint64_t n) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>() % n;
  if (v.is_number_integer()) {
    std::int64_t s = v.get<std::int64_t>();
    std::int64_t m = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((s % m) + m) % m);
  }
  bad("'coef' must be an integer");
}

TruncationContext context_from_json(const Json& j) {
  return TruncationContext(Modulus(get_u64(j, "n")), get_u32(j, "vars"),
                           get_u32(j, "trunc"));
}

Json context_to_json(const TruncationContext& ctx) {
  return Json{{"n", ctx.modulus().value()},
              {"vars", ctx.vars()},
              {"trunc", ctx.max_degree()}};
}

}  // namespace

Json series_to_json(const Series& f) {
  Json j = context_to_json(f.context());
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    terms.push_back(Json{{"exp", t.monomial.exps}, {"coef", t.coeff}});
  }
  j["terms"] = std::move(terms);
  return j;
}

Series series_from_json(const Json& j) {
  TruncationContext ctx = context_from_json(j);
  const Json& jterms = member(j, "terms");
  if (!jterms.is_array()) bad("'terms' must be an array");
  std::vector<Term> terms;
  terms.reserve(jterms.size());
  for (const Json& jt : jterms) {
    const Json& jexp = member(jt, "exp");
    if (!jexp.is_array()) bad("'exp' must be an array");
    Monomial mono;
    mono.exps.reserve(jexp.size());
    for (const Json& e : jexp) {
      bool ok = e.is_number_unsigned() ||
                (e.is_number_integer() && e.get<std::int64_t>() >= 0);
      if (!ok || e.get<std::uint64_t>() > UINT32_MAX) {
        bad("'exp' entries must be non-negative integers");
      }
      mono.exps.push_back(static_cast<std::uint32_t>(e.get<std::uint64_t>()));
    }
    terms.push_back(
        Term{std::move(mono), coef_mod_n(member(jt, "coef"), ctx.modulus().value())});
  }
  return Series::from_terms(ctx, std::move(terms));
}

Json mat2_to_json(const Mat2& a) {
  return Json{{"entries",
               Json::array({Json::array({series_to_json(a.a11), series_to_json(a.a12)}),
                            Json::array({series_to_json(a.a21), series_to_json(a.a22)})})}};
}

Mat2 mat2_from_json(const Json& j) {
  const Json& rows = member(j, "entries");
  if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() ||
      !rows[1].is_array() || rows[0].size() != 2 || rows[1].size() != 2) {
    bad("'entries' must be a 2x2 array of series objects");
  }
  return Mat2(series_from_json(rows[0][0]), series_from_json(rows[0][1]),
              series_from_json(rows[1][0]), series_from_json(rows[1][1]));
}

Json spec_to_json(const IdempotentSpec& spec) {
  const CoprimeSplit& split = spec.split();
  Json roles = Json::object();
  const auto& factors = split.modulus().factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    roles[std::to_string(factors[i].value)] =
        std::string(1, role_char(split.roles()[i]));
  }
  Json j{{"n", split.modulus().value()},
         {"vars", spec.vars()},
         {"trunc", spec.max_degree()},
         {"roles", std::move(roles)}};
  if (spec.has_params()) {
    j["alpha"] = series_to_json(spec.params().alpha);
    j["beta"] = series_to_json(spec.params().beta);
    j["gamma"] = series_to_json(spec.params().gamma);
  }
  return j;
}

IdempotentSpec spec_from_json(const Json& j) {
  Modulus modulus(get_u64(j, "n"));
  std::uint32_t vars = get_u32(j, "vars");
  std::uint32_t trunc = get_u32(j, "trunc");

  const Json& jroles = member(j, "roles");
  if (!jroles.is_object()) bad("'roles' must be an object");
  std::vector<Role> roles;
  roles.reserve(modulus.factors().size());
  std::size_t used = 0;
  for (const PrimePower& pp : modulus.factors()) {
    auto it = jroles.find(std::to_string(pp.value));
    if (it == jroles.end()) {
      bad("'roles' is missing factor " + std::to_string(pp.value));
    }
    if (!it->is_string() || it->get<std::string>().size() != 1) {
      bad("role of factor " + std::to_string(pp.value) + " must be \"P\", \"Q\" or \"R\"");
    }
    char c = it->get<std::string>()[0];
    if (c != 'P' && c != 'Q' && c != 'R') {
      bad("role of factor " + std::to_string(pp.value) + " must be \"P\", \"Q\" or \"R\"");
    }
    roles.push_back(role_from_char(c));
    ++used;
  }
  if (used != jroles.size()) bad("'roles' names a value that is not a factor of n");
  CoprimeSplit split(std::move(modulus), std::move(roles));

  bool have_params =
      j.contains("alpha") || j.contains("beta") || j.contains("gamma");
  if (split.part(Role::P) == 1) {
    if (have_params) bad("alpha/beta/gamma are only allowed when P > 1");
    return IdempotentSpec(std::move(split), vars, trunc);
  }
  if (!have_params) bad("alpha/beta/gamma are required when P > 1");
  Series alpha = series_from_json(member(j, "alpha"));
  Series beta = series_from_json(member(j, "beta"));
  Series gamma = series_from_json(member(j, "gamma"));
  TruncationContext expect(Modulus(split.part(Role::P)), vars, trunc);
  if (!(alpha.context() == expect) || !(beta.context() == expect) ||
      !(gamma.context() == expect)) {
    bad("alpha/beta/gamma must live over Z_P and match the top-level vars and trunc");
  }
  return IdempotentSpec(std::move(split), std::move(alpha), std::move(beta),
                        std::move(gamma));
}

Json classified_to_json(const ClassifiedIdempotent& ci) {
  Json j = spec_to_json(ci.spec);
  j["matrix"] = mat2_to_json(ci.matrix);
  return j;
}

Json report_to_json(const CompareReport& report) {
  Json missing = Json::array();
  for (const Mat2& m : report.missing) missing.push_back(mat2_to_json(m));
  Json extra = Json::array();
  for (const Mat2& m : report.extra) extra.push_back(mat2_to_json(m));
  return Json{{"passed", report.passed},
              {"count_constructed", report.count_constructed},
              {"count_brute", report.count_brute},
              {"missing", std::move(missing)},
              {"extra", std::move(extra)}};
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("input is not valid JSON");
  return j;
}

}  // namespace idem2
