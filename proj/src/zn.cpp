#include "idem2/zn.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace idem2 {

namespace {

// Extended gcd on the pair (a, m); returns gcd and the coefficient x with
// a*x = gcd (mod m).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m, bool& ok) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) {
    ok = false;
    return 0;
  }
  ok = true;
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    unsigned __int128 wide = static_cast<unsigned __int128>(result) * base;
    if (wide > UINT64_MAX) return UINT64_MAX;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

Modulus::Modulus(std::uint64_t n) {
  if (n < 2) raise("InvalidModulus", "modulus must be > 1, got " + std::to_string(n));
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    PrimePower f{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++f.exponent;
      f.value *= p;
    }
    factors.push_back(f);
  }
  if (rest > 1) factors.push_back({rest, 1, rest});
  data_ = std::make_shared<const Data>(Data{n, std::move(factors)});
}

Residue Residue::pow(std::uint64_t exp) const {
  return Residue(pow_mod(value_, exp, modulus_.value()), modulus_);
}

Residue Residue::inverse() const {
  bool ok = false;
  std::uint64_t inv = inv_mod(value_, modulus_.value(), ok);
  if (!ok) {
    raise("NonUnit", std::to_string(value_) + " is not invertible mod " +
                         std::to_string(modulus_.value()));
  }
  return Residue(inv, modulus_);
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) {
    raise("MismatchedModulus",
          "operands live in Z_" + std::to_string(a.modulus().value()) + " and Z_" +
              std::to_string(b.modulus().value()));
  }
}
}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  std::uint64_t n = a.modulus().value();
  unsigned __int128 sum = static_cast<unsigned __int128>(a.value_) + b.value_;
  return Residue(static_cast<std::uint64_t>(sum % n), a.modulus());
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  std::uint64_t n = a.modulus().value();
  return Residue(a.value_ + n - b.value_ >= n ? a.value_ + n - b.value_ - n
                                              : a.value_ + n - b.value_,
                 a.modulus());
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(mul_mod(a.value_, b.value_, a.modulus().value()), a.modulus());
}

Residue operator-(const Residue& a) {
  std::uint64_t n = a.modulus().value();
  return Residue(a.value_ == 0 ? 0 : n - a.value_, a.modulus());
}

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) raise("InvalidArgument", "totient(0) is undefined");
  if (m == 1) return 1;
  return totient(Modulus(m));
}

std::uint64_t totient(const Modulus& m) {
  std::uint64_t phi = 1;
  for (const auto& f : m.factors()) phi *= (f.value / f.prime) * (f.prime - 1);
  return phi;
}

Residue crt_combine(const Modulus& n, std::span<const std::uint64_t> residues) {
  const auto& factors = n.factors();
  if (residues.size() != factors.size()) {
    raise("InvalidArgument",
          "expected " + std::to_string(factors.size()) + " residues, got " +
              std::to_string(residues.size()));
  }
  std::uint64_t x = residues[0] % factors[0].value;
  std::uint64_t mod = factors[0].value;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    std::uint64_t mi = factors[i].value;
    std::uint64_t ri = residues[i] % mi;
    bool ok = false;
    std::uint64_t inv = inv_mod(mod % mi, mi, ok);  // coprime by construction
    std::uint64_t diff = (ri + mi - x % mi) % mi;
    std::uint64_t t = mul_mod(diff, inv, mi);
    x += static_cast<std::uint64_t>(static_cast<unsigned __int128>(mod) * t);
    mod *= mi;
  }
  return Residue(x, n);
}

std::vector<Residue> idempotents_of_zn(const Modulus& m) {
  const std::size_t k = m.factors().size();
  std::vector<Residue> result;
  result.reserve(std::size_t{1} << k);
  std::vector<std::uint64_t> parts(k, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) parts[i] = (mask >> i) & 1;
    result.push_back(crt_combine(m, parts));
  }
  std::sort(result.begin(), result.end(),
            [](const Residue& a, const Residue& b) { return a.value() < b.value(); });
  return result;
}

char role_char(Role r) {
  switch (r) {
    case Role::P: return 'P';
    case Role::Q: return 'Q';
    case Role::R: return 'R';
  }
  raise("InvalidArgument", "bad role");
}

Role role_from_char(char c) {
  switch (c) {
    case 'P': return Role::P;
    case 'Q': return Role::Q;
    case 'R': return Role::R;
  }
  raise("InvalidArgument", std::string("bad role '") + c + "'");
}

CoprimeSplit::CoprimeSplit(Modulus modulus, std::vector<Role> roles)
    : modulus_(std::move(modulus)), roles_(std::move(roles)) {
  const auto& factors = modulus_.factors();
  if (roles_.size() != factors.size()) {
    raise("InvalidArgument",
          "split needs one role per prime-power factor (" +
              std::to_string(factors.size()) + "), got " + std::to_string(roles_.size()));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    switch (roles_[i]) {
      case Role::P: p_ *= factors[i].value; break;
      case Role::Q: q_ *= factors[i].value; break;
      case Role::R: r_ *= factors[i].value; break;
    }
  }
  // Pairwise coprimality is automatic from the factor partition.
  if (p_ * q_ * r_ != modulus_.value() || std::gcd(p_, q_) != 1 ||
      std::gcd(p_, r_) != 1 || std::gcd(q_, r_) != 1) {
    raise("InvalidArgument", "split parts are not a coprime factorization");
  }
}

std::uint64_t CoprimeSplit::part(Role r) const noexcept {
  switch (r) {
    case Role::P: return p_;
    case Role::Q: return q_;
    case Role::R: return r_;
  }
  return 1;
}

std::vector<CoprimeSplit> CoprimeSplit::all_splits(const Modulus& m) {
  const std::size_t k = m.factors().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  std::vector<CoprimeSplit> splits;
  splits.reserve(total);
  static constexpr Role kRoles[3] = {Role::P, Role::Q, Role::R};
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Role> roles(k);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      roles[i] = kRoles[rest % 3];
      rest /= 3;
    }
    splits.emplace_back(m, std::move(roles));
  }
  return splits;
}

}  // namespace idem2
