#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "idem2/error.hpp"

namespace idem2 {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  std::uint64_t value = 0;  // prime^exponent

  bool operator==(const PrimePower&) const = default;
};

/// A modulus n > 1 together with its prime-power factorization
/// (trial division, primes ascending). Cheap to copy.
class Modulus {
 public:
  explicit Modulus(std::uint64_t n);

  std::uint64_t value() const noexcept { return data_->n; }
  const std::vector<PrimePower>& factors() const noexcept { return data_->factors; }

  bool operator==(const Modulus& other) const noexcept {
    return data_->n == other.data_->n;
  }

 private:
  struct Data {
    std::uint64_t n;
    std::vector<PrimePower> factors;
  };
  std::shared_ptr<const Data> data_;
};

inline Modulus factorize(std::uint64_t n) { return Modulus(n); }

/// An element of Z_n. Binary operations demand identical moduli; mixing
/// rings is a hard error, never a silent coercion.
class Residue {
 public:
  Residue(std::uint64_t value, Modulus modulus)
      : value_(value % modulus.value()), modulus_(std::move(modulus)) {}

  std::uint64_t value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  Residue pow(std::uint64_t exp) const;
  Residue inverse() const;  // throws NonUnit if gcd(value, n) != 1

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a);

  bool operator==(const Residue& other) const noexcept {
    return value_ == other.value_ && modulus_ == other.modulus_;
  }

 private:
  std::uint64_t value_;
  Modulus modulus_;
};

/// Euler totient; phi(1) = 1 by convention so every exponent in the
/// lifting formulas is a positive integer.
std::uint64_t totient(std::uint64_t m);
std::uint64_t totient(const Modulus& m);

inline Residue mod_pow(const Residue& base, std::uint64_t exp) { return base.pow(exp); }

/// Unique residue mod n reducing to residues[i] mod factors()[i].value.
/// residues must be aligned with the factor list.
Residue crt_combine(const Modulus& n, std::span<const std::uint64_t> residues);

/// All e in [0, n) with e^2 = e, ascending. There are exactly 2^omega(n).
std::vector<Residue> idempotents_of_zn(const Modulus& m);

enum class Role : std::uint8_t { P, Q, R };

char role_char(Role r);
Role role_from_char(char c);

/// Assignment of every prime-power factor of n to one of the roles P, Q, R,
/// so that n = P*Q*R with P, Q, R pairwise coprime (empty product = 1).
class CoprimeSplit {
 public:
  CoprimeSplit(Modulus modulus, std::vector<Role> roles);

  const Modulus& modulus() const noexcept { return modulus_; }
  const std::vector<Role>& roles() const noexcept { return roles_; }
  std::uint64_t part(Role r) const noexcept;

  /// All 3^omega(n) role assignments, in base-3 odometer order over the
  /// factor list (first factor = least significant digit, P < Q < R).
  static std::vector<CoprimeSplit> all_splits(const Modulus& m);

  bool operator==(const CoprimeSplit& other) const noexcept {
    return modulus_ == other.modulus_ && roles_ == other.roles_;
  }

 private:
  Modulus modulus_;
  std::vector<Role> roles_;
  std::uint64_t p_ = 1, q_ = 1, r_ = 1;
};

// Overflow-safe helpers used by budget checks.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
/// base^exp saturated at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace idem2
