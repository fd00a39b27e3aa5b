#include <numeric>

#include "doctest.h"
#include "idem2/zn.hpp"
#include "testutil.hpp"

using namespace idem2;
using test::Rng;
using test::pick;

TEST_CASE("factorization of small numbers") {
  auto f12 = Modulus(12).factors();
  REQUIRE(f12.size() == 2);
  CHECK(f12[0] == PrimePower{2, 2, 4});
  CHECK(f12[1] == PrimePower{3, 1, 3});

  auto f2 = Modulus(2).factors();
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == PrimePower{2, 1, 2});

  auto f30 = Modulus(30).factors();
  REQUIRE(f30.size() == 3);
  CHECK(f30[0].value == 2);
  CHECK(f30[1].value == 3);
  CHECK(f30[2].value == 5);
}

TEST_CASE("moduli below 2 are rejected") {
  CHECK_THROWS_AS(Modulus(0), Error);
  CHECK_THROWS_AS(Modulus(1), Error);
}

TEST_CASE("factorization reassembles the input") {
  Rng rng(20240901);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t n = pick(rng, 2, 1'000'000);
    Modulus m(n);
    std::uint64_t product = 1;
    std::uint64_t last_prime = 1;
    for (const auto& pp : m.factors()) {
      CHECK(pp.prime > last_prime);
      last_prime = pp.prime;
      CHECK(pp.exponent >= 1);
      for (std::uint64_t d = 2; d * d <= pp.prime; ++d) CHECK(pp.prime % d != 0);
      std::uint64_t v = 1;
      for (std::uint32_t e = 0; e < pp.exponent; ++e) v *= pp.prime;
      CHECK(v == pp.value);
      product *= pp.value;
    }
    CHECK(product == n);
  }
}

TEST_CASE("totient values and brute-force agreement") {
  CHECK(totient(1) == 1);
  CHECK(totient(9) == 6);
  CHECK(totient(12) == 4);
  CHECK(totient(Modulus(12)) == 4);
  for (std::uint64_t n = 2; n <= 200; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) {
      if (std::gcd(a, n) == 1) ++count;
    }
    CHECK(totient(n) == count);
    CHECK(totient(Modulus(n)) == count);
  }
}

TEST_CASE("modular exponentiation") {
  Modulus m6(6);
  CHECK(Residue(3, m6).pow(1).value() == 3);
  CHECK(Residue(2, m6).pow(totient(3)).value() == 4);
  CHECK(Residue(5, Modulus(7)).pow(totient(7)).value() == 1);
  CHECK(Residue(0, m6).pow(0).value() == 1);

  Rng rng(20240902);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t n = pick(rng, 2, 1000);
    std::uint64_t base = pick(rng, 0, n - 1);
    std::uint64_t exp = pick(rng, 0, 40);
    std::uint64_t naive = 1 % n;
    for (std::uint64_t e = 0; e < exp; ++e) naive = naive * base % n;
    CHECK(Residue(base, Modulus(n)).pow(exp).value() == naive);
  }
}

TEST_CASE("residue arithmetic matches wide-integer arithmetic") {
  Rng rng(20240903);
  for (int i = 0; i < 10'000; ++i) {
    std::uint64_t n = pick(rng, 2, 1'000'000'000);
    Modulus m(n);
    std::uint64_t a = pick(rng, 0, n - 1);
    std::uint64_t b = pick(rng, 0, n - 1);
    CHECK((Residue(a, m) + Residue(b, m)).value() ==
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % n));
    CHECK((Residue(a, m) - Residue(b, m)).value() == (a + n - b) % n);
    CHECK((Residue(a, m) * Residue(b, m)).value() ==
          static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n));
    CHECK((-Residue(a, m)).value() == (n - a) % n);
  }
}

TEST_CASE("mixing moduli is a hard error") {
  Residue a(1, Modulus(6));
  Residue b(1, Modulus(10));
  CHECK_THROWS_AS((void)(a + b), Error);
  CHECK_THROWS_AS((void)(a - b), Error);
  CHECK_THROWS_AS((void)(a * b), Error);
}

TEST_CASE("inverse exists exactly for units") {
  Rng rng(20240904);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = pick(rng, 2, 5000);
    std::uint64_t a = pick(rng, 0, n - 1);
    Residue r(a, Modulus(n));
    if (std::gcd(a, n) == 1) {
      CHECK((r * r.inverse()).value() == 1 % n);
    } else {
      CHECK_THROWS_AS(r.inverse(), Error);
    }
  }
  CHECK_THROWS_AS(Residue(2, Modulus(6)).inverse(), Error);
}

TEST_CASE("chinese remaindering on fixed inputs") {
  CHECK(crt_combine(Modulus(6), std::vector<std::uint64_t>{0, 1}).value() == 4);
  CHECK(crt_combine(Modulus(12), std::vector<std::uint64_t>{1, 1}).value() == 1);
  CHECK(crt_combine(Modulus(30), std::vector<std::uint64_t>{1, 0, 0}).value() == 15);
  CHECK_THROWS_AS(crt_combine(Modulus(6), std::vector<std::uint64_t>{1}), Error);
}

TEST_CASE("chinese remaindering inverts componentwise reduction") {
  Rng rng(20240905);
  for (int i = 0; i < 10'000; ++i) {
    std::uint64_t n = pick(rng, 2, 1'000'000);
    Modulus m(n);
    std::uint64_t r = pick(rng, 0, n - 1);
    std::vector<std::uint64_t> parts;
    for (const auto& pp : m.factors()) parts.push_back(r % pp.value);
    CHECK(crt_combine(m, parts).value() == r);
  }
}

TEST_CASE("idempotents of Z_n") {
  auto values = [](const std::vector<Residue>& rs) {
    std::vector<std::uint64_t> out;
    for (const auto& r : rs) out.push_back(r.value());
    return out;
  };
  CHECK(values(idempotents_of_zn(Modulus(8))) == std::vector<std::uint64_t>{0, 1});
  CHECK(values(idempotents_of_zn(Modulus(6))) ==
        std::vector<std::uint64_t>{0, 1, 3, 4});
  CHECK(idempotents_of_zn(Modulus(30)).size() == 8);

  for (std::uint64_t n = 2; n <= 500; ++n) {
    Modulus m(n);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t e = 0; e < n; ++e) {
      if (e * e % n == e) brute.push_back(e);
    }
    CHECK(values(idempotents_of_zn(m)) == brute);
    CHECK(brute.size() == (std::size_t{1} << m.factors().size()));
  }
}

TEST_CASE("coprime splits") {
  Modulus m(12);
  auto splits = CoprimeSplit::all_splits(m);
  CHECK(splits.size() == 9);
  for (const auto& s : splits) {
    std::uint64_t p = s.part(Role::P), q = s.part(Role::Q), r = s.part(Role::R);
    CHECK(p * q * r == 12);
    CHECK(std::gcd(p, q) == 1);
    CHECK(std::gcd(p, r) == 1);
    CHECK(std::gcd(q, r) == 1);
  }
  CHECK(splits[0].part(Role::P) == 12);

  CoprimeSplit qr(Modulus(6), {Role::Q, Role::R});
  CHECK(qr.part(Role::P) == 1);
  CHECK(qr.part(Role::Q) == 2);
  CHECK(qr.part(Role::R) == 3);
}

TEST_CASE("Euler-Fermat holds for every split with P, Q > 1 up to 200") {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    for (const auto& split : CoprimeSplit::all_splits(Modulus(n))) {
      std::uint64_t p = split.part(Role::P), q = split.part(Role::Q);
      if (p == 1 || q == 1) continue;
      CHECK(Residue(p, Modulus(q)).pow(totient(q)).value() == 1);
    }
  }
}

TEST_CASE("role characters") {
  CHECK(role_char(Role::P) == 'P');
  CHECK(role_from_char('R') == Role::R);
  CHECK_THROWS_AS(role_from_char('X'), Error);
}

TEST_CASE("saturating power") {
  CHECK(saturating_pow(10, 3) == 1000);
  CHECK(saturating_pow(7, 0) == 1);
  CHECK(saturating_pow(2, 64) == UINT64_MAX);
  CHECK(saturating_pow(1'000'000, 8) == UINT64_MAX);
}
