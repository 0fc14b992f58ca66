#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zdi {

// Trial division is used up to this modulus; larger moduli are accepted only
// when they are perfect powers of a prime.
inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000'000'000ULL;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A modulus m >= 2 together with its factorization (primes ascending).
class Modulus {
 public:
  static Modulus Factorize(std::uint64_t m);
  // p^n with p prime and n >= 1; rejects overflow of 64 bits.
  static Modulus PrimePowerOf(std::uint64_t p, unsigned n);

  std::uint64_t value() const { return m_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }
  std::optional<PrimePower> as_prime_power() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Modulus(std::uint64_t m, std::vector<PrimePower> factors) : m_(m), factors_(std::move(factors)) {}
  std::uint64_t m_;
  std::vector<PrimePower> factors_;
};

bool IsPrime(std::uint64_t n);
std::uint64_t Gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t EulerPhi(std::uint64_t m);
std::uint64_t EulerPhi(const Modulus& m);

// Largest k with p^k | x. Requires x >= 1 and p >= 2.
unsigned Valuation(std::uint64_t x, std::uint64_t p);

// All divisors of m in ascending order, including 1 and m.
std::vector<std::uint64_t> Divisors(const Modulus& m);

// Number of nonzero zero-divisors, m - 1 - phi(m).
std::uint64_t ZeroDivisorCount(const Modulus& m);

// Sorted x in [1, m-1] with gcd(x, m) = d, i.e. d*u with u coprime to m/d.
// Requires d | m.
std::vector<std::uint64_t> GcdClassMembers(const Modulus& m, std::uint64_t d);

// Sorted x in [1, m-1] with gcd(x, m) > 1. Work is proportional to the
// output size, not to m.
std::vector<std::uint64_t> ZeroDivisors(const Modulus& m);

}  // namespace zdi
