#include "zdi/ring_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "zdi/errors.hpp"

namespace zdi {

namespace {

using u128 = unsigned __int128;

std::vector<PrimePower> TrialDivide(std::uint64_t m) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

// floor(m^(1/k)) for k >= 2.
std::uint64_t IntegerRoot(std::uint64_t m, unsigned k) {
  auto guess = static_cast<std::uint64_t>(std::pow(static_cast<long double>(m), 1.0L / k));
  auto pow_le = [&](std::uint64_t r) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= r;
      if (acc > m) return false;
    }
    return true;
  };
  while (guess > 0 && !pow_le(guess)) --guess;
  while (pow_le(guess + 1)) ++guess;
  return guess;
}

std::uint64_t Power(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t Gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

Modulus Modulus::Factorize(std::uint64_t m) {
  if (m < 2) Fail(ErrorKind::kInvalidArgument, "modulus must be >= 2, got " + std::to_string(m));
  if (m <= kTrialDivisionLimit) return Modulus(m, TrialDivide(m));
  for (unsigned k = 63; k >= 2; --k) {
    std::uint64_t r = IntegerRoot(m, k);
    if (r >= 2 && Power(r, k) == m && IsPrime(r)) return Modulus(m, {{r, k}});
  }
  Fail(ErrorKind::kInvalidArgument, "modulus " + std::to_string(m) +
                                        " exceeds the factorization limit 10^12 and is not a prime power");
}

Modulus Modulus::PrimePowerOf(std::uint64_t p, unsigned n) {
  if (!IsPrime(p)) Fail(ErrorKind::kInvalidArgument, std::to_string(p) + " is not prime");
  if (n < 1) Fail(ErrorKind::kInvalidArgument, "exponent must be >= 1");
  u128 acc = 1;
  for (unsigned i = 0; i < n; ++i) {
    acc *= p;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      Fail(ErrorKind::kInvalidArgument, std::to_string(p) + "^" + std::to_string(n) + " does not fit in 64 bits");
    }
  }
  return Modulus(static_cast<std::uint64_t>(acc), {{p, n}});
}

std::optional<PrimePower> Modulus::as_prime_power() const {
  if (factors_.size() != 1) return std::nullopt;
  return factors_[0];
}

std::uint64_t EulerPhi(const Modulus& m) {
  std::uint64_t phi = m.value();
  for (const auto& f : m.factors()) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::uint64_t EulerPhi(std::uint64_t m) {
  if (m < 1) Fail(ErrorKind::kInvalidArgument, "euler_phi needs m >= 1");
  if (m == 1) return 1;
  return EulerPhi(Modulus::Factorize(m));
}

unsigned Valuation(std::uint64_t x, std::uint64_t p) {
  if (x < 1 || p < 2) Fail(ErrorKind::kInvalidArgument, "valuation needs x >= 1 and p >= 2");
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

std::vector<std::uint64_t> Divisors(const Modulus& m) {
  std::vector<std::uint64_t> divs = {1};
  for (const auto& f : m.factors()) {
    std::size_t count = divs.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t ZeroDivisorCount(const Modulus& m) { return m.value() - 1 - EulerPhi(m); }

std::vector<std::uint64_t> GcdClassMembers(const Modulus& m, std::uint64_t d) {
  if (d == 0 || m.value() % d != 0) Fail(ErrorKind::kInvalidArgument, std::to_string(d) + " does not divide the modulus");
  const std::uint64_t cofactor = m.value() / d;
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < cofactor; ++u) {
    if (std::gcd(u, cofactor) == 1) out.push_back(d * u);
  }
  return out;
}

std::vector<std::uint64_t> ZeroDivisors(const Modulus& m) {
  std::vector<std::uint64_t> out;
  out.reserve(ZeroDivisorCount(m));
  for (std::uint64_t d : Divisors(m)) {
    if (d == 1 || d == m.value()) continue;
    auto members = GcdClassMembers(m, d);
    out.insert(out.end(), members.begin(), members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zdi
