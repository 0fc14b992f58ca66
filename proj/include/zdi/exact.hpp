#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdi {

using BigInt = mpz_class;

BigInt BigFromU64(std::uint64_t v);
BigInt ParseBigInt(std::string_view text);
std::string ToString(const BigInt& v);

// Exact rational, always in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(const BigInt& v) : q_(v) {}  // NOLINT(implicit)
  ExactRational(const BigInt& num, const BigInt& den);
  static ExactRational FromInt(std::int64_t v);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }

  const mpq_class& raw() const { return q_; }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  // "num/den", or the bare integer when the denominator is 1.
  std::string ToString() const;
  static ExactRational Parse(std::string_view text);

 private:
  mpq_class q_;
};

// Per-vertex products may be expanded only below this size.
inline constexpr double kExpansionBitLimit = 1e6;

struct PowerTerm {
  BigInt base;
  BigInt exponent;
  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

// value = scalar * prod(base^exponent). Bases ascending and distinct, no
// zero exponents, no unit bases. A zero base collapses the scalar to 0.
class PowerProduct {
 public:
  PowerProduct() : scalar_(BigInt(1)) {}
  explicit PowerProduct(ExactRational scalar) : scalar_(std::move(scalar)) { Normalize(); }

  PowerProduct& MultiplyPower(const BigInt& base, const BigInt& exponent);
  PowerProduct& MultiplyScalar(const ExactRational& factor);

  const ExactRational& scalar() const { return scalar_; }
  const std::vector<PowerTerm>& terms() const { return terms_; }

  // Upper estimate of log2 of the power part (scalar excluded).
  double PowerBits() const;
  bool Expandable(double bit_limit = kExpansionBitLimit) const { return PowerBits() <= bit_limit; }
  // Throws kExpansionThreshold above the bit limit.
  ExactRational Expand(double bit_limit = kExpansionBitLimit) const;
  // Value modulo a prime; nullopt when the scalar's denominator vanishes mod it.
  std::optional<std::uint64_t> ResidueMod(std::uint64_t prime) const;

  // "c * b1^e1 * b2^e2" with ascending bases; "c" alone for an empty product.
  std::string ToString() const;
  static PowerProduct Parse(std::string_view text);

  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

 private:
  void Normalize();
  ExactRational scalar_;
  std::vector<PowerTerm> terms_;
};

// A sum of factored terms; the only faithful form for augmented-index values
// whose summands are astronomically large.
class FactoredSum {
 public:
  FactoredSum() = default;
  explicit FactoredSum(std::vector<PowerProduct> terms) : terms_(std::move(terms)) {}

  void Add(PowerProduct term) { terms_.push_back(std::move(term)); }
  const std::vector<PowerProduct>& terms() const { return terms_; }

  bool Expandable(double bit_limit = kExpansionBitLimit) const;
  ExactRational Expand(double bit_limit = kExpansionBitLimit) const;

  std::string ToString() const;
  static FactoredSum Parse(std::string_view text);

  friend bool operator==(const FactoredSum&, const FactoredSum&) = default;

 private:
  std::vector<PowerProduct> terms_;
};

enum class Comparison { kEqual, kDifferent, kUndetermined };

// Exact when both sides expand; otherwise a mismatch is still certain if
// any prime fingerprint differs, and equality is left undetermined.
Comparison CompareValues(const FactoredSum& a, const FactoredSum& b);

}  // namespace zdi
