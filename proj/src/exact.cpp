#include "zdi/exact.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

#include "zdi/errors.hpp"

namespace zdi {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits on a multi-character separator.
std::vector<std::string_view> Split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

}  // namespace

BigInt BigFromU64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

BigInt ParseBigInt(std::string_view text) {
  text = Trim(text);
  std::string s(text);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
  }
  if (!ok) Fail(ErrorKind::kInvalidArgument, "not an integer: '" + s + "'");
  return BigInt(s, 10);
}

std::string ToString(const BigInt& v) { return v.get_str(10); }

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) Fail(ErrorKind::kInvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

ExactRational ExactRational::FromInt(std::int64_t v) { return ExactRational(BigInt(static_cast<long>(v))); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  q_ += rhs.q_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactRational::ToString() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

ExactRational ExactRational::Parse(std::string_view text) {
  text = Trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(ParseBigInt(text));
  BigInt den = ParseBigInt(text.substr(slash + 1));
  if (den <= 0) Fail(ErrorKind::kInvalidArgument, "denominator must be positive: '" + std::string(text) + "'");
  return ExactRational(ParseBigInt(text.substr(0, slash)), den);
}

PowerProduct& PowerProduct::MultiplyPower(const BigInt& base, const BigInt& exponent) {
  if (base < 0 || exponent < 0) Fail(ErrorKind::kInvalidArgument, "power terms need base >= 0 and exponent >= 0");
  terms_.push_back({base, exponent});
  Normalize();
  return *this;
}

PowerProduct& PowerProduct::MultiplyScalar(const ExactRational& factor) {
  scalar_ *= factor;
  Normalize();
  return *this;
}

void PowerProduct::Normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const PowerTerm& a, const PowerTerm& b) { return a.base < b.base; });
  std::vector<PowerTerm> merged;
  for (auto& t : terms_) {
    if (t.exponent == 0 || t.base == 1) continue;
    if (!merged.empty() && merged.back().base == t.base) {
      merged.back().exponent += t.exponent;
    } else {
      merged.push_back(t);
    }
  }
  terms_ = std::move(merged);
  if (!terms_.empty() && terms_.front().base == 0) {
    scalar_ = ExactRational();
  }
  if (scalar_.is_zero()) terms_.clear();
}

double PowerProduct::PowerBits() const {
  double bits = 0.0;
  for (const auto& t : terms_) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, t.base.get_mpz_t());
    double log2_base = static_cast<double>(exp2) + std::log2(mant);
    bits += t.exponent.get_d() * log2_base;
  }
  return bits;
}

ExactRational PowerProduct::Expand(double bit_limit) const {
  if (!Expandable(bit_limit)) {
    std::ostringstream msg;
    msg << "expansion threshold exceeded: product needs ~" << static_cast<long long>(PowerBits())
        << " bits (limit " << static_cast<long long>(bit_limit) << "); use the factored form";
    Fail(ErrorKind::kExpansionThreshold, msg.str());
  }
  BigInt product = 1;
  for (const auto& t : terms_) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), t.base.get_mpz_t(), t.exponent.get_ui());
    product *= power;
  }
  return scalar_ * ExactRational(product);
}

std::optional<std::uint64_t> PowerProduct::ResidueMod(std::uint64_t prime) const {
  BigInt mod = BigFromU64(prime);
  BigInt num = scalar_.numerator() % mod;
  BigInt den = scalar_.denominator() % mod;
  if (den == 0) return std::nullopt;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  BigInt acc = num * inv;
  for (const auto& t : terms_) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), t.base.get_mpz_t(), t.exponent.get_mpz_t(), mod.get_mpz_t());
    acc = (acc * r) % mod;
  }
  acc %= mod;
  if (acc < 0) acc += mod;
  return acc.get_ui();
}

std::string PowerProduct::ToString() const {
  std::string out = scalar_.ToString();
  for (const auto& t : terms_) {
    out += " * " + t.base.get_str(10) + "^" + t.exponent.get_str(10);
  }
  return out;
}

PowerProduct PowerProduct::Parse(std::string_view text) {
  auto parts = Split(Trim(text), " * ");
  PowerProduct out(ExactRational::Parse(parts.front()));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto part = Trim(parts[i]);
    auto caret = part.find('^');
    if (caret == std::string_view::npos) Fail(ErrorKind::kInvalidArgument, "power term without '^': '" + std::string(part) + "'");
    out.MultiplyPower(ParseBigInt(part.substr(0, caret)), ParseBigInt(part.substr(caret + 1)));
  }
  return out;
}

bool FactoredSum::Expandable(double bit_limit) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const PowerProduct& t) { return t.Expandable(bit_limit); });
}

ExactRational FactoredSum::Expand(double bit_limit) const {
  ExactRational sum;
  for (const auto& t : terms_) sum += t.Expand(bit_limit);
  return sum;
}

std::string FactoredSum::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].ToString();
  }
  return out;
}

FactoredSum FactoredSum::Parse(std::string_view text) {
  text = Trim(text);
  if (text == "0") return FactoredSum();
  FactoredSum out;
  for (auto part : Split(text, " + ")) out.Add(PowerProduct::Parse(part));
  return out;
}

Comparison CompareValues(const FactoredSum& a, const FactoredSum& b) {
  if (a.Expandable() && b.Expandable()) {
    return a.Expand() == b.Expand() ? Comparison::kEqual : Comparison::kDifferent;
  }
  // Mersenne and near-2^62 primes; a differing residue proves inequality.
  static constexpr std::array<std::uint64_t, 3> kPrimes = {2305843009213693951ULL, 4611686018427387847ULL,
                                                           4611686018427387817ULL};
  for (std::uint64_t prime : kPrimes) {
    BigInt mod = BigFromU64(prime);
    auto residue = [&](const FactoredSum& s) -> std::optional<BigInt> {
      BigInt acc = 0;
      for (const auto& t : s.terms()) {
        auto r = t.ResidueMod(prime);
        if (!r) return std::nullopt;
        acc = (acc + BigFromU64(*r)) % mod;
      }
      return acc;
    };
    auto ra = residue(a);
    auto rb = residue(b);
    if (ra && rb && *ra != *rb) return Comparison::kDifferent;
  }
  return Comparison::kUndetermined;
}

}  // namespace zdi
