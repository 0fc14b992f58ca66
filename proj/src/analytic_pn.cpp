#include "zdi/analytic_pn.hpp"

#include <algorithm>

#include "zdi/errors.hpp"
#include "zdi/ring_core.hpp"

namespace zdi {

namespace {

constexpr unsigned kMaxExponent = 512;

BigInt Pow(std::uint64_t p, unsigned e) {
  BigInt out;
  BigInt base = BigFromU64(p);
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// phi(p^e) for e >= 1.
BigInt PhiPow(std::uint64_t p, unsigned e) { return Pow(p, e) - Pow(p, e - 1); }

void RequirePrimeAndExponent(std::uint64_t p, unsigned n, unsigned min_n) {
  if (!IsPrime(p)) Fail(ErrorKind::kInvalidArgument, std::to_string(p) + " is not prime");
  if (n > kMaxExponent) Fail(ErrorKind::kInvalidArgument, "exponent above " + std::to_string(kMaxExponent));
  if (n < min_n) Fail(ErrorKind::kInvalidArgument, "n must be >= " + std::to_string(min_n));
}

void RequireTheoremDomain(const char* theorem, unsigned n, bool ok) {
  if (!ok) {
    Fail(ErrorKind::kOutOfDomain,
         std::string("theorem ") + theorem + " does not cover n = " + std::to_string(n));
  }
}

FactoredSum Single(const ExactRational& v) { return FactoredSum({PowerProduct(v)}); }

// Count of class-k neighbours seen by one member of class j.
BigInt NeighbourCount(const std::vector<ClassSummary>& classes, std::size_t j, std::size_t k) {
  return j == k ? classes[k].size - 1 : classes[k].size;
}

std::string ValueText(const FactoredSum& v) { return v.Expandable() ? v.Expand().ToString() : v.ToString(); }

}  // namespace

std::vector<ClassSummary> ClassDecomposition(std::uint64_t p, unsigned n) {
  RequirePrimeAndExponent(p, n, 2);
  if (p == 2 && n == 2) {
    Fail(ErrorKind::kDegenerateGraph, "Z_4 has a single nonzero zero-divisor; eccentricity is 0");
  }
  std::vector<ClassSummary> out;
  for (unsigned j = 1; j < n; ++j) {
    ClassSummary c;
    c.valuation = j;
    c.size = PhiPow(p, n - j);
    c.degree = Pow(p, j) - (2 * j >= n ? 2 : 1);
    c.eccentricity = (n == 2 || j == n - 1) ? 1 : 2;
    out.push_back(std::move(c));
  }
  return out;
}

BigInt EciClass(std::uint64_t p, unsigned n) {
  BigInt total = 0;
  for (const auto& c : ClassDecomposition(p, n)) total += c.size * c.degree * BigInt(c.eccentricity);
  return total;
}

ExactRational EdizClass(std::uint64_t p, unsigned n) {
  const auto classes = ClassDecomposition(p, n);
  ExactRational total;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    BigInt neighbour_degree_sum = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (ClassesAdjacent(classes[j].valuation, classes[k].valuation, n)) {
        neighbour_degree_sum += NeighbourCount(classes, j, k) * classes[k].degree;
      }
    }
    total += ExactRational(classes[j].size * neighbour_degree_sum, BigInt(classes[j].eccentricity));
  }
  return total;
}

FactoredSum AeciClassFactored(std::uint64_t p, unsigned n) {
  const auto classes = ClassDecomposition(p, n);
  FactoredSum out;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    PowerProduct term(ExactRational(classes[j].size, BigInt(classes[j].eccentricity)));
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (ClassesAdjacent(classes[j].valuation, classes[k].valuation, n)) {
        term.MultiplyPower(classes[k].degree, NeighbourCount(classes, j, k));
      }
    }
    out.Add(std::move(term));
  }
  return out;
}

ExactRational AeciClass(std::uint64_t p, unsigned n, double bit_limit) {
  return AeciClassFactored(p, n).Expand(bit_limit);
}

// (p-1)(3p^2 - 2p - 2)
BigInt EciTheorem31(std::uint64_t p) {
  RequirePrimeAndExponent(p, 3, 3);
  BigInt P = BigFromU64(p);
  return (P - 1) * (3 * P * P - 2 * P - 2);
}

// (p-1)[(2n-3)p^(n-1) - 2p^(n-2) - ... - 4p^(...) - ... - 4p - 2], read as:
// coefficient -2 on exponents n-2 down to n-ceil(n/2), coefficient -4 on
// exponents n-ceil(n/2)-1 down to 1, then -2.
BigInt EciTheorem32(std::uint64_t p, unsigned n) {
  RequirePrimeAndExponent(p, n, 2);
  RequireTheoremDomain("3.2", n, n >= 3);
  const unsigned half_up = (n + 1) / 2;
  BigInt bracket = BigInt(2 * n - 3) * Pow(p, n - 1);
  for (unsigned e = n - 2; e >= n - half_up && e >= 1; --e) bracket -= 2 * Pow(p, e);
  for (unsigned e = n - half_up - 1; e >= 1 && e < n - half_up; --e) bracket -= 4 * Pow(p, e);
  bracket -= 2;
  return (BigFromU64(p) - 1) * bracket;
}

// (p^3-2)^(p^3-p^2)/2 + [(p^2-2)(p^3-2)]^(p^2-2)/2 + [(p-1)(p^2-2)(p^3-2)]^(p-1)
FactoredSum AeciTheorem41(std::uint64_t p) {
  RequirePrimeAndExponent(p, 4, 4);
  const BigInt P = BigFromU64(p);
  const BigInt a = P * P * P - 2;
  const BigInt b = P * P - 2;
  const ExactRational half(BigInt(1), BigInt(2));
  FactoredSum out;
  out.Add(PowerProduct(half).MultiplyPower(a, P * P * P - P * P));
  out.Add(PowerProduct(half).MultiplyPower(b, P * P - 2).MultiplyPower(a, P * P - 2));
  out.Add(PowerProduct(ExactRational(BigInt(1))).MultiplyPower(P - 1, P - 1).MultiplyPower(b, P - 1).MultiplyPower(a, P - 1));
  return out;
}

// Term k = 1..n-2: c_k [prod_{t=n-k}^{n-1} (p^t - 2)]^(p^(n-k) - p^(n-k-1)) / 2,
// with c_2 = p^2 - 1 as printed on the second term and c_k = 1 otherwise.
// Last term: [prod_{t=3}^{n-2} (p^t - 2) * (p^2 - 1) * (p - 1)]^(p-1), where
// the (p^2 - 1) factor appears only once n >= 4.
FactoredSum AeciTheorem42(std::uint64_t p, unsigned n) {
  RequirePrimeAndExponent(p, n, 2);
  RequireTheoremDomain("4.2", n, n >= 3);
  const BigInt P = BigFromU64(p);
  FactoredSum out;
  for (unsigned k = 1; k + 2 <= n; ++k) {
    ExactRational coefficient(k == 2 ? P * P - 1 : BigInt(1), BigInt(2));
    PowerProduct term(coefficient);
    const BigInt exponent = Pow(p, n - k) - Pow(p, n - k - 1);
    for (unsigned t = n - k; t <= n - 1; ++t) term.MultiplyPower(Pow(p, t) - 2, exponent);
    out.Add(std::move(term));
  }
  PowerProduct last;
  for (unsigned t = 3; t + 2 <= n; ++t) last.MultiplyPower(Pow(p, t) - 2, P - 1);
  if (n >= 4) last.MultiplyPower(P * P - 1, P - 1);
  last.MultiplyPower(P - 1, P - 1);
  out.Add(std::move(last));
  return out;
}

// (p-1) [ (p^2-p)(p^2-2)/2 + (p-1)(p^2-p) + (p^2-2)(p-2) ]
ExactRational EdizTheorem51(std::uint64_t p) {
  RequirePrimeAndExponent(p, 3, 3);
  const BigInt P = BigFromU64(p);
  ExactRational bracket(((P * P - P) * (P * P - 2)), BigInt(2));
  bracket += ExactRational((P - 1) * (P * P - P) + (P * P - 2) * (P - 2));
  return ExactRational(P - 1) * bracket;
}

// (p-1) [ sum_{k=1}^{n-2} p^(n-k-1) B_k / 2 + F ] with
//   B_1 = (p-1)(p^(n-1)-2)
//   B_2 = (p-1)(p^(n-1)-2) + (p^2-p-1)(p^(n-2)-2)          (as printed)
//   B_k = sum_{t=1}^{k} phi(p^t)(p^(n-t)-2)   for k >= 3   (general term)
//   F   = sum_{t=1}^{n-2} phi(p^(n-t))(p^t-1) + (p-2)(p^(n-1)-2)
ExactRational EdizTheorem52(std::uint64_t p, unsigned n) {
  RequirePrimeAndExponent(p, n, 2);
  RequireTheoremDomain("5.2", n, n >= 3);
  const BigInt P = BigFromU64(p);
  ExactRational bracket;
  for (unsigned k = 1; k + 2 <= n; ++k) {
    BigInt b;
    if (k == 1) {
      b = (P - 1) * (Pow(p, n - 1) - 2);
    } else if (k == 2) {
      b = (P - 1) * (Pow(p, n - 1) - 2) + (P * P - P - 1) * (Pow(p, n - 2) - 2);
    } else {
      for (unsigned t = 1; t <= k; ++t) b += PhiPow(p, t) * (Pow(p, n - t) - 2);
    }
    bracket += ExactRational(Pow(p, n - k - 1) * b, BigInt(2));
  }
  BigInt last = (P - 2) * (Pow(p, n - 1) - 2);
  for (unsigned t = 1; t + 2 <= n; ++t) last += PhiPow(p, n - t) * (Pow(p, t) - 1);
  bracket += ExactRational(last);
  return ExactRational(P - 1) * bracket;
}

std::vector<PaperValue> PaperValues(std::uint64_t p, unsigned n) {
  std::vector<PaperValue> out;
  if (n < 3) return out;
  if (n == 3) out.push_back({"3.1", IndexKind::kEci, Single(ExactRational(EciTheorem31(p)))});
  out.push_back({"3.2", IndexKind::kEci, Single(ExactRational(EciTheorem32(p, n)))});
  if (n == 4) out.push_back({"4.1", IndexKind::kAeci, AeciTheorem41(p)});
  out.push_back({"4.2", IndexKind::kAeci, AeciTheorem42(p, n)});
  if (n == 3) out.push_back({"5.1", IndexKind::kEdiz, Single(EdizTheorem51(p))});
  out.push_back({"5.2", IndexKind::kEdiz, Single(EdizTheorem52(p, n))});
  return out;
}

std::string TheoremReading(const std::string& theorem) {
  if (theorem == "3.2") {
    return "theorem 3.2 read as: -2 on p^(n-2)..p^(n-ceil(n/2)), -4 on p^(n-ceil(n/2)-1)..p^1, then -2";
  }
  if (theorem == "4.1") return "theorem 4.1 evaluated as printed (class contributions raised to powers)";
  if (theorem == "4.2") {
    return "theorem 4.2 read as: term k=1..n-2 is c_k*[prod_{t=n-k}^{n-1}(p^t-2)]^(p^(n-k)-p^(n-k-1))/2 with "
           "c_2=p^2-1 else 1; last term [prod_{t=3}^{n-2}(p^t-2)*(p^2-1 if n>=4)*(p-1)]^(p-1)";
  }
  if (theorem == "5.2") {
    return "theorem 5.2 read as: (p-1)[sum_k p^(n-k-1)B_k/2 + F], B_1, B_2 as printed, "
           "B_k=sum_{t<=k} phi(p^t)(p^(n-t)-2), F=sum_{t<=n-2} phi(p^(n-t))(p^t-1)+(p-2)(p^(n-1)-2)";
  }
  return "";
}

const std::set<std::string>& AllTheorems() {
  static const std::set<std::string> all = {"3.1", "3.2", "4.1", "4.2", "5.1", "5.2"};
  return all;
}

const std::set<std::string>& DefaultTheorems() {
  static const std::set<std::string> defaults = {"3.1", "3.2", "5.1", "5.2"};
  return defaults;
}

bool VerificationReport::RequestedMismatch() const {
  for (const auto& idx : indices) {
    for (const auto& cmp : idx.paper) {
      if (cmp.requested && cmp.match == false) return true;
    }
  }
  return false;
}

VerificationReport Verify(std::uint64_t p, unsigned n, const VerifyOptions& options) {
  RequirePrimeAndExponent(p, n, 2);
  for (const auto& t : options.theorems) {
    if (!AllTheorems().count(t)) Fail(ErrorKind::kInvalidArgument, "unknown theorem '" + t + "'");
  }

  VerificationReport report;
  report.p = p;
  report.n = n;
  report.m = ToString(Pow(p, n));
  report.vertices = ToString(Pow(p, n - 1) - 1);
  for (IndexKind kind : {IndexKind::kEci, IndexKind::kAeci, IndexKind::kEdiz}) {
    IndexReport idx;
    idx.kind = kind;
    report.indices.push_back(std::move(idx));
  }
  auto& eci = report.indices[0];
  auto& aeci = report.indices[1];
  auto& ediz = report.indices[2];
  const bool degenerate = (p == 2 && n == 2);
  if (degenerate) {
    report.notes.push_back("degenerate: Z_4 has a single vertex with eccentricity 0; aeci and ediz are undefined");
  }
  if (n == 2 && !degenerate) {
    report.notes.push_back("n = 2: the graph is the complete graph K_(p-1); all eccentricities are 1");
  }

  // Typed values kept alongside the strings for the formula comparisons.
  std::optional<FactoredSum> reference[3];

  auto text = [](const ExactRational& v) { return v.ToString(); };

  // Explicit graph, when it fits.
  std::optional<Modulus> modulus;
  if (Pow(p, n) <= BigFromU64(UINT64_MAX)) modulus = Modulus::PrimePowerOf(p, n);
  if (!modulus) {
    report.notes.push_back("explicit and quotient methods skipped: p^n exceeds 64 bits");
  } else if (BigFromU64(ZeroDivisorCount(*modulus)) > BigFromU64(options.build.vertex_cap)) {
    report.notes.push_back("explicit method skipped: " + report.vertices + " vertices exceed the cap of " +
                           std::to_string(options.build.vertex_cap));
  } else {
    try {
      auto g = ZeroDivisorGraph::Build(*modulus, options.build);
      auto ecc = Eccentricities(g.graph());
      eci.explicit_value = ToString(Eci(g.graph(), ecc));
      if (!degenerate) {
        try {
          aeci.explicit_value = text(Aeci(g.graph(), ecc));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kExpansionThreshold) throw;
          report.notes.push_back("explicit aeci skipped: per-vertex products exceed the expansion threshold");
        }
        ediz.explicit_value = text(Ediz(g.graph(), ecc));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      report.notes.push_back(std::string("explicit method skipped: ") + e.what());
    }
  }

  if (modulus) {
    auto q = QuotientGraph::Build(*modulus);
    eci.quotient_value = ToString(Eci(q));
    if (!degenerate) {
      FactoredSum a = AeciFactored(q);
      aeci.quotient_value = ValueText(a);
      ediz.quotient_value = text(Ediz(q));
    }
  }

  if (degenerate) {
    report.notes.push_back("class method skipped: the valuation classes need at least two vertices");
  } else {
    BigInt e = EciClass(p, n);
    eci.class_value = ToString(e);
    reference[0] = Single(ExactRational(e));
    FactoredSum a = AeciClassFactored(p, n);
    aeci.class_value = ValueText(a);
    reference[1] = a;
    ExactRational z = EdizClass(p, n);
    ediz.class_value = text(z);
    reference[2] = Single(z);
  }

  for (auto& idx : report.indices) {
    std::vector<std::string> present;
    for (const auto* v : {&idx.explicit_value, &idx.quotient_value, &idx.class_value}) {
      if (*v) present.push_back(**v);
    }
    if (std::adjacent_find(present.begin(), present.end(), std::not_equal_to<>()) != present.end()) {
      Fail(ErrorKind::kInternal, std::string("explicit/quotient/class disagreement for ") + ToString(idx.kind) +
                                     " at p=" + std::to_string(p) + ", n=" + std::to_string(n));
    }
  }

  if (n < 3) {
    report.notes.push_back("printed theorems start at n = 3; no formula values");
  }
  for (auto& pv : PaperValues(p, n)) {
    auto slot = static_cast<std::size_t>(pv.kind);
    PaperComparison cmp;
    cmp.theorem = pv.theorem;
    cmp.value = ValueText(pv.value);
    cmp.requested = options.theorems.count(pv.theorem) > 0;
    if (reference[slot]) {
      switch (CompareValues(*reference[slot], pv.value)) {
        case Comparison::kEqual: cmp.match = true; break;
        case Comparison::kDifferent: cmp.match = false; break;
        case Comparison::kUndetermined:
          report.notes.push_back("theorem " + pv.theorem + ": values too large to decide equality exactly");
          break;
      }
    }
    auto reading = TheoremReading(pv.theorem);
    if (!reading.empty()) report.notes.push_back(reading);
    report.indices[slot].paper.push_back(std::move(cmp));
  }
  for (const auto& t : options.theorems) {
    bool covered = false;
    for (const auto& idx : report.indices) {
      for (const auto& cmp : idx.paper) covered |= cmp.theorem == t;
    }
    if (!covered) report.notes.push_back("theorem " + t + " does not cover n = " + std::to_string(n));
  }
  return report;
}

}  // namespace zdi
