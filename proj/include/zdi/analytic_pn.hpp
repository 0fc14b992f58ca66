#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zdi/exact.hpp"
#include "zdi/indices.hpp"
#include "zdi/zdg_graph.hpp"

namespace zdi {

// Members of Z_{p^n}* grouped by exact p-adic valuation j in [1, n-1].
struct ClassSummary {
  unsigned valuation = 0;
  BigInt size;    // phi(p^(n-j))
  BigInt degree;  // p^j - 1, or p^j - 2 when 2j >= n
  unsigned eccentricity = 0;
  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

// Class j sees class k iff j + k >= n (a class sees itself iff 2j >= n).
inline bool ClassesAdjacent(unsigned j, unsigned k, unsigned n) { return j + k >= n; }

// Throws kInvalidArgument for non-prime p or n < 2 and kDegenerateGraph for
// (2, 2), whose graph is a single vertex.
std::vector<ClassSummary> ClassDecomposition(std::uint64_t p, unsigned n);

// Indices summed class by class in O(n^2) big-integer operations; no graph
// is built.
BigInt EciClass(std::uint64_t p, unsigned n);
ExactRational EdizClass(std::uint64_t p, unsigned n);
FactoredSum AeciClassFactored(std::uint64_t p, unsigned n);
ExactRational AeciClass(std::uint64_t p, unsigned n, double bit_limit = kExpansionBitLimit);

// Printed closed forms, evaluated as written. None of these look at a graph.
// Each throws kOutOfDomain outside the n its statement covers.
BigInt EciTheorem31(std::uint64_t p);                   // n = 3
BigInt EciTheorem32(std::uint64_t p, unsigned n);       // n >= 3, series reading
FactoredSum AeciTheorem41(std::uint64_t p);             // n = 4
FactoredSum AeciTheorem42(std::uint64_t p, unsigned n); // n >= 3
ExactRational EdizTheorem51(std::uint64_t p);           // n = 3
ExactRational EdizTheorem52(std::uint64_t p, unsigned n);  // n >= 3

struct PaperValue {
  std::string theorem;  // "3.1", "3.2", ...
  IndexKind kind;
  FactoredSum value;
};

// Every printed formula whose domain covers n, in theorem order.
std::vector<PaperValue> PaperValues(std::uint64_t p, unsigned n);

// Short description of how an ambiguous statement is read; empty if none.
std::string TheoremReading(const std::string& theorem);

const std::set<std::string>& AllTheorems();
// The ECI and Ediz statements; the augmented-index ones are compared only
// on request.
const std::set<std::string>& DefaultTheorems();

struct PaperComparison {
  std::string theorem;
  std::string value;
  // nullopt when equality could not be decided without expansion.
  std::optional<bool> match;
  bool requested = false;
  friend bool operator==(const PaperComparison&, const PaperComparison&) = default;
};

struct IndexReport {
  IndexKind kind = IndexKind::kEci;
  std::optional<std::string> explicit_value;
  std::optional<std::string> quotient_value;
  std::optional<std::string> class_value;
  std::vector<PaperComparison> paper;
  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

struct VerificationReport {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::string m;         // decimal, may exceed 64 bits
  std::string vertices;  // p^(n-1) - 1
  std::vector<IndexReport> indices;  // eci, aeci, ediz
  std::vector<std::string> notes;

  // True if any requested theorem is known to disagree. Undetermined
  // comparisons do not count.
  bool RequestedMismatch() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::set<std::string> theorems = DefaultTheorems();
  BuildOptions build;
};

// Runs every available method. The explicit, quotient and class values must
// agree exactly; a disagreement raises kInternal. Formula mismatches are data.
VerificationReport Verify(std::uint64_t p, unsigned n, const VerifyOptions& options = {});

}  // namespace zdi
