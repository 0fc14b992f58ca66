#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zdi/analytic_pn.hpp"

namespace zdi {

// Every value travels as a string ("num/den" or factored text), so a parse
// of emitted output reproduces it exactly.
std::string ReportToJson(const VerificationReport& report);
VerificationReport ReportFromJson(std::string_view text);
std::string ReportToMarkdown(const VerificationReport& report);

struct SweepRow {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::string m;
  std::string vertices;
  std::string eci_class, eci_paper, eci_match;
  std::string aeci_class, aeci_paper, aeci_match;
  std::string ediz_class, ediz_paper, ediz_match;
  std::string notes;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr std::string_view kSweepCsvHeader =
    "p,n,m,vertices,eci_class,eci_paper,eci_match,aeci_class,aeci_paper,aeci_match,ediz_class,ediz_paper,"
    "ediz_match,notes";

// Class values against the most specific printed theorem for n.
SweepRow MakeSweepRow(std::uint64_t p, unsigned n);
// Rows for primes p <= p_max and 2 <= n <= n_max, computed concurrently and
// sorted by (p, n).
std::vector<SweepRow> Sweep(std::uint64_t p_max, unsigned n_max);

std::string SweepToCsv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> SweepFromCsv(std::string_view text);
std::string SweepToJson(const std::vector<SweepRow>& rows);
std::vector<SweepRow> SweepFromJson(std::string_view text);

}  // namespace zdi
