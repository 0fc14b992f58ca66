#include "zdi/report_io.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <tuple>
#include <sstream>

#include "json.hpp"
#include "zdi/errors.hpp"
#include "zdi/ring_core.hpp"

namespace zdi {

namespace {

using Json = nlohmann::ordered_json;

Json OptionalString(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::string> ReadOptionalString(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

std::string ValueText(const FactoredSum& v) { return v.Expandable() ? v.Expand().ToString() : v.ToString(); }

std::string MatchText(Comparison c) {
  switch (c) {
    case Comparison::kEqual: return "true";
    case Comparison::kDifferent: return "false";
    case Comparison::kUndetermined: return "unknown";
  }
  return "";
}

std::string Pow(std::uint64_t p, unsigned e, int minus) {
  BigInt out;
  BigInt base = BigFromU64(p);
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return ToString(out - minus);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_has_data = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      row_has_data = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      row_has_data = true;
    } else if (c == '\n') {
      if (row_has_data || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      row_has_data = false;
    } else if (c != '\r') {
      field += c;
      row_has_data = true;
    }
  }
  if (quoted) Fail(ErrorKind::kInvalidArgument, "unterminated quoted CSV field");
  if (row_has_data || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string*> RowFields(SweepRow& r) {
  return {&r.m,          &r.vertices,  &r.eci_class,  &r.eci_paper,  &r.eci_match,
          &r.aeci_class, &r.aeci_paper, &r.aeci_match, &r.ediz_class, &r.ediz_paper,
          &r.ediz_match, &r.notes};
}

const std::vector<std::string>& RowKeys() {
  static const std::vector<std::string> keys = {"m",          "vertices",   "eci_class",  "eci_paper",
                                                "eci_match",  "aeci_class", "aeci_paper", "aeci_match",
                                                "ediz_class", "ediz_paper", "ediz_match", "notes"};
  return keys;
}

}  // namespace

std::string ReportToJson(const VerificationReport& report) {
  Json j;
  j["p"] = report.p;
  j["n"] = report.n;
  j["m"] = report.m;
  j["vertices"] = report.vertices;
  Json indices = Json::array();
  for (const auto& idx : report.indices) {
    Json ji;
    ji["index"] = ToString(idx.kind);
    ji["explicit"] = OptionalString(idx.explicit_value);
    ji["quotient"] = OptionalString(idx.quotient_value);
    ji["class"] = OptionalString(idx.class_value);
    Json paper = Json::array();
    for (const auto& cmp : idx.paper) {
      paper.push_back({{"theorem", cmp.theorem},
                       {"value", cmp.value},
                       {"match", cmp.match ? Json(*cmp.match) : Json(nullptr)},
                       {"requested", cmp.requested}});
    }
    ji["paper"] = paper;
    indices.push_back(ji);
  }
  j["indices"] = indices;
  j["notes"] = report.notes;
  j["requested_mismatch"] = report.RequestedMismatch();
  return j.dump(2);
}

VerificationReport ReportFromJson(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.n = j.at("n").get<unsigned>();
    r.m = j.at("m").get<std::string>();
    r.vertices = j.at("vertices").get<std::string>();
    for (const auto& ji : j.at("indices")) {
      IndexReport idx;
      idx.kind = ParseIndexKind(ji.at("index").get<std::string>());
      idx.explicit_value = ReadOptionalString(ji, "explicit");
      idx.quotient_value = ReadOptionalString(ji, "quotient");
      idx.class_value = ReadOptionalString(ji, "class");
      for (const auto& jc : ji.at("paper")) {
        PaperComparison cmp;
        cmp.theorem = jc.at("theorem").get<std::string>();
        cmp.value = jc.at("value").get<std::string>();
        if (!jc.at("match").is_null()) cmp.match = jc.at("match").get<bool>();
        cmp.requested = jc.at("requested").get<bool>();
        idx.paper.push_back(std::move(cmp));
      }
      r.indices.push_back(std::move(idx));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kInvalidArgument, std::string("malformed report JSON: ") + e.what());
  }
}

std::string ReportToMarkdown(const VerificationReport& report) {
  std::ostringstream out;
  out << "# Verification p=" << report.p << ", n=" << report.n << " (m=" << report.m << ", " << report.vertices
      << " vertices)\n\n";
  out << "| index | explicit | quotient | class | theorem | paper | match |\n";
  out << "|---|---|---|---|---|---|---|\n";
  auto cell = [](const std::optional<std::string>& v) { return v ? *v : std::string("-"); };
  for (const auto& idx : report.indices) {
    auto row_prefix = std::string("| ") + ToString(idx.kind) + " | " + cell(idx.explicit_value) + " | " +
                      cell(idx.quotient_value) + " | " + cell(idx.class_value) + " | ";
    if (idx.paper.empty()) {
      out << row_prefix << "- | - | - |\n";
      continue;
    }
    for (const auto& cmp : idx.paper) {
      std::string match = !cmp.match ? "undetermined" : (*cmp.match ? "yes" : "NO");
      if (!cmp.requested) match += " (not requested)";
      out << row_prefix << cmp.theorem << " | " << cmp.value << " | " << match << " |\n";
    }
  }
  if (!report.notes.empty()) {
    out << "\nNotes:\n";
    for (const auto& note : report.notes) out << "- " << note << "\n";
  }
  return out.str();
}

SweepRow MakeSweepRow(std::uint64_t p, unsigned n) {
  if (!IsPrime(p)) Fail(ErrorKind::kInvalidArgument, std::to_string(p) + " is not prime");
  if (n < 2) Fail(ErrorKind::kInvalidArgument, "n must be >= 2");
  SweepRow row;
  row.p = p;
  row.n = n;
  row.m = Pow(p, n, 0);
  row.vertices = Pow(p, n - 1, 1);
  std::vector<std::string> notes;

  if (p == 2 && n == 2) {
    row.eci_class = ToString(Eci(QuotientGraph::Build(Modulus::PrimePowerOf(2, 2))));
    row.aeci_class = "undefined";
    row.ediz_class = "undefined";
    notes.push_back("degenerate single-vertex graph; eci from the quotient path, aeci/ediz undefined");
  } else {
    row.eci_class = ToString(EciClass(p, n));
    row.aeci_class = ValueText(AeciClassFactored(p, n));
    row.ediz_class = EdizClass(p, n).ToString();
  }

  if (n < 3) {
    notes.push_back("no printed theorem for n = 2");
  } else {
    auto choose = [&](const char* specific, const char* general, unsigned specific_n) {
      return std::string(n == specific_n ? specific : general);
    };
    const std::string eci_thm = choose("3.1", "3.2", 3);
    const std::string aeci_thm = choose("4.1", "4.2", 4);
    const std::string ediz_thm = choose("5.1", "5.2", 3);
    FactoredSum eci_class_v({PowerProduct(ExactRational(EciClass(p, n)))});
    FactoredSum aeci_class_v = AeciClassFactored(p, n);
    FactoredSum ediz_class_v({PowerProduct(EdizClass(p, n))});
    for (const auto& pv : PaperValues(p, n)) {
      const FactoredSum* reference = nullptr;
      std::string *paper = nullptr, *match = nullptr;
      if (pv.theorem == eci_thm) {
        reference = &eci_class_v, paper = &row.eci_paper, match = &row.eci_match;
      } else if (pv.theorem == aeci_thm) {
        reference = &aeci_class_v, paper = &row.aeci_paper, match = &row.aeci_match;
      } else if (pv.theorem == ediz_thm) {
        reference = &ediz_class_v, paper = &row.ediz_paper, match = &row.ediz_match;
      } else {
        continue;
      }
      *paper = ValueText(pv.value);
      *match = MatchText(CompareValues(*reference, pv.value));
    }
    notes.push_back("eci vs theorem " + eci_thm + ", aeci vs theorem " + aeci_thm + ", ediz vs theorem " + ediz_thm);
  }
  for (std::size_t i = 0; i < notes.size(); ++i) row.notes += (i ? "; " : "") + notes[i];
  return row;
}

std::vector<SweepRow> Sweep(std::uint64_t p_max, unsigned n_max) {
  if (p_max < 2 || n_max < 2) Fail(ErrorKind::kInvalidArgument, "sweep bounds must be >= 2");
  std::vector<std::pair<std::uint64_t, unsigned>> grid;
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    if (!IsPrime(p)) continue;
    for (unsigned n = 2; n <= n_max; ++n) grid.emplace_back(p, n);
  }
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) rows[i] = MakeSweepRow(grid[i].first, grid[i].second);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), grid.size()));
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.p, a.n) < std::tie(b.p, b.n);
  });
  return rows;
}

std::string SweepToCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (auto row : rows) {
    out << row.p << ',' << row.n;
    for (std::string* field : RowFields(row)) out << ',' << CsvField(*field);
    out << "\n";
  }
  return out.str();
}

std::vector<SweepRow> SweepFromCsv(std::string_view text) {
  auto table = ParseCsv(text);
  if (table.empty()) Fail(ErrorKind::kInvalidArgument, "empty CSV");
  std::string header;
  for (std::size_t i = 0; i < table[0].size(); ++i) header += (i ? "," : "") + table[0][i];
  if (header != kSweepCsvHeader) Fail(ErrorKind::kInvalidArgument, "unexpected CSV header: " + header);
  std::vector<SweepRow> rows;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& cells = table[r];
    if (cells.size() != 14) Fail(ErrorKind::kInvalidArgument, "CSV row " + std::to_string(r) + " has wrong width");
    SweepRow row;
    row.p = ParseBigInt(cells[0]).get_ui();
    row.n = static_cast<unsigned>(ParseBigInt(cells[1]).get_ui());
    auto fields = RowFields(row);
    for (std::size_t i = 0; i < fields.size(); ++i) *fields[i] = cells[i + 2];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string SweepToJson(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (auto row : rows) {
    Json j;
    j["p"] = row.p;
    j["n"] = row.n;
    auto fields = RowFields(row);
    for (std::size_t i = 0; i < fields.size(); ++i) j[RowKeys()[i]] = *fields[i];
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::vector<SweepRow> SweepFromJson(std::string_view text) {
  try {
    const Json arr = Json::parse(text);
    if (!arr.is_array()) Fail(ErrorKind::kInvalidArgument, "malformed sweep JSON: expected an array");
    std::vector<SweepRow> rows;
    for (const auto& j : arr) {
      SweepRow row;
      row.p = j.at("p").get<std::uint64_t>();
      row.n = j.at("n").get<unsigned>();
      auto fields = RowFields(row);
      for (std::size_t i = 0; i < fields.size(); ++i) *fields[i] = j.at(RowKeys()[i]).get<std::string>();
      rows.push_back(std::move(row));
    }
    return rows;
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kInvalidArgument, std::string("malformed sweep JSON: ") + e.what());
  }
}

}  // namespace zdi
