#include "zdi/report_io.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

#include "zdi/errors.hpp"

namespace zdi {
namespace {

TEST(ReportJsonTest, RoundTripsVerifyReports) {
  VerifyOptions all;
  all.theorems = AllTheorems();
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 4}, {3, 3}, {5, 4}, {1000003, 3}}) {
    auto report = Verify(p, n, all);
    auto text = ReportToJson(report);
    EXPECT_EQ(ReportFromJson(text), report) << p << "^" << n;
  }
}

TEST(ReportJsonTest, Schema) {
  auto j = nlohmann::json::parse(ReportToJson(Verify(3, 3)));
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["m"], "27");
  ASSERT_EQ(j["indices"].size(), 3u);
  EXPECT_EQ(j["indices"][0]["index"], "eci");
  EXPECT_EQ(j["indices"][1]["explicit"], "1043");
  EXPECT_EQ(j["requested_mismatch"], false);
}

TEST(ReportJsonTest, MalformedInput) {
  EXPECT_THROW(ReportFromJson("{"), Error);
  EXPECT_THROW(ReportFromJson("{\"p\": 3}"), Error);
  EXPECT_THROW(ReportFromJson("[]"), Error);
}

TEST(ReportMarkdownTest, ContainsValues) {
  VerifyOptions opts;
  opts.theorems = {"4.1"};
  auto md = ReportToMarkdown(Verify(2, 4, opts));
  EXPECT_NE(md.find("732"), std::string::npos);
  EXPECT_NE(md.find("28"), std::string::npos);
  EXPECT_NE(md.find('|'), std::string::npos);
}

TEST(SweepTest, RowsAndMatches) {
  auto rows = Sweep(3, 4);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].p, 2u);
  EXPECT_EQ(rows[0].n, 2u);
  EXPECT_EQ(rows[0].aeci_class, "undefined");
  EXPECT_EQ(rows[0].eci_match, "");
  const auto& r33 = rows[4];
  EXPECT_EQ(r33.p, 3u);
  EXPECT_EQ(r33.n, 3u);
  EXPECT_EQ(r33.eci_class, "38");
  EXPECT_EQ(r33.eci_match, "true");
  EXPECT_EQ(r33.ediz_match, "true");
  const auto& r24 = rows[2];
  EXPECT_EQ(r24.n, 4u);
  EXPECT_EQ(r24.aeci_class, "28");
  EXPECT_EQ(r24.aeci_paper, "732");
  EXPECT_EQ(r24.aeci_match, "false");
}

TEST(SweepTest, CsvRoundTrip) {
  auto rows = Sweep(5, 4);
  auto csv = SweepToCsv(rows);
  EXPECT_EQ(csv.substr(0, kSweepCsvHeader.size()), kSweepCsvHeader);
  EXPECT_EQ(SweepFromCsv(csv), rows);
}

TEST(SweepTest, CsvQuoting) {
  SweepRow row;
  row.p = 7;
  row.n = 3;
  row.m = "343";
  row.notes = "a, \"quoted\" note";
  auto csv = SweepToCsv({row});
  EXPECT_NE(csv.find("\"a, \"\"quoted\"\" note\""), std::string::npos);
  EXPECT_EQ(SweepFromCsv(csv), std::vector<SweepRow>{row});
}

TEST(SweepTest, JsonRoundTrip) {
  auto rows = Sweep(3, 5);
  EXPECT_EQ(SweepFromJson(SweepToJson(rows)), rows);
}

TEST(SweepTest, MalformedJson) {
  EXPECT_THROW(SweepFromJson("{}"), Error);
  EXPECT_THROW(SweepFromJson("[{\"p\": 2}]"), Error);
  EXPECT_THROW(SweepFromJson("[1"), Error);
}

TEST(SweepTest, MalformedCsv) {
  EXPECT_THROW(SweepFromCsv("p,n\n1,2\n"), Error);
  EXPECT_THROW(SweepFromCsv(std::string(kSweepCsvHeader) + "\n2,3\n"), Error);
  EXPECT_THROW(SweepFromCsv(std::string(kSweepCsvHeader) + "\nx,3,8,3,,,,,,,,,,\n"), Error);
}

}  // namespace
}  // namespace zdi
