#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nilt/bench.hpp"
#include "test_util.hpp"

using namespace nilt;
using namespace nilt::test;

TEST_CASE("sample grid covers 0.1 .. 4.0 in 40 steps") {
  auto ctx = ctx50();
  auto grid = sample_grid(ctx);
  REQUIRE(grid.size() == 40);
  CHECK(grid.front() == Real(ctx, 1L) / 10);
  CHECK(grid.back() == Real(ctx, 4L));
  for (size_t i = 1; i < grid.size(); ++i) {
    CHECK(grid[i] > grid[i - 1]);
  }
}

namespace {

std::vector<Real> reals(const PrecisionContext& ctx,
                        std::initializer_list<double> values) {
  std::vector<Real> out;
  for (double v : values) out.emplace_back(ctx, v);
  return out;
}

}  // namespace

TEST_CASE("error norms on hand-built sequences") {
  auto ctx = ctx50();
  auto exact = reals(ctx, {1, 2, 3});
  CHECK(l2_error(exact, exact).is_zero());
  CHECK(linf_error(exact, exact).is_zero());
  CHECK(pct_error(exact, exact).first.is_zero());

  auto off_one = reals(ctx, {1, 5, 3});  // one point off by 3
  CHECK(l2_error(off_one, exact) == Real(ctx, 3.0));
  CHECK(linf_error(off_one, exact) == Real(ctx, 3.0));

  auto shifted = reals(ctx, {1.5, 2.5, 3.5});  // all off by d = 0.5
  CHECK(within_pow10(l2_error(shifted, exact),
                     Real(ctx, 0.5) * sqrt(Real(ctx, 3.0)), -47));

  auto mixed = reals(ctx, {2, 7, 5});  // diffs {1, 5, 2}
  CHECK(linf_error(mixed, exact) == Real(ctx, 5.0));
  CHECK(linf_error(mixed, exact) <= l2_error(mixed, exact));

  auto num = reals(ctx, {1.01, 2, 3});
  CHECK(within_pow10(pct_error(num, exact).first, Real(ctx, 1.0), -13));

  CHECK_THROWS_AS(l2_error(reals(ctx, {1, 2}), exact), InvalidParameterError);
}

TEST_CASE("percentage error skips near-zero exact values") {
  auto ctx = ctx50();
  auto exact = reals(ctx, {0, 2, 4});
  auto num = reals(ctx, {1, 2.2, 4});
  auto [pct, skipped] = pct_error(num, exact);
  CHECK(skipped == 1);
  CHECK(within_pow10(pct, Real(ctx, 10.0), -13));

  auto zeros = reals(ctx, {0, 0});
  CHECK_THROWS_AS(pct_error(reals(ctx, {1, 1}), zeros), DomainError);
}

TEST_CASE("linf never exceeds l2 on random data") {
  auto ctx = ctx16();
  TestRng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Real> a, b;
    for (int i = 0; i < 40; ++i) {
      a.push_back(rng.real(ctx, -5, 5));
      b.push_back(rng.real(ctx, -5, 5));
    }
    CHECK(linf_error(a, b) <= l2_error(a, b));
  }
}

TEST_CASE("run_case fills a complete row") {
  const TestCase& tc = case_by_id(2);
  MethodConfig config;
  config.method = Method::Stehfest;
  config.terms = 16;
  ExperimentRow row = run_case(tc, config, std::nullopt);
  CHECK(row.case_id == 2);
  CHECK(row.terms == 16);
  CHECK(row.digits == 29);
  CHECK_FALSE(row.noise_on);
  CHECK(row.report.skipped_pct_points == 0);
  // reference magnitude for this cell is 1.1e-4
  CHECK(row.report.l2.to_double() > 1e-5);
  CHECK(row.report.l2.to_double() < 1e-3);
  CHECK(row.report.linf <= row.report.l2);
}

TEST_CASE("talbot noise monotonicity outside the noise-dominated cases") {
  SuiteConfig config;
  config.case_ids = {1, 2, 3, 6, 7, 8};
  config.methods = {Method::Talbot};
  auto rows = run_suite(config);
  REQUIRE(rows.size() == 12);
  for (size_t i = 0; i < rows.size(); i += 2) {
    const auto& clean = rows[i];
    const auto& noisy = rows[i + 1];
    REQUIRE(clean.case_id == noisy.case_id);
    REQUIRE_FALSE(clean.noise_on);
    REQUIRE(noisy.noise_on);
    CHECK(noisy.report.l2 >= clean.report.l2);
  }
}

TEST_CASE("Talbot converges far ahead of the Fourier series") {
  const TestCase& tc = case_by_id(2);
  MethodConfig talbot{.method = Method::Talbot, .terms = 55};
  MethodConfig fourier{.method = Method::Fourier, .terms = 55};
  double talbot_l2 = run_case(tc, talbot, std::nullopt).report.l2.to_double();
  double fourier_l2 = run_case(tc, fourier, std::nullopt).report.l2.to_double();
  CHECK(fourier_l2 >= 100.0 * talbot_l2);
}

TEST_CASE("scaled Talbot contour still inverts") {
  PrecisionContext ctx(110);
  auto one_over_s = [](const Complex& s) { return 1 / s; };
  Real at_default = talbot_invert(one_over_s, Real(ctx, 1L), 55, ctx);
  Real at_one = talbot_invert(one_over_s, Real(ctx, 1L), 55, ctx, 1.0);
  CHECK(at_default == at_one);
  Real scaled = talbot_invert(one_over_s, Real(ctx, 1L), 55, ctx, 2.0);
  CHECK(abs(scaled - Real(ctx, 1L)) < pow10(ctx, -8));
  CHECK_THROWS_AS(talbot_invert(one_over_s, Real(ctx, 1L), 55, ctx, 0.0),
                  InvalidParameterError);
}

TEST_CASE("suite rows and CSV output are deterministic") {
  SuiteConfig config;
  config.case_ids = {2};
  config.methods = {Method::Stehfest};
  auto rows_a = run_suite(config);
  auto rows_b = run_suite(config);
  REQUIRE(rows_a.size() == 2);

  std::ostringstream csv_a, csv_b;
  emit_csv(rows_a, csv_a);
  emit_csv(rows_b, csv_b);
  CHECK(csv_a.str() == csv_b.str());
  CHECK(csv_a.str().rfind("case_id,case_name,method,terms,digits,noise,delta,"
                          "seed,l2,linf,pct_max,skipped_pct\n", 0) == 0);

  // parallel schedule reproduces the serial rows bit for bit
  SuiteConfig parallel = config;
  parallel.jobs = 4;
  std::ostringstream csv_c;
  emit_csv(run_suite(parallel), csv_c);
  CHECK(csv_c.str() == csv_a.str());
}

TEST_CASE("markdown emitter keeps the two-column-group table shape") {
  SuiteConfig config;
  config.case_ids = {7};
  auto rows = run_suite(config);
  auto dir = std::filesystem::temp_directory_path() / "nilt_md_test";
  std::filesystem::create_directories(dir);
  auto files = emit_markdown(rows, dir);
  REQUIRE(files.size() == 1);

  std::ifstream in(files[0]);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("| stehfest | 36/16 |") != std::string::npos);
  CHECK(text.find("| talbot | 55 |") != std::string::npos);
  CHECK(text.find("| fourier | 55 |") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("plot data schema") {
  SuiteConfig config;
  std::ostringstream out;
  emit_plot_data(case_by_id(1), config, false, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,exact,stehfest,talbot,fourier");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
  CHECK(rows == 40);

  SuiteConfig talbot_only;
  talbot_only.methods = {Method::Talbot};
  std::ostringstream narrow;
  emit_plot_data(case_by_id(1), talbot_only, false, narrow);
  std::istringstream nin(narrow.str());
  std::getline(nin, header);
  CHECK(header == "t,exact,talbot");
}

TEST_CASE("compact table number rendering") {
  auto ctx = ctx16();
  CHECK(table_format(Real(ctx, 2.03e-6)) == "2.0(-6)");
  CHECK(table_format(Real(ctx, 9.42e-4)) == "9.4(-4)");
  CHECK(table_format(Real(ctx, 4.6e16)) == "4.6(16)");
  CHECK(table_format(Real(ctx)) == "0.0(0)");
  CHECK(table_format(Real(ctx, 9.96e-4)) == "1.0(-3)");
}
