#include <doctest.h>

#include <cmath>
#include <sstream>

#include "psq/experiments.hpp"

using namespace psq;

namespace {

ScanConfig small_config() {
  ScanConfig config;
  config.cs = {RealExponent::parse("3/2")};
  config.Ns = {100, 1000};
  config.beta = Rational(1, 2);
  return config;
}

std::string mask_seconds(const std::string& csv) {
  std::stringstream in(csv), out;
  std::string line;
  while (std::getline(in, line)) {
    const auto cut = line.rfind(',');
    out << line.substr(0, cut) << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("run_scan shape and row invariants") {
  auto rows = run_scan(small_config());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].N == 100);
  CHECK(rows[0].S == 10);
  CHECK(rows[1].N == 1000);
  CHECK(rows[1].S == 31);  // [1000^(1/2)]
  for (const auto& r : rows) {
    CHECK(r.exact_count <= r.N);
    CHECK(r.bound_total > 0.0);
  }
}

TEST_CASE("scan_S_for computes exact floors and clamps beta") {
  ScanConfig config = small_config();
  const RealExponent c = RealExponent::parse("3/2");
  CHECK(scan_S_for(config, c, 999) == 31);
  CHECK(scan_S_for(config, c, 1000000) == 1000);
  config.beta = Rational(7, 4);  // above c: clamps to c, S = [N^c]
  CHECK(scan_S_for(config, c, 100) == 1000);
  config.fixed_S = 17;
  config.beta.reset();
  CHECK(scan_S_for(config, c, 12345) == 17);
}

TEST_CASE("csv round-trip preserves every field") {
  auto rows = run_scan(small_config());
  std::stringstream buf;
  write_scan_csv(rows, buf);
  auto parsed = parse_scan_csv(buf);
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].c == rows[i].c);
    CHECK(parsed[i].N == rows[i].N);
    CHECK(parsed[i].S == rows[i].S);
    CHECK(parsed[i].exact_count == rows[i].exact_count);
    CHECK(parsed[i].main_term == rows[i].main_term);      // bit-exact
    CHECK(parsed[i].deviation == rows[i].deviation);      // bit-exact
    CHECK(parsed[i].bound_total == rows[i].bound_total);  // bit-exact
    CHECK(parsed[i].bound_argmin == rows[i].bound_argmin);
  }
}

TEST_CASE("re-running a scan is byte-identical modulo seconds") {
  auto a = run_scan(small_config());
  auto b = run_scan(small_config());
  std::stringstream sa, sb;
  write_scan_csv(a, sa);
  write_scan_csv(b, sb);
  CHECK(mask_seconds(sa.str()) == mask_seconds(sb.str()));
}

TEST_CASE("parallel and serial scans agree exactly") {
  ScanConfig serial = small_config();
  serial.options.threads = 1;
  ScanConfig parallel = small_config();
  parallel.options.threads = 4;
  auto a = run_scan(serial);
  auto b = run_scan(parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].exact_count == b[i].exact_count);
    CHECK(a[i].main_term == b[i].main_term);
    CHECK(a[i].deviation == b[i].deviation);
    CHECK(a[i].bound_total == b[i].bound_total);
  }
}

TEST_CASE("config validation") {
  ScanConfig config = small_config();
  config.Ns = {1000, 100};
  CHECK_THROWS_AS(run_scan(config), DomainError);
  config = small_config();
  config.fixed_S = 5;  // both rules set
  CHECK_THROWS_AS(run_scan(config), DomainError);
  config = small_config();
  config.beta.reset();
  CHECK_THROWS_AS(run_scan(config), DomainError);
}

TEST_CASE("fit recovers a synthetic exponent") {
  // deviations proportional to N^0.8 must fit slope 0.8 exactly
  std::vector<ScanRow> rows;
  for (std::uint64_t N : {100ULL, 1000ULL, 10000ULL, 100000ULL}) {
    ScanRow r;
    r.c = Rational(3, 2);
    r.N = N;
    r.S = 1;
    r.deviation = 3.0 * std::pow(static_cast<double>(N), 0.8);
    r.bound_total = 1.0;
    rows.push_back(r);
  }
  auto fit = fit_error_exponent(rows, "lsz", Rational(0), axiom_pair());
  CHECK(fit.slope == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.points_used == 4);
}

TEST_CASE("fit requires 3 usable rows and a common c") {
  std::vector<ScanRow> rows(2);
  rows[0].c = rows[1].c = Rational(3, 2);
  rows[0].N = 10;
  rows[1].N = 100;
  CHECK_THROWS_AS(fit_error_exponent(rows, "lsz", Rational(0), axiom_pair()),
                  DomainError);

  rows.resize(4);
  for (auto& r : rows) r.c = Rational(3, 2);
  rows[0].N = 10;
  rows[1].N = 100;
  rows[2].N = 1000;
  rows[3].N = 10000;
  rows[0].deviation = 0.0;  // excluded
  rows[1].deviation = 0.0;  // excluded
  rows[2].deviation = 5.0;
  rows[3].deviation = 9.0;
  CHECK_THROWS_AS(fit_error_exponent(rows, "lsz", Rational(0), axiom_pair()),
                  DegenerateFit);

  rows[1].c = Rational(7, 4);
  rows[1].deviation = 1.0;
  CHECK_THROWS_AS(fit_error_exponent(rows, "lsz", Rational(0), axiom_pair()),
                  DomainError);
}

TEST_CASE("fit predicted exponent follows the argmin under the S-rule") {
  // c = 3/2, S = N^(1/2): theorem argmin is T2 with exponent
  // (1/8)(1/2) + (2+3c)/8 = 7/8.
  auto rows = run_scan(small_config());
  ScanRow extra;  // third point so the fit is defined
  {
    ScanConfig config = small_config();
    config.Ns = {10000};
    extra = run_scan(config)[0];
  }
  rows.push_back(extra);
  auto fit = fit_error_exponent(rows, "theorem", Rational(1, 2),
                                apply_word("BABAAB", axiom_pair()));
  CHECK(fit.predicted_exponent == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(fit.margin == doctest::Approx(fit.slope - 0.875).epsilon(1e-12));
}

TEST_CASE("plot data kinds") {
  auto rows = run_scan(small_config());
  std::stringstream dev;
  emit_plotdata(rows, "deviation", dev);
  std::string line;
  std::getline(dev, line);
  CHECK(line == "# N  abs_deviation");
  int count = 0;
  while (std::getline(dev, line)) ++count;
  CHECK(count == 2);

  std::stringstream ratio;
  emit_plotdata(rows, "ratio", ratio);
  CHECK(ratio.str().find("abs_deviation_over_bound") != std::string::npos);

  std::stringstream empty;
  emit_plotdata({}, "deviation", empty);
  CHECK(empty.str() == "# N  abs_deviation\n");

  CHECK_THROWS_AS(emit_plotdata(rows, "nope", dev), DomainError);
}

TEST_CASE("tau table has 99 rows and the documented kink") {
  std::stringstream out;
  emit_tau_table(out);
  std::string line;
  int comments = 0, data = 0;
  double prev_new = 0.0;
  bool jumped = false;
  while (std::getline(out, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      ++comments;
      continue;
    }
    ++data;
    std::stringstream ss(line);
    double c, t_lsz, t_new;
    ss >> c >> t_lsz >> t_new;
    CHECK(t_lsz > 0.0);
    if (data > 1 && t_new < prev_new - 0.4) jumped = true;
    prev_new = t_new;
  }
  CHECK(comments >= 3);
  CHECK(data == 99);
  CHECK(jumped);  // the 18/11 discontinuity is visible on the grid
}
