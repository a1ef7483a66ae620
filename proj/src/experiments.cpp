#include "psq/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "psq/parallel.hpp"

namespace psq {

namespace {

using u64 = std::uint64_t;

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void validate_config(const ScanConfig& config) {
  if (config.cs.empty() || config.Ns.empty()) {
    throw DomainError("scan needs at least one c and one N");
  }
  for (std::size_t i = 1; i < config.Ns.size(); ++i) {
    if (config.Ns[i] <= config.Ns[i - 1]) {
      throw DomainError("N grid must be strictly increasing");
    }
  }
  if (config.fixed_S.has_value() == config.beta.has_value()) {
    throw DomainError("exactly one of fixed S and S-rule N^beta is required");
  }
  if (config.beta && *config.beta <= 0) {
    throw DomainError("S-rule exponent must be positive");
  }
}

// [N^beta] computed exactly: root(N^u, w) for beta = u/w.
u64 pow_floor(u64 N, const Rational& beta) {
  const unsigned long u = beta.get_num().get_ui();
  const unsigned long w = beta.get_den().get_ui();
  Integer root;
  const Integer Nu = pow_int(Integer(N), u);
  mpz_root(root.get_mpz_t(), Nu.get_mpz_t(), w);
  return to_uint64(root);
}

struct TermExponents {
  std::string label;
  double s_exp;
  double n_exp;
  double companion_s_exp = 0.0;  // second summand inside the same term
  double companion_n_exp = 0.0;
  bool has_companion = false;
};

std::vector<TermExponents> bound_exponents(const std::string& against,
                                           const Rational& c,
                                           const ExponentPair& pair) {
  const double cd = psq::to_double(c);
  const double gamma = 1.0 / cd;
  if (against == "lsz") {
    return {
        {"L1", 0.2, (1.0 + 2.0 * cd) / 5.0},
        {"L2", 0.125, (2.0 + 3.0 * cd) / 8.0},
        {"L3", 0.625, 3.0 * cd / 8.0},
        {"L4", 1.0, 1.0 - cd},
    };
  }
  if (against == "theorem") {
    const double kd = psq::to_double(pair.kappa);
    return {
        {"T1", 0.2, (1.0 + 2.0 * cd) / 5.0},
        {"T2", 0.125, (2.0 + 3.0 * cd) / 8.0},
        {"T3", psq::to_double(pair_term_s_exponent(pair)),
         kd / (1.0 + kd) + cd / 2.0, 1.0 - gamma, 0.0, true},
    };
  }
  throw DomainError("fit target must be \"theorem\" or \"lsz\"");
}

}  // namespace

u64 scan_S_for(const ScanConfig& config, const RealExponent& c, u64 N) {
  if (config.fixed_S) return *config.fixed_S;
  Rational beta = *config.beta;
  if (beta > c.value()) {
    std::cerr << "warning: S-rule exponent " << psq::to_string(beta)
              << " exceeds c = " << psq::to_string(c.value())
              << "; clamping to c\n";
    beta = c.value();
  }
  return pow_floor(N, beta);
}

std::vector<ScanRow> run_scan(const ScanConfig& config) {
  validate_config(config);
  struct Point {
    RealExponent c;
    u64 N;
  };
  std::vector<Point> points;
  for (const auto& c : config.cs) {
    for (u64 N : config.Ns) points.push_back({c, N});
  }

  // Rows run in parallel with serial inner scans; a single row keeps the
  // inner scan parallel instead. Either way the numbers are identical.
  CountingOptions inner = config.options;
  const bool parallel_rows = points.size() > 1 && config.options.threads != 1;
  if (parallel_rows) inner.threads = 1;

  std::vector<ScanRow> rows = map_blocks_ordered<std::vector<ScanRow>>(
      0, points.size(), 1, parallel_rows ? config.options.threads : 1,
      std::vector<ScanRow>{},
      [&](u64 lo, u64 hi) {
        std::vector<ScanRow> part;
        for (u64 i = lo; i < hi; ++i) {
          const auto& [c, N] = points[i];
          const u64 S = scan_S_for(config, c, N);
          const auto t0 = std::chrono::steady_clock::now();
          const CountReport rep = count_Qfrak(c, S, N, config.pair, inner);
          const auto t1 = std::chrono::steady_clock::now();
          ScanRow row;
          row.c = c.value();
          row.N = N;
          row.S = S;
          row.exact_count = rep.exact_count;
          row.main_term = rep.main_term;
          row.deviation = rep.deviation;
          row.bound_total = rep.bound.total;
          row.bound_argmin = rep.bound.min_label;
          row.seconds = std::chrono::duration<double>(t1 - t0).count();
          part.push_back(std::move(row));
        }
        return part;
      },
      [](std::vector<ScanRow> acc, std::vector<ScanRow> part) {
        for (auto& r : part) acc.push_back(std::move(r));
        return acc;
      });

  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out) throw Error("cannot open " + config.out_path + " for writing");
    write_scan_csv(rows, out);
  }
  return rows;
}

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << "c_num,c_den,N,S,exact_count,main_term,deviation,bound_total,"
         "bound_argmin,seconds\n";
  for (const auto& r : rows) {
    out << r.c.get_num().get_str() << ',' << r.c.get_den().get_str() << ','
        << r.N << ',' << r.S << ',' << r.exact_count << ','
        << fmt_real(r.main_term) << ',' << fmt_real(r.deviation) << ','
        << fmt_real(r.bound_total) << ',' << r.bound_argmin << ','
        << fmt_real(r.seconds) << '\n';
  }
}

std::vector<ScanRow> parse_scan_csv(std::istream& in) {
  std::vector<ScanRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10) throw Error("malformed CSV row: " + line);
    ScanRow r;
    r.c = Rational(Integer(fields[0]), Integer(fields[1]));
    r.c.canonicalize();
    r.N = std::stoull(fields[2]);
    r.S = std::stoull(fields[3]);
    r.exact_count = std::stoull(fields[4]);
    r.main_term = std::strtod(fields[5].c_str(), nullptr);
    r.deviation = std::strtod(fields[6].c_str(), nullptr);
    r.bound_total = std::strtod(fields[7].c_str(), nullptr);
    r.bound_argmin = fields[8];
    r.seconds = std::strtod(fields[9].c_str(), nullptr);
    rows.push_back(std::move(r));
  }
  return rows;
}

FitResult fit_error_exponent(const std::vector<ScanRow>& rows,
                             const std::string& against, const Rational& beta,
                             const ExponentPair& pair) {
  if (rows.size() < 3) throw DomainError("fit needs at least 3 rows");
  const Rational c = rows.front().c;
  for (const auto& r : rows) {
    if (r.c != c) throw DomainError("fit requires rows with a common c");
  }

  std::vector<double> xs, ys;
  const ScanRow* top = nullptr;
  for (const auto& r : rows) {
    if (r.deviation == 0.0) {
      std::cerr << "note: excluding N = " << r.N
                << " from the fit (zero deviation)\n";
      continue;
    }
    xs.push_back(std::log(static_cast<double>(r.N)));
    ys.push_back(std::log(std::abs(r.deviation)));
    if (!top || r.N > top->N) top = &r;
  }
  if (xs.size() < 3) {
    throw DegenerateFit("fewer than 3 rows with nonzero deviation");
  }

  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DegenerateFit("all rows share one N");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points_used = static_cast<int>(n);

  // Predicted exponent: the argmin bound term at the largest N, with S
  // collapsed along S = N^beta.
  const double beta_d = psq::to_double(beta);
  const auto terms = bound_exponents(against, c, pair);
  BoundProfile profile =
      against == "lsz"
          ? error_bound_lsz(c, static_cast<double>(top->S),
                            static_cast<double>(top->N))
          : error_bound_theorem(c, static_cast<double>(top->S),
                                static_cast<double>(top->N), pair);
  for (const auto& t : terms) {
    if (t.label != profile.min_label) continue;
    double expo = t.s_exp * beta_d + t.n_exp;
    if (t.has_companion) {
      expo = std::max(expo, t.companion_s_exp * beta_d + t.companion_n_exp);
    }
    fit.predicted_exponent = expo;
  }
  fit.margin = fit.slope - fit.predicted_exponent;
  return fit;
}

void emit_plotdata(const std::vector<ScanRow>& rows, const std::string& kind,
                   std::ostream& out) {
  if (kind == "tau") {
    emit_tau_table(out);
    return;
  }
  if (kind == "deviation") {
    out << "# N  abs_deviation\n";
    for (const auto& r : rows) {
      out << r.N << ' ' << fmt_real(std::abs(r.deviation)) << '\n';
    }
    return;
  }
  if (kind == "ratio") {
    out << "# N  abs_deviation_over_bound\n";
    for (const auto& r : rows) {
      out << r.N << ' ' << fmt_real(std::abs(r.deviation) / r.bound_total)
          << '\n';
    }
    return;
  }
  throw DomainError("plot kind must be deviation, ratio or tau");
}

void emit_tau_table(std::ostream& out) {
  out << "# c  tau_lsz  tau_new\n";
  out << "# tau_lsz is continuous at c = 12/7 (both branches give 4/7)\n";
  out << "# tau_new jumps at c = 18/11; on (1, 18/11] the value c is a "
         "supremum (S <= N^(c-eps))\n";
  for (int i = 101; i <= 199; ++i) {
    Rational c(i, 100);
    c.canonicalize();
    out << fmt_real(i / 100.0) << ' ' << fmt_real(psq::to_double(tau_lsz(c)))
        << ' ' << fmt_real(psq::to_double(tau_new(c))) << '\n';
  }
}

}  // namespace psq
