// Command-line driver: count/scan/decompose/pairs/psi/expsum/fit/tau.
// Exit codes: 0 success, 1 a verification reported violations,
// 2 precondition violation, 3 budget exhaustion.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "psq/counting.hpp"
#include "psq/experiments.hpp"
#include "psq/expsums.hpp"
#include "psq/fourier.hpp"

namespace {

using namespace psq;

ExponentPair parse_pair_arg(const std::string& text) {
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return make_pair(parse_rational(text.substr(0, comma)),
                     parse_rational(text.substr(comma + 1)),
                     "external constant");
  }
  return apply_word(text, axiom_pair());
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& text, Parse parse) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse(item));
  }
  if (out.empty()) throw DomainError("empty list: " + text);
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  return parse_list<std::uint64_t>(
      text, [](const std::string& s) { return std::stoull(s); });
}

Rational parse_s_rule(const std::string& text) {
  if (text.rfind("N^", 0) != 0) {
    throw DomainError("S rule must look like N^1/2, got " + text);
  }
  return parse_rational(text.substr(2));
}

std::string pair_str(const ExponentPair& p) {
  std::string s = "(" + psq::to_string(p.kappa) + ", " +
                  psq::to_string(p.lambda) + ")";
  if (!p.provenance.empty()) s += " [" + p.provenance + "]";
  return s;
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error("cannot open " + path + " for writing");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact counting and bound evaluation for squares in the sequences "
      "[n^c], 1 < c < 2"};
  app.require_subcommand(1);

  std::function<int()> action;

  // ---- count ----
  auto* count = app.add_subcommand(
      "count", "Evaluate one Q_c(s,N) (with --s) or Qfrak_c(S,N) (with --S)");
  {
    auto c_text = std::make_shared<std::string>();
    auto pair_text = std::make_shared<std::string>("BABAAB");
    auto N = std::make_shared<std::uint64_t>(0);
    auto s = std::make_shared<std::uint64_t>(0);
    auto S = std::make_shared<std::uint64_t>(0);
    auto threads = std::make_shared<int>(0);
    count->add_option("--c", *c_text, "exponent c as p/q or decimal")->required();
    count->add_option("--N", *N, "range limit")->required();
    auto* s_opt = count->add_option("--s", *s, "fixed squarefree part s");
    auto* S_opt = count->add_option("--S", *S, "sum over squarefree s <= S");
    count->add_option("--pair", *pair_text, "exponent pair: word or k/l,m/n");
    count->add_option("--threads", *threads, "worker threads (0 = auto)");
    s_opt->excludes(S_opt);
    count->callback([=, &action]() {
      action = [=]() {
        const RealExponent c = RealExponent::parse(*c_text);
        const ExponentPair pair = parse_pair_arg(*pair_text);
        CountingOptions opt;
        opt.threads = *threads;
        if (!*s && !*S) throw DomainError("one of --s and --S is required");
        const CountReport rep = *s ? count_Q(c, *s, *N, pair, opt)
                                   : count_Qfrak(c, *S, *N, pair, opt);
        std::cout << (*s ? "Q_c(s,N)" : "Qfrak_c(S,N)") << " with c = "
                  << psq::to_string(rep.c) << ", " << (*s ? "s" : "S") << " = "
                  << rep.s_or_S << ", N = " << rep.N << "\n"
                  << "  exact_count = " << rep.exact_count << "\n"
                  << "  main_term   = " << rep.main_term << "\n"
                  << "  deviation   = " << rep.deviation << "\n";
        for (const auto& [label, value] : rep.bound.term_values) {
          std::cout << "  bound " << label << " = " << value
                    << (label == rep.bound.min_label ? "  (argmin)" : "")
                    << "\n";
        }
        std::cout << "  bound tail  = " << rep.bound.tail << "\n"
                  << "  bound total = " << rep.bound.total
                  << "  (log-slack " << rep.bound.log_slack << ")\n";
        return 0;
      };
    });
  }

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "Grid scan of Qfrak -> CSV");
  {
    auto c_text = std::make_shared<std::string>();
    auto N_text = std::make_shared<std::string>();
    auto S = std::make_shared<std::uint64_t>(0);
    auto rule = std::make_shared<std::string>();
    auto pair_text = std::make_shared<std::string>("BABAAB");
    auto out = std::make_shared<std::string>();
    auto budget = std::make_shared<std::uint64_t>(50'000'000);
    auto threads = std::make_shared<int>(0);
    scan->add_option("--c", *c_text, "comma list of exponents")->required();
    scan->add_option("--N", *N_text, "comma list, strictly increasing")->required();
    auto* S_opt = scan->add_option("--S", *S, "fixed S");
    auto* rule_opt = scan->add_option("--S-rule", *rule, "S = N^b, e.g. N^1/2");
    scan->add_option("--pair", *pair_text, "exponent pair for bounds");
    scan->add_option("--out", *out, "CSV output path")->required();
    scan->add_option("--budget", *budget, "pair budget");
    scan->add_option("--threads", *threads, "worker threads (0 = auto)");
    S_opt->excludes(rule_opt);
    scan->callback([=, &action]() {
      action = [=]() {
        ScanConfig config;
        config.cs = parse_list<RealExponent>(*c_text, [](const std::string& t) {
          return RealExponent::parse(t);
        });
        config.Ns = parse_u64_list(*N_text);
        if (*S) config.fixed_S = *S;
        if (!rule->empty()) config.beta = parse_s_rule(*rule);
        config.pair = parse_pair_arg(*pair_text);
        config.out_path = *out;
        config.options.pair_budget = *budget;
        config.options.threads = *threads;
        const auto rows = run_scan(config);
        std::cout << "wrote " << rows.size() << " rows to " << *out << "\n";
        return 0;
      };
    });
  }

  // ---- decompose ----
  auto* dec = app.add_subcommand("decompose",
                                 "S0/E1/E2 decomposition of Qfrak_c(S,N)");
  {
    auto c_text = std::make_shared<std::string>();
    auto N = std::make_shared<std::uint64_t>(0);
    auto S = std::make_shared<std::uint64_t>(0);
    auto budget = std::make_shared<std::uint64_t>(50'000'000);
    auto threads = std::make_shared<int>(0);
    dec->add_option("--c", *c_text)->required();
    dec->add_option("--N", *N)->required();
    dec->add_option("--S", *S)->required();
    dec->add_option("--budget", *budget, "pair budget");
    dec->add_option("--threads", *threads);
    dec->callback([=, &action]() {
      action = [=]() {
        CountingOptions opt;
        opt.pair_budget = *budget;
        opt.threads = *threads;
        const auto rep =
            decompose_S0_E1_E2(RealExponent::parse(*c_text), *S, *N, opt);
        std::cout << "S0 = " << rep.S0 << "\nE1 = " << rep.E1
                  << "\nE2 = " << rep.E2
                  << "\nS0 - E1 + E2 = " << rep.S0 - rep.E1 + rep.E2
                  << "\nQfrak exact  = " << rep.Qfrak_exact
                  << "\nresidual     = " << rep.residual
                  << "  (|.| <= 2 expected)"
                  << "\npairs        = " << rep.pair_count << "\n";
        return 0;
      };
    });
  }

  // ---- pairs ----
  auto* pairs = app.add_subcommand(
      "pairs", "Exponent-pair calculus: apply words, derive exponents, search");
  {
    auto pair_text = std::make_shared<std::string>();
    auto c_text = std::make_shared<std::string>();
    auto a_text = std::make_shared<std::string>();
    auto search = std::make_shared<bool>(false);
    auto max_len = std::make_shared<int>(6);
    auto half_ratio = std::make_shared<bool>(false);
    auto hypothesis = std::make_shared<bool>(false);
    auto objective = std::make_shared<std::string>("kappa-ratio");
    pairs->add_option("--pair", *pair_text, "word or k/l,m/n");
    pairs->add_option("--c", *c_text, "evaluate theta1/theta2 at this c");
    pairs->add_option("--a", *a_text,
                      "report the admissible c range (6a+5)/(4a+3) for (a,1/2+a)");
    pairs->add_flag("--search", *search, "search words up to --max-len");
    pairs->add_option("--max-len", *max_len, "maximum word length");
    pairs->add_flag("--half-ratio", *half_ratio,
                    "constrain lambda/(1+kappa) = 1/2");
    pairs->add_flag("--hypothesis", *hypothesis,
                    "constrain (1-kappa)/2 <= lambda-kappa");
    pairs->add_option("--objective", *objective,
                      "kappa-ratio | theta1 (needs --c) | rho1");
    pairs->callback([=, &action]() {
      action = [=]() {
        if (*search) {
          PairObjective obj;
          if (*objective == "kappa-ratio") {
            obj = [](const ExponentPair& p) -> Rational {
              return Rational(p.kappa / (1 + p.kappa));
            };
          } else if (*objective == "theta1") {
            if (c_text->empty()) throw DomainError("--objective theta1 needs --c");
            const Rational c = parse_rational(*c_text);
            obj = [c](const ExponentPair& p) -> Rational {
              return derived_exponents(p).theta1(c);
            };
          } else if (*objective == "rho1") {
            obj = [](const ExponentPair& p) -> Rational {
              return derived_exponents(p).rho1;
            };
          } else {
            throw DomainError("unknown objective " + *objective);
          }
          std::vector<PairConstraint> constraints;
          if (*half_ratio) {
            constraints.push_back([](const ExponentPair& p) {
              return p.lambda / (1 + p.kappa) == Rational(1, 2);
            });
          }
          if (*hypothesis) {
            constraints.push_back(
                [](const ExponentPair& p) { return check_theorem_hypothesis(p); });
          }
          const auto r = search_pairs(obj, constraints, *max_len);
          std::cout << "best pair " << pair_str(r.pair) << "\n"
                    << "objective = " << psq::to_string(r.objective_value)
                    << "\n";
          return 0;
        }
        if (!a_text->empty()) {
          const Rational a = parse_rational(*a_text);
          std::cout << "pair (a, 1/2+a) = (" << psq::to_string(a) << ", "
                    << psq::to_string(Rational(a + Rational(1, 2))) << ")\n"
                    << "admissible c < " << psq::to_string(c_range_from_a(a))
                    << "\n";
          return 0;
        }
        if (pair_text->empty()) {
          throw DomainError("pairs needs --pair, --a or --search");
        }
        const ExponentPair p = parse_pair_arg(*pair_text);
        const DerivedExponents d = derived_exponents(p);
        std::cout << "pair " << pair_str(p) << "\n"
                  << "rho1 = " << psq::to_string(d.rho1)
                  << ", rho2 = " << psq::to_string(d.rho2) << "\n"
                  << "theta1(c) = " << psq::to_string(d.rho1) << " c + "
                  << psq::to_string(d.theta1_offset) << "\n"
                  << "theta2(c) = " << psq::to_string(d.rho2) << " c + "
                  << psq::to_string(d.theta2_offset) << "\n"
                  << "S-exponent lambda/(1+kappa) - 1/2 = "
                  << psq::to_string(pair_term_s_exponent(p)) << "\n"
                  << "theorem hypothesis (1-k)/2 <= l-k: "
                  << (check_theorem_hypothesis(p) ? "holds" : "fails") << "\n";
        if (!c_text->empty()) {
          const Rational c = parse_rational(*c_text);
          std::cout << "theta1(" << psq::to_string(c)
                    << ") = " << psq::to_string(d.theta1(c)) << "\n"
                    << "theta2(" << psq::to_string(c)
                    << ") = " << psq::to_string(d.theta2(c)) << "\n";
        }
        return 0;
      };
    });
  }

  // ---- psi ----
  auto* psi_cmd = app.add_subcommand(
      "psi", "Verify |psi* - psi| <= delta on a grid plus adversarial points");
  {
    auto H_text = std::make_shared<std::string>("1,2,5,10,50,100");
    auto grid = std::make_shared<int>(10000);
    psi_cmd->add_option("--H", *H_text, "comma list of truncation degrees");
    psi_cmd->add_option("--grid", *grid, "uniform grid size");
    psi_cmd->callback([=, &action]() {
      action = [=]() {
        int worst = 0;
        for (std::uint64_t H : parse_u64_list(*H_text)) {
          const auto check = verify_vaaler(static_cast<int>(H), *grid);
          const bool ok = check.max_violation <= 1e-9 && check.min_delta >= -1e-12;
          std::cout << "H = " << H << ": max violation = "
                    << check.max_violation << " at x = " << check.worst_x
                    << ", min delta = " << check.min_delta << "  "
                    << (ok ? "[OK]" : "[VIOLATION]") << "\n";
          if (!ok) worst = 1;
        }
        return worst;
      };
    });
  }

  // ---- expsum ----
  auto* expsum = app.add_subcommand(
      "expsum", "Exponential sums against their bounds");
  {
    auto kind = std::make_shared<std::string>("triple");
    auto X = std::make_shared<std::string>("1");
    auto alphas = std::make_shared<std::string>("2/3,4/3,4/3");
    auto box_text = std::make_shared<std::string>("8,8,8");
    auto y_text = std::make_shared<std::string>("1");
    auto N = std::make_shared<std::uint64_t>(100);
    auto d = std::make_shared<int>(2);
    auto sigma = std::make_shared<std::string>("0");
    auto gamma = std::make_shared<std::string>("2/3");
    auto pair_text = std::make_shared<std::string>("BABAAB");
    auto budget = std::make_shared<std::uint64_t>(10'000'000);
    expsum->add_option("--kind", *kind, "triple | psi");
    expsum->add_option("--X", *X, "phase scale X > 0");
    expsum->add_option("--alphas", *alphas, "a1,a2,a3");
    expsum->add_option("--box", *box_text, "M1,M2,M3 dyadic starts");
    expsum->add_option("--y", *y_text, "psi-sum scale y != 0");
    expsum->add_option("--N", *N, "psi-sum range (N, 2N]");
    expsum->add_option("--d", *d, "psi-sum power d in {1,2}");
    expsum->add_option("--sigma", *sigma, "psi-sum shift, |sigma| <= 1");
    expsum->add_option("--gamma", *gamma, "psi-sum exponent in (1/2,1)");
    expsum->add_option("--pair", *pair_text, "pair for the corollary bound");
    expsum->add_option("--budget", *budget, "term budget");
    expsum->callback([=, &action]() {
      action = [=]() {
        if (*kind == "triple") {
          const auto a = parse_list<double>(*alphas, [](const std::string& t) {
            return psq::to_double(parse_rational(t));
          });
          const auto m = parse_u64_list(*box_text);
          if (a.size() != 3 || m.size() != 3) {
            throw DomainError("--alphas and --box need three entries");
          }
          const DyadicBox box{m[0], m[1], m[2]};
          const double Xd = psq::to_double(parse_rational(*X));
          const double exact = triple_sum(Xd, {a[0], a[1], a[2]}, box, *budget);
          const double bound = rs_bound(Xd, box);
          std::cout << "triple_sum = " << exact << "\nrs_bound   = " << bound
                    << "\nratio      = " << exact / bound << "\n";
          return 0;
        }
        if (*kind == "psi") {
          const Rational y = parse_rational(*y_text);
          const Rational sg = parse_rational(*sigma);
          const Rational g = parse_rational(*gamma);
          const ExponentPair pair = parse_pair_arg(*pair_text);
          const double exact = psi_sum_direct(y, *N, *d, sg, g, *budget);
          const double bound =
              pair_bound_single(psq::to_double(y), static_cast<double>(*N), *d,
                                psq::to_double(sg), psq::to_double(g), pair);
          std::cout << "psi_sum    = " << exact << "\npair_bound = " << bound
                    << "\nratio      = " << std::abs(exact) / bound << "\n";
          return 0;
        }
        throw DomainError("expsum kind must be triple or psi");
      };
    });
  }

  // ---- fit ----
  auto* fit_cmd = app.add_subcommand("fit", "Regress log|deviation| on log N");
  {
    auto in = std::make_shared<std::string>();
    auto against = std::make_shared<std::string>("theorem");
    auto beta_text = std::make_shared<std::string>("0");
    auto pair_text = std::make_shared<std::string>("BABAAB");
    fit_cmd->add_option("--in", *in, "scan CSV path")->required();
    fit_cmd->add_option("--against", *against, "theorem | lsz");
    fit_cmd->add_option("--beta", *beta_text, "S-rule exponent used in the scan");
    fit_cmd->add_option("--pair", *pair_text);
    fit_cmd->callback([=, &action]() {
      action = [=]() {
        std::ifstream file(*in);
        if (!file) throw Error("cannot open " + *in);
        const auto rows = parse_scan_csv(file);
        const auto fit = fit_error_exponent(rows, *against,
                                            parse_rational(*beta_text),
                                            parse_pair_arg(*pair_text));
        std::cout << "slope              = " << fit.slope << "\n"
                  << "intercept          = " << fit.intercept << "\n"
                  << "r_squared          = " << fit.r_squared << "\n"
                  << "predicted_exponent = " << fit.predicted_exponent << "\n"
                  << "margin             = " << fit.margin << "\n"
                  << "points_used        = " << fit.points_used << "\n";
        return 0;
      };
    });
  }

  // ---- tau ----
  auto* tau_cmd = app.add_subcommand("tau", "Tabulate the S-range thresholds");
  {
    auto out_path = std::make_shared<std::string>();
    tau_cmd->add_option("--out", *out_path, "output path (default stdout)");
    tau_cmd->callback([=, &action]() {
      action = [=]() {
        std::ofstream file;
        emit_tau_table(open_or_stdout(file, *out_path));
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 0;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
