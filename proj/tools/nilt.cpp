// nilt: numerical inverse Laplace transforms with controllable precision and
// reproducible noise injection. Subcommands: invert, weights, cases, bench,
// plotdata.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nilt/bench.hpp"
#include "nilt/expr.hpp"

namespace fs = std::filesystem;
using namespace nilt;

namespace {

constexpr const char* kGrammarHelp =
    "expression grammar:\n"
    "  expr    := term (('+'|'-') term)*\n"
    "  term    := factor (('*'|'/') factor)*\n"
    "  factor  := '-' factor | primary ('^' factor)?\n"
    "  primary := number | 's' | 'pi' | 'gamma' | func '(' expr ')' | '(' expr ')'\n"
    "  func    := sqrt | exp | ln | sin | cos | sinh | cosh | erf\n"
    "numbers are decimal with optional fraction and exponent; whitespace is\n"
    "insignificant; '^' is right-associative and binds tighter than unary '-'\n"
    "(-s^2 means -(s^2))";

struct InvertArgs {
  std::string method = "talbot";
  bool all_methods = false;
  int terms = 0;  // 0 -> per-method default
  long digits = 0;
  double fourier_a = 4.0;
  double delta = 0.0;
  std::uint64_t seed = 42;
  std::string noise_mode = "real_only";
  int case_id = 0;
  std::string expr_text;
  std::vector<std::string> t_values;
};

int default_terms(Method m, int case_id) {
  switch (m) {
    case Method::Stehfest:
      return case_id > 0 ? case_by_id(case_id).stehfest_terms : 16;
    case Method::Gaver:
    case Method::SalzerGaver:
      return 8;
    default:
      return case_id > 0 ? case_by_id(case_id).series_terms : 55;
  }
}

void run_invert(const InvertArgs& args) {
  if ((args.case_id > 0) == !args.expr_text.empty()) {
    throw InvalidParameterError(
        "invert needs exactly one of --case or --expr");
  }
  if (args.t_values.empty()) {
    throw InvalidParameterError("invert needs at least one --t value");
  }

  std::vector<Method> methods;
  if (args.all_methods) {
    methods = {Method::Stehfest, Method::Talbot, Method::Fourier};
  } else {
    methods = {method_from_name(args.method)};
  }

  std::optional<Expr> expr;
  if (!args.expr_text.empty()) {
    expr = Expr::parse(args.expr_text);
  }

  std::vector<MethodConfig> configs;
  for (Method m : methods) {
    MethodConfig config;
    config.method = m;
    config.terms = args.terms > 0 ? args.terms : default_terms(m, args.case_id);
    config.digits = args.digits;
    config.fourier_a = args.fourier_a;
    config.validate();
    configs.push_back(config);
  }

  for (const MethodConfig& config : configs) {
    Method m = config.method;
    TransformFn F =
        expr ? expr->evaluator() : case_by_id(args.case_id).transform;
    if (args.delta > 0) {
      NoiseSpec spec;
      spec.delta = args.delta;
      spec.seed = args.seed;
      spec.mode = noise_mode_from_name(args.noise_mode);
      spec.label = "cli/invert";
      F = perturb_evaluator(std::move(F), spec);
    }

    PrecisionContext ctx(config.effective_digits());
    for (const std::string& t_text : args.t_values) {
      Real t = Real::from_string(ctx, t_text);
      Real value = invert(F, t, config);
      if (methods.size() > 1 && args.t_values.size() > 1) {
        std::cout << method_name(m) << " " << t_text << " ";
      } else if (methods.size() > 1) {
        std::cout << method_name(m) << " ";
      } else if (args.t_values.size() > 1) {
        std::cout << t_text << " ";
      }
      std::cout << value.to_string(ctx.decimal_digits()) << "\n";
    }
  }
}

struct WeightsArgs {
  bool salzer = false;
  int terms = 0;
  long digits = kMinDecimalDigits;
};

void run_weights(const WeightsArgs& args) {
  if (args.terms <= 0) {
    throw InvalidParameterError("weights needs -N/--terms > 0");
  }
  PrecisionContext ctx(args.digits);
  std::vector<mpq_class> coefficients;
  if (args.salzer) {
    coefficients = salzer_weights(args.terms);
  } else {
    coefficients = stehfest_weights(args.terms).coefficients;
  }
  for (const auto& q : coefficients) {
    std::cout << to_string(q) << "  "
              << to_real(q, ctx.binary_precision()).to_string(ctx.decimal_digits())
              << "\n";
  }
}

void run_cases() {
  std::cout << "id\tF(s)\tf(t)\tcategory\tdefault N\n";
  for (const TestCase& tc : list_cases()) {
    std::cout << tc.id << '\t' << tc.transform_text << '\t' << tc.exact_text
              << '\t' << tc.category << '\t' << tc.stehfest_terms;
    if (tc.stehfest_terms_noisy != tc.stehfest_terms) {
      std::cout << '/' << tc.stehfest_terms_noisy;
    }
    std::cout << '\n';
  }
}

struct BenchArgs {
  SuiteConfig suite;
  std::vector<std::string> methods;
  std::string noise_mode = "real_only";
  std::string damping = "a_over_t";
  std::string format = "csv";
  std::string out_dir = ".";
};

void run_bench(BenchArgs& args) {
  if (!args.methods.empty()) {
    args.suite.methods.clear();
    for (const auto& name : args.methods) {
      args.suite.methods.push_back(method_from_name(name));
    }
  }
  args.suite.mode = noise_mode_from_name(args.noise_mode);
  if (args.damping == "a_over_t") {
    args.suite.damping = FourierDamping::OverT;
  } else if (args.damping == "a_over_2t") {
    args.suite.damping = FourierDamping::HalfOverT;
  } else {
    throw InvalidParameterError("unknown damping \"" + args.damping +
                                "\" (expected a_over_t or a_over_2t)");
  }
  if (args.format != "csv" && args.format != "md") {
    throw InvalidParameterError("unknown format \"" + args.format +
                                "\" (expected csv or md)");
  }

  std::vector<ExperimentRow> rows = run_suite(args.suite);
  for (const auto& row : rows) {
    std::cerr << "case " << row.case_id << " " << method_name(row.method)
              << " terms=" << row.terms << " digits=" << row.digits
              << " noise=" << (row.noise_on ? "on" : "off")
              << " l2=" << table_format(row.report.l2) << "\n";
  }

  fs::path dir(args.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + dir.string());
  }
  if (args.format == "csv") {
    fs::path path = dir / "bench.csv";
    emit_csv_file(rows, path);
    std::cerr << "wrote " << path.string() << "\n";
  } else {
    for (const auto& path : emit_markdown(rows, dir)) {
      std::cerr << "wrote " << path.string() << "\n";
    }
  }
}

struct PlotArgs {
  SuiteConfig suite;
  std::vector<std::string> methods;
  std::string noise_mode = "real_only";
  int case_id = 0;
  std::string out_file;
};

void run_plotdata(PlotArgs& args) {
  if (args.case_id <= 0) {
    throw InvalidParameterError("plotdata needs --case");
  }
  if (!args.methods.empty()) {
    args.suite.methods.clear();
    for (const auto& name : args.methods) {
      args.suite.methods.push_back(method_from_name(name));
    }
  }
  args.suite.mode = noise_mode_from_name(args.noise_mode);
  const TestCase& tc = case_by_id(args.case_id);
  fs::path path = args.out_file.empty()
                      ? fs::path("plot_case" + std::to_string(args.case_id) +
                                 ".csv")
                      : fs::path(args.out_file);
  emit_plot_data_file(tc, args.suite, args.suite.delta > 0, path);
  std::cerr << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical inverse Laplace transform toolkit"};
  app.require_subcommand(1);

  InvertArgs invert_args;
  auto* invert_cmd = app.add_subcommand(
      "invert", "invert a transform at given times");
  invert_cmd->add_option("--method", invert_args.method,
                         "stehfest | gaver | salzer_gaver | fourier | talbot");
  invert_cmd->add_flag("--all-methods", invert_args.all_methods,
                       "run stehfest, talbot and fourier");
  invert_cmd->add_option("-N,--n", invert_args.terms,
                         "weights / series terms / contour nodes");
  invert_cmd->add_option("--digits", invert_args.digits,
                         "working decimal digits (default: method policy)");
  invert_cmd->add_option("--fourier-a", invert_args.fourier_a,
                         "Fourier damping parameter a (default 4)");
  invert_cmd->add_option("--noise", invert_args.delta,
                         "noise magnitude delta (default 0)");
  invert_cmd->add_option("--seed", invert_args.seed, "noise seed");
  invert_cmd->add_option("--noise-mode", invert_args.noise_mode,
                         "real_only | independent_complex");
  invert_cmd->add_option("--case", invert_args.case_id, "catalog case id 1..8");
  invert_cmd->add_option("--expr", invert_args.expr_text, kGrammarHelp);
  invert_cmd->add_option("--t", invert_args.t_values, "evaluation time(s)");

  WeightsArgs weights_args;
  auto* weights_cmd =
      app.add_subcommand("weights", "dump exact quadrature coefficients");
  weights_cmd->add_flag("--stehfest", "Stehfest coefficients (default)");
  weights_cmd->add_flag("--salzer", weights_args.salzer, "Salzer means");
  weights_cmd->add_option("-N,--n", weights_args.terms,
                          "Stehfest N (even) or Salzer order n");
  weights_cmd->add_option("--digits", weights_args.digits,
                          "decimal digits for the decimal rendering");

  auto* cases_cmd = app.add_subcommand("cases", "list the built-in catalog");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "run the (case x method x noise) experiment suite");
  bench_cmd->add_option("--case", bench_args.suite.case_ids,
                        "catalog case ids (default all 8)");
  bench_cmd->add_option("--method", bench_args.methods,
                        "methods (default stehfest talbot fourier)");
  bench_cmd->add_option("--noise", bench_args.suite.delta,
                        "noise magnitude delta (default 1e-3)");
  bench_cmd->add_option("--seed", bench_args.suite.seed, "noise seed");
  bench_cmd->add_option("--noise-mode", bench_args.noise_mode,
                        "real_only | independent_complex");
  bench_cmd->add_option("--digits", bench_args.suite.digits_override,
                        "override working digits for every row");
  bench_cmd->add_option("--noisy-digits", bench_args.suite.noisy_digits_override,
                        "override working digits for noisy rows only");
  bench_cmd->add_option("-N,--n", bench_args.suite.series_terms,
                        "Talbot nodes / Fourier terms (default 55)");
  bench_cmd->add_option("--stehfest-n", bench_args.suite.stehfest_terms_override,
                        "override Stehfest N (default: per-case)");
  bench_cmd->add_option("--fourier-a", bench_args.suite.fourier_a,
                        "Fourier damping parameter a (default 4)");
  bench_cmd->add_option("--fourier-damping", bench_args.damping,
                        "a_over_t | a_over_2t");
  bench_cmd->add_option("--format", bench_args.format, "csv | md");
  bench_cmd->add_option("--out", bench_args.out_dir, "output directory");
  bench_cmd->add_option("--jobs", bench_args.suite.jobs,
                        "parallel row workers (default 1)");

  PlotArgs plot_args;
  auto* plot_cmd = app.add_subcommand(
      "plotdata", "emit per-t reconstruction curves for one case");
  plot_cmd->add_option("--case", plot_args.case_id, "catalog case id 1..8")
      ->required();
  plot_cmd->add_option("--method", plot_args.methods,
                       "methods (default stehfest talbot fourier)");
  plot_cmd->add_option("--noise", plot_args.suite.delta,
                       "noise magnitude delta (0 = noise-free)");
  plot_cmd->add_option("--seed", plot_args.suite.seed, "noise seed");
  plot_cmd->add_option("--noise-mode", plot_args.noise_mode,
                       "real_only | independent_complex");
  plot_cmd->add_option("-N,--n", plot_args.suite.series_terms,
                       "Talbot nodes / Fourier terms (default 55)");
  plot_cmd->add_option("--out", plot_args.out_file, "output file");
  plot_args.suite.delta = 0.0;

  try {
    app.parse(argc, argv);
    if (invert_cmd->parsed()) run_invert(invert_args);
    if (weights_cmd->parsed()) run_weights(weights_args);
    if (cases_cmd->parsed()) run_cases();
    if (bench_cmd->parsed()) run_bench(bench_args);
    if (plot_cmd->parsed()) run_plotdata(plot_args);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
