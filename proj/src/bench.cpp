#include "nilt/bench.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

namespace nilt {

std::vector<Real> sample_grid(const PrecisionContext& ctx) {
  std::vector<Real> grid;
  grid.reserve(kGridPoints);
  for (int i = 1; i <= kGridPoints; ++i) {
    grid.push_back(Real(ctx, static_cast<long>(i)) / 10);
  }
  return grid;
}

namespace {

void require_grid_lengths(std::span<const Real> numeric,
                          std::span<const Real> exact) {
  if (numeric.size() != exact.size()) {
    throw InvalidParameterError(
        "error norms need sequences of equal length, got " +
        std::to_string(numeric.size()) + " and " + std::to_string(exact.size()));
  }
}

mpfr_prec_t span_precision(std::span<const Real> a, std::span<const Real> b) {
  mpfr_prec_t p = MPFR_PREC_MIN;
  for (const Real& x : a) p = std::max(p, x.precision());
  for (const Real& x : b) p = std::max(p, x.precision());
  return p;
}

}  // namespace

Real l2_error(std::span<const Real> numeric, std::span<const Real> exact) {
  require_grid_lengths(numeric, exact);
  Real acc = Real::with_bits(span_precision(numeric, exact));
  for (size_t i = 0; i < numeric.size(); ++i) {
    Real d = numeric[i] - exact[i];
    acc += d * d;
  }
  return sqrt(acc);
}

Real linf_error(std::span<const Real> numeric, std::span<const Real> exact) {
  require_grid_lengths(numeric, exact);
  Real worst = Real::with_bits(span_precision(numeric, exact));
  for (size_t i = 0; i < numeric.size(); ++i) {
    worst = max(worst, abs(numeric[i] - exact[i]));
  }
  return worst;
}

std::pair<Real, int> pct_error(std::span<const Real> numeric,
                               std::span<const Real> exact) {
  require_grid_lengths(numeric, exact);
  const mpfr_prec_t p = span_precision(numeric, exact);
  const Real guard = pow10_bits(p, -12);
  Real worst = Real::with_bits(p);
  int skipped = 0;
  for (size_t i = 0; i < numeric.size(); ++i) {
    if (abs(exact[i]) <= guard) {
      ++skipped;
      continue;
    }
    worst = max(worst, abs((numeric[i] - exact[i]) / exact[i] * 100));
  }
  if (skipped == static_cast<int>(numeric.size())) {
    throw DomainError("percentage error undefined: every point fell below "
                      "the 1e-12 guard");
  }
  return {worst, skipped};
}

ExperimentRow run_case(const TestCase& tc, const MethodConfig& config,
                       const std::optional<NoiseSpec>& noise) {
  config.validate();
  PrecisionContext ctx(config.effective_digits());

  TransformFn F = tc.transform;
  if (noise) {
    F = perturb_evaluator(std::move(F), *noise);
  }

  std::vector<Real> grid = sample_grid(ctx);
  std::vector<Real> numeric, exact;
  numeric.reserve(grid.size());
  exact.reserve(grid.size());
  for (const Real& t : grid) {
    try {
      numeric.push_back(invert(F, t, config));
      exact.push_back(eval_exact(tc, t, ctx));
    } catch (const Error& e) {
      throw Error("case " + std::to_string(tc.id) + " " +
                  method_name(config.method) + " at t = " + t.to_string(6) +
                  ": " + e.what());
    }
  }

  ExperimentRow row;
  row.case_id = tc.id;
  row.case_name = tc.exact_text;
  row.method = config.method;
  row.terms = config.terms;
  row.digits = config.effective_digits();
  row.noise_on = noise.has_value();
  row.delta = noise ? noise->delta : 0.0;
  row.seed = noise ? noise->seed : 0;
  auto [pct, skipped] = pct_error(numeric, exact);
  row.report = ErrorReport{l2_error(numeric, exact),
                           linf_error(numeric, exact), pct, skipped};
  return row;
}

namespace {

int stehfest_terms_for(const TestCase& tc, const SuiteConfig& config,
                       bool noisy) {
  if (config.stehfest_terms_override > 0) return config.stehfest_terms_override;
  return noisy ? tc.stehfest_terms_noisy : tc.stehfest_terms;
}

MethodConfig row_config(const TestCase& tc, Method method, bool noisy,
                        const SuiteConfig& config) {
  MethodConfig mc;
  mc.method = method;
  mc.terms = method == Method::Stehfest ? stehfest_terms_for(tc, config, noisy)
                                        : config.series_terms;
  mc.digits = config.digits_override;
  if (noisy && config.noisy_digits_override > 0) {
    mc.digits = config.noisy_digits_override;
  }
  mc.fourier_a = config.fourier_a;
  mc.damping = config.damping;
  return mc;
}

struct RowTask {
  const TestCase* tc;
  MethodConfig config;
  std::optional<NoiseSpec> noise;
};

}  // namespace

std::vector<ExperimentRow> run_suite(const SuiteConfig& config) {
  std::vector<RowTask> tasks;
  for (int id : config.case_ids) {
    const TestCase& tc = case_by_id(id);
    for (Method method : config.methods) {
      tasks.push_back({&tc, row_config(tc, method, false, config), std::nullopt});
      NoiseSpec spec;
      spec.delta = config.delta;
      spec.seed = config.seed;
      spec.mode = config.mode;
      spec.label = "case" + std::to_string(id) + "/" + method_name(method);
      tasks.push_back({&tc, row_config(tc, method, true, config), spec});
    }
  }

  std::vector<ExperimentRow> rows(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = run_case(*tasks[i].tc, tasks[i].config, tasks[i].noise);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

std::string table_format(const Real& x) {
  double v = x.to_double();
  if (v == 0.0) return "0.0(0)";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  std::string s(buf);
  auto epos = s.find('e');
  if (epos == std::string::npos) return s;
  int exp10 = std::atoi(s.c_str() + epos + 1);
  return s.substr(0, epos) + "(" + std::to_string(exp10) + ")";
}

std::string csv_format(const Real& x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10e", x.to_double());
  return buf;
}

namespace {

std::string csv_format(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
  out << "case_id,case_name,method,terms,digits,noise,delta,seed,l2,linf,"
         "pct_max,skipped_pct\n";
  for (const auto& row : rows) {
    out << row.case_id << ',' << row.case_name << ','
        << method_name(row.method) << ',' << row.terms << ',' << row.digits
        << ',' << (row.noise_on ? "true" : "false") << ','
        << csv_format(row.delta) << ',' << row.seed << ','
        << csv_format(row.report.l2) << ',' << csv_format(row.report.linf)
        << ',' << csv_format(row.report.pct_max) << ','
        << row.report.skipped_pct_points << '\n';
  }
}

namespace {

void write_or_remove(const std::filesystem::path& path,
                     const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  try {
    body(out);
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
  } catch (...) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    throw;
  }
}

}  // namespace

void emit_csv_file(const std::vector<ExperimentRow>& rows,
                   const std::filesystem::path& path) {
  write_or_remove(path, [&](std::ostream& out) { emit_csv(rows, out); });
}

std::vector<std::filesystem::path> emit_markdown(
    const std::vector<ExperimentRow>& rows, const std::filesystem::path& dir) {
  // case id -> method -> {noise-free, noisy}
  std::map<int, std::map<std::string, std::pair<const ExperimentRow*,
                                                const ExperimentRow*>>>
      by_case;
  for (const auto& row : rows) {
    auto& slot = by_case[row.case_id][method_name(row.method)];
    (row.noise_on ? slot.second : slot.first) = &row;
  }

  std::vector<std::filesystem::path> written;
  for (const auto& [case_id, methods] : by_case) {
    const TestCase& tc = case_by_id(case_id);
    std::filesystem::path path =
        dir / ("case" + std::to_string(case_id) + ".md");
    write_or_remove(path, [&](std::ostream& out) {
      out << "### Case " << case_id << ": f(t) = " << tc.exact_text
          << " = L^-1{ " << tc.transform_text << " }  (" << tc.category
          << ")\n\n";
      const ExperimentRow* any = nullptr;
      for (const auto& [name, pair] : methods) {
        if (pair.second) any = pair.second;
      }
      if (any) {
        out << "noise delta = " << csv_format(any->delta)
            << ", seed = " << any->seed << ", grid t = 0.1..4.0 (40 points)\n\n";
      }
      out << "| Method | M | digits | L2 | Linf | %error | L2 (noise) "
             "| Linf (noise) | %error (noise) |\n";
      out << "|---|---|---|---|---|---|---|---|---|\n";
      for (const char* name : {"stehfest", "talbot", "fourier"}) {
        auto it = methods.find(name);
        if (it == methods.end()) continue;
        const auto& [clean, noisy] = it->second;
        auto split_cell = [&](auto field) {
          std::string cell;
          if (clean) cell = std::to_string(field(*clean));
          if (noisy && (!clean || field(*noisy) != field(*clean))) {
            cell += (cell.empty() ? "" : "/") + std::to_string(field(*noisy));
          }
          return cell;
        };
        std::string terms_cell =
            split_cell([](const ExperimentRow& r) { return r.terms; });
        std::string digits_cell =
            split_cell([](const ExperimentRow& r) { return r.digits; });
        out << "| " << name << " | " << terms_cell << " | " << digits_cell
            << " |";
        auto cells = [&](const ExperimentRow* r) {
          if (!r) {
            out << " - | - | - |";
            return;
          }
          out << ' ' << table_format(r->report.l2) << " | "
              << table_format(r->report.linf) << " | "
              << table_format(r->report.pct_max) << " |";
        };
        cells(clean);
        cells(noisy);
        out << "\n";
      }
    });
    written.push_back(path);
  }
  return written;
}

void emit_plot_data(const TestCase& tc, const SuiteConfig& config,
                    bool with_noise, std::ostream& out) {
  const std::vector<Method> order = {Method::Stehfest, Method::Talbot,
                                     Method::Fourier};
  std::vector<Method> methods;
  for (Method m : order) {
    for (Method wanted : config.methods) {
      if (m == wanted) methods.push_back(m);
    }
  }

  out << "t,exact";
  for (Method m : methods) out << ',' << method_name(m);
  out << '\n';

  struct Column {
    MethodConfig config;
    TransformFn F;
  };
  std::vector<Column> columns;
  for (Method m : methods) {
    Column col;
    col.config = row_config(tc, m, with_noise, config);
    col.F = tc.transform;
    if (with_noise) {
      NoiseSpec spec;
      spec.delta = config.delta;
      spec.seed = config.seed;
      spec.mode = config.mode;
      spec.label = "case" + std::to_string(tc.id) + "/" + method_name(m);
      col.F = perturb_evaluator(std::move(col.F), spec);
    }
    columns.push_back(std::move(col));
  }

  PrecisionContext exact_ctx(kMinDecimalDigits);
  std::vector<Real> grid = sample_grid(exact_ctx);
  for (int i = 0; i < kGridPoints; ++i) {
    char tbuf[16];
    std::snprintf(tbuf, sizeof tbuf, "%.1f", (i + 1) / 10.0);
    out << tbuf << ',' << csv_format(eval_exact(tc, grid[i], exact_ctx));
    for (auto& col : columns) {
      PrecisionContext ctx(col.config.effective_digits());
      Real t = Real(ctx, static_cast<long>(i + 1)) / 10;
      out << ',' << csv_format(invert(col.F, t, col.config));
    }
    out << '\n';
  }
}

void emit_plot_data_file(const TestCase& tc, const SuiteConfig& config,
                         bool with_noise, const std::filesystem::path& path) {
  write_or_remove(path, [&](std::ostream& out) {
    emit_plot_data(tc, config, with_noise, out);
  });
}

}  // namespace nilt
