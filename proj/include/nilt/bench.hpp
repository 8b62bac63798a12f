#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "nilt/inverters.hpp"
#include "nilt/noise.hpp"

namespace nilt {

inline constexpr int kGridPoints = 40;

/// The benchmark grid t = 0.1, 0.2, ..., 4.0 at the context precision.
std::vector<Real> sample_grid(const PrecisionContext& ctx);

/// Root of the summed squared differences (no 1/40 normalisation), the max
/// absolute difference, and the max percentage error over points where
/// |exact| > 1e-12 (skipped points are counted, never dropped silently).
Real l2_error(std::span<const Real> numeric, std::span<const Real> exact);
Real linf_error(std::span<const Real> numeric, std::span<const Real> exact);
std::pair<Real, int> pct_error(std::span<const Real> numeric,
                               std::span<const Real> exact);

struct ErrorReport {
  Real l2;
  Real linf;
  Real pct_max;
  int skipped_pct_points = 0;
};

/// One table cell-pair: (case, method, noise state) with its error report.
struct ExperimentRow {
  int case_id = 0;
  std::string case_name;
  Method method = Method::Talbot;
  int terms = 0;
  long digits = 0;
  bool noise_on = false;
  double delta = 0.0;
  std::uint64_t seed = 0;
  ErrorReport report;
};

/// Inverts the case on the 40-point grid with the configured method and
/// compares against the exact inverse. A point-level evaluator failure
/// aborts the row with a diagnostic naming the case, method and t.
ExperimentRow run_case(const TestCase& tc, const MethodConfig& config,
                       const std::optional<NoiseSpec>& noise);

struct SuiteConfig {
  std::vector<int> case_ids = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<Method> methods = {Method::Stehfest, Method::Talbot,
                                 Method::Fourier};
  double delta = 1e-3;
  std::uint64_t seed = 42;
  NoiseMode mode = NoiseMode::RealOnly;
  long digits_override = 0;        // 0 -> per-method policy
  long noisy_digits_override = 0;  // 0 -> same as noise-free
  int series_terms = 55;           // Talbot nodes / Fourier terms
  int stehfest_terms_override = 0; // 0 -> per-case defaults
  double fourier_a = 4.0;
  FourierDamping damping = FourierDamping::OverT;
  int jobs = 1;
};

/// Noise-free and noisy rows for every (case, method) pair, in a fixed
/// order independent of the worker count. Noise streams are partitioned per
/// cell by label "case<id>/<method>", so parallel schedules reproduce the
/// serial results bit for bit.
std::vector<ExperimentRow> run_suite(const SuiteConfig& config);

/// Compact table rendering, e.g. 2.03e-6 -> "2.0(-6)".
std::string table_format(const Real& x);
/// Fixed scientific rendering used in CSV output.
std::string csv_format(const Real& x);

/// Header: case_id,case_name,method,terms,digits,noise,delta,seed,l2,linf,
/// pct_max,skipped_pct
void emit_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);
void emit_csv_file(const std::vector<ExperimentRow>& rows,
                   const std::filesystem::path& path);

/// One markdown table per case (case<k>.md) with paired
/// no-noise/noise column layout; returns the files written.
std::vector<std::filesystem::path> emit_markdown(
    const std::vector<ExperimentRow>& rows, const std::filesystem::path& dir);

/// Per-t curves for replotting: t,exact,<one column per method>.
void emit_plot_data(const TestCase& tc, const SuiteConfig& config,
                    bool with_noise, std::ostream& out);
void emit_plot_data_file(const TestCase& tc, const SuiteConfig& config,
                         bool with_noise, const std::filesystem::path& path);

}  // namespace nilt
