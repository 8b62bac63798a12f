#pragma once

#include <string>
#include <vector>

#include "nilt/catalog.hpp"
#include "nilt/rational.hpp"

namespace nilt {

enum class Method { Stehfest, Gaver, SalzerGaver, Fourier, Talbot };

/// How the Fourier damping abscissa u is derived from the parameter a.
/// OverT (u = a/t) keeps u above every catalog singularity on the benchmark
/// grid; HalfOverT (u = a/(2t), the Dubner-Abate uT convention with T = 2t)
/// is provided for experiments but collides with the case-6 pole at t = 4.
enum class FourierDamping { OverT, HalfOverT };

std::string method_name(Method m);
Method method_from_name(const std::string& name);  // InvalidParameterError

/// Exact Stehfest coefficients A_1..A_N; Sum A_j = 0 and Sum A_j/j = 1 hold
/// identically in rational arithmetic.
struct StehfestWeights {
  int terms = 0;
  std::vector<mpq_class> coefficients;
};

StehfestWeights stehfest_weights(int n_weights);  // N even, >= 2

/// Salzer means mu_{n,0}..mu_{n,n}: (-1)^(n+k) (1+k)^n / (k! (n-k)!).
std::vector<mpq_class> salzer_weights(int n);  // n >= 1

/// f(t) ~ (ln2/t) Sum A_j F(j ln2/t). The weighted sum runs with guard bits
/// sized from Sum|A_j| and is rounded into ctx once at the end.
Real stehfest_invert(const TransformFn& F, const Real& t, int n_weights,
                     const PrecisionContext& ctx);

/// Gaver functional f_n(t) = (ln2/t) (2n)!/(n!(n-1)!) Sum_k C(n,k) (-1)^k
/// F((k+n) ln2/t); converges to f(t) like 1/n.
Real gaver_functional(const TransformFn& F, const Real& t, int n,
                      const PrecisionContext& ctx);

/// Salzer mean of the Gaver values f_1..f_{n+1}; identical to
/// stehfest_invert with N = 2n+2.
Real salzer_gaver_invert(const TransformFn& F, const Real& t, int n,
                         const PrecisionContext& ctx);

/// Dubner-Abate cosine series at T = 2t:
/// (e^(ut)/t) [ F(u)/2 + Sum_{k=1..terms} (-1)^k Re F(u + k pi i / t) ].
Real fourier_invert(const TransformFn& F, const Real& t, int terms,
                    const Real& a, const PrecisionContext& ctx,
                    FourierDamping damping = FourierDamping::OverT);

/// Talbot conformal map s(z) = z / (1 - e^-z) and its derivative; both
/// switch to their Taylor series near z = 0 to dodge the 0/0 cancellation.
Complex talbot_map(const Complex& z);
Complex talbot_map_deriv(const Complex& z);

/// Trapezoid sum (2/n) Sum_{j=1..n-1} F(s(z_j)) e^(s(z_j) t) s'(z_j) over
/// z_j = i w_j, w_j = 2 pi (2j/n - 1), n odd; the endpoint terms vanish.
/// Returns the full complex sum; its imaginary part is a residual for
/// conjugate-symmetric transforms. contour_scale multiplies the image
/// contour (and the Jacobian with it); 1 is the fixed contour.
Complex talbot_sum(const TransformFn& F, const Real& t, int nodes,
                   const PrecisionContext& ctx, double contour_scale = 1.0);
Real talbot_invert(const TransformFn& F, const Real& t, int nodes,
                   const PrecisionContext& ctx, double contour_scale = 1.0);

/// Per-method parameter bundle with the benchmark defaults.
struct MethodConfig {
  Method method = Method::Talbot;
  int terms = 55;
  long digits = 0;  // 0 -> policy default for the method/terms
  double fourier_a = 4.0;
  FourierDamping damping = FourierDamping::OverT;
  double contour_scale = 1.0;  // Talbot only; 1 = the fixed contour
  std::string notes;

  /// ceil(1.8 N) for Stehfest-family methods, 2 N for Fourier/Talbot,
  /// floored at 16 decimal digits.
  static long default_digits(Method method, int terms);
  long effective_digits() const;
  /// Parity and range checks; InvalidParameterError on violation.
  void validate() const;
};

/// Dispatch on config.method at config.effective_digits().
Real invert(const TransformFn& F, const Real& t, const MethodConfig& config);

}  // namespace nilt
