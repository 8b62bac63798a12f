#include "nilt/noise.hpp"

#include <memory>
#include <utility>

namespace nilt {

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

NoiseMode noise_mode_from_name(const std::string& name) {
  if (name == "real" || name == "real_only") return NoiseMode::RealOnly;
  if (name == "complex" || name == "independent_complex") {
    return NoiseMode::IndependentComplex;
  }
  throw InvalidParameterError("unknown noise mode \"" + name +
                              "\" (expected real_only or independent_complex)");
}

std::string noise_mode_name(NoiseMode mode) {
  return mode == NoiseMode::RealOnly ? "real_only" : "independent_complex";
}

TransformFn perturb_evaluator(TransformFn F, const NoiseSpec& spec) {
  if (spec.delta < 0) {
    throw InvalidParameterError("noise magnitude delta must be >= 0");
  }
  if (spec.delta == 0) {
    return F;
  }
  auto rng = std::make_shared<SplitMix64>(spec.seed ^ fnv1a64(spec.label));
  const double delta = spec.delta;
  const NoiseMode mode = spec.mode;
  return [F = std::move(F), rng, delta, mode](const Complex& s) -> Complex {
    Complex value = F(s);
    const mpfr_prec_t p = value.precision();
    // delta and the draw are both doubles, hence exact in any working
    // precision; the products below are the only rounding.
    Real re_noise = Real::from_double(p, delta) *
                    Real::from_double(p, rng->next_uniform());
    if (mode == NoiseMode::RealOnly) {
      return Complex(value.re() + re_noise, value.im());
    }
    Real im_noise = Real::from_double(p, delta) *
                    Real::from_double(p, rng->next_uniform());
    return Complex(value.re() + re_noise, value.im() + im_noise);
  };
}

}  // namespace nilt
