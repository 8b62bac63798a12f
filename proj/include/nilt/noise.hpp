#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nilt/catalog.hpp"

namespace nilt {

/// FNV-1a over the label bytes; partitions noise streams per experiment cell.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// SplitMix64 with the reference constants; uniform draws are
/// (x >> 11) * 2^-53 in [0, 1).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  double next_uniform() noexcept;

private:
  std::uint64_t state_;
};

enum class NoiseMode { RealOnly, IndependentComplex };

NoiseMode noise_mode_from_name(const std::string& name);
std::string noise_mode_name(NoiseMode mode);

/// Additive uniform noise of magnitude delta on every transform evaluation.
/// Identical (seed, label) pairs replay identical draw sequences.
struct NoiseSpec {
  double delta = 1e-3;
  std::uint64_t seed = 42;
  NoiseMode mode = NoiseMode::RealOnly;
  std::string label;
};

/// Wraps F so every call returns F(s) + delta*u (RealOnly) or
/// F(s) + delta*u1 + i delta*u2 (IndependentComplex), with u drawn from
/// SplitMix64 seeded by seed XOR fnv1a64(label). The wrapper owns sequential
/// counter state: use one wrapped evaluator from one logical thread at a
/// time. delta = 0 returns F unchanged.
TransformFn perturb_evaluator(TransformFn F, const NoiseSpec& spec);

}  // namespace nilt
