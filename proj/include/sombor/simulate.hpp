#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sombor/chain.hpp"
#include "sombor/moments.hpp"

namespace sombor {

// SplitMix64: a counter-based generator whose n-th output is a fixed mix of
// seed + n*gamma. Integer-only arithmetic, so streams are identical on every
// platform.
struct SplitMix64 {
  static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;

  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += gamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Substream for one sample: slice i covers counters [i*2^32, (i+1)*2^32) of
// the seed's SplitMix64 sequence, so substreams are disjoint (for fewer than
// 2^32 draws each) and sampling order is irrelevant.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t sample_index) {
  return SplitMix64{seed + SplitMix64::gamma * (sample_index << 32)};
}

// One categorical draw: type i+1 with probability probs[i], by inversion of
// the running sum. Exact for probabilities that are exactly 0 or 1.
int draw_type(SplitMix64& rng, std::span<const double> probs);

struct SampleStats {
  long long sample_count = 0;
  double mean = 0.0;
  double unbiased_variance = 0.0;
  double std_error = 0.0;  // sqrt(unbiased_variance / sample_count)
  std::uint64_t seed = 0;
  std::optional<double> ks_statistic;
};

struct NormalParams {
  double mu = 0.0;
  double sigma2 = 0.0;
};

// n-2 independent draws; deterministic given the rng state.
AttachmentSequence sample_sequence(const ChainSpec& spec, SplitMix64& rng);

// Draws `samples` chains and evaluates the index on each explicitly built
// graph (not via the affine shortcut, so simulation stays an independent
// check on it). Bit-identical for any thread count.
SampleStats monte_carlo(const ChainSpec& spec, long long samples, std::uint64_t seed,
                        unsigned threads = 0);

// Same sampling, also returning the per-sample values indexed by sample
// number (identical for any thread count).
std::vector<double> sample_values(const ChainSpec& spec, long long samples, std::uint64_t seed,
                                  unsigned threads = 0);

// monte_carlo plus the KS statistic of the sample against normal_params(spec).
SampleStats monte_carlo_with_ks(const ChainSpec& spec, long long samples, std::uint64_t seed,
                                unsigned threads = 0);

// Standard normal CDF and its location-scale version.
double normal_cdf(double x);
double normal_cdf(double x, const NormalParams& params);

// One-sample Kolmogorov-Smirnov statistic sup_x |F_emp(x) - Phi((x-mu)/sigma)|
// over both one-sided gaps of the sorted sample. Reported as a raw statistic;
// the reference distribution of these chains is discrete, so classical KS
// p-values would not be valid. Throws on an empty sample or sigma2 <= 0.
double ks_normality(std::span<const double> values, const NormalParams& params);

// Closed-form mean and variance of the spec, as the parameters of the
// approximating normal distribution.
NormalParams normal_params(const ChainSpec& spec);

}  // namespace sombor
