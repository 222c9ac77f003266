#include "sombor/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sombor/parallel.hpp"
#include "sombor/sombor.hpp"

namespace sombor {

namespace {

constexpr std::uint64_t kSimChunk = 1024;
constexpr std::uint64_t kMaxSamples = 1ull << 32;  // substream slices are 2^32 wide

struct WelfordChunk {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
};

SampleStats simulate_impl(const ChainSpec& raw, long long samples, std::uint64_t seed,
                          unsigned threads, std::vector<double>* values_out) {
  const ChainSpec spec = validate_spec(raw);
  if (samples < 2) throw validation_error("need at least 2 samples");
  if (static_cast<std::uint64_t>(samples) >= kMaxSamples) {
    throw guard_error("sample count exceeds the substream guard of 2^32");
  }
  if (values_out) values_out->assign(static_cast<std::size_t>(samples), 0.0);

  const std::size_t seq_len = spec.n >= 3 ? static_cast<std::size_t>(spec.n - 2) : 0;
  const std::uint64_t total = static_cast<std::uint64_t>(samples);
  const std::uint64_t nchunks = (total + kSimChunk - 1) / kSimChunk;
  std::vector<WelfordChunk> parts(nchunks);

  detail::for_each_chunk(total, kSimChunk, threads,
                         [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
                           WelfordChunk& part = parts[c];
                           AttachmentSequence seq(seq_len);
                           for (std::uint64_t i = begin; i < end; ++i) {
                             SplitMix64 rng = substream(seed, i);
                             for (auto& t : seq) t = draw_type(rng, spec.probs);
                             const ChainGraph g = build_chain(spec.l, spec.n, seq);
                             const double value = sombor_of_graph(g, spec.variant).value;
                             if (values_out) (*values_out)[static_cast<std::size_t>(i)] = value;
                             part.add(value);
                           }
                         });

  // Fixed-order pairwise merge over chunk index, independent of which worker
  // ran which chunk.
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  for (const WelfordChunk& part : parts) {
    if (part.count == 0) continue;
    const double delta = part.mean - mean;
    const long long combined = count + part.count;
    m2 += part.m2 + delta * delta * static_cast<double>(count) *
                        static_cast<double>(part.count) / static_cast<double>(combined);
    mean += delta * static_cast<double>(part.count) / static_cast<double>(combined);
    count = combined;
  }

  SampleStats stats;
  stats.sample_count = count;
  stats.mean = mean;
  stats.unbiased_variance = m2 / static_cast<double>(count - 1);
  stats.std_error = std::sqrt(stats.unbiased_variance / static_cast<double>(count));
  stats.seed = seed;
  return stats;
}

}  // namespace

int draw_type(SplitMix64& rng, std::span<const double> probs) {
  const double u = rng.next_unit();
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cumulative += probs[i];
    if (u < cumulative) return static_cast<int>(i) + 1;
  }
  return static_cast<int>(probs.size());
}

AttachmentSequence sample_sequence(const ChainSpec& raw, SplitMix64& rng) {
  const ChainSpec spec = validate_spec(raw);
  if (spec.n < 2) throw validation_error("sampling needs n >= 2");
  AttachmentSequence seq(spec.n >= 3 ? static_cast<std::size_t>(spec.n - 2) : 0);
  for (auto& t : seq) t = draw_type(rng, spec.probs);
  return seq;
}

SampleStats monte_carlo(const ChainSpec& spec, long long samples, std::uint64_t seed,
                        unsigned threads) {
  return simulate_impl(spec, samples, seed, threads, nullptr);
}

std::vector<double> sample_values(const ChainSpec& spec, long long samples, std::uint64_t seed,
                                  unsigned threads) {
  std::vector<double> values;
  simulate_impl(spec, samples, seed, threads, &values);
  return values;
}

SampleStats monte_carlo_with_ks(const ChainSpec& spec, long long samples, std::uint64_t seed,
                                unsigned threads) {
  std::vector<double> values;
  SampleStats stats = simulate_impl(spec, samples, seed, threads, &values);
  stats.ks_statistic = ks_normality(values, normal_params(spec));
  return stats;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_cdf(double x, const NormalParams& params) {
  return normal_cdf((x - params.mu) / std::sqrt(params.sigma2));
}

double ks_normality(std::span<const double> values, const NormalParams& params) {
  if (values.empty()) throw validation_error("KS statistic of an empty sample");
  if (!(params.sigma2 > 0.0)) {
    throw validation_error("KS against a degenerate normal (sigma2 must be > 0)");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i], params);
    d = std::max(d, (static_cast<double>(i) + 1.0) / m - f);
    d = std::max(d, f - static_cast<double>(i) / m);
  }
  return d;
}

NormalParams normal_params(const ChainSpec& spec) {
  return {expected_value(spec).mean, variance(spec).variance};
}

}  // namespace sombor
