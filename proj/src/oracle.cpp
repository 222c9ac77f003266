#include "sombor/oracle.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <string>

#include "sombor/parallel.hpp"
#include "sombor/sombor.hpp"

namespace sombor {

namespace {

constexpr std::uint64_t kSequenceGuard = 20'000'000;
constexpr std::uint64_t kEnumChunk = 8192;

// Compensated accumulator; enumeration adds up to 2*10^7 weights per atom and
// the mass-conservation contract is 1e-12.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct KeyAcc {
  KahanSum weight;
  KahanSum weighted_value;
};

// Keyed on the value rounded to the 1e-9 grid; adjacent keys are merged later
// by aggregate_pmf, so atoms straddling a grid boundary still coalesce.
using PmfMap = std::map<long long, KeyAcc>;

long long pmf_key(double value) { return std::llround(value * 1e9); }

}  // namespace

std::uint64_t sequence_count(const ChainSpec& spec) {
  const int k = spec.k();
  std::uint64_t total = 1;
  for (int i = 0; i + 2 < spec.n; ++i) {
    if (total > kSequenceGuard / static_cast<std::uint64_t>(k)) {
      throw guard_error("enumeration of k^(n-2) = " + std::to_string(k) + "^" +
                        std::to_string(spec.n - 2) + " sequences exceeds the guard of " +
                        std::to_string(kSequenceGuard));
    }
    total *= static_cast<std::uint64_t>(k);
  }
  if (total > kSequenceGuard) {
    throw guard_error("enumeration of " + std::to_string(total) +
                      " sequences exceeds the guard of " + std::to_string(kSequenceGuard));
  }
  return total;
}

EnumerationResult enumerate_exact(const ChainSpec& raw, unsigned threads) {
  const ChainSpec spec = validate_spec(raw);
  const std::uint64_t total = sequence_count(spec);
  const std::uint64_t k = static_cast<std::uint64_t>(spec.k());
  const std::size_t seq_len = spec.n >= 3 ? static_cast<std::size_t>(spec.n - 2) : 0;

  const std::uint64_t nchunks = (total + kEnumChunk - 1) / kEnumChunk;
  std::vector<PmfMap> chunk_maps(nchunks);
  detail::for_each_chunk(total, kEnumChunk, threads,
                         [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
                           PmfMap& local = chunk_maps[c];
                           AttachmentSequence seq(seq_len);
                           for (std::uint64_t index = begin; index < end; ++index) {
                             std::uint64_t rest = index;
                             double weight = 1.0;
                             for (std::size_t j = 0; j < seq_len; ++j) {
                               const std::size_t digit = static_cast<std::size_t>(rest % k);
                               rest /= k;
                               seq[j] = static_cast<int>(digit) + 1;
                               weight *= spec.probs[digit];
                             }
                             const ChainGraph g = build_chain(spec.l, spec.n, seq);
                             const double value = sombor_of_graph(g, spec.variant).value;
                             KeyAcc& acc = local[pmf_key(value)];
                             acc.weight.add(weight);
                             acc.weighted_value.add(weight * value);
                           }
                         });

  // Fixed-order reduction: merging chunk results in chunk index order keeps
  // the output independent of which worker ran which chunk.
  PmfMap merged;
  for (const PmfMap& local : chunk_maps) {
    for (const auto& [key, acc] : local) {
      KeyAcc& dst = merged[key];
      dst.weight.add(acc.weight.sum);
      dst.weighted_value.add(acc.weighted_value.sum);
    }
  }

  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(merged.size());
  for (const auto& [key, acc] : merged) {
    if (acc.weight.sum == 0.0) continue;
    atoms.emplace_back(acc.weighted_value.sum / acc.weight.sum, acc.weight.sum);
  }
  Pmf pmf = detail::aggregate_pmf(std::move(atoms));

  double mean = 0.0;
  for (const PmfAtom& a : pmf.atoms) mean += a.probability * a.value;
  double var = 0.0;
  for (const PmfAtom& a : pmf.atoms) {
    const double d = a.value - mean;
    var += a.probability * d * d;
  }
  return {{mean, var, spec.n, spec.variant, MomentSource::enumeration}, std::move(pmf)};
}

AuditVerdict audit_verdict(double printed, double derived) {
  if (printed < -1e-9) return AuditVerdict::impossible;
  const double diff = std::abs(printed - derived);
  if (diff <= 1e-9) return AuditVerdict::match;
  if (diff <= 1e-9 * std::max(std::abs(printed), std::abs(derived))) return AuditVerdict::match;
  return AuditVerdict::mismatch;
}

std::vector<DiscrepancyReport> audit(const ChainSpec& tmpl, std::span<const long long> n_list,
                                     unsigned threads) {
  const int l = tmpl.l;
  if (l < 4) throw validation_error("the published formulas cover l >= 4 only");
  const Parity parity = l % 2 == 0 ? Parity::even : Parity::odd;
  const int k = parity == Parity::even ? l / 2 : (l - 1) / 2;
  if (k < 2) throw validation_error("the published formulas cover k >= 2 only");
  const std::vector<double> probs = validate_spec({l, 2, tmpl.probs, tmpl.variant}).probs;
  const double p1 = probs[0];

  // Mean and variance formulas of one variant share a single derivation;
  // cache it per (variant, n).
  std::map<std::pair<int, long long>, MomentSummary> derived_cache;
  auto derive = [&](SomborVariant variant, long long n) -> const MomentSummary& {
    const auto key = std::make_pair(static_cast<int>(variant.kind), n);
    const auto hit = derived_cache.find(key);
    if (hit != derived_cache.end()) return hit->second;
    const ChainSpec spec = validate_spec({l, static_cast<int>(n), probs, variant});
    bool enumerable = true;
    try {
      sequence_count(spec);
    } catch (const guard_error&) {
      enumerable = false;
    }
    MomentSummary summary;
    if (enumerable) {
      summary = enumerate_exact(spec, threads).summary;
    } else {
      summary = expected_value(spec);
      summary.variance = variance(spec).variance;
    }
    return derived_cache.emplace(key, summary).first->second;
  };

  std::vector<DiscrepancyReport> reports;
  for (const long long n : n_list) {
    if (n < 2 || n > 1'000'000'000) {
      throw validation_error("audit chain lengths must be in 2..10^9");
    }
  }
  for (const PublishedFormula& formula : published_registry()) {
    if (formula.parity != parity) continue;
    for (const long long n : n_list) {
      const MomentSummary& exact = derive(formula.variant, n);
      const double derived =
          formula.statistic == Statistic::mean ? exact.mean : exact.variance;
      const double printed = published_formula(formula.id, k, n, p1);
      DiscrepancyReport report;
      report.formula_id = formula.id;
      report.n = n;
      report.printed_value = printed;
      report.derived_value = derived;
      report.abs_diff = std::abs(printed - derived);
      if (derived != 0.0) report.rel_diff = report.abs_diff / std::abs(derived);
      report.verdict = audit_verdict(printed, derived);
      reports.push_back(report);
    }
  }
  return reports;
}

}  // namespace sombor
