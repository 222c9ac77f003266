#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sombor/chain.hpp"
#include "sombor/moments.hpp"
#include "sombor/published.hpp"

namespace sombor {

enum class AuditVerdict { match, mismatch, impossible };

// One comparison of a published expression against the exact value.
struct DiscrepancyReport {
  PublishedFormulaId formula_id;
  long long n = 0;
  double printed_value = 0.0;
  double derived_value = 0.0;
  double abs_diff = 0.0;
  std::optional<double> rel_diff;  // absent when the derived value is zero
  AuditVerdict verdict = AuditVerdict::match;
};

struct EnumerationResult {
  MomentSummary summary;
  Pmf pmf;
};

// Number of attachment sequences of the spec, k^(n-2); throws guard_error
// above 2*10^7.
std::uint64_t sequence_count(const ChainSpec& spec);

// Ground truth by direct expansion of the generative model: iterates every
// attachment sequence, weights it by the product of its probabilities, and
// evaluates the index on the explicitly built graph. Returns the exact mean,
// variance and aggregated pmf. Deliberately brute force; sequences are not
// collapsed by the type-1 count, so this stays a valid oracle even if the
// increment collapse were broken by a model change. Results are bit-identical
// for any thread count (0 = all available).
EnumerationResult enumerate_exact(const ChainSpec& spec, unsigned threads = 0);

// match within 1e-9 (absolute or relative), impossible when the printed value
// is negative (every audited quantity is a mean or variance of a nonnegative
// random variable), mismatch otherwise.
AuditVerdict audit_verdict(double printed, double derived);

// Compares every published formula of the template's parity against the exact
// value at each n: enumeration when the sequence space fits the guard, the
// (enumeration-verified) closed forms otherwise. Reports findings without
// ever correcting the published expressions. Uses tmpl.l and tmpl.probs;
// tmpl.n and tmpl.variant are ignored.
std::vector<DiscrepancyReport> audit(const ChainSpec& tmpl, std::span<const long long> n_list,
                                     unsigned threads = 0);

}  // namespace sombor
