// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, in code.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sombor/moments.hpp"
#include "sombor/oracle.hpp"
#include "sombor/simulate.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& message) {
    pass = false;
    if (detail.empty()) detail = message;
  }
};

const std::vector<int> kPolygonSizes = {4, 5, 6, 8};

std::vector<double> probs_with_p1(int k, double p1) {
  std::vector<double> probs(static_cast<std::size_t>(k), k > 1 ? (1.0 - p1) / (k - 1) : 1.0);
  probs[0] = p1;
  return probs;
}

// ---------------------------------------------------------------------------
// 1. Counted census equals the closed-form census exactly, totals nl+n-1.

Outcome criterion_census() {
  Outcome out;
  long long graphs = 0;
  for (int l : kPolygonSizes) {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& seq : testutil::all_sequences(l / 2, n >= 3 ? n - 2 : 0)) {
        const EdgeTypeCensus counted = degree_census(build_chain(l, n, seq));
        const EdgeTypeCensus closed = closed_form_census(l, n, testutil::count_type1(seq));
        ++graphs;
        if (!(counted == closed)) {
          out.fail("census mismatch at l=" + std::to_string(l) + " n=" + std::to_string(n));
        }
        if (counted.total() != static_cast<long long>(n) * l + n - 1) {
          out.fail("census total differs from nl+n-1 at l=" + std::to_string(l) +
                   " n=" + std::to_string(n));
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(graphs) + " chains, exact equality";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Affine identity: value = A*x1 + B(n-2) + C within 1e-10, every sequence,
//    variants plain / reduced / general(0.5) / average.

Outcome criterion_affine_identity() {
  Outcome out;
  const std::vector<SomborVariant> variants = {SomborVariant::plain(), SomborVariant::reduced(),
                                               SomborVariant::general(0.5),
                                               SomborVariant::average()};
  long long checks = 0;
  double worst = 0.0;
  for (int l : kPolygonSizes) {
    for (int n = 2; n <= 8; ++n) {
      const auto sequences = testutil::all_sequences(l / 2, n >= 3 ? n - 2 : 0);
      for (const SomborVariant& variant : variants) {
        const AffineABC abc = affine_form({l, n, probs_with_p1(l / 2, 1.0), variant});
        for (const auto& seq : sequences) {
          const double direct = sombor_of_graph(build_chain(l, n, seq), variant).value;
          const double predicted =
              abc.A * testutil::count_type1(seq) + abc.B * (n - 2) + abc.C;
          worst = std::max(worst, std::abs(direct - predicted));
          ++checks;
          if (std::abs(direct - predicted) > 1e-10) {
            out.fail("affine identity off by " + std::to_string(std::abs(direct - predicted)) +
                     " at l=" + std::to_string(l) + " n=" + std::to_string(n) + " variant=" +
                     variant.name());
          }
        }
      }
    }
  }
  if (out.pass) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%lld evaluations, worst gap %.2e", checks, worst);
    out.detail = buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. Closed-form moments match exhaustive enumeration within 1e-9; exact pmf
//    matches the enumerated pmf atom by atom within 1e-12 probability.

Outcome criterion_oracle_equivalence() {
  Outcome out;
  const std::vector<double> p1_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<SomborVariant> variants = {SomborVariant::plain(), SomborVariant::reduced(),
                                               SomborVariant::average()};
  long long comparisons = 0;
  for (int l : kPolygonSizes) {
    for (int n = 2; n <= 8; ++n) {
      for (double p1 : p1_grid) {
        for (const SomborVariant& variant : variants) {
          const ChainSpec spec{l, n, probs_with_p1(l / 2, p1), variant};
          const EnumerationResult exact = enumerate_exact(spec);
          const double mean_gap = std::abs(exact.summary.mean - expected_value(spec).mean);
          const double var_gap = std::abs(exact.summary.variance - variance(spec).variance);
          ++comparisons;
          if (mean_gap > 1e-9 || var_gap > 1e-9) {
            out.fail("moment gap (mean " + std::to_string(mean_gap) + ", var " +
                     std::to_string(var_gap) + ") at l=" + std::to_string(l) +
                     " n=" + std::to_string(n) + " p1=" + std::to_string(p1));
          }
          if (!testutil::pmf_close(exact.pmf, exact_pmf(spec), 1e-6, 1e-12)) {
            out.fail("pmf mismatch at l=" + std::to_string(l) + " n=" + std::to_string(n) +
                     " p1=" + std::to_string(p1) + " variant=" + variant.name());
          }
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(comparisons) + " spec points, mean/var/pmf";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Increment constants reproduce the odd-polygon proof expressions
//    A1 = (2k-2)sqrt(2)|2-a| + 2 sqrt(2)|3-a| + 2 v1,
//    A2 = (2k-3)sqrt(2)|2-a| + sqrt(2)|3-a| + 4 v1,
//    value(PC_2) = (4k-2)sqrt(2)|2-a| + sqrt(2)|3-a| + 4 v1,
//    with v1 = sqrt(2a^2 - 10a + 13), within 1e-12.

Outcome criterion_symbolic_anchors() {
  Outcome out;
  const double s2 = std::sqrt(2.0);
  for (int k : {2, 3}) {
    const int l = 2 * k + 1;
    for (double a : {0.0, 1.0, 0.5}) {
      const double v1 = std::sqrt(2 * a * a - 10 * a + 13);
      const double w2 = std::abs(2.0 - a);
      const double w3 = std::abs(3.0 - a);
      const double a1_ref = (2 * k - 2) * s2 * w2 + 2 * s2 * w3 + 2 * v1;
      const double a2_ref = (2 * k - 3) * s2 * w2 + s2 * w3 + 4 * v1;
      const double c_ref = (4 * k - 2) * s2 * w2 + s2 * w3 + 4 * v1;
      const IncrementConstants inc = increment_constants(l, SomborVariant::general(a), 2);
      if (std::abs(inc.increments[0] - a1_ref) > 1e-12) {
        out.fail("A1 anchor off at k=" + std::to_string(k) + " a=" + std::to_string(a));
      }
      for (std::size_t t = 1; t < inc.increments.size(); ++t) {
        if (std::abs(inc.increments[t] - a2_ref) > 1e-12) {
          out.fail("A" + std::to_string(t + 1) + " anchor off at k=" + std::to_string(k) +
                   " a=" + std::to_string(a));
        }
      }
      if (std::abs(inc.affine.C - c_ref) > 1e-12) {
        out.fail("PC_2 anchor off at k=" + std::to_string(k) + " a=" + std::to_string(a));
      }
    }
  }
  if (out.pass) out.detail = "k in {2,3}, a in {0, 1, 0.5}, within 1e-12";
  return out;
}

// ---------------------------------------------------------------------------
// 5. The audit pins the known misprints: the published Var(SO) constant for
//    odd chains reports mismatch, and the published Var(SO_red) constant for
//    even chains is negative, hence impossible, at n=10, p1=0.5.

Outcome criterion_audit_anchors() {
  Outcome out;
  const std::vector<long long> ns{10};

  ChainSpec odd_tmpl;
  odd_tmpl.l = 5;
  odd_tmpl.n = 2;
  odd_tmpl.probs = {0.5, 0.5};
  bool odd_var_so_mismatch = false;
  for (const DiscrepancyReport& r : audit(odd_tmpl, ns)) {
    if (r.formula_id == PublishedFormulaId::odd_var_so) {
      odd_var_so_mismatch = r.verdict == AuditVerdict::mismatch;
    }
  }
  if (!odd_var_so_mismatch) out.fail("odd/var/so did not report mismatch at n=10, p1=0.5");

  ChainSpec even_tmpl;
  even_tmpl.l = 4;
  even_tmpl.n = 2;
  even_tmpl.probs = {0.5, 0.5};
  bool even_var_so_red_impossible = false;
  for (const DiscrepancyReport& r : audit(even_tmpl, ns)) {
    if (r.formula_id == PublishedFormulaId::even_var_so_red) {
      even_var_so_red_impossible =
          r.verdict == AuditVerdict::impossible && r.printed_value < 0.0;
    }
  }
  if (!even_var_so_red_impossible) {
    out.fail("even/var/so_red did not report impossible at n=10, p1=0.5");
  }
  if (out.pass) out.detail = "misprints pinned: mismatch + impossible";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Monte Carlo consistency over 12 pinned-seed runs: mean within 4 standard
//    errors in at least 95% of runs, sample variance within [0.5, 1.5]x the
//    closed form whenever the latter exceeds 1e-6.

Outcome criterion_monte_carlo() {
  Outcome out;
  const long long samples = 10000;
  int runs = 0;
  int mean_ok = 0;
  std::uint64_t seed = 9001;
  for (const FamilyPreset& preset : family_presets()) {
    for (int n : {30, 100, 200}) {
      const ChainSpec spec{preset.l, n, probs_with_p1(preset.k, 1.0 / preset.k),
                           SomborVariant::plain()};
      const SampleStats stats = monte_carlo(spec, samples, seed++);
      const double mean = expected_value(spec).mean;
      const double var = variance(spec).variance;
      ++runs;
      if (std::abs(stats.mean - mean) <= 4.0 * stats.std_error) ++mean_ok;
      if (var > 1e-6) {
        const double ratio = stats.unbiased_variance / var;
        if (ratio < 0.5 || ratio > 1.5) {
          out.fail(std::string(preset.name) + " n=" + std::to_string(n) +
                   ": variance ratio " + std::to_string(ratio) + " outside [0.5, 1.5]");
        }
      }
    }
  }
  if (mean_ok < static_cast<int>(std::ceil(0.95 * runs))) {
    out.fail("mean within 4*SE in only " + std::to_string(mean_ok) + "/" +
             std::to_string(runs) + " runs");
  }
  if (out.pass) {
    out.detail = std::to_string(mean_ok) + "/" + std::to_string(runs) +
                 " means within 4*SE, variances in band";
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Normality: pinned-seed KS <= 0.10 at n=200 for every preset and variant
//    in {plain, reduced}, and KS non-increasing (within 0.02) over
//    n in {30, 100, 200}.

Outcome criterion_normality() {
  Outcome out;
  const long long samples = 10000;
  std::uint64_t seed = 4242;
  double worst_final = 0.0;
  for (const FamilyPreset& preset : family_presets()) {
    for (const SomborVariant variant : {SomborVariant::plain(), SomborVariant::reduced()}) {
      double previous = 1.0;
      double final_ks = 1.0;
      for (int n : {30, 100, 200}) {
        const ChainSpec spec{preset.l, n, probs_with_p1(preset.k, 0.5), variant};
        const SampleStats stats = monte_carlo_with_ks(spec, samples, seed++);
        const double ks = *stats.ks_statistic;
        if (ks > previous + 0.02) {
          out.fail(std::string(preset.name) + "/" + variant.name() + ": KS rose from " +
                   std::to_string(previous) + " to " + std::to_string(ks) + " at n=" +
                   std::to_string(n));
        }
        previous = ks;
        final_ks = ks;
      }
      worst_final = std::max(worst_final, final_ks);
      if (final_ks > 0.10) {
        out.fail(std::string(preset.name) + "/" + variant.name() + ": KS " +
                 std::to_string(final_ks) + " > 0.10 at n=200");
      }
    }
  }
  if (out.pass) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "8 preset/variant runs, worst KS at n=200: %.4f",
                  worst_final);
    out.detail = buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// 8. Determinism: enumeration and simulation are byte-identical across 1, 2
//    and 8 worker threads.

Outcome criterion_determinism() {
  Outcome out;

  const ChainSpec enum_spec{6, 12, {0.2, 0.3, 0.5}, SomborVariant::plain()};
  const EnumerationResult base = enumerate_exact(enum_spec, 1);
  for (unsigned threads : {2u, 8u}) {
    const EnumerationResult other = enumerate_exact(enum_spec, threads);
    if (!testutil::bits_equal(base.summary.mean, other.summary.mean) ||
        !testutil::bits_equal(base.summary.variance, other.summary.variance)) {
      out.fail("enumeration moments differ at " + std::to_string(threads) + " threads");
    }
    if (base.pmf.atoms.size() != other.pmf.atoms.size()) {
      out.fail("enumeration pmf size differs at " + std::to_string(threads) + " threads");
      continue;
    }
    for (std::size_t i = 0; i < base.pmf.atoms.size(); ++i) {
      if (!testutil::bits_equal(base.pmf.atoms[i].value, other.pmf.atoms[i].value) ||
          !testutil::bits_equal(base.pmf.atoms[i].probability,
                                other.pmf.atoms[i].probability)) {
        out.fail("enumeration pmf atom differs at " + std::to_string(threads) + " threads");
        break;
      }
    }
  }

  const ChainSpec sim_spec{6, 50, {0.5, 0.3, 0.2}, SomborVariant::plain()};
  const SampleStats sim_base = monte_carlo(sim_spec, 30000, 7, 1);
  const std::vector<double> values_base = sample_values(sim_spec, 30000, 7, 1);
  for (unsigned threads : {2u, 8u}) {
    const SampleStats other = monte_carlo(sim_spec, 30000, 7, threads);
    if (!testutil::bits_equal(sim_base.mean, other.mean) ||
        !testutil::bits_equal(sim_base.unbiased_variance, other.unbiased_variance) ||
        !testutil::bits_equal(sim_base.std_error, other.std_error)) {
      out.fail("simulation stats differ at " + std::to_string(threads) + " threads");
    }
    const std::vector<double> values = sample_values(sim_spec, 30000, 7, threads);
    if (values.size() != values_base.size() ||
        std::memcmp(values.data(), values_base.data(), values.size() * sizeof(double)) != 0) {
      out.fail("sample values differ at " + std::to_string(threads) + " threads");
    }
  }

  if (out.pass) out.detail = "bit-identical at 1, 2 and 8 threads";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "census closed form", criterion_census},
      {2, "affine identity", criterion_affine_identity},
      {3, "oracle equivalence", criterion_oracle_equivalence},
      {4, "symbolic anchors", criterion_symbolic_anchors},
      {5, "audit regression anchors", criterion_audit_anchors},
      {6, "Monte Carlo consistency", criterion_monte_carlo},
      {7, "normality", criterion_normality},
      {8, "determinism", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const Outcome outcome = criterion.run();
    std::printf("[%s] %d. %s%s%s\n", outcome.pass ? "PASS" : "FAIL", criterion.id,
                criterion.title, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  return failures;
}
