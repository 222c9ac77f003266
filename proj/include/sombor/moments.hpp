#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sombor/chain.hpp"
#include "sombor/sombor.hpp"

namespace sombor {

enum class MomentSource { closed_form, enumeration, simulation };

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  long long n = 0;
  SomborVariant variant;
  MomentSource source = MomentSource::closed_form;
};

// Canonical affine form of the index on a chain of fixed (l, n, shift): for
// an attachment sequence with x1 type-1 entries,
//   value = A*x1 + B*(n-2) + C,
// where A = A_1 - A_2, B = A_2 and C is the value of the two-polygon chain.
struct AffineABC {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

// Same line expressed against the chain length: value = A*x1 + B*n + C_n.
// Only the constant term moves: C_n = C - 2B.
inline double chain_length_basis_constant(const AffineABC& abc) { return abc.C - 2.0 * abc.B; }

// Exact per-type increments of the index when one polygon is appended, plus
// the affine form they induce. Increments for types >= 2 coincide.
struct IncrementConstants {
  double a_resolved = 0.0;
  std::vector<double> increments;  // one per attachment type 1..k
  AffineABC affine;
};

// E = M*n + N and Var = P*n + Q for fixed-shift variants.
struct AffineInN {
  double M = 0.0;
  double N = 0.0;
  double P = 0.0;
  double Q = 0.0;
};

struct PmfAtom {
  double value = 0.0;
  double probability = 0.0;
};

// Finite distribution, atoms sorted by value, zero-probability atoms dropped.
struct Pmf {
  std::vector<PmfAtom> atoms;
};

// Derives the increments by differencing explicitly built chains: the value
// of each three-polygon chain minus the value of the two-polygon chain, all
// evaluated at the shift resolved for (variant, l, n_for_avg). n_for_avg only
// matters for the average variant, whose shift depends on the target length.
// Requires l >= 4 (at least two attachment types).
IncrementConstants increment_constants(int l, SomborVariant variant, long long n_for_avg);

// Affine constants for the spec's (l, n, variant). Requires l >= 4, n >= 2.
AffineABC affine_form(const ChainSpec& spec);

// Closed-form mean: (p1*A + B)(n-2) + C for n >= 2, l*w(2,2,a) for n = 1.
MomentSummary expected_value(const ChainSpec& spec);

// Closed-form variance: A^2 (n-2) p1 (1-p1); zero for n <= 2.
MomentSummary variance(const ChainSpec& spec);

// Coefficients of E = M*n + N, Var = P*n + Q, valid for every n >= 2 of the
// family (l, probs, variant). Rejects the average variant, whose shift varies
// with n; call expected_value / variance per n instead.
AffineInN moments_affine_in_n(int l, const std::vector<double>& probs, SomborVariant variant);

// Exact distribution of the index: value A*x + B(n-2) + C carries the
// binomial(n-2, p1) mass of x; equal values are aggregated. Guarded at
// n - 2 > 10^6 atoms.
Pmf exact_pmf(const ChainSpec& spec);

enum class Family { polyonino, pentachain, polyphenyl, cyclooctane };

struct FamilyPreset {
  Family family;
  const char* name;
  int l;
  int k;
};

// polyonino l=4, pentachain l=5, polyphenyl l=6, cyclooctane l=8. Chain
// length and probabilities are left to the caller.
FamilyPreset family_preset(Family family);
const std::vector<FamilyPreset>& family_presets();
std::optional<Family> family_from_name(std::string_view name);

namespace detail {

// Binomial(m, p) probabilities for x = 0..m, computed by a mode-anchored
// recurrence in extended precision so the mass stays within 1e-12 of 1 up to
// m = 10^6. Exact at p = 0 and p = 1.
std::vector<double> binomial_pmf(long long m, double p);

// Sorts (value, weight) pairs and merges runs of values closer than 1e-9;
// a merged atom carries the weighted mean of its members. Zero-weight pairs
// are dropped. Distinct atoms of these chains sit at least |A| apart, far
// above the merge gap, while re-evaluations of one atom agree to ~1e-10.
Pmf aggregate_pmf(std::vector<std::pair<double, double>> value_weight);

}  // namespace detail

}  // namespace sombor
