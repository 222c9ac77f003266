#include "sombor/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sombor {

namespace {

constexpr long long kPmfSupportGuard = 1'000'000;
constexpr double kMergeGap = 1e-9;

void require_two_types(int l) {
  if (l < 4) {
    throw validation_error("closed forms need at least two attachment types (l >= 4), got l=" +
                           std::to_string(l));
  }
}

}  // namespace

IncrementConstants increment_constants(int l, SomborVariant variant, long long n_for_avg) {
  require_two_types(l);
  if (variant.kind == SomborVariant::Kind::average && n_for_avg < 1) {
    throw validation_error("average variant needs the target chain length (n_for_avg >= 1)");
  }
  const double a = resolve_a(variant, l, n_for_avg);
  const double base = sombor_from_census(degree_census(build_chain(l, 2, {})), a);
  IncrementConstants out;
  out.a_resolved = a;
  out.increments.reserve(static_cast<std::size_t>(l / 2));
  for (int t = 1; t <= l / 2; ++t) {
    const double value = sombor_from_census(degree_census(build_chain(l, 3, {t})), a);
    out.increments.push_back(value - base);
  }
  out.affine = {out.increments[0] - out.increments[1], out.increments[1], base};
  return out;
}

AffineABC affine_form(const ChainSpec& raw) {
  const ChainSpec spec = validate_spec(raw);
  require_two_types(spec.l);
  if (spec.n < 2) throw validation_error("the affine form needs n >= 2");
  return increment_constants(spec.l, spec.variant, spec.n).affine;
}

MomentSummary expected_value(const ChainSpec& raw) {
  const ChainSpec spec = validate_spec(raw);
  require_two_types(spec.l);
  if (spec.n == 1) {
    const double a = resolve_a(spec.variant, spec.l, 1);
    return {spec.l * edge_weight(2, 2, a), 0.0, 1, spec.variant, MomentSource::closed_form};
  }
  const AffineABC abc = affine_form(spec);
  const double p1 = spec.probs[0];
  const double mean = (p1 * abc.A + abc.B) * (spec.n - 2) + abc.C;
  return {mean, variance(spec).variance, spec.n, spec.variant, MomentSource::closed_form};
}

MomentSummary variance(const ChainSpec& raw) {
  const ChainSpec spec = validate_spec(raw);
  require_two_types(spec.l);
  if (spec.n == 1) return {0.0, 0.0, 1, spec.variant, MomentSource::closed_form};
  const AffineABC abc = affine_form(spec);
  const double p1 = spec.probs[0];
  const double var = abc.A * abc.A * (spec.n - 2) * p1 * (1.0 - p1);
  return {0.0, var, spec.n, spec.variant, MomentSource::closed_form};
}

AffineInN moments_affine_in_n(int l, const std::vector<double>& probs, SomborVariant variant) {
  if (variant.kind == SomborVariant::Kind::average) {
    throw validation_error(
        "the average variant's shift depends on n, so E and Var are not affine in n; "
        "call expected_value/variance per chain length instead");
  }
  const ChainSpec spec = validate_spec({l, 2, probs, variant});
  require_two_types(l);
  const AffineABC abc = increment_constants(l, variant, 2).affine;
  const double p1 = spec.probs[0];
  AffineInN out;
  out.M = p1 * abc.A + abc.B;
  out.N = abc.C - 2.0 * out.M;
  out.P = abc.A * abc.A * p1 * (1.0 - p1);
  out.Q = -2.0 * out.P;
  return out;
}

Pmf exact_pmf(const ChainSpec& raw) {
  const ChainSpec spec = validate_spec(raw);
  require_two_types(spec.l);
  if (spec.n < 2) throw validation_error("exact_pmf needs n >= 2");
  const long long m = spec.n - 2;
  if (m > kPmfSupportGuard) {
    throw guard_error("pmf support of " + std::to_string(m + 1) + " atoms exceeds the guard of " +
                      std::to_string(kPmfSupportGuard + 1));
  }
  const AffineABC abc = affine_form(spec);
  const std::vector<double> mass = detail::binomial_pmf(m, spec.probs[0]);
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(mass.size());
  for (long long x = 0; x <= m; ++x) {
    if (mass[static_cast<std::size_t>(x)] == 0.0) continue;
    atoms.emplace_back(abc.A * static_cast<double>(x) + abc.B * static_cast<double>(m) + abc.C,
                       mass[static_cast<std::size_t>(x)]);
  }
  return detail::aggregate_pmf(std::move(atoms));
}

FamilyPreset family_preset(Family family) {
  switch (family) {
    case Family::polyonino: return {Family::polyonino, "polyonino", 4, 2};
    case Family::pentachain: return {Family::pentachain, "pentachain", 5, 2};
    case Family::polyphenyl: return {Family::polyphenyl, "polyphenyl", 6, 3};
    case Family::cyclooctane: return {Family::cyclooctane, "cyclooctane", 8, 4};
  }
  throw validation_error("unknown family preset");
}

const std::vector<FamilyPreset>& family_presets() {
  static const std::vector<FamilyPreset> presets = {
      family_preset(Family::polyonino),
      family_preset(Family::pentachain),
      family_preset(Family::polyphenyl),
      family_preset(Family::cyclooctane),
  };
  return presets;
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const FamilyPreset& p : family_presets()) {
    if (name == p.name) return p.family;
  }
  return std::nullopt;
}

namespace detail {

std::vector<double> binomial_pmf(long long m, double p) {
  if (m < 0) throw validation_error("binomial_pmf needs m >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("binomial_pmf needs p in [0, 1]");
  std::vector<double> pmf(static_cast<std::size_t>(m) + 1, 0.0);
  if (m == 0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p == 1.0) {
    pmf[static_cast<std::size_t>(m)] = 1.0;
    return pmf;
  }
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(-static_cast<long double>(p));
  const long double md = static_cast<long double>(m);
  long long mode = static_cast<long long>((md + 1.0L) * static_cast<long double>(p));
  mode = std::clamp<long long>(mode, 0, m);
  const long double log_anchor = std::lgamma(md + 1.0L) -
                                 std::lgamma(static_cast<long double>(mode) + 1.0L) -
                                 std::lgamma(md - static_cast<long double>(mode) + 1.0L) +
                                 static_cast<long double>(mode) * lp +
                                 (md - static_cast<long double>(mode)) * lq;
  const long double anchor = std::exp(log_anchor);
  const long double odds = static_cast<long double>(p) / (1.0L - static_cast<long double>(p));
  pmf[static_cast<std::size_t>(mode)] = static_cast<double>(anchor);
  long double term = anchor;
  for (long long x = mode; x < m; ++x) {
    term *= static_cast<long double>(m - x) / static_cast<long double>(x + 1) * odds;
    pmf[static_cast<std::size_t>(x + 1)] = static_cast<double>(term);
  }
  term = anchor;
  for (long long x = mode; x > 0; --x) {
    term *= static_cast<long double>(x) / static_cast<long double>(m - x + 1) / odds;
    pmf[static_cast<std::size_t>(x - 1)] = static_cast<double>(term);
  }
  return pmf;
}

Pmf aggregate_pmf(std::vector<std::pair<double, double>> value_weight) {
  std::erase_if(value_weight, [](const auto& vw) { return vw.second == 0.0; });
  std::sort(value_weight.begin(), value_weight.end());
  Pmf out;
  std::size_t i = 0;
  while (i < value_weight.size()) {
    std::size_t j = i + 1;
    while (j < value_weight.size() && value_weight[j].first - value_weight[j - 1].first <= kMergeGap) {
      ++j;
    }
    if (j == i + 1) {
      out.atoms.push_back({value_weight[i].first, value_weight[i].second});
    } else {
      double wsum = 0.0;
      double vwsum = 0.0;
      for (std::size_t t = i; t < j; ++t) {
        wsum += value_weight[t].second;
        vwsum += value_weight[t].first * value_weight[t].second;
      }
      out.atoms.push_back({vwsum / wsum, wsum});
    }
    i = j;
  }
  return out;
}

}  // namespace detail

}  // namespace sombor
