#pragma once

#include <span>
#include <string_view>

#include "sombor/variant.hpp"

namespace sombor {

// Registry of the published closed-form expressions for the expected values
// and variances of the Sombor indices on random polygonal chains, split by
// polygon parity (odd l = 2k+1, even l = 2k). Each entry is evaluated exactly
// as published, with no correction; several of the published constants are
// inconsistent with the values derived from explicit graphs (one variance
// constant is even negative), and the audit in oracle.hpp reports every such
// discrepancy. Nothing else in the library reads these formulas.

enum class PublishedFormulaId {
  odd_mean_so,
  odd_mean_so_red,
  odd_mean_so_avr,
  odd_var_so,
  odd_var_so_red,
  odd_var_so_avr,
  even_mean_so,
  even_mean_so_red,
  even_mean_so_avr,
  even_var_so,
  even_var_so_red,
  even_var_so_avr,
};

enum class Parity { odd, even };
enum class Statistic { mean, variance };

struct PublishedFormula {
  PublishedFormulaId id;
  const char* name;  // "<parity>/<statistic>/<index>", e.g. "odd/var/so"
  Parity parity;
  Statistic statistic;
  SomborVariant variant;
};

// Evaluates the published expression at (k, n, p1). k is the parameter in the
// published parameterization: l = 2k+1 for odd entries, l = 2k for even ones.
double published_formula(PublishedFormulaId id, int k, long long n, double p1);

std::span<const PublishedFormula> published_registry();
const PublishedFormula& published_info(PublishedFormulaId id);
std::string_view published_name(PublishedFormulaId id);

}  // namespace sombor
