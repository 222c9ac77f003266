#pragma once

#include "sombor/chain.hpp"
#include "sombor/variant.hpp"

namespace sombor {

// An evaluated index together with the shift that was actually used; the
// average variant resolves its shift from the target graph, so recording it
// lets moment formulas reuse the same value.
struct SomborValue {
  double value = 0.0;
  SomborVariant variant;
  double resolved_a = 0.0;
};

// Contribution of one edge: the Euclidean norm of (du - a, dv - a).
// Symmetric in (du, dv), nonnegative, total for finite inputs.
double edge_weight(int deg_u, int deg_v, double a);

// m22*w(2,2) + m23*w(2,3) + m33*w(3,3) at shift a.
double sombor_from_census(const EdgeTypeCensus& c, double a);

// 2|E| / |V|. Throws validation_error on an empty graph.
double average_degree(const ChainGraph& g);

// Average degree of any (l, n) chain: 2(nl + n - 1) / (nl). The value is the
// same for every realization of the spec, so the average variant's shift is
// deterministic given (l, n).
double average_degree(int l, long long n);

// Shift used by `variant` on a chain of spec (l, n).
double resolve_a(SomborVariant variant, int l, long long n);

// Evaluates the index by summing edge weights directly over the graph; agrees
// with sombor_from_census(degree_census(g), a) to within 1e-12.
SomborValue sombor_of_graph(const ChainGraph& g, SomborVariant variant);

}  // namespace sombor
