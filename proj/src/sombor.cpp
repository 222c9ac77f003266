#include "sombor/sombor.hpp"

#include <cmath>

namespace sombor {

double edge_weight(int deg_u, int deg_v, double a) {
  return std::hypot(static_cast<double>(deg_u) - a, static_cast<double>(deg_v) - a);
}

double sombor_from_census(const EdgeTypeCensus& c, double a) {
  return static_cast<double>(c.m22) * edge_weight(2, 2, a) +
         static_cast<double>(c.m23) * edge_weight(2, 3, a) +
         static_cast<double>(c.m33) * edge_weight(3, 3, a);
}

double average_degree(const ChainGraph& g) {
  if (g.vertex_count == 0) throw validation_error("average degree of an empty graph");
  return 2.0 * g.edge_count() / g.vertex_count;
}

double average_degree(int l, long long n) {
  if (l < 3 || n < 1) throw validation_error("average degree needs l >= 3 and n >= 1");
  return 2.0 * static_cast<double>(n * l + n - 1) / static_cast<double>(n * l);
}

namespace {

double fixed_shift(SomborVariant variant) {
  switch (variant.kind) {
    case SomborVariant::Kind::plain: return 0.0;
    case SomborVariant::Kind::reduced: return 1.0;
    case SomborVariant::Kind::general: return variant.shift;
    case SomborVariant::Kind::average: break;
  }
  throw validation_error("variant has no fixed shift");
}

}  // namespace

double resolve_a(SomborVariant variant, int l, long long n) {
  if (variant.kind == SomborVariant::Kind::average) return average_degree(l, n);
  return fixed_shift(variant);
}

SomborValue sombor_of_graph(const ChainGraph& g, SomborVariant variant) {
  if (g.vertex_count == 0) throw validation_error("Sombor index of an empty graph");
  const double a = variant.kind == SomborVariant::Kind::average ? average_degree(g)
                                                                : fixed_shift(variant);
  // Degrees on these chains are 2 or 3; cache the three weights and fall back
  // to the general form for anything else.
  const double w[2][2] = {{edge_weight(2, 2, a), edge_weight(2, 3, a)},
                          {edge_weight(3, 2, a), edge_weight(3, 3, a)}};
  double total = 0.0;
  for (const auto& [u, v] : g.edges) {
    const int du = g.degrees[static_cast<std::size_t>(u)];
    const int dv = g.degrees[static_cast<std::size_t>(v)];
    if (du >= 2 && du <= 3 && dv >= 2 && dv <= 3) {
      total += w[du - 2][dv - 2];
    } else {
      total += edge_weight(du, dv, a);
    }
  }
  return {total, variant, a};
}

}  // namespace sombor
