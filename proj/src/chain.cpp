#include "sombor/chain.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace sombor {

namespace {

constexpr long long kMaxChainVertices = 100'000'000;

void check_polygon_size(int l) {
  if (l < 3) throw validation_error("polygon size l must be at least 3, got " + std::to_string(l));
}

void check_chain_length(int n) {
  if (n < 1) throw validation_error("chain length n must be at least 1, got " + std::to_string(n));
}

std::size_t expected_sequence_length(int n) { return n >= 3 ? static_cast<std::size_t>(n - 2) : 0; }

}  // namespace

ChainSpec validate_spec(ChainSpec spec) {
  check_polygon_size(spec.l);
  check_chain_length(spec.n);
  const std::size_t k = static_cast<std::size_t>(spec.l / 2);
  if (spec.probs.size() != k) {
    throw validation_error("expected k=" + std::to_string(k) + " attachment probabilities for l=" +
                           std::to_string(spec.l) + ", got " + std::to_string(spec.probs.size()));
  }
  double sum = 0.0;
  for (double p : spec.probs) {
    if (!(p >= 0.0)) throw validation_error("attachment probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw validation_error("attachment probabilities must sum to 1 within 1e-12, got sum=" +
                           std::to_string(sum));
  }
  for (double& p : spec.probs) p /= sum;
  return spec;
}

ChainGraph build_chain_raw(int l, int n, const std::vector<int>& distances) {
  check_polygon_size(l);
  check_chain_length(n);
  if (distances.size() != expected_sequence_length(n)) {
    throw validation_error("attachment sequence must have max(n-2, 0)=" +
                           std::to_string(expected_sequence_length(n)) + " entries, got " +
                           std::to_string(distances.size()));
  }
  for (int d : distances) {
    if (d < 1 || d > l - 1) {
      throw validation_error("attachment distance " + std::to_string(d) + " outside 1.." +
                             std::to_string(l - 1));
    }
  }
  if (static_cast<long long>(n) * l > kMaxChainVertices) {
    throw guard_error("chain with n*l=" + std::to_string(static_cast<long long>(n) * l) +
                      " vertices exceeds the guard of " + std::to_string(kMaxChainVertices));
  }

  ChainGraph g;
  g.polygon_size = l;
  g.polygon_count = n;
  g.vertex_count = n * l;
  g.degrees.assign(static_cast<std::size_t>(g.vertex_count), 0);
  g.polygon_of.resize(static_cast<std::size_t>(g.vertex_count));
  g.bridge_vertices.assign(static_cast<std::size_t>(n), BridgeVertices{});
  g.edges.reserve(static_cast<std::size_t>(g.vertex_count) + static_cast<std::size_t>(n) - 1);

  auto add_edge = [&g](int u, int v) {
    g.edges.emplace_back(u, v);
    ++g.degrees[static_cast<std::size_t>(u)];
    ++g.degrees[static_cast<std::size_t>(v)];
  };

  for (int p = 0; p < n; ++p) {
    const int base = p * l;
    for (int v = 0; v < l; ++v) g.polygon_of[static_cast<std::size_t>(base + v)] = p + 1;
    if (p > 0) {
      const int prev_base = (p - 1) * l;
      // Polygon 1 has no incoming bridge; its attachment reference is local 0.
      const int ref = g.bridge_vertices[static_cast<std::size_t>(p - 1)].incoming >= 0
                          ? g.bridge_vertices[static_cast<std::size_t>(p - 1)].incoming
                          : prev_base;
      const int d = p == 1 ? 0 : distances[static_cast<std::size_t>(p - 2)];
      const int attach = prev_base + (ref - prev_base + d) % l;
      add_edge(attach, base);
      g.bridge_vertices[static_cast<std::size_t>(p - 1)].outgoing = attach;
      g.bridge_vertices[static_cast<std::size_t>(p)].incoming = base;
    }
    for (int v = 0; v < l; ++v) add_edge(base + v, base + (v + 1) % l);
  }
  return g;
}

ChainGraph build_chain(int l, int n, const AttachmentSequence& seq) {
  check_polygon_size(l);
  const int k = l / 2;
  for (int t : seq) {
    if (t < 1 || t > k) {
      throw validation_error("attachment type " + std::to_string(t) + " outside 1.." +
                             std::to_string(k));
    }
  }
  return build_chain_raw(l, n, seq);
}

EdgeTypeCensus degree_census(const ChainGraph& g) {
  EdgeTypeCensus c;
  for (const auto& [u, v] : g.edges) {
    const int du = g.degrees[static_cast<std::size_t>(u)];
    const int dv = g.degrees[static_cast<std::size_t>(v)];
    if ((du != 2 && du != 3) || (dv != 2 && dv != 3)) {
      throw validation_error("vertex degree outside {2,3}: not a polygonal chain");
    }
    switch (du + dv) {
      case 4: ++c.m22; break;
      case 5: ++c.m23; break;
      default: ++c.m33; break;
    }
  }
  return c;
}

EdgeTypeCensus closed_form_census(int l, long long n, long long type1_count) {
  check_polygon_size(l);
  if (n < 1) throw validation_error("chain length n must be at least 1");
  const long long max_type1 = n >= 2 ? n - 2 : 0;
  if (type1_count < 0 || type1_count > max_type1) {
    throw validation_error("type1_count must be in 0.." + std::to_string(max_type1));
  }
  if (n == 1) return {l, 0, 0};
  const long long x = type1_count;
  return {(2 * l - 4) + (n - 2) * (l - 4) + x, 4 + 4 * (n - 2) - 2 * x, 1 + (n - 2) + x};
}

std::vector<CensusDelta> attachment_deltas(int l) {
  check_polygon_size(l);
  const EdgeTypeCensus base = degree_census(build_chain(l, 2, {}));
  std::vector<CensusDelta> deltas;
  deltas.reserve(static_cast<std::size_t>(l / 2));
  for (int t = 1; t <= l / 2; ++t) {
    const EdgeTypeCensus c = degree_census(build_chain(l, 3, {t}));
    deltas.push_back({static_cast<int>(c.m22 - base.m22), static_cast<int>(c.m23 - base.m23),
                      static_cast<int>(c.m33 - base.m33)});
  }
  return deltas;
}

namespace {

// BFS reachability, optionally skipping one edge index.
int reachable_count(const ChainGraph& g, int start, int skip_edge) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (static_cast<int>(e) == skip_edge) continue;
    adj[static_cast<std::size_t>(g.edges[e].first)].push_back(g.edges[e].second);
    adj[static_cast<std::size_t>(g.edges[e].second)].push_back(g.edges[e].first);
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++count;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

void validate_chain(const ChainGraph& g) {
  const int l = g.polygon_size;
  const int n = g.polygon_count;
  check_polygon_size(l);
  check_chain_length(n);
  if (g.vertex_count != n * l) throw validation_error("vertex count differs from n*l");
  if (g.edge_count() != n * l + n - 1) throw validation_error("edge count differs from n*l+n-1");
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count), 0);
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count || u == v) {
      throw validation_error("edge endpoint out of range");
    }
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  if (deg != g.degrees) throw validation_error("stored degrees disagree with edges");
  int degree3 = 0;
  for (int d : deg) {
    if (d != 2 && d != 3) throw validation_error("vertex degree outside {2,3}");
    if (d == 3) ++degree3;
  }
  if (degree3 != 2 * (n - 1)) throw validation_error("degree-3 vertex count differs from 2(n-1)");
  if (reachable_count(g, 0, -1) != g.vertex_count) throw validation_error("graph is disconnected");
  for (int p = 1; p < n; ++p) {
    const int from = g.bridge_vertices[static_cast<std::size_t>(p - 1)].outgoing;
    const int to = g.bridge_vertices[static_cast<std::size_t>(p)].incoming;
    if (from < 0 || to < 0) throw validation_error("missing bridge endpoint record");
    int edge_index = -1;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& [u, v] = g.edges[e];
      if ((u == from && v == to) || (u == to && v == from)) {
        edge_index = static_cast<int>(e);
        break;
      }
    }
    if (edge_index < 0) throw validation_error("recorded bridge edge is absent");
    if (reachable_count(g, from, edge_index) == g.vertex_count) {
      throw validation_error("bridge edge is not a cut edge");
    }
  }
}

}  // namespace sombor
