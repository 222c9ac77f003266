#pragma once

#include <utility>
#include <vector>

#include "sombor/errors.hpp"
#include "sombor/variant.hpp"

namespace sombor {

// Parameters of the random polygonal chain model: chains of n l-gons joined
// in sequence by single bridge edges, where each new polygon attaches at one
// of k = floor(l/2) canonical positions with probabilities probs[0..k-1].
struct ChainSpec {
  int l = 0;                  // polygon size (vertices per cycle), >= 3
  int n = 0;                  // chain length (number of polygons), >= 1
  std::vector<double> probs;  // attachment probabilities, exactly floor(l/2)
  SomborVariant variant = SomborVariant::plain();

  int k() const { return l / 2; }
};

// Checks l, n and the probability vector; returns the spec with probabilities
// renormalized (the sum must already be within 1e-12 of 1). Throws
// validation_error otherwise. Probabilities are validated even when n <= 2,
// where the chain is unique and they are never drawn.
ChainSpec validate_spec(ChainSpec spec);

// Attachment choices t_3..t_n, one entry per polygon after the second, each
// in 1..k. Empty exactly when n <= 2.
using AttachmentSequence = std::vector<int>;

struct BridgeVertices {
  int incoming = -1;  // vertex where the bridge from the previous polygon lands
  int outgoing = -1;  // vertex where the bridge to the next polygon starts
};

// Explicit vertex/edge representation of one realized chain. Polygon i
// (1-based) occupies the contiguous vertex range [(i-1)*l, i*l).
struct ChainGraph {
  int polygon_size = 0;   // l
  int polygon_count = 0;  // n
  int vertex_count = 0;   // n*l
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degrees;
  std::vector<int> polygon_of;                  // vertex -> polygon index, 1-based
  std::vector<BridgeVertices> bridge_vertices;  // per polygon, index 0 = polygon 1

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Builds the chain realized by `seq` (canonical attachment types in 1..k).
// Type t means the attachment vertex on the previous polygon sits at cyclic
// distance t, in ascending local-index direction, from that polygon's
// incoming bridge vertex. The second polygon attaches at local vertex 0 of
// both endpoints. Throws validation_error on out-of-range types or a length
// mismatch, guard_error when n*l exceeds the graph-size guard.
ChainGraph build_chain(int l, int n, const AttachmentSequence& seq);

// Same construction but with raw cyclic distances in 1..l-1, without the
// mirror canonicalization d <-> l-d. Distances d and l-d produce isomorphic
// graphs; build_chain(t) equals build_chain_raw(t) for t in 1..floor(l/2).
ChainGraph build_chain_raw(int l, int n, const std::vector<int>& distances);

// Counts of edges by the degree pair of their endpoints. On these chains all
// degrees are 2 or 3, so (m22, m23, m33) determines every Sombor variant.
struct EdgeTypeCensus {
  long long m22 = 0;
  long long m23 = 0;
  long long m33 = 0;

  long long total() const { return m22 + m23 + m33; }
  friend bool operator==(const EdgeTypeCensus&, const EdgeTypeCensus&) = default;
};

// Tallies each edge of g once by its endpoint-degree pair. Throws
// validation_error if any endpoint degree falls outside {2, 3}.
EdgeTypeCensus degree_census(const ChainGraph& g);

// The census of any chain with `type1_count` type-1 entries in its attachment
// sequence: (l, 0, 0) for n = 1, otherwise
//   m22 = (2l-4) + (n-2)(l-4) + x,  m23 = 4 + 4(n-2) - 2x,  m33 = 1 + (n-2) + x.
EdgeTypeCensus closed_form_census(int l, long long n, long long type1_count);

// Change in the census when one polygon is appended with a given attachment
// type. Components always sum to l + 1 (l cycle edges plus one bridge).
struct CensusDelta {
  int d22 = 0;
  int d23 = 0;
  int d33 = 0;

  friend bool operator==(const CensusDelta&, const CensusDelta&) = default;
};

// Per-type census deltas for appending one polygon, derived by differencing
// explicitly built three-polygon and two-polygon chains (never hard-coded).
std::vector<CensusDelta> attachment_deltas(int l);

// Structural self-check: vertex/edge counts, degree multiset, connectivity,
// and that every bridge edge is a cut edge. Throws validation_error on the
// first violated invariant. Intended for tests and sampled spot checks.
void validate_chain(const ChainGraph& g);

}  // namespace sombor
