#pragma once

// Shared oracles and utilities for the test suites. Everything here is
// deliberately brute force and independent of the library's computation
// paths.

#include <cmath>
#include <cstring>
#include <vector>

#include "sombor/moments.hpp"
#include "sombor/simulate.hpp"

namespace testutil {

// Every attachment sequence of the given length over types 1..k, in
// odometer order.
inline std::vector<std::vector<int>> all_sequences(int k, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq(static_cast<std::size_t>(len), 1);
  for (;;) {
    out.push_back(seq);
    int pos = len - 1;
    while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == k) {
      seq[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++seq[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline int count_type1(const std::vector<int>& seq) {
  int x = 0;
  for (int t : seq) x += t == 1 ? 1 : 0;
  return x;
}

inline bool bits_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

// Standard normal quantile by bisection on the library CDF; plenty accurate
// for quantile-grid tests.
inline double phi_inverse(double q) {
  double lo = -12.0;
  double hi = 12.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (sombor::normal_cdf(mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Atom-by-atom comparison: same support (values within value_tol, which must
// sit far below the spacing of distinct atoms) and probabilities within
// prob_tol.
inline bool pmf_close(const sombor::Pmf& a, const sombor::Pmf& b, double value_tol,
                      double prob_tol) {
  if (a.atoms.size() != b.atoms.size()) return false;
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    if (std::abs(a.atoms[i].value - b.atoms[i].value) > value_tol) return false;
    if (std::abs(a.atoms[i].probability - b.atoms[i].probability) > prob_tol) return false;
  }
  return true;
}

}  // namespace testutil
