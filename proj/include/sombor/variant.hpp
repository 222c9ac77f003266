#pragma once

#include <string>

namespace sombor {

// Member of the Sombor index family. Every member sums, over the edges uv of
// a graph, sqrt((d(u)-a)^2 + (d(v)-a)^2) for a degree shift a:
//
//   plain    a = 0                      (the ordinary index)
//   reduced  a = 1
//   average  a = 2|E|/|V| of the evaluated graph (zero on regular graphs)
//   general  caller-chosen a (any real)
struct SomborVariant {
  enum class Kind { plain, reduced, average, general };

  Kind kind = Kind::plain;
  double shift = 0.0;  // meaningful for general only

  static SomborVariant plain() { return {Kind::plain, 0.0}; }
  static SomborVariant reduced() { return {Kind::reduced, 1.0}; }
  static SomborVariant average() { return {Kind::average, 0.0}; }
  static SomborVariant general(double a) { return {Kind::general, a}; }

  std::string name() const {
    switch (kind) {
      case Kind::plain: return "plain";
      case Kind::reduced: return "reduced";
      case Kind::average: return "average";
      case Kind::general: return "general";
    }
    return "unknown";
  }

  friend bool operator==(const SomborVariant&, const SomborVariant&) = default;
};

}  // namespace sombor
