#ifndef CUTLATTICE_SCHLAFLI_HPP
#define CUTLATTICE_SCHLAFLI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutlattice/error.hpp"

namespace cutlattice {

// A (possibly star) polygon fraction p/q. q == 1 is the convex p-gon,
// 1 < q < p/2 a star polygon, q > p/2 a "large" star polygon (spherical
// representations only).
struct Fraction {
  int p = 2;
  int q = 1;

  bool convex() const { return q == 1; }
  bool large() const { return 2 * q > p; }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Validates p >= 2, 1 <= q < p, gcd(p, q) == 1; throws Error otherwise.
Fraction make_fraction(int p, int q);

// One position of a Schlafli symbol: a fraction or the infinity marker.
struct SchlafliEntry {
  std::optional<Fraction> frac;  // nullopt == infinity

  bool infinite() const { return !frac.has_value(); }
  friend bool operator==(const SchlafliEntry&, const SchlafliEntry&) = default;
};

struct SchlafliSymbol {
  std::vector<SchlafliEntry> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const SchlafliSymbol&, const SchlafliSymbol&) = default;
};

enum class Curvature { Spherical, Euclidean, Hyperbolic };

// Grammar: '{' frac (',' frac)* '}', frac := int | int '/' int | 'inf' | U+221E.
// Whitespace-tolerant. Throws Error (Parse with character position, or
// Constraint for gcd/range violations).
SchlafliSymbol parse_schlafli(std::string_view text);

// Canonical text, no spaces; inverse of parse_schlafli.
std::string format(const SchlafliSymbol& sym);
std::string format(const Fraction& f);

// Curvature of a convex length-2 symbol {m,k} by the sign of
// 1/m + 1/k - 1/2, with infinity entries treated as limit 0.
Curvature classify(const SchlafliSymbol& sym);

const char* to_string(Curvature c);

}  // namespace cutlattice

#endif
