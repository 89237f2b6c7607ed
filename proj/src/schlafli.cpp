#include "cutlattice/schlafli.hpp"

#include <numeric>
#include <sstream>

namespace cutlattice {

Fraction make_fraction(int p, int q) {
  if (p < 2) fail(ErrorKind::Constraint, "fraction " + std::to_string(p) + "/" + std::to_string(q) + ": p must be >= 2");
  if (q < 1 || q >= p)
    fail(ErrorKind::Constraint, "fraction " + std::to_string(p) + "/" + std::to_string(q) + ": need 1 <= q < p");
  if (std::gcd(p, q) != 1)
    fail(ErrorKind::Constraint, "fraction " + std::to_string(p) + "/" + std::to_string(q) + ": gcd(p,q) != 1");
  return Fraction{p, q};
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void syntax(const std::string& what) {
    fail(ErrorKind::Parse,
         "syntax error at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) syntax("expected integer");
    if (pos - start > 7) syntax("integer too large");
    int v = 0;
    for (size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
    return v;
  }

  SchlafliEntry entry() {
    skip_ws();
    if (text.compare(pos, 3, "inf") == 0) {
      pos += 3;
      return SchlafliEntry{};
    }
    if (text.compare(pos, 3, "∞") == 0) {  // UTF-8 infinity sign
      pos += 3;
      return SchlafliEntry{};
    }
    int p = integer();
    int q = 1;
    if (eat('/')) q = integer();
    return SchlafliEntry{make_fraction(p, q)};
  }
};

}  // namespace

SchlafliSymbol parse_schlafli(std::string_view text) {
  Parser pr{text};
  if (!pr.eat('{')) pr.syntax("expected '{'");
  SchlafliSymbol sym;
  sym.entries.push_back(pr.entry());
  while (pr.eat(',')) sym.entries.push_back(pr.entry());
  if (!pr.eat('}')) pr.syntax("expected ',' or '}'");
  pr.skip_ws();
  if (pr.pos != text.size()) pr.syntax("trailing characters");
  return sym;
}

std::string format(const Fraction& f) {
  if (f.q == 1) return std::to_string(f.p);
  return std::to_string(f.p) + "/" + std::to_string(f.q);
}

std::string format(const SchlafliSymbol& sym) {
  std::string out = "{";
  for (size_t i = 0; i < sym.entries.size(); ++i) {
    if (i) out += ",";
    out += sym.entries[i].infinite() ? "inf" : format(*sym.entries[i].frac);
  }
  out += "}";
  return out;
}

Curvature classify(const SchlafliSymbol& sym) {
  if (sym.rank() != 2)
    fail(ErrorKind::Domain, "classify: need a length-2 symbol, got " + format(sym));
  for (const auto& e : sym.entries)
    if (!e.infinite() && !e.frac->convex())
      fail(ErrorKind::Domain, "classify: star entries not allowed in " + format(sym));
  // Compare 1/m + 1/k against 1/2 exactly; an infinite entry contributes 0.
  // With finite m, k: 1/m + 1/k <=> 1/2  iff  2(m + k) <=> m*k.
  const auto& a = sym.entries[0];
  const auto& b = sym.entries[1];
  long long lhs, rhs;
  if (a.infinite() && b.infinite()) {
    lhs = 0, rhs = 1;
  } else if (a.infinite() || b.infinite()) {
    long long k = a.infinite() ? b.frac->p : a.frac->p;
    lhs = 2, rhs = k;  // 1/k <=> 1/2
  } else {
    long long m = a.frac->p, k = b.frac->p;
    lhs = 2 * (m + k), rhs = m * k;
  }
  if (lhs > rhs) return Curvature::Spherical;
  if (lhs == rhs) return Curvature::Euclidean;
  return Curvature::Hyperbolic;
}

const char* to_string(Curvature c) {
  switch (c) {
    case Curvature::Spherical: return "spherical";
    case Curvature::Euclidean: return "euclidean";
    case Curvature::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

}  // namespace cutlattice
