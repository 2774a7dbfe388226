#pragma once

#include <algorithm>
#include <cstdint>

#include "hfkit/formula.hpp"

namespace hfkit {

// Syntactic position of a formula in the E_n / U_n hierarchy:
// E_0 = U_0 = bounded formulas; E_n is the closure of U_{n-1} under
// conjunction, disjunction, bounded quantification and existentials;
// U_n is generated from E_{n-1} by conjunction, disjunction, bounded
// quantification, universals, and implications with E_{n-1} antecedent.
struct ComplexityLevel {
  std::uint64_t e_level = 0;
  std::uint64_t u_level = 0;
  bool operator==(const ComplexityLevel&) const = default;
};

// Minimal syntactic levels, computed for both classes simultaneously. The
// cross inclusions U_{n-1} <= E_n and E_{n-1} <= U_n are what make formulas
// rooted in a foreign connective enter a class one level up.
inline ComplexityLevel classify(const Formula& f) {
  if (is_delta0(f)) return {0, 0};
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::Falsum:
      return {0, 0};
    case FormulaKind::And:
    case FormulaKind::Or: {
      const ComplexityLevel l = classify(f.left());
      const ComplexityLevel r = classify(f.right());
      return {std::max(l.e_level, r.e_level), std::max(l.u_level, r.u_level)};
    }
    case FormulaKind::BForall:
    case FormulaKind::BExists:
      return classify(f.body());
    case FormulaKind::Exists: {
      const ComplexityLevel b = classify(f.body());
      const std::uint64_t e = std::max<std::uint64_t>(1, b.e_level);
      return {e, e + 1};
    }
    case FormulaKind::Forall: {
      const ComplexityLevel b = classify(f.body());
      const std::uint64_t u = std::max<std::uint64_t>(1, b.u_level);
      return {u + 1, u};
    }
    case FormulaKind::Implies: {
      const ComplexityLevel a = classify(f.left());
      const ComplexityLevel c = classify(f.right());
      const std::uint64_t u =
          std::max({std::uint64_t{1}, a.e_level + 1, c.u_level});
      return {u + 1, u};
    }
  }
  return {0, 0};
}

enum class HierarchyClass { E, U };

// classify places f at or below the requested level; membership is monotone.
inline bool member_of(const Formula& f, HierarchyClass cls, std::uint64_t n) {
  const ComplexityLevel lvl = classify(f);
  return cls == HierarchyClass::E ? lvl.e_level <= n : lvl.u_level <= n;
}

}  // namespace hfkit
