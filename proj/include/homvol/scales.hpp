#pragma once

// Effect scales on 2x2x2 probability tables and the point-set geometry of
// their homogeneity (no-interaction) constraints.
//
// A table assigns an outcome probability to each exposure pair:
//   p11 (both exposures), p10, p01, p00 (neither).
// Homogeneity on a given scale means the effect of one exposure is the same
// at both levels of the other.  On each scale that is one scalar equation,
// so the homogeneous tables form a three-dimensional surface inside the open
// four-cube; solving the constraint for p00 writes the surface as a graph
// over the (p11, p10, p01) cell triple.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace homvol {

enum class EffectScale {
  RiskDifference,  // additive: p11 - p10 - p01 + p00 = 0
  RiskRatio,       // multiplicative: (p11 p00) / (p10 p01) = 1
  OddsRatio,       // odds multiplicative: odds(p11) odds(p00) / (odds(p10) odds(p01)) = 1
};

inline constexpr std::array<EffectScale, 3> kAllScales = {
    EffectScale::RiskDifference, EffectScale::RiskRatio, EffectScale::OddsRatio};

// Short lower-case token, also used by the command-line interface.
inline const char* scale_token(EffectScale s) {
  switch (s) {
    case EffectScale::RiskDifference: return "rd";
    case EffectScale::RiskRatio: return "rr";
    case EffectScale::OddsRatio: return "or";
  }
  throw std::invalid_argument("scale_token: unknown scale");
}

inline EffectScale parse_scale(const std::string& token) {
  if (token == "rd") return EffectScale::RiskDifference;
  if (token == "rr") return EffectScale::RiskRatio;
  if (token == "or") return EffectScale::OddsRatio;
  throw std::invalid_argument("parse_scale: expected rd, rr, or or, got \"" + token + "\"");
}

namespace detail {
inline void require_open_unit(double v, const char* what) {
  if (!(v > 0.0) || !(v < 1.0)) {
    throw std::domain_error(std::string(what) + " must lie strictly inside (0, 1)");
  }
}
}  // namespace detail

// A full table of the four outcome probabilities, each strictly inside (0, 1).
// The four cells are free parameters (they are P(Y=1 | exposure pattern), not
// a distribution over patterns, so they need not sum to one).
struct OutcomeQuad {
  double p11, p10, p01, p00;

  OutcomeQuad(double p11_, double p10_, double p01_, double p00_)
      : p11(p11_), p10(p10_), p01(p01_), p00(p00_) {
    detail::require_open_unit(p11, "p11");
    detail::require_open_unit(p10, "p10");
    detail::require_open_unit(p01, "p01");
    detail::require_open_unit(p00, "p00");
  }
};

// The three graph coordinates (p11, p10, p01) of a point on a homogeneity
// surface, conventionally written (x, y, z).  Each lies strictly in (0, 1);
// tighter upper bounds (a ProbBound) are enforced by in_domain.
struct CellTriple {
  double x, y, z;

  CellTriple(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    detail::require_open_unit(x, "x");
    detail::require_open_unit(y, "y");
    detail::require_open_unit(z, "z");
  }
};

// Common upper bound p for all four cells: the study region is (0, p)^4.
struct ProbBound {
  double p;

  explicit ProbBound(double p_) : p(p_) {
    if (!(p > 0.0) || !(p <= 1.0)) {
      throw std::domain_error("probability bound must lie in (0, 1]");
    }
  }
};

// odds(u) = u / (1 - u), a bijection (0,1) -> (0, inf).
inline double odds(double u) {
  detail::require_open_unit(u, "odds: argument");
  return u / (1.0 - u);
}

// Inverse of odds: c / (1 + c), mapping (0, inf) -> (0, 1).
inline double inverse_odds(double c) {
  if (!(c > 0.0)) throw std::domain_error("inverse_odds: argument must be positive");
  return c / (1.0 + c);
}

// The scalar whose null value expresses homogeneity on the given scale.
inline double interaction_measure(const OutcomeQuad& q, EffectScale s) {
  switch (s) {
    case EffectScale::RiskDifference:
      return q.p11 - q.p10 - q.p01 + q.p00;
    case EffectScale::RiskRatio:
      return (q.p11 * q.p00) / (q.p10 * q.p01);
    case EffectScale::OddsRatio:
      return (odds(q.p11) * odds(q.p00)) / (odds(q.p10) * odds(q.p01));
  }
  throw std::invalid_argument("interaction_measure: unknown scale");
}

// Value of the interaction measure on the homogeneity surface.
inline double null_value(EffectScale s) {
  return s == EffectScale::RiskDifference ? 0.0 : 1.0;
}

// Solves the homogeneity constraint for the fourth cell p00 given the graph
// coordinates (x, y, z) = (p11, p10, p01).  The returned value is the unique
// real solution; it is a valid probability only when the triple lies in the
// scale's domain (see in_domain), and is deliberately returned unclamped so
// callers can observe out-of-range solutions.
inline double solve_fourth(const CellTriple& t, EffectScale s) {
  switch (s) {
    case EffectScale::RiskDifference:
      return -t.x + t.y + t.z;
    case EffectScale::RiskRatio:
      return t.y * t.z / t.x;
    case EffectScale::OddsRatio:
      return inverse_odds(odds(t.y) * odds(t.z) / odds(t.x));
  }
  throw std::invalid_argument("solve_fourth: unknown scale");
}

// Least admissible p11 on the odds scale: for given (y, z) = (p10, p01) and
// bound p, the odds-scale solution p00 lies in (0, p) exactly when
//   x > (1-p) y z / ((1-p) y z + p (1-y)(1-z)).
// Derivation: p00 < p  <=>  odds(y) odds(z) / odds(x) < odds(p)
//                      <=>  x > inverse_odds(odds(y) odds(z) / odds(p)),
// and clearing denominators gives the closed form below, which also covers
// p = 1 (bound 0: every x in (0, 1) is admissible).
inline double or_lower_bound(double y, double z, ProbBound bound) {
  const double p = bound.p;
  const double num = (1.0 - p) * y * z;
  return num / (num + p * (1.0 - y) * (1.0 - z));
}

// Whether (x, y, z) lies in the open set where the scale's surface stays
// inside (0, p)^4, i.e. the triple is in (0, p)^3 and the solved fourth cell
// lies in (0, p).  Implemented by explicit inequalities rather than solving
// and comparing, so no spurious boundary behaviour from rounding the solve.
inline bool in_domain(const CellTriple& t, ProbBound bound, EffectScale s) {
  const double p = bound.p;
  if (!(t.x < p && t.y < p && t.z < p)) return false;
  switch (s) {
    case EffectScale::RiskDifference:
      // 0 < -x + y + z < p
      return t.x < t.y + t.z && t.y + t.z - p < t.x;
    case EffectScale::RiskRatio:
      // y z / x < p  (positivity is automatic)
      return t.y * t.z < t.x * p;
    case EffectScale::OddsRatio:
      // the solved cell is in (0, 1) for every triple; only the upper bound binds
      return t.x > or_lower_bound(t.y, t.z, bound);
  }
  throw std::invalid_argument("in_domain: unknown scale");
}

// Whether the full table satisfies the scale's homogeneity constraint to
// within |measure - null| <= tol.
inline bool is_homogeneous(const OutcomeQuad& q, EffectScale s, double tol = 1e-12) {
  return std::abs(interaction_measure(q, s) - null_value(s)) <= tol;
}

}  // namespace homvol
