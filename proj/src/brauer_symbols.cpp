#include "wittcurve/brauer_symbols.hpp"

#include "wittcurve/errors.hpp"

namespace wittcurve {

BrauerClass symbol(const CurveConfig& cfg, const Generator& a, const Generator& b) {
  if (!a.fits(cfg) || !b.fits(cfg)) {
    throw ConfigMismatch("symbol argument uses a line bundle outside the configured 2Pic");
  }
  const bool e = a.pi_exp;
  const bool f = b.pi_exp;
  BrauerClass out;
  out.unit = scaled(f, a.unit) + scaled(e, b.unit) + scaled(e && f, minus_one_class(cfg));
  out.line = scaled(f, a.line) + scaled(e, b.line);
  return out;
}

BrauerClass hasse_invariant(const DiagonalForm& e) {
  // Running prefix sum: sum_{i<j} (a_i, a_j) = sum_j (a_1 * ... * a_{j-1}, a_j) by biadditivity.
  BrauerClass total;
  Generator prefix = Generator::one();
  for (const auto& a : e.entries()) {
    total += symbol(e.config(), prefix, a);
    prefix = prefix * a;
  }
  return total;
}

bool in_i_squared(const DiagonalForm& e) { return e.rank() % 2 == 0 && signed_discriminant(e).is_trivial(); }

BrauerClass witt_invariant(const DiagonalForm& e) {
  if (!in_i_squared(e)) throw NotInISquared();
  return hasse_invariant(e);
}

}  // namespace wittcurve
