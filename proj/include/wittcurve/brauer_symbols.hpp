#pragma once

#include "wittcurve/base_groups.hpp"
#include "wittcurve/quadratic_forms.hpp"

namespace wittcurve {

/// Quaternion symbol (a, b) in 2Br(C).
///
/// For a = <u pi^e L> and b = <v pi^f M> this is
///
///   (f*u + e*v + e*f*[-1],  f*L + e*M),
///
/// the biadditive extension of three base cases: two unit entries extend over the
/// integral model, whose Brauer group vanishes, so their symbol is trivial; (x, pi)
/// is the quaternion class of the unit part x; and (pi, pi) = (-1, pi).
///
/// Throws ConfigMismatch if either generator does not fit cfg.
BrauerClass symbol(const CurveConfig& cfg, const Generator& a, const Generator& b);

/// Hasse invariant: sum of symbol(a_i, a_j) over i < j. Trivial for rank <= 1.
BrauerClass hasse_invariant(const DiagonalForm& e);

/// Whether E lies in I^2: even rank and trivial signed discriminant.
bool in_i_squared(const DiagonalForm& e);

/// Clifford class of a form in I^2. Coincides with the Hasse invariant there, since the
/// rank-dependent corrections are multiples of (-1, -1), a unit-unit symbol.
/// Throws NotInISquared otherwise.
BrauerClass witt_invariant(const DiagonalForm& e);

}  // namespace wittcurve
