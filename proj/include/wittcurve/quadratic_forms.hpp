#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "wittcurve/base_groups.hpp"

namespace wittcurve {

/// The rank-1 form <u * pi^e * L>. There are exactly 4n of them per curve.
struct Generator {
  UnitSquareClass unit;
  bool pi_exp = false;
  PicTorsionClass line;

  static constexpr Generator one() { return {}; }
  static constexpr Generator pi() { return {UnitSquareClass{}, true, PicTorsionClass{}}; }
  static Generator minus_one(const CurveConfig& cfg) { return {minus_one_class(cfg), false, PicTorsionClass{}}; }

  static constexpr Generator from_square_class(const GlobalSquareClass& c) { return {c.unit, c.pi_exp, c.line}; }
  constexpr GlobalSquareClass square_class() const { return {unit, pi_exp, line}; }

  bool fits(const CurveConfig& cfg) const noexcept { return line.fits(cfg); }

  /// Tensor product of rank-1 forms; pi^2 and L(x)L are squares, so all coordinates add.
  friend constexpr Generator operator*(const Generator& a, const Generator& b) {
    return {a.unit + b.unit, a.pi_exp != b.pi_exp, a.line + b.line};
  }
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// Orthogonal sum <a1, ..., am> of rank-1 forms on a fixed curve. Entry order carries no meaning.
class DiagonalForm {
 public:
  explicit DiagonalForm(const CurveConfig& cfg) : cfg_(cfg) {}
  /// Throws ConfigMismatch if an entry uses a bundle label beyond the curve's Picard rank.
  DiagonalForm(const CurveConfig& cfg, std::vector<Generator> entries);
  DiagonalForm(const CurveConfig& cfg, std::initializer_list<Generator> entries)
      : DiagonalForm(cfg, std::vector<Generator>(entries)) {}

  const CurveConfig& config() const noexcept { return cfg_; }
  std::span<const Generator> entries() const noexcept { return entries_; }
  std::size_t rank() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Generator& operator[](std::size_t i) const { return entries_[i]; }

  /// Copy with entries sorted; two forms that differ only by reordering agree here.
  DiagonalForm sorted() const;

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  CurveConfig cfg_;
  std::vector<Generator> entries_;
};

DiagonalForm orthogonal_sum(const DiagonalForm& e, const DiagonalForm& f);
DiagonalForm tensor(const DiagonalForm& e, const DiagonalForm& f);
/// Multiplies every entry by <-1>.
DiagonalForm negate(const DiagonalForm& e);
/// Multiplies every entry by the rank-1 form <g>.
DiagonalForm scale(const Generator& g, const DiagonalForm& e);

/// Determinant: the sum of all entries' square classes.
GlobalSquareClass discriminant(const DiagonalForm& e);

/// Exponent of -1 in the signed discriminant of a rank-n form: n(n+1)/2 mod 2.
constexpr bool signed_discriminant_sign(std::size_t rank) { return ((rank * (rank + 1)) / 2) % 2 != 0; }

/// d(E) twisted by (-1)^{n(n+1)/2}, n = rank(E).
GlobalSquareClass signed_discriminant(const DiagonalForm& e);

/// Norm form <1, -uL, -pi, u*pi*L> of the quaternion class (uL, pi).
DiagonalForm quaternion_norm_form(const CurveConfig& cfg, UnitSquareClass u, PicTorsionClass line);

}  // namespace wittcurve
