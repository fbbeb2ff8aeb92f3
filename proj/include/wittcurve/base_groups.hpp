#pragma once

// Finite elementary abelian 2-groups attached to a curve C with good reduction
// over a non-dyadic local field K with residue field k:
//
//   k^x/k^x2            unit square classes {1, s}
//   2Pic(C)             2-torsion line bundles, F_2^r with basis L1..Lr
//   global classes      {1, s, pi, s*pi} x 2Pic(C), order 4n
//   2Br(C)              quaternion classes (sL, pi), order 2n
//
// All groups are written additively; every element is its own inverse.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wittcurve {

/// Largest supported Picard rank (line-bundle coordinates are packed in 32 bits).
inline constexpr int kMaxPicardRank = 30;

class CurveConfig {
 public:
  /// Residue field cardinality modulo 4; always 1 or 3.
  int q_mod_4() const noexcept { return q_mod_4_; }
  /// r, the F_2-dimension of 2Pic(C).
  int picard_rank() const noexcept { return picard_rank_; }
  /// n = |2Pic(C)| = 2^r.
  std::size_t n() const noexcept { return std::size_t{1} << picard_rank_; }
  /// True when -1 is a square in the residue field.
  bool minus_one_is_square() const noexcept { return q_mod_4_ == 1; }

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;

 private:
  friend CurveConfig make_config(int q_mod_4, int picard_rank);
  CurveConfig(int q_mod_4, int picard_rank) : q_mod_4_(q_mod_4), picard_rank_(picard_rank) {}

  int q_mod_4_;
  int picard_rank_;
};

/// Throws ConfigError for q_mod_4 outside {1, 3} or a rank outside [0, kMaxPicardRank].
CurveConfig make_config(int q_mod_4, int picard_rank);

class UnitSquareClass {
 public:
  constexpr UnitSquareClass() = default;
  constexpr explicit UnitSquareClass(bool nonsquare) : nonsquare_(nonsquare) {}

  static constexpr UnitSquareClass square() { return UnitSquareClass(false); }
  static constexpr UnitSquareClass nonsquare() { return UnitSquareClass(true); }

  constexpr bool is_trivial() const noexcept { return !nonsquare_; }
  constexpr bool bit() const noexcept { return nonsquare_; }

  friend constexpr UnitSquareClass operator+(UnitSquareClass a, UnitSquareClass b) {
    return UnitSquareClass(a.nonsquare_ != b.nonsquare_);
  }
  constexpr UnitSquareClass& operator+=(UnitSquareClass o) { return *this = *this + o; }
  friend constexpr auto operator<=>(UnitSquareClass, UnitSquareClass) = default;

 private:
  bool nonsquare_ = false;
};

/// Square class of -1 in the residue field: trivial iff q = 1 mod 4.
UnitSquareClass minus_one_class(const CurveConfig& cfg);

class PicTorsionClass {
 public:
  constexpr PicTorsionClass() = default;
  constexpr explicit PicTorsionClass(std::uint32_t coords) : coords_(coords) {}

  /// Basis bundle L_k, 1 <= k <= kMaxPicardRank.
  static constexpr PicTorsionClass basis(int k) { return PicTorsionClass(std::uint32_t{1} << (k - 1)); }

  constexpr std::uint32_t coords() const noexcept { return coords_; }
  constexpr bool is_trivial() const noexcept { return coords_ == 0; }
  constexpr bool coordinate(int k) const noexcept { return (coords_ >> (k - 1)) & 1u; }
  /// Whether every set coordinate is below the configured rank.
  bool fits(const CurveConfig& cfg) const noexcept {
    return (static_cast<std::uint64_t>(coords_) >> cfg.picard_rank()) == 0;
  }

  friend constexpr PicTorsionClass operator+(PicTorsionClass a, PicTorsionClass b) {
    return PicTorsionClass(a.coords_ ^ b.coords_);
  }
  constexpr PicTorsionClass& operator+=(PicTorsionClass o) { return *this = *this + o; }
  friend constexpr auto operator<=>(PicTorsionClass, PicTorsionClass) = default;

 private:
  std::uint32_t coords_ = 0;
};

/// Square classes of the global units; the values taken by (signed) discriminants.
struct GlobalSquareClass {
  UnitSquareClass unit;
  bool pi_exp = false;
  PicTorsionClass line;

  constexpr bool is_trivial() const noexcept { return unit.is_trivial() && !pi_exp && line.is_trivial(); }
  bool fits(const CurveConfig& cfg) const noexcept { return line.fits(cfg); }

  /// Position in the enumeration order: unit bit, then pi bit, then line coordinates.
  std::size_t index() const noexcept {
    return (std::size_t{line.coords()} << 2) | (std::size_t{pi_exp} << 1) | std::size_t{unit.bit()};
  }
  static GlobalSquareClass from_index(std::size_t i) {
    return {UnitSquareClass((i & 1u) != 0), (i & 2u) != 0, PicTorsionClass(static_cast<std::uint32_t>(i >> 2))};
  }

  friend constexpr GlobalSquareClass operator+(const GlobalSquareClass& a, const GlobalSquareClass& b) {
    return {a.unit + b.unit, a.pi_exp != b.pi_exp, a.line + b.line};
  }
  constexpr GlobalSquareClass& operator+=(const GlobalSquareClass& o) { return *this = *this + o; }
  friend constexpr auto operator<=>(const GlobalSquareClass&, const GlobalSquareClass&) = default;
};

/// Element of 2Br(C): the quaternion class (sL, pi).
struct BrauerClass {
  UnitSquareClass unit;
  PicTorsionClass line;

  constexpr bool is_trivial() const noexcept { return unit.is_trivial() && line.is_trivial(); }
  bool fits(const CurveConfig& cfg) const noexcept { return line.fits(cfg); }

  std::size_t index() const noexcept { return (std::size_t{line.coords()} << 1) | std::size_t{unit.bit()}; }
  static BrauerClass from_index(std::size_t i) {
    return {UnitSquareClass((i & 1u) != 0), PicTorsionClass(static_cast<std::uint32_t>(i >> 1))};
  }

  friend constexpr BrauerClass operator+(const BrauerClass& a, const BrauerClass& b) {
    return {a.unit + b.unit, a.line + b.line};
  }
  constexpr BrauerClass& operator+=(const BrauerClass& o) { return *this = *this + o; }
  friend constexpr auto operator<=>(const BrauerClass&, const BrauerClass&) = default;
};

/// Multiplication by a scalar in F_2.
template <typename G>
constexpr G scaled(bool factor, const G& g) {
  return factor ? g : G{};
}

struct GroupEnumeration {
  std::vector<PicTorsionClass> pic;            // n elements
  std::vector<GlobalSquareClass> global;       // 4n elements
  std::vector<BrauerClass> brauer;             // 2n elements
};

/// Lists every element of 2Pic(C), the global square classes and 2Br(C) in index order.
GroupEnumeration enumerate_groups(const CurveConfig& cfg);

std::vector<PicTorsionClass> pic_classes(const CurveConfig& cfg);
std::vector<GlobalSquareClass> global_square_classes(const CurveConfig& cfg);
std::vector<BrauerClass> brauer_classes(const CurveConfig& cfg);

}  // namespace wittcurve
