#pragma once

// Second realization of W(C) as the group ring W(C_k)[G], G = {<1>, <pi>}.
//
// The residue-curve Witt ring W(C_k) has no I^2 (Br(C_k) = 0), so a class is fixed by
// its rank parity and its signed discriminant in k^x/k^x2 x 2Pic; there are 4n classes.
// An element a + <pi>*b of the group ring is stored as the pair (a, b).

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wittcurve/base_groups.hpp"
#include "wittcurve/quadratic_forms.hpp"

namespace wittcurve {

/// Square class of a unit on C_k, also the rank-1 form <uL> over C_k.
struct ResidueSquareClass {
  UnitSquareClass unit;
  PicTorsionClass line;

  constexpr bool is_trivial() const noexcept { return unit.is_trivial() && line.is_trivial(); }

  friend constexpr ResidueSquareClass operator+(const ResidueSquareClass& a, const ResidueSquareClass& b) {
    return {a.unit + b.unit, a.line + b.line};
  }
  constexpr ResidueSquareClass& operator+=(const ResidueSquareClass& o) { return *this = *this + o; }
  friend constexpr auto operator<=>(const ResidueSquareClass&, const ResidueSquareClass&) = default;
};

struct ResidueWittClass {
  bool parity = false;
  ResidueSquareClass disc;  // signed discriminant over C_k

  constexpr bool is_zero() const noexcept { return !parity && disc.is_trivial(); }

  std::size_t index() const noexcept {
    return (std::size_t{disc.line.coords()} << 2) | (std::size_t{disc.unit.bit()} << 1) | std::size_t{parity};
  }
  static ResidueWittClass from_index(std::size_t i) {
    return {(i & 1u) != 0, {UnitSquareClass((i & 2u) != 0), PicTorsionClass(static_cast<std::uint32_t>(i >> 2))}};
  }

  friend constexpr auto operator<=>(const ResidueWittClass&, const ResidueWittClass&) = default;
};

/// a + <pi> * b.
struct GroupRingElement {
  ResidueWittClass a;
  ResidueWittClass b;

  constexpr bool is_zero() const noexcept { return a.is_zero() && b.is_zero(); }

  std::size_t index(const CurveConfig& cfg) const noexcept { return a.index() + 4 * cfg.n() * b.index(); }
  static GroupRingElement from_index(const CurveConfig& cfg, std::size_t i) {
    return {ResidueWittClass::from_index(i % (4 * cfg.n())), ResidueWittClass::from_index(i / (4 * cfg.n()))};
  }

  friend constexpr auto operator<=>(const GroupRingElement&, const GroupRingElement&) = default;
};

// --- W(C_k) ---------------------------------------------------------------

/// Class of the residue form <e_1, ..., e_m>.
ResidueWittClass residue_class(const CurveConfig& cfg, std::span<const ResidueSquareClass> entries);
ResidueWittClass residue_one(const CurveConfig& cfg);

/// (p + p', d + d' + p*p'*[-1]).
ResidueWittClass residue_add(const CurveConfig& cfg, const ResidueWittClass& x, const ResidueWittClass& y);
ResidueWittClass residue_neg(const CurveConfig& cfg, const ResidueWittClass& x);
/// Product computed on representatives; see residue_representative.
ResidueWittClass residue_mul(const CurveConfig& cfg, const ResidueWittClass& x, const ResidueWittClass& y);

/// Shortest diagonal representative: empty for zero, <d*(-1)> for odd classes, <1, d*(-1)>
/// for nonzero even classes.
std::vector<ResidueSquareClass> residue_representative(const CurveConfig& cfg, const ResidueWittClass& x);

/// All 4n classes in index order.
std::vector<ResidueWittClass> residue_classes(const CurveConfig& cfg);

// --- W(C_k)[G] -------------------------------------------------------------

GroupRingElement group_ring_add(const CurveConfig& cfg, const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement group_ring_neg(const CurveConfig& cfg, const GroupRingElement& x);
/// (a + pi b)(c + pi d) = (ac + bd) + pi (ad + bc).
GroupRingElement group_ring_mul(const CurveConfig& cfg, const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement group_ring_one(const CurveConfig& cfg);

/// All 16n^2 elements in index order.
std::vector<GroupRingElement> group_ring_elements(const CurveConfig& cfg);

/// Splits E by pi-exponent: unit entries give a, pi-entries with pi removed give b.
GroupRingElement to_group_ring(const DiagonalForm& e);

/// rep(a) followed by pi * rep(b); always one of the eight canonical templates or empty.
DiagonalForm from_group_ring(const CurveConfig& cfg, const GroupRingElement& x);

/// W(C_k) -> W(C): residue generators read as pi-exponent-0 generators.
DiagonalForm inclusion(const CurveConfig& cfg, const ResidueWittClass& x);

/// Ring map W(C) -> W(C_k) sending <pi> to <1>; its kernel is <1,-pi> W(C_k).
ResidueWittClass splitting_map(const DiagonalForm& e);

/// W(C) -> W(C) / W(C_k) = <pi> W(C_k) ~ W(C_k).
ResidueWittClass cokernel_projection(const DiagonalForm& e);

// --- exhaustive verification -----------------------------------------------

struct RingIsoReport {
  std::size_t elements = 0;
  std::size_t add_pairs = 0;
  std::size_t mul_pairs = 0;
  bool round_trip = true;   // to_group_ring(from_group_ring(x)) == x
  bool injective = true;    // distinct x give non-equal forms
  std::vector<std::string> mismatches;

  bool passed() const { return round_trip && injective && mismatches.empty(); }
};

/// Default Picard-rank bound for the exhaustive ring checks.
inline constexpr int kRingIsoMaxRank = 2;

/// Compares the full addition and multiplication tables of W(C_k)[G] against orthogonal
/// sum and tensor product of representative forms, decided by the form-level engine.
/// Throws BoundExceeded when picard_rank > max_rank.
RingIsoReport check_ring_iso(const CurveConfig& cfg, int max_rank = kRingIsoMaxRank);

struct SplittingReport {
  std::size_t elements = 0;
  bool ring_homomorphism = true;
  bool kills_ideal = true;         // splitting(<1,-pi> (x) E) = 0
  bool kernel_is_ideal = true;     // splitting(E) = 0 implies E ~ <1,-pi> (x) F for some residue F
  bool section = true;             // splitting o inclusion = id
  bool additive_iso = true;        // E -> (splitting(E), cokernel(E)) is an additive bijection
  std::vector<std::string> mismatches;

  bool passed() const {
    return ring_homomorphism && kills_ideal && kernel_is_ideal && section && additive_iso && mismatches.empty();
  }
};

/// Exhaustive over all 16n^2 classes. Throws BoundExceeded when picard_rank > max_rank.
SplittingReport check_splitting(const CurveConfig& cfg, int max_rank = kRingIsoMaxRank);

}  // namespace wittcurve
