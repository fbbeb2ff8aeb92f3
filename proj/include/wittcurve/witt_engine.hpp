#pragma once

// Witt-class decisions on W(C).
//
// The filtration W > I > I^2 > I^3 has quotients detected by rank parity, signed
// discriminant and Witt invariant, and I^3 vanishes for curves with good reduction over a
// non-dyadic local field. A form is therefore Witt-trivial exactly when all three invariants
// vanish, and two forms are equal when their difference is trivial.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wittcurve/base_groups.hpp"
#include "wittcurve/brauer_symbols.hpp"
#include "wittcurve/group_ring_model.hpp"
#include "wittcurve/quadratic_forms.hpp"

namespace wittcurve {

struct InvariantProfile {
  bool rank_parity = false;
  GlobalSquareClass signed_disc;
  std::optional<BrauerClass> witt_inv;  // present iff the form lies in I^2

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const DiagonalForm& e);

bool is_trivial(const DiagonalForm& e);

/// E ~ F iff E + (-F) is trivial. Throws ConfigMismatch for forms on different curves.
bool equals(const DiagonalForm& e, const DiagonalForm& f);

/// Complete Witt-class invariant computed from forms alone: rank parity, signed
/// discriminant, and the Witt invariant of E minus a fixed representative with the same
/// parity and signed discriminant. equals(E, F) iff class_key(E) == class_key(F).
struct WittClassKey {
  bool rank_parity = false;
  GlobalSquareClass signed_disc;
  BrauerClass offset_witt;

  friend auto operator<=>(const WittClassKey&, const WittClassKey&) = default;
};

WittClassKey class_key(const DiagonalForm& e);

// --- canonical representatives ---------------------------------------------

/// The eight nontrivial templates, in listing order, plus the zero class.
enum class Shape {
  kUnit,          // <sL>
  kPi,            // <t pi M>
  kOneUnit,       // <1, sL>
  kUnitPi,        // <sL, t pi M>
  kPiPi,          // <pi, t pi M>
  kOneUnitPi,     // <1, sL, t pi M>
  kUnitPiPi,      // <sL, pi, t pi M>
  kOneUnitPiPi,   // <1, sL, pi, t pi M>
  kZero,
};

inline constexpr std::array<Shape, 8> kNontrivialShapes = {
    Shape::kUnit,  Shape::kPi,        Shape::kOneUnit,   Shape::kUnitPi,
    Shape::kPiPi,  Shape::kOneUnitPi, Shape::kUnitPiPi,  Shape::kOneUnitPiPi,
};

/// ASCII template name, e.g. "<1,sL,pi,tpiM>", or "ZERO".
std::string_view shape_label(Shape shape);

struct CanonicalShape {
  Shape shape;
  DiagonalForm payload;

  friend bool operator==(const CanonicalShape&, const CanonicalShape&) = default;
};

/// Unique representative of E's Witt class. Odd residue parts become a single entry, even
/// nonzero ones a pair starting with <1>, so each class has exactly one payload.
CanonicalShape canonical_form(const DiagonalForm& e);

/// The template filled with x = sL and y = tM; shapes that lack one of them ignore it.
DiagonalForm template_instance(const CurveConfig& cfg, Shape shape, const ResidueSquareClass& x,
                               const ResidueSquareClass& y);

// --- census ------------------------------------------------------------------

inline constexpr int kCensusMaxRank = 4;

struct ShapeCount {
  Shape shape;
  std::size_t count = 0;
  std::size_t expected = 0;
};

struct CensusReport {
  int q_mod_4 = 3;
  int picard_rank = 0;
  std::size_t n = 1;
  std::array<ShapeCount, 8> shapes{};
  std::size_t nontrivial = 0;
  std::size_t total = 0;        // nontrivial + the zero class
  bool pairwise_distinct = true;
  bool canonical_fixed_points = true;  // every counted instance is its own canonical form

  bool passed() const;
};

/// Per-shape class counts predicted by the cardinality argument:
/// (2n, 2n, 2n-1, 4n^2, 2n-1, 2n(2n-1), 2n(2n-1), (2n-1)^2).
std::array<std::size_t, 8> expected_shape_counts(std::size_t n);

/// Enumerates every template instance and keeps those that are not trivially reducible:
/// the instance and each of its even blocks <1,sL> / <pi,t pi M> must be Witt-nontrivial.
/// Throws BoundExceeded when picard_rank > max_rank.
CensusReport enumerate_classes(const CurveConfig& cfg, int max_rank = kCensusMaxRank);

// --- structural verifications ------------------------------------------------

struct QuaternionReport {
  std::size_t forms = 0;
  std::size_t trivial = 0;
  bool pairwise_distinct = true;
  bool trivial_is_identity = true;  // the trivial one is (1, pi)
  std::vector<std::string> failures;

  bool passed() const { return pairwise_distinct && trivial == 1 && trivial_is_identity && failures.empty(); }
};

/// Checks the 2n norm forms <1, -sL, -pi, s pi L> against each other.
QuaternionReport verify_quaternion_distinctness(const CurveConfig& cfg);

struct RankOneReport {
  std::size_t order = 0;
  std::size_t exponent = 0;
  bool closed = true;
  bool isomorphism = true;  // witness map is a bijective homomorphism
  bool exact_sequence = true;  // kernel of the projection to 2Pic is {1, s, pi, s pi}
  /// Witness: rank-1 class -> (square class of K, 2-torsion bundle).
  std::vector<std::pair<Generator, GlobalSquareClass>> witness;
  std::vector<std::string> failures;

  bool passed() const;
};

/// Shows the rank-1 classes under tensor product form Q(K) x 2Pic(C).
RankOneReport rank_one_group_structure(const CurveConfig& cfg);

struct RelationReport {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// <uL, vM> ~ <1, uvLM> and <pi uL, pi vM> ~ <pi, pi uvLM> for all u, v, L, M.
RelationReport verify_residue_relations(const CurveConfig& cfg);

/// The rewriting identities used to reach the canonical templates, for all s, L, t, M:
///   <1> + <-1, d> + <1,-sL,-pi,s pi L> ~ <1, -sL, d, pi, -pi sL>
///   <1, -sL, tM, pi, -pi sL>     ~ <stLM, pi, -s pi L>
///   <1, -sL, t pi M, pi, -pi sL> ~ <1, -sL, st pi LM>
RelationReport verify_reduction_identities(const CurveConfig& cfg);

}  // namespace wittcurve
