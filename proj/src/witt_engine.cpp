#include "wittcurve/witt_engine.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "wittcurve/errors.hpp"
#include "wittcurve/form_syntax.hpp"

namespace wittcurve {

namespace {

Generator unit_generator(const ResidueSquareClass& c) { return {c.unit, false, c.line}; }
Generator pi_generator(const ResidueSquareClass& c) { return {c.unit, true, c.line}; }

std::vector<ResidueSquareClass> residue_square_classes(const CurveConfig& cfg) {
  std::vector<ResidueSquareClass> out;
  for (std::size_t i = 0; i < 2 * cfg.n(); ++i) {
    out.push_back({UnitSquareClass((i & 1u) != 0), PicTorsionClass(static_cast<std::uint32_t>(i >> 1))});
  }
  return out;
}

/// Fixed form with the given rank parity and signed discriminant.
DiagonalForm reference_form(const CurveConfig& cfg, bool parity, const GlobalSquareClass& signed_disc) {
  // Ranks 1 and 2 both carry sign exponent 1.
  GlobalSquareClass last = signed_disc;
  last.unit += minus_one_class(cfg);
  if (parity) return DiagonalForm(cfg, {Generator::from_square_class(last)});
  if (signed_disc.is_trivial()) return DiagonalForm(cfg);
  return DiagonalForm(cfg, {Generator::one(), Generator::from_square_class(last)});
}

enum class Part { kZero, kOdd, kEven };

Part classify(const ResidueWittClass& x) {
  if (x.is_zero()) return Part::kZero;
  return x.parity ? Part::kOdd : Part::kEven;
}

Shape shape_of(const GroupRingElement& x) {
  const Part a = classify(x.a);
  const Part b = classify(x.b);
  switch (a) {
    case Part::kZero:
      return b == Part::kZero ? Shape::kZero : b == Part::kOdd ? Shape::kPi : Shape::kPiPi;
    case Part::kOdd:
      return b == Part::kZero ? Shape::kUnit : b == Part::kOdd ? Shape::kUnitPi : Shape::kUnitPiPi;
    case Part::kEven:
      return b == Part::kZero ? Shape::kOneUnit : b == Part::kOdd ? Shape::kOneUnitPi : Shape::kOneUnitPiPi;
  }
  return Shape::kZero;
}

std::size_t shape_slot(Shape shape) { return static_cast<std::size_t>(shape); }

void check_equal(RelationReport& report, const DiagonalForm& lhs, const DiagonalForm& rhs) {
  ++report.cases;
  if (!equals(lhs, rhs)) report.failures.push_back(format_form(lhs) + " !~ " + format_form(rhs));
}

}  // namespace

InvariantProfile invariant_profile(const DiagonalForm& e) {
  InvariantProfile p;
  p.rank_parity = e.rank() % 2 != 0;
  p.signed_disc = signed_discriminant(e);
  if (!p.rank_parity && p.signed_disc.is_trivial()) p.witt_inv = hasse_invariant(e);
  return p;
}

bool is_trivial(const DiagonalForm& e) {
  const InvariantProfile p = invariant_profile(e);
  return !p.rank_parity && p.signed_disc.is_trivial() && p.witt_inv->is_trivial();
}

bool equals(const DiagonalForm& e, const DiagonalForm& f) { return is_trivial(orthogonal_sum(e, negate(f))); }

WittClassKey class_key(const DiagonalForm& e) {
  WittClassKey key;
  key.rank_parity = e.rank() % 2 != 0;
  key.signed_disc = signed_discriminant(e);
  const DiagonalForm reference = reference_form(e.config(), key.rank_parity, key.signed_disc);
  key.offset_witt = witt_invariant(orthogonal_sum(e, negate(reference)));
  return key;
}

std::string_view shape_label(Shape shape) {
  switch (shape) {
    case Shape::kUnit: return "<sL>";
    case Shape::kPi: return "<tpiM>";
    case Shape::kOneUnit: return "<1,sL>";
    case Shape::kUnitPi: return "<sL,tpiM>";
    case Shape::kPiPi: return "<pi,tpiM>";
    case Shape::kOneUnitPi: return "<1,sL,tpiM>";
    case Shape::kUnitPiPi: return "<sL,pi,tpiM>";
    case Shape::kOneUnitPiPi: return "<1,sL,pi,tpiM>";
    case Shape::kZero: return "ZERO";
  }
  return "?";
}

CanonicalShape canonical_form(const DiagonalForm& e) {
  const GroupRingElement x = to_group_ring(e);
  return {shape_of(x), from_group_ring(e.config(), x)};
}

DiagonalForm template_instance(const CurveConfig& cfg, Shape shape, const ResidueSquareClass& x,
                               const ResidueSquareClass& y) {
  const Generator one = Generator::one();
  const Generator pi = Generator::pi();
  const Generator sl = unit_generator(x);
  const Generator tpim = pi_generator(y);
  switch (shape) {
    case Shape::kUnit: return DiagonalForm(cfg, {sl});
    case Shape::kPi: return DiagonalForm(cfg, {tpim});
    case Shape::kOneUnit: return DiagonalForm(cfg, {one, sl});
    case Shape::kUnitPi: return DiagonalForm(cfg, {sl, tpim});
    case Shape::kPiPi: return DiagonalForm(cfg, {pi, tpim});
    case Shape::kOneUnitPi: return DiagonalForm(cfg, {one, sl, tpim});
    case Shape::kUnitPiPi: return DiagonalForm(cfg, {sl, pi, tpim});
    case Shape::kOneUnitPiPi: return DiagonalForm(cfg, {one, sl, pi, tpim});
    case Shape::kZero: return DiagonalForm(cfg);
  }
  return DiagonalForm(cfg);
}

std::array<std::size_t, 8> expected_shape_counts(std::size_t n) {
  const std::size_t m = 2 * n;
  return {m, m, m - 1, m * m, m - 1, m * (m - 1), m * (m - 1), (m - 1) * (m - 1)};
}

bool CensusReport::passed() const {
  for (const auto& s : shapes) {
    if (s.count != s.expected) return false;
  }
  return total == 16 * n * n && nontrivial + 1 == total && pairwise_distinct && canonical_fixed_points;
}

CensusReport enumerate_classes(const CurveConfig& cfg, int max_rank) {
  if (cfg.picard_rank() > max_rank) {
    throw BoundExceeded("enumerate_classes: picard rank " + std::to_string(cfg.picard_rank()) +
                        " exceeds bound " + std::to_string(max_rank));
  }
  CensusReport report;
  report.q_mod_4 = cfg.q_mod_4();
  report.picard_rank = cfg.picard_rank();
  report.n = cfg.n();
  const auto expected = expected_shape_counts(cfg.n());
  for (std::size_t i = 0; i < kNontrivialShapes.size(); ++i) {
    report.shapes[i] = {kNontrivialShapes[i], 0, expected[i]};
  }

  const auto classes = residue_square_classes(cfg);
  const ResidueSquareClass unused{};
  const DiagonalForm zero(cfg);
  std::set<WittClassKey> seen{class_key(zero)};

  auto record = [&](Shape shape, const DiagonalForm& instance, std::initializer_list<DiagonalForm> blocks) {
    for (const auto& block : blocks) {
      if (is_trivial(block)) return;
    }
    if (is_trivial(instance)) return;
    ++report.shapes[shape_slot(shape)].count;
    ++report.nontrivial;
    if (!seen.insert(class_key(instance)).second) report.pairwise_distinct = false;
    const CanonicalShape canonical = canonical_form(instance);
    if (canonical.shape != shape || !(canonical.payload == instance)) report.canonical_fixed_points = false;
  };

  const Generator pi = Generator::pi();
  for (const auto& x : classes) {
    const DiagonalForm unit_block(cfg, {Generator::one(), unit_generator(x)});
    record(Shape::kUnit, template_instance(cfg, Shape::kUnit, x, unused), {});
    record(Shape::kPi, template_instance(cfg, Shape::kPi, unused, x), {});
    record(Shape::kOneUnit, template_instance(cfg, Shape::kOneUnit, x, unused), {unit_block});
    record(Shape::kPiPi, template_instance(cfg, Shape::kPiPi, unused, x),
           {DiagonalForm(cfg, {pi, pi_generator(x)})});
    for (const auto& y : classes) {
      const DiagonalForm pi_block(cfg, {pi, pi_generator(y)});
      record(Shape::kUnitPi, template_instance(cfg, Shape::kUnitPi, x, y), {});
      record(Shape::kOneUnitPi, template_instance(cfg, Shape::kOneUnitPi, x, y), {unit_block});
      record(Shape::kUnitPiPi, template_instance(cfg, Shape::kUnitPiPi, x, y), {pi_block});
      record(Shape::kOneUnitPiPi, template_instance(cfg, Shape::kOneUnitPiPi, x, y), {unit_block, pi_block});
    }
  }
  report.total = report.nontrivial + 1;
  if (seen.size() != report.total) report.pairwise_distinct = false;
  return report;
}

QuaternionReport verify_quaternion_distinctness(const CurveConfig& cfg) {
  QuaternionReport report;
  const auto classes = brauer_classes(cfg);
  std::vector<DiagonalForm> forms;
  for (const auto& b : classes) {
    forms.push_back(quaternion_norm_form(cfg, b.unit, b.line));
    const DiagonalForm& f = forms.back();
    if (is_trivial(f)) {
      ++report.trivial;
      if (!b.is_trivial()) report.trivial_is_identity = false;
    }
    if (!in_i_squared(f) || !(witt_invariant(f) == b)) {
      report.failures.push_back("norm form " + format_form(f) + " does not carry " + format_brauer_class(b));
    }
  }
  report.forms = forms.size();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      if (equals(forms[i], forms[j])) {
        report.pairwise_distinct = false;
        report.failures.push_back(format_form(forms[i]) + " ~ " + format_form(forms[j]));
      }
    }
  }
  return report;
}

bool RankOneReport::passed() const {
  return closed && isomorphism && exact_sequence && exponent == 2 && order == witness.size() && failures.empty();
}

RankOneReport rank_one_group_structure(const CurveConfig& cfg) {
  RankOneReport report;
  std::vector<Generator> gens;
  for (const auto& c : global_square_classes(cfg)) gens.push_back(Generator::from_square_class(c));

  const DiagonalForm one(cfg, {Generator::one()});
  // Read the witness off the Witt class: a rank-1 form <g> has signed discriminant g * (-1).
  auto witness_of = [&](const DiagonalForm& f) {
    GlobalSquareClass w = signed_discriminant(f);
    w.unit += minus_one_class(cfg);
    return w;
  };

  std::set<WittClassKey> classes;
  std::set<GlobalSquareClass> images;
  std::size_t kernel = 0;
  for (const auto& g : gens) {
    const DiagonalForm f(cfg, {g});
    classes.insert(class_key(f));
    const GlobalSquareClass w = witness_of(f);
    images.insert(w);
    report.witness.emplace_back(g, w);
    if (w.line.is_trivial()) {
      ++kernel;
      if (!g.line.is_trivial()) report.exact_sequence = false;
    }
    std::size_t order = 1;
    DiagonalForm power = f;
    while (!equals(power, one) && order <= gens.size()) {
      power = tensor(power, f);
      ++order;
    }
    report.exponent = std::max(report.exponent, order);
  }
  report.order = classes.size();
  if (images.size() != gens.size() || report.order != gens.size()) report.isomorphism = false;
  if (kernel != 4) report.exact_sequence = false;

  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const DiagonalForm product = tensor(DiagonalForm(cfg, {a}), DiagonalForm(cfg, {b}));
      if (product.rank() != 1 || !classes.contains(class_key(product))) {
        report.closed = false;
        report.failures.push_back("product leaves rank-1 classes: " + format_generator(a) + " * " +
                                  format_generator(b));
      }
      if (!(witness_of(product) == witness_of(DiagonalForm(cfg, {a})) + witness_of(DiagonalForm(cfg, {b})))) {
        report.isomorphism = false;
        report.failures.push_back("witness not multiplicative on " + format_generator(a) + ", " +
                                  format_generator(b));
      }
    }
  }
  return report;
}

RelationReport verify_residue_relations(const CurveConfig& cfg) {
  RelationReport report;
  const Generator pi = Generator::pi();
  const auto classes = residue_square_classes(cfg);
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      const ResidueSquareClass xy = x + y;
      check_equal(report, DiagonalForm(cfg, {unit_generator(x), unit_generator(y)}),
                  DiagonalForm(cfg, {Generator::one(), unit_generator(xy)}));
      check_equal(report, DiagonalForm(cfg, {pi_generator(x), pi_generator(y)}),
                  DiagonalForm(cfg, {pi, pi_generator(xy)}));
    }
  }
  return report;
}

RelationReport verify_reduction_identities(const CurveConfig& cfg) {
  RelationReport report;
  const Generator one = Generator::one();
  const Generator minus = Generator::minus_one(cfg);
  const Generator pi = Generator::pi();
  const auto classes = residue_square_classes(cfg);
  for (const auto& sl : classes) {
    const Generator g_sl = unit_generator(sl);
    const Generator minus_sl = minus * g_sl;
    const Generator minus_pi_sl = minus * pi * g_sl;
    const DiagonalForm norm_form = quaternion_norm_form(cfg, sl.unit, sl.line);
    // Norm form written with the factors in the order used during the reduction.
    const DiagonalForm reordered_norm(cfg, {one, minus_sl, minus_pi_sl, pi});
    check_equal(report, reordered_norm, norm_form);

    for (const auto& tm : classes) {
      for (const Generator delta : {unit_generator(tm), pi_generator(tm)}) {
        const DiagonalForm lhs =
            orthogonal_sum(orthogonal_sum(DiagonalForm(cfg, {one}), DiagonalForm(cfg, {minus, delta})), reordered_norm);
        const DiagonalForm middle(cfg, {one, minus_sl, delta, pi, minus_pi_sl});
        check_equal(report, lhs, middle);
        if (!delta.pi_exp) {
          check_equal(report, middle, DiagonalForm(cfg, {g_sl * delta, pi, minus_pi_sl}));
        } else {
          check_equal(report, middle, DiagonalForm(cfg, {one, minus_sl, g_sl * delta}));
        }
      }
    }
  }
  return report;
}

}  // namespace wittcurve
