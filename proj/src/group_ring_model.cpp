#include "wittcurve/group_ring_model.hpp"

#include <set>
#include <string>
#include <utility>

#include "wittcurve/errors.hpp"
#include "wittcurve/form_syntax.hpp"
#include "wittcurve/witt_engine.hpp"

namespace wittcurve {

namespace {

ResidueSquareClass minus_one_residue(const CurveConfig& cfg) { return {minus_one_class(cfg), PicTorsionClass{}}; }

Generator lift(const ResidueSquareClass& c, bool pi_exp) { return {c.unit, pi_exp, c.line}; }

std::vector<Generator> lift_all(std::span<const ResidueSquareClass> entries, bool pi_exp) {
  std::vector<Generator> out;
  out.reserve(entries.size());
  for (const auto& c : entries) out.push_back(lift(c, pi_exp));
  return out;
}

void require_rank_bound(const CurveConfig& cfg, int max_rank, const char* what) {
  if (cfg.picard_rank() > max_rank) {
    throw BoundExceeded(std::string(what) + ": picard rank " + std::to_string(cfg.picard_rank()) +
                        " exceeds exhaustive bound " + std::to_string(max_rank));
  }
}

std::string describe(const CurveConfig& cfg, const GroupRingElement& x) {
  return format_form(from_group_ring(cfg, x));
}

}  // namespace

ResidueWittClass residue_class(const CurveConfig& cfg, std::span<const ResidueSquareClass> entries) {
  ResidueWittClass out;
  out.parity = entries.size() % 2 != 0;
  for (const auto& c : entries) out.disc += c;
  out.disc.unit += scaled(signed_discriminant_sign(entries.size()), minus_one_class(cfg));
  return out;
}

ResidueWittClass residue_one(const CurveConfig& cfg) {
  const ResidueSquareClass one{};
  return residue_class(cfg, std::span(&one, 1));
}

ResidueWittClass residue_add(const CurveConfig& cfg, const ResidueWittClass& x, const ResidueWittClass& y) {
  ResidueWittClass out;
  out.parity = x.parity != y.parity;
  out.disc = x.disc + y.disc + scaled(x.parity && y.parity, minus_one_residue(cfg));
  return out;
}

ResidueWittClass residue_neg(const CurveConfig& cfg, const ResidueWittClass& x) {
  return {x.parity, x.disc + scaled(x.parity, minus_one_residue(cfg))};
}

std::vector<ResidueSquareClass> residue_representative(const CurveConfig& cfg, const ResidueWittClass& x) {
  if (x.is_zero()) return {};
  // A rank-1 or rank-2 form has sign exponent 1, so its entries multiply to disc * (-1).
  const ResidueSquareClass last = x.disc + minus_one_residue(cfg);
  if (x.parity) return {last};
  return {ResidueSquareClass{}, last};
}

ResidueWittClass residue_mul(const CurveConfig& cfg, const ResidueWittClass& x, const ResidueWittClass& y) {
  const auto lhs = residue_representative(cfg, x);
  const auto rhs = residue_representative(cfg, y);
  std::vector<ResidueSquareClass> product;
  product.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs) {
    for (const auto& b : rhs) product.push_back(a + b);
  }
  return residue_class(cfg, product);
}

std::vector<ResidueWittClass> residue_classes(const CurveConfig& cfg) {
  std::vector<ResidueWittClass> out;
  out.reserve(4 * cfg.n());
  for (std::size_t i = 0; i < 4 * cfg.n(); ++i) out.push_back(ResidueWittClass::from_index(i));
  return out;
}

GroupRingElement group_ring_add(const CurveConfig& cfg, const GroupRingElement& x, const GroupRingElement& y) {
  return {residue_add(cfg, x.a, y.a), residue_add(cfg, x.b, y.b)};
}

GroupRingElement group_ring_neg(const CurveConfig& cfg, const GroupRingElement& x) {
  return {residue_neg(cfg, x.a), residue_neg(cfg, x.b)};
}

GroupRingElement group_ring_mul(const CurveConfig& cfg, const GroupRingElement& x, const GroupRingElement& y) {
  return {residue_add(cfg, residue_mul(cfg, x.a, y.a), residue_mul(cfg, x.b, y.b)),
          residue_add(cfg, residue_mul(cfg, x.a, y.b), residue_mul(cfg, x.b, y.a))};
}

GroupRingElement group_ring_one(const CurveConfig& cfg) { return {residue_one(cfg), ResidueWittClass{}}; }

std::vector<GroupRingElement> group_ring_elements(const CurveConfig& cfg) {
  const std::size_t count = 16 * cfg.n() * cfg.n();
  std::vector<GroupRingElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(GroupRingElement::from_index(cfg, i));
  return out;
}

GroupRingElement to_group_ring(const DiagonalForm& e) {
  std::vector<ResidueSquareClass> unit_part;
  std::vector<ResidueSquareClass> pi_part;
  for (const auto& g : e.entries()) {
    (g.pi_exp ? pi_part : unit_part).push_back({g.unit, g.line});
  }
  return {residue_class(e.config(), unit_part), residue_class(e.config(), pi_part)};
}

DiagonalForm from_group_ring(const CurveConfig& cfg, const GroupRingElement& x) {
  std::vector<Generator> entries = lift_all(residue_representative(cfg, x.a), false);
  const auto pi_entries = lift_all(residue_representative(cfg, x.b), true);
  entries.insert(entries.end(), pi_entries.begin(), pi_entries.end());
  return DiagonalForm(cfg, std::move(entries));
}

DiagonalForm inclusion(const CurveConfig& cfg, const ResidueWittClass& x) {
  return DiagonalForm(cfg, lift_all(residue_representative(cfg, x), false));
}

ResidueWittClass splitting_map(const DiagonalForm& e) {
  std::vector<ResidueSquareClass> reduced;
  reduced.reserve(e.rank());
  for (const auto& g : e.entries()) reduced.push_back({g.unit, g.line});
  return residue_class(e.config(), reduced);
}

ResidueWittClass cokernel_projection(const DiagonalForm& e) { return to_group_ring(e).b; }

RingIsoReport check_ring_iso(const CurveConfig& cfg, int max_rank) {
  require_rank_bound(cfg, max_rank, "check_ring_iso");
  RingIsoReport report;
  const auto elements = group_ring_elements(cfg);
  report.elements = elements.size();

  std::vector<DiagonalForm> reps;
  reps.reserve(elements.size());
  for (const auto& x : elements) {
    reps.push_back(from_group_ring(cfg, x));
    if (!(to_group_ring(reps.back()) == x)) {
      report.round_trip = false;
      report.mismatches.push_back("round trip fails for " + format_form(reps.back()));
    }
  }

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (equals(reps[i], reps[j])) {
        report.injective = false;
        report.mismatches.push_back("distinct elements share a class: " + format_form(reps[i]) + " ~ " +
                                    format_form(reps[j]));
      }
    }
  }

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto sum = group_ring_add(cfg, elements[i], elements[j]);
      ++report.add_pairs;
      if (!equals(orthogonal_sum(reps[i], reps[j]), reps[sum.index(cfg)])) {
        report.mismatches.push_back("addition: " + describe(cfg, elements[i]) + " + " + describe(cfg, elements[j]) +
                                    " != " + describe(cfg, sum));
      }
      const auto product = group_ring_mul(cfg, elements[i], elements[j]);
      ++report.mul_pairs;
      if (!equals(tensor(reps[i], reps[j]), reps[product.index(cfg)])) {
        report.mismatches.push_back("multiplication: " + describe(cfg, elements[i]) + " * " +
                                    describe(cfg, elements[j]) + " != " + describe(cfg, product));
      }
    }
  }
  return report;
}

SplittingReport check_splitting(const CurveConfig& cfg, int max_rank) {
  require_rank_bound(cfg, max_rank, "check_splitting");
  SplittingReport report;
  const auto elements = group_ring_elements(cfg);
  const auto residues = residue_classes(cfg);
  report.elements = elements.size();

  std::vector<DiagonalForm> reps;
  reps.reserve(elements.size());
  for (const auto& x : elements) reps.push_back(from_group_ring(cfg, x));

  const DiagonalForm ideal_generator(cfg, {Generator::one(), Generator::minus_one(cfg) * Generator::pi()});

  if (!(splitting_map(DiagonalForm(cfg, {Generator::one()})) == residue_one(cfg))) {
    report.ring_homomorphism = false;
    report.mismatches.push_back("splitting map does not preserve <1>");
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto si = splitting_map(reps[i]);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const auto sj = splitting_map(reps[j]);
      if (!(splitting_map(orthogonal_sum(reps[i], reps[j])) == residue_add(cfg, si, sj)) ||
          !(splitting_map(tensor(reps[i], reps[j])) == residue_mul(cfg, si, sj))) {
        report.ring_homomorphism = false;
        report.mismatches.push_back("splitting map not a ring map on " + format_form(reps[i]) + ", " +
                                    format_form(reps[j]));
      }
    }
    if (!splitting_map(tensor(ideal_generator, reps[i])).is_zero()) {
      report.kills_ideal = false;
      report.mismatches.push_back("<1,-pi> * " + format_form(reps[i]) + " not killed");
    }
  }

  std::vector<DiagonalForm> ideal;
  for (const auto& c : residues) {
    if (!(splitting_map(inclusion(cfg, c)) == c)) {
      report.section = false;
      report.mismatches.push_back("splitting o inclusion differs on " + format_form(inclusion(cfg, c)));
    }
    if (!cokernel_projection(inclusion(cfg, c)).is_zero()) {
      report.additive_iso = false;
      report.mismatches.push_back("inclusion image not in cokernel kernel: " + format_form(inclusion(cfg, c)));
    }
    ideal.push_back(tensor(ideal_generator, inclusion(cfg, c)));
  }

  std::size_t kernel_size = 0;
  std::size_t cokernel_kernel_size = 0;
  std::set<std::pair<std::size_t, std::size_t>> images;
  for (const auto& e : reps) {
    const auto split = splitting_map(e);
    const auto coker = cokernel_projection(e);
    images.emplace(split.index(), coker.index());
    if (coker.is_zero()) ++cokernel_kernel_size;
    if (!split.is_zero()) continue;
    ++kernel_size;
    bool found = false;
    for (const auto& f : ideal) {
      if (equals(e, f)) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.kernel_is_ideal = false;
      report.mismatches.push_back("kernel element outside <1,-pi>W(C_k): " + format_form(e));
    }
  }
  if (kernel_size != residues.size()) report.kernel_is_ideal = false;
  if (images.size() != elements.size() || cokernel_kernel_size != residues.size()) report.additive_iso = false;

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const auto sum = orthogonal_sum(reps[i], reps[j]);
      if (!(cokernel_projection(sum) ==
            residue_add(cfg, cokernel_projection(reps[i]), cokernel_projection(reps[j])))) {
        report.additive_iso = false;
        report.mismatches.push_back("cokernel projection not additive on " + format_form(reps[i]) + ", " +
                                    format_form(reps[j]));
      }
    }
  }
  return report;
}

}  // namespace wittcurve
