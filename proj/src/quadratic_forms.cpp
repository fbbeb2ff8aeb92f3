#include "wittcurve/quadratic_forms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wittcurve/errors.hpp"

namespace wittcurve {

namespace {

void require_same_config(const DiagonalForm& e, const DiagonalForm& f) {
  if (!(e.config() == f.config())) {
    throw ConfigMismatch("forms belong to different curve configurations");
  }
}

}  // namespace

DiagonalForm::DiagonalForm(const CurveConfig& cfg, std::vector<Generator> entries)
    : cfg_(cfg), entries_(std::move(entries)) {
  for (const auto& g : entries_) {
    if (!g.fits(cfg_)) {
      throw ConfigMismatch("generator uses a line bundle outside 2Pic of rank " +
                           std::to_string(cfg_.picard_rank()));
    }
  }
}

DiagonalForm DiagonalForm::sorted() const {
  DiagonalForm out = *this;
  std::sort(out.entries_.begin(), out.entries_.end());
  return out;
}

DiagonalForm orthogonal_sum(const DiagonalForm& e, const DiagonalForm& f) {
  require_same_config(e, f);
  std::vector<Generator> entries(e.entries().begin(), e.entries().end());
  entries.insert(entries.end(), f.entries().begin(), f.entries().end());
  return DiagonalForm(e.config(), std::move(entries));
}

DiagonalForm tensor(const DiagonalForm& e, const DiagonalForm& f) {
  require_same_config(e, f);
  std::vector<Generator> entries;
  entries.reserve(e.rank() * f.rank());
  for (const auto& a : e.entries()) {
    for (const auto& b : f.entries()) entries.push_back(a * b);
  }
  return DiagonalForm(e.config(), std::move(entries));
}

DiagonalForm scale(const Generator& g, const DiagonalForm& e) {
  std::vector<Generator> entries;
  entries.reserve(e.rank());
  for (const auto& a : e.entries()) entries.push_back(g * a);
  return DiagonalForm(e.config(), std::move(entries));
}

DiagonalForm negate(const DiagonalForm& e) { return scale(Generator::minus_one(e.config()), e); }

GlobalSquareClass discriminant(const DiagonalForm& e) {
  GlobalSquareClass d;
  for (const auto& a : e.entries()) d += a.square_class();
  return d;
}

GlobalSquareClass signed_discriminant(const DiagonalForm& e) {
  GlobalSquareClass d = discriminant(e);
  d.unit += scaled(signed_discriminant_sign(e.rank()), minus_one_class(e.config()));
  return d;
}

DiagonalForm quaternion_norm_form(const CurveConfig& cfg, UnitSquareClass u, PicTorsionClass line) {
  const UnitSquareClass minus = minus_one_class(cfg);
  return DiagonalForm(cfg, {
                               Generator::one(),
                               Generator{u + minus, false, line},
                               Generator{minus, true, PicTorsionClass{}},
                               Generator{u, true, line},
                           });
}

}  // namespace wittcurve
