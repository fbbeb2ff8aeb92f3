#include "wittcurve/base_groups.hpp"

#include <string>

#include "wittcurve/errors.hpp"

namespace wittcurve {

CurveConfig make_config(int q_mod_4, int picard_rank) {
  if (q_mod_4 != 1 && q_mod_4 != 3) {
    throw ConfigError("dyadic or invalid residue class: q mod 4 = " + std::to_string(q_mod_4));
  }
  if (picard_rank < 0) {
    throw ConfigError("negative picard rank: " + std::to_string(picard_rank));
  }
  if (picard_rank > kMaxPicardRank) {
    throw ConfigError("picard rank " + std::to_string(picard_rank) + " exceeds supported maximum " +
                      std::to_string(kMaxPicardRank));
  }
  return CurveConfig(q_mod_4, picard_rank);
}

UnitSquareClass minus_one_class(const CurveConfig& cfg) {
  // Euler's criterion: -1 is a square in F_q iff q = 1 mod 4.
  return UnitSquareClass(!cfg.minus_one_is_square());
}

std::vector<PicTorsionClass> pic_classes(const CurveConfig& cfg) {
  std::vector<PicTorsionClass> out;
  out.reserve(cfg.n());
  for (std::size_t i = 0; i < cfg.n(); ++i) out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<GlobalSquareClass> global_square_classes(const CurveConfig& cfg) {
  std::vector<GlobalSquareClass> out;
  out.reserve(4 * cfg.n());
  for (std::size_t i = 0; i < 4 * cfg.n(); ++i) out.push_back(GlobalSquareClass::from_index(i));
  return out;
}

std::vector<BrauerClass> brauer_classes(const CurveConfig& cfg) {
  std::vector<BrauerClass> out;
  out.reserve(2 * cfg.n());
  for (std::size_t i = 0; i < 2 * cfg.n(); ++i) out.push_back(BrauerClass::from_index(i));
  return out;
}

GroupEnumeration enumerate_groups(const CurveConfig& cfg) {
  return {pic_classes(cfg), global_square_classes(cfg), brauer_classes(cfg)};
}

}  // namespace wittcurve
