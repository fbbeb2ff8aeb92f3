#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "wittcurve/base_groups.hpp"
#include "wittcurve/quadratic_forms.hpp"

namespace wittcurve::testing {

/// q in {1, 3} x r in {0, ..., max_rank}.
inline std::vector<CurveConfig> configs_up_to(int max_rank) {
  std::vector<CurveConfig> out;
  for (int q : {1, 3}) {
    for (int r = 0; r <= max_rank; ++r) out.push_back(make_config(q, r));
  }
  return out;
}

inline std::vector<Generator> all_generators(const CurveConfig& cfg) {
  std::vector<Generator> out;
  for (const auto& c : global_square_classes(cfg)) out.push_back(Generator::from_square_class(c));
  return out;
}

inline Generator random_generator(std::mt19937_64& rng, const CurveConfig& cfg) {
  std::uniform_int_distribution<std::size_t> pick(0, 4 * cfg.n() - 1);
  return Generator::from_square_class(GlobalSquareClass::from_index(pick(rng)));
}

inline DiagonalForm random_form(std::mt19937_64& rng, const CurveConfig& cfg, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<Generator> entries(len(rng));
  for (auto& g : entries) g = random_generator(rng, cfg);
  return DiagonalForm(cfg, std::move(entries));
}

/// Random element of I^2: a random even-rank form corrected so its signed discriminant vanishes.
inline DiagonalForm random_i_squared_form(std::mt19937_64& rng, const CurveConfig& cfg, std::size_t max_pairs) {
  std::uniform_int_distribution<std::size_t> pairs(1, max_pairs);
  std::vector<Generator> entries(2 * pairs(rng) - 2);
  for (auto& g : entries) g = random_generator(rng, cfg);
  const std::size_t rank = entries.size() + 2;
  GlobalSquareClass d;
  for (const auto& g : entries) d += g.square_class();
  if (signed_discriminant_sign(rank)) d.unit += minus_one_class(cfg);
  // Append <1, d> so that the total signed discriminant is d + d = 0.
  entries.push_back(Generator::one());
  entries.push_back(Generator::from_square_class(d));
  return DiagonalForm(cfg, std::move(entries));
}

/// Random Witt-class-preserving rewrite: shuffles, inserts hyperbolic pairs <a, -a>, and
/// replaces same-type pairs <a, b> by <1, ab> or <pi a', pi b'> by <pi, pi a'b'>.
inline DiagonalForm perturb(std::mt19937_64& rng, const DiagonalForm& e, int moves) {
  const CurveConfig& cfg = e.config();
  std::vector<Generator> entries(e.entries().begin(), e.entries().end());
  std::uniform_int_distribution<int> kind(0, 2);
  for (int m = 0; m < moves; ++m) {
    switch (kind(rng)) {
      case 0:
        std::shuffle(entries.begin(), entries.end(), rng);
        break;
      case 1: {
        const Generator a = random_generator(rng, cfg);
        std::uniform_int_distribution<std::size_t> at(0, entries.size());
        entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(at(rng)), a);
        entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(at(rng)), Generator::minus_one(cfg) * a);
        break;
      }
      default: {
        if (entries.size() < 2) break;
        std::shuffle(entries.begin(), entries.end(), rng);
        const Generator a = entries[0];
        const Generator b = entries[1];
        if (a.pi_exp != b.pi_exp) break;
        const Generator base = a.pi_exp ? Generator::pi() : Generator::one();
        entries[0] = base;
        entries[1] = base * a * b;
        break;
      }
    }
  }
  return DiagonalForm(cfg, std::move(entries));
}

/// Multiset enumeration of all forms with at most max_len entries.
inline std::vector<DiagonalForm> all_forms_up_to(const CurveConfig& cfg, std::size_t max_len) {
  const auto gens = all_generators(cfg);
  std::vector<DiagonalForm> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    std::vector<Generator> entries;
    for (auto i : idx) entries.push_back(gens[i]);
    out.emplace_back(cfg, std::move(entries));
    if (idx.size() == max_len) return;
    for (std::size_t i = start; i < gens.size(); ++i) {
      idx.push_back(i);
      self(self, i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace wittcurve::testing
