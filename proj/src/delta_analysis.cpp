#include "deltagames/delta_analysis.hpp"

#include <algorithm>

#include "deltagames/error.hpp"
#include "deltagames/parallel.hpp"

namespace deltagames {

std::string DeltaInterval::to_string() const {
  if (is_point()) return "{" + deltagames::to_string(lo) + "}";
  return std::string(lo_open ? "(" : "[") + deltagames::to_string(lo) + "," +
         deltagames::to_string(hi) + (hi_open ? ")" : "]");
}

bool DeltaInterval::contains(const Rational& delta) const {
  const bool above = lo_open ? delta > lo : delta >= lo;
  const bool below = hi_open ? delta < hi : delta <= hi;
  return above && below;
}

bool DeltaRegion::is_open_box() const {
  return std::none_of(box.begin(), box.end(), [](const auto& i) { return i.is_point(); });
}

bool DeltaRegion::contains(const std::vector<Rational>& deltas) const {
  if (deltas.size() != box.size()) return false;
  for (std::size_t p = 0; p < box.size(); ++p) {
    if (!box[p].contains(deltas[p])) return false;
  }
  return true;
}

namespace {

// p_i(s) - p_i(t) = delta * u_diff + (1 - delta) * d_diff for one pair of own
// strategies against one opponent profile.
struct Comparison {
  Rational u_diff;
  Rational d_diff;

  Rational at(const Rational& delta) const { return delta * u_diff + (1 - delta) * d_diff; }
};

std::vector<Comparison> comparisons(const StrategicGame& game, std::size_t player) {
  const auto& u = game.u();
  const auto& d = game.d();
  const std::size_t count = u.num_strategies(player);
  const std::size_t stride = u.stride(player);
  std::vector<Comparison> out;
  for (std::size_t base = 0; base < u.num_profiles(); ++base) {
    if ((base / stride) % count != 0) continue;
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t t = s + 1; t < count; ++t) {
        const std::size_t fs = base + s * stride;
        const std::size_t ft = base + t * stride;
        out.push_back({u.at(fs, player) - u.at(ft, player), d.at(fs, player) - d.at(ft, player)});
      }
    }
  }
  return out;
}

std::vector<int> sign_pattern(const std::vector<Comparison>& list, const Rational& delta) {
  std::vector<int> out;
  out.reserve(list.size());
  for (const auto& c : list) out.push_back(sgn(c.at(delta)));
  return out;
}

void check_player(const StrategicGame& game, std::size_t player) {
  if (player >= game.num_players()) {
    throw Error(ErrorCode::kIndex, "no such player", "player " + std::to_string(player + 1));
  }
}

// Cartesian product of per-player interval lists, player 0 most significant.
std::vector<std::vector<DeltaInterval>> product(
    const std::vector<std::vector<DeltaInterval>>& axes) {
  std::vector<std::vector<DeltaInterval>> out{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<DeltaInterval>> next;
    for (const auto& prefix : out) {
      for (const auto& interval : axis) {
        auto box = prefix;
        box.push_back(interval);
        next.push_back(std::move(box));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

CriticalDeltaSet critical_deltas(const StrategicGame& game) {
  CriticalDeltaSet result;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    std::vector<Rational> roots;
    for (const auto& c : comparisons(game, p)) {
      // delta * (u_diff - d_diff) = -d_diff
      const Rational slope = c.u_diff - c.d_diff;
      if (sgn(slope) == 0) continue;
      Rational root = -c.d_diff / slope;
      if (root > 0 && root < 1) roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    result.per_player.push_back(std::move(roots));
  }
  return result;
}

std::vector<DeltaInterval> player_intervals(const StrategicGame& game, std::size_t player) {
  check_player(game, player);
  const auto list = comparisons(game, player);
  const auto roots = critical_deltas(game).per_player[player];

  std::vector<Rational> cuts{0};
  cuts.insert(cuts.end(), roots.begin(), roots.end());
  cuts.push_back(1);

  // Alternating points and open gaps: {0}, (0,b1), {b1}, ..., {1}.
  std::vector<DeltaInterval> segments;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    segments.push_back({cuts[k], cuts[k], false, false});
    if (k + 1 < cuts.size()) segments.push_back({cuts[k], cuts[k + 1], true, true});
  }

  std::vector<DeltaInterval> merged;
  std::vector<int> merged_pattern;
  for (const auto& segment : segments) {
    auto pattern = sign_pattern(list, segment.midpoint());
    if (!merged.empty() && pattern == merged_pattern) {
      merged.back().hi = segment.hi;
      merged.back().hi_open = segment.hi_open;
    } else {
      merged.push_back(segment);
      merged_pattern = std::move(pattern);
    }
  }
  return merged;
}

RegionLabel region_label(const StrategicGame& game, const RationalityProfile& deltas) {
  const PayoffTensor tensor = compose(game, deltas);
  RegionLabel label;
  label.pure_equilibria = pure_nash(tensor);
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    label.dominant.push_back(dominant_strategy(tensor, p));
  }
  label.easy = detect_easy_game(tensor);
  return label;
}

std::vector<DeltaRegion> region_partition(const StrategicGame& game) {
  std::vector<std::vector<DeltaInterval>> axes;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    axes.push_back(player_intervals(game, p));
  }
  std::vector<DeltaRegion> regions;
  for (auto& box : product(axes)) {
    DeltaRegion region;
    for (const auto& interval : box) region.representative.push_back(interval.midpoint());
    region.box = std::move(box);
    region.label = region_label(game, RationalityProfile(region.representative));
    regions.push_back(std::move(region));
  }
  return regions;
}

std::vector<DeltaRegion> region_partition_grid(const StrategicGame& game,
                                               std::size_t resolution,
                                               std::size_t threads) {
  if (resolution < 2) {
    throw Error(ErrorCode::kUsage, "grid resolution must be at least 2");
  }
  const std::size_t cells = resolution - 1;
  std::vector<DeltaInterval> axis;
  for (std::size_t k = 0; k < cells; ++k) {
    axis.push_back({Rational(k, cells), Rational(k + 1, cells), false, k + 1 < cells});
    axis.back().lo.canonicalize();
    axis.back().hi.canonicalize();
  }
  const auto boxes = product(std::vector<std::vector<DeltaInterval>>(game.num_players(), axis));
  std::vector<DeltaRegion> regions(boxes.size());
  parallel_for(boxes.size(), threads, [&](std::size_t i) {
    DeltaRegion& region = regions[i];
    region.box = boxes[i];
    for (const auto& interval : region.box) region.representative.push_back(interval.midpoint());
    region.label = region_label(game, RationalityProfile(region.representative));
  });
  return regions;
}

std::vector<DeltaInterval> dominance_threshold(const StrategicGame& game, std::size_t player,
                                               StrategyIndex strategy) {
  check_player(game, player);
  if (strategy >= game.num_strategies(player)) {
    throw Error(ErrorCode::kIndex, "no such strategy", "player " + std::to_string(player + 1));
  }
  const auto& u = game.u();
  const auto& d = game.d();
  const std::size_t count = u.num_strategies(player);
  const std::size_t stride = u.stride(player);

  DeltaInterval feasible;  // [0,1]
  auto empty = [&] { return feasible.lo > feasible.hi ||
                            (feasible.lo == feasible.hi && (feasible.lo_open || feasible.hi_open)); };
  for (std::size_t base = 0; base < u.num_profiles() && !empty(); ++base) {
    if ((base / stride) % count != 0) continue;
    const std::size_t fs = base + strategy * stride;
    for (std::size_t t = 0; t < count && !empty(); ++t) {
      if (t == strategy) continue;
      const std::size_t ft = base + t * stride;
      // gain(delta) = d_diff + delta * (u_diff - d_diff) must be > 0.
      const Rational d_diff = d.at(fs, player) - d.at(ft, player);
      const Rational slope = (u.at(fs, player) - u.at(ft, player)) - d_diff;
      if (sgn(slope) == 0) {
        if (sgn(d_diff) <= 0) return {};
        continue;
      }
      const Rational root = -d_diff / slope;
      if (sgn(slope) > 0) {
        // delta > root
        if (root > feasible.lo || (root == feasible.lo && !feasible.lo_open)) {
          feasible.lo = root;
          feasible.lo_open = true;
        }
      } else {
        // delta < root
        if (root < feasible.hi || (root == feasible.hi && !feasible.hi_open)) {
          feasible.hi = root;
          feasible.hi_open = true;
        }
      }
    }
  }
  if (empty()) return {};
  return {feasible};
}

std::vector<SweepRow> constant_rationality_sweep(const StrategicGame& game,
                                                 const std::vector<Rational>& grid,
                                                 std::size_t threads) {
  for (const auto& value : grid) {
    if (value < 0 || value > 1) {
      throw Error(ErrorCode::kDeltaRange, "delta_bar " + to_string(value) + " outside [0,1]");
    }
  }
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    rows[i].delta_bar = grid[i];
    rows[i].equilibria =
        solve_game(game, RationalityProfile::constant(game.num_players(), grid[i]));
    rows[i].label = structure_label(rows[i].equilibria, game.labels());
  });
  return rows;
}

}  // namespace deltagames
