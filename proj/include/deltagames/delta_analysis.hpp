#ifndef DELTAGAMES_DELTA_ANALYSIS_HPP
#define DELTAGAMES_DELTA_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "deltagames/equilibrium.hpp"
#include "deltagames/game.hpp"

namespace deltagames {

// Interval of a single player's rationality index inside [0,1]. A point is
// lo == hi with both ends closed.
struct DeltaInterval {
  Rational lo = 0;
  Rational hi = 1;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(const Rational& delta) const;
  bool is_point() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  // "[0,1/3)", "{1/2}", "(1/2,1]"
  std::string to_string() const;

  bool operator==(const DeltaInterval&) const = default;
};

// Per player: sorted breakpoints in (0,1) where some comparison between two
// of the player's own strategies changes sign.
struct CriticalDeltaSet {
  std::vector<std::vector<Rational>> per_player;
};

// Qualitative structure of the composed game, constant on a region.
struct RegionLabel {
  std::vector<PureProfile> pure_equilibria;
  std::vector<std::optional<Dominance>> dominant;  // per player
  bool easy = false;

  bool operator==(const RegionLabel&) const = default;
};

struct DeltaRegion {
  std::vector<DeltaInterval> box;  // one interval per player
  RegionLabel label;
  std::vector<Rational> representative;

  // True when no side of the box is a single point.
  bool is_open_box() const;
  bool contains(const std::vector<Rational>& deltas) const;
};

CriticalDeltaSet critical_deltas(const StrategicGame& game);

// Partition of [0,1] for one player into maximal intervals on which the sign
// of every own-strategy comparison is constant. Interior breakpoints come out
// as single points.
std::vector<DeltaInterval> player_intervals(const StrategicGame& game, std::size_t player);

RegionLabel region_label(const StrategicGame& game, const RationalityProfile& deltas);

// Exact partition of [0,1]^n: the product of player_intervals for all players.
std::vector<DeltaRegion> region_partition(const StrategicGame& game);

// `resolution` grid points per axis (>= 2) delimit resolution-1 boxes per
// axis; every box is labelled at its centre.
inline constexpr std::size_t kDefaultGridResolution = 21;
std::vector<DeltaRegion> region_partition_grid(const StrategicGame& game,
                                               std::size_t resolution,
                                               std::size_t threads = 0);

// Values of delta_i in [0,1] at which `strategy` strictly dominates every
// other strategy of `player`. Empty or a single interval.
std::vector<DeltaInterval> dominance_threshold(const StrategicGame& game, std::size_t player,
                                               StrategyIndex strategy);

struct SweepRow {
  Rational delta_bar;
  EquilibriumSet equilibria;
  std::string label;
};

// Constant-rationality game at each delta_bar, rows in input order.
std::vector<SweepRow> constant_rationality_sweep(const StrategicGame& game,
                                                 const std::vector<Rational>& grid,
                                                 std::size_t threads = 0);

}  // namespace deltagames

#endif  // DELTAGAMES_DELTA_ANALYSIS_HPP
