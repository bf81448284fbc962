#ifndef DELTAGAMES_EQUILIBRIUM_HPP
#define DELTAGAMES_EQUILIBRIUM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltagames/game.hpp"

namespace deltagames {

enum class EquilibriumKind { kPure, kMixed };

struct EquilibriumPoint {
  MixedProfile profile;
  std::vector<Rational> payoffs_actual;  // under the composed tensor
  std::vector<Rational> payoffs_true;    // under U; empty until attached
  EquilibriumKind kind = EquilibriumKind::kPure;
};

// Polynomial in the free players' parameters pi_j (probability of the first
// strategy), multilinear: every term is a product of distinct pi_j.
struct MultilinearExpression {
  // (sorted player indices, coefficient); the empty index list is the constant.
  std::vector<std::pair<std::vector<std::size_t>, Rational>> terms;

  Rational evaluate(const std::vector<Rational>& pis) const;
  Rational constant() const;
  // Coefficient of the single-variable term pi_player.
  Rational linear(std::size_t player) const;
  bool is_affine() const;
  // e.g. "11/4 - 9/4*pi1"; players are printed 1-based.
  std::string to_string() const;
};

struct ContinuumPlayer {
  bool free = false;
  std::vector<Rational> fixed;  // mixed strategy when not free
  Rational pi_lo = 0;           // range of pi when free
  Rational pi_hi = 1;

  bool operator==(const ContinuumPlayer&) const = default;
};

// A segment or square of equilibria in a 2x2 game: every player either plays
// a fixed mixed strategy or is free to put probability pi in [pi_lo, pi_hi]
// on its first strategy.
struct ContinuumDescriptor {
  std::vector<ContinuumPlayer> players;
  std::vector<MultilinearExpression> payoffs_actual;
  std::vector<MultilinearExpression> payoffs_true;  // empty until attached

  std::vector<std::size_t> free_players() const;
  // `pis` is indexed by player; entries for fixed players are ignored.
  MixedProfile instantiate(const std::vector<Rational>& pis) const;
  bool contains(const MixedProfile& profile) const;
  // Profiles at every combination of range endpoints of the free players.
  std::vector<MixedProfile> endpoints() const;
};

struct EquilibriumSet {
  std::vector<EquilibriumPoint> points;
  std::vector<ContinuumDescriptor> continua;
  bool degenerate = false;
  bool easy = false;  // every profile is an equilibrium

  bool empty() const { return points.empty() && continua.empty(); }
};

enum class DominanceKind { kStrict, kWeak };

struct Dominance {
  StrategyIndex strategy;
  DominanceKind kind;
  bool operator==(const Dominance&) const = default;
};

// Pure profiles where no unilateral pure deviation is strictly profitable,
// in lexicographic order of strategy indices.
std::vector<PureProfile> pure_nash(const PayoffTensor& tensor);

// Strict dominance is reported when it holds; otherwise the lowest-indexed
// weakly dominant strategy; nullopt when none exists.
std::optional<Dominance> dominant_strategy(const PayoffTensor& tensor,
                                           std::size_t player);

// Complete equilibrium set of a 2x2 game, continua included. Points are the
// extreme equilibria (every vertex of every component).
EquilibriumSet solve_2x2(const PayoffTensor& tensor);

// Extreme equilibria of a 2-player game from equal-size support pairs.
EquilibriumSet support_enumeration(const PayoffTensor& tensor);

bool verify_equilibrium(const PayoffTensor& tensor, const MixedProfile& profile,
                        const Rational& slack = 0);
bool verify_equilibrium(const PayoffTensor& tensor, const MixedProfileF& profile,
                        double slack = kFloatTolerance);

// Every player's payoff is constant in that player's own strategy.
bool detect_easy_game(const PayoffTensor& tensor);

// solve_2x2 for 2x2 games, support_enumeration for other 2-player games and
// pure_nash for three or more players.
EquilibriumSet solve(const PayoffTensor& tensor);

// compose + solve, with true payoffs under U attached.
EquilibriumSet solve_game(const StrategicGame& game, const RationalityProfile& deltas);

// Payoff of every player along a continuum, as a polynomial in the free pis.
MultilinearExpression continuum_payoff(const PayoffTensor& tensor,
                                       const ContinuumDescriptor& continuum,
                                       std::size_t player);

void attach_true_payoffs(EquilibriumSet& set, const PayoffTensor& u);

// Deterministic structural summary used for sweeps and sampling, e.g.
// "(D,D)", "(D,*)", "(swerve,straight) | (swerve+straight,swerve+straight)",
// "all-profiles" or "none".
std::string structure_label(const EquilibriumSet& set,
                            const std::vector<std::vector<std::string>>& labels);

}  // namespace deltagames

#endif  // DELTAGAMES_EQUILIBRIUM_HPP
