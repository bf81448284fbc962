#ifndef DELTAGAMES_WELFARE_HPP
#define DELTAGAMES_WELFARE_HPP

#include <string>
#include <vector>

#include "deltagames/equilibrium.hpp"
#include "deltagames/game.hpp"

namespace deltagames {

// Behaviour is predicted with the composed payoff p; welfare is judged with
// the rational value function U.
struct WelfareRow {
  MixedProfile profile;
  std::vector<Rational> actual;      // p
  std::vector<Rational> true_value;  // U
  std::vector<Rational> distortion;  // D
  std::vector<Rational> gap;         // U - p
  // Pure profiles whose U payoffs Pareto-dominate true_value.
  std::vector<PureProfile> pareto_dominators;
  std::vector<bool> dominator_is_equilibrium;
};

struct ContinuumWelfare {
  std::size_t continuum_index = 0;
  std::vector<MultilinearExpression> actual;
  std::vector<MultilinearExpression> true_value;
  std::vector<MultilinearExpression> distortion;
};

struct WelfareReport {
  std::vector<WelfareRow> rows;  // equilibrium points, then unlisted continuum endpoints
  std::vector<ContinuumWelfare> continua;
  // Some equilibrium is Pareto-dominated under U by a non-equilibrium profile.
  bool dominated_by_non_equilibrium = false;
};

// `eqs` must come from compose(game, deltas); rows whose stored actual payoffs
// break actual = delta*U + (1-delta)*D throw kStaleEquilibria.
WelfareReport welfare_report(const StrategicGame& game, const RationalityProfile& deltas,
                             const EquilibriumSet& eqs);

}  // namespace deltagames

#endif  // DELTAGAMES_WELFARE_HPP
