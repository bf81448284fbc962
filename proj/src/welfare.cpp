#include "deltagames/welfare.hpp"

#include <algorithm>

#include "deltagames/error.hpp"

namespace deltagames {

namespace {

bool pareto_dominates(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  bool strictly = false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] < b[p]) return false;
    if (a[p] > b[p]) strictly = true;
  }
  return strictly;
}

bool is_listed_equilibrium(const EquilibriumSet& eqs, const MixedProfile& profile) {
  if (eqs.easy) return true;
  for (const auto& point : eqs.points) {
    if (point.profile == profile) return true;
  }
  return std::any_of(eqs.continua.begin(), eqs.continua.end(),
                     [&](const auto& c) { return c.contains(profile); });
}

WelfareRow make_row(const StrategicGame& game, const RationalityProfile& deltas,
                    const MixedProfile& profile, const std::vector<Rational>& stored_actual,
                    const EquilibriumSet& eqs) {
  WelfareRow row{profile, {}, {}, {}, {}, {}, {}};
  row.true_value = expected_payoff(game.u(), profile);
  row.distortion = expected_payoff(game.d(), profile);
  const std::size_t n = game.num_players();
  for (std::size_t p = 0; p < n; ++p) {
    const Rational composed = deltas[p] * row.true_value[p] + (1 - deltas[p]) * row.distortion[p];
    if (composed != stored_actual[p]) {
      throw Error(ErrorCode::kStaleEquilibria,
                  "equilibrium payoff " + to_string(stored_actual[p]) +
                      " does not match delta*U + (1-delta)*D = " + to_string(composed),
                  "player " + std::to_string(p + 1));
    }
    row.actual.push_back(stored_actual[p]);
    row.gap.push_back(row.true_value[p] - stored_actual[p]);
  }
  const auto& u = game.u();
  for (std::size_t flat = 0; flat < u.num_profiles(); ++flat) {
    const PureProfile candidate = u.profile_at(flat);
    const auto candidate_u = u.payoffs(candidate);
    if (!pareto_dominates(candidate_u, row.true_value)) continue;
    row.pareto_dominators.push_back(candidate);
    row.dominator_is_equilibrium.push_back(
        is_listed_equilibrium(eqs, MixedProfile::pure(u.shape(), candidate)));
  }
  return row;
}

}  // namespace

WelfareReport welfare_report(const StrategicGame& game, const RationalityProfile& deltas,
                             const EquilibriumSet& eqs) {
  const std::size_t n = game.num_players();
  if (deltas.size() != n) {
    throw Error(ErrorCode::kDimension, "got " + std::to_string(deltas.size()) +
                                           " deltas for " + std::to_string(n) + " players");
  }
  WelfareReport report;
  for (const auto& point : eqs.points) {
    if (point.profile.shape() != game.shape() || point.payoffs_actual.size() != n) {
      throw Error(ErrorCode::kShape, "equilibrium does not fit the game");
    }
    report.rows.push_back(make_row(game, deltas, point.profile, point.payoffs_actual, eqs));
  }

  for (std::size_t c = 0; c < eqs.continua.size(); ++c) {
    const auto& continuum = eqs.continua[c];
    if (continuum.payoffs_actual.size() != n) {
      throw Error(ErrorCode::kShape, "continuum does not fit the game");
    }
    ContinuumWelfare cw;
    cw.continuum_index = c;
    cw.actual = continuum.payoffs_actual;
    for (std::size_t p = 0; p < n; ++p) {
      cw.true_value.push_back(continuum_payoff(game.u(), continuum, p));
      cw.distortion.push_back(continuum_payoff(game.d(), continuum, p));
    }
    report.continua.push_back(std::move(cw));

    for (const auto& endpoint : continuum.endpoints()) {
      const bool listed = std::any_of(report.rows.begin(), report.rows.end(),
                                      [&](const auto& row) { return row.profile == endpoint; });
      if (listed) continue;
      std::vector<Rational> stored;
      std::vector<Rational> pis(n, Rational(0));
      for (std::size_t p : continuum.free_players()) pis[p] = endpoint[p][0];
      for (std::size_t p = 0; p < n; ++p) stored.push_back(continuum.payoffs_actual[p].evaluate(pis));
      report.rows.push_back(make_row(game, deltas, endpoint, stored, eqs));
    }
  }
  for (const auto& row : report.rows) {
    for (bool is_eq : row.dominator_is_equilibrium) {
      if (!is_eq) report.dominated_by_non_equilibrium = true;
    }
  }
  return report;
}

}  // namespace deltagames
