#include "deltagames/game.hpp"

#include <cmath>
#include <set>

#include "deltagames/error.hpp"

namespace deltagames {

namespace {

std::string player_location(std::size_t player) {
  return "player " + std::to_string(player + 1);
}

template <class T>
bool is_zero(const T& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    return sgn(value) == 0;
  } else {
    return value == 0.0;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PayoffTensor

PayoffTensor::PayoffTensor(std::vector<std::size_t> shape,
                           std::vector<Rational> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (shape_.empty()) {
    throw Error(ErrorCode::kShape, "a game needs at least one player");
  }
  strides_.assign(shape_.size(), 1);
  num_profiles_ = 1;
  for (std::size_t p = shape_.size(); p-- > 0;) {
    if (shape_[p] == 0) {
      throw Error(ErrorCode::kShape, "empty strategy set", player_location(p));
    }
    strides_[p] = num_profiles_;
    num_profiles_ *= shape_[p];
  }
  if (entries_.size() != num_profiles_ * shape_.size()) {
    throw Error(ErrorCode::kShape,
                "payoff tensor has " + std::to_string(entries_.size()) +
                    " entries, expected " +
                    std::to_string(num_profiles_ * shape_.size()));
  }
}

std::size_t PayoffTensor::flat_index(const PureProfile& profile) const {
  if (profile.size() != shape_.size()) {
    throw Error(ErrorCode::kDimension, "pure profile has wrong player count");
  }
  std::size_t flat = 0;
  for (std::size_t p = 0; p < shape_.size(); ++p) {
    if (profile[p] >= shape_[p]) {
      throw Error(ErrorCode::kIndex, "strategy index out of range",
                  player_location(p));
    }
    flat += profile[p] * strides_[p];
  }
  return flat;
}

PureProfile PayoffTensor::profile_at(std::size_t flat) const {
  PureProfile profile(shape_.size());
  for (std::size_t p = 0; p < shape_.size(); ++p) {
    profile[p] = (flat / strides_[p]) % shape_[p];
  }
  return profile;
}

std::vector<Rational> PayoffTensor::payoffs(const PureProfile& profile) const {
  const std::size_t flat = flat_index(profile);
  std::vector<Rational> out(shape_.size());
  for (std::size_t p = 0; p < shape_.size(); ++p) out[p] = at(flat, p);
  return out;
}

// ---------------------------------------------------------------------------
// StrategicGame

StrategicGame::StrategicGame(std::vector<std::vector<std::string>> strategy_labels,
                             PayoffTensor u, PayoffTensor d)
    : labels_(std::move(strategy_labels)), u_(std::move(u)), d_(std::move(d)) {
  if (!u_.same_shape(d_)) {
    throw Error(ErrorCode::kShape, "U and D tables differ in shape");
  }
  if (labels_.size() != u_.num_players()) {
    throw Error(ErrorCode::kShape, "strategy label lists do not match player count");
  }
  for (std::size_t p = 0; p < labels_.size(); ++p) {
    if (labels_[p].size() != u_.num_strategies(p)) {
      throw Error(ErrorCode::kShape, "strategy label count does not match payoff table",
                  player_location(p));
    }
    std::set<std::string> seen;
    for (const auto& label : labels_[p]) {
      if (!seen.insert(label).second) {
        throw Error(ErrorCode::kDuplicateLabel, "duplicate strategy label '" + label + "'",
                    player_location(p));
      }
    }
  }
}

StrategyIndex StrategicGame::strategy_index(std::size_t player,
                                            const std::string& label) const {
  if (player >= labels_.size()) {
    throw Error(ErrorCode::kIndex, "no such player", player_location(player));
  }
  const auto& list = labels_[player];
  for (std::size_t s = 0; s < list.size(); ++s) {
    if (list[s] == label) return s;
  }
  throw Error(ErrorCode::kIndex, "unknown strategy '" + label + "'",
              player_location(player));
}

// ---------------------------------------------------------------------------
// RationalityProfile

RationalityProfile::RationalityProfile(std::vector<Rational> deltas)
    : deltas_(std::move(deltas)) {
  for (std::size_t p = 0; p < deltas_.size(); ++p) {
    if (deltas_[p] < 0 || deltas_[p] > 1) {
      throw Error(ErrorCode::kDeltaRange,
                  "delta " + to_string(deltas_[p]) + " outside [0,1]",
                  player_location(p));
    }
  }
}

RationalityProfile RationalityProfile::constant(std::size_t num_players,
                                                const Rational& delta_bar) {
  return RationalityProfile(std::vector<Rational>(num_players, delta_bar));
}

// ---------------------------------------------------------------------------
// BasicMixedProfile

template <class T>
BasicMixedProfile<T>::BasicMixedProfile(std::vector<std::vector<T>> probabilities)
    : probabilities_(std::move(probabilities)) {
  for (std::size_t p = 0; p < probabilities_.size(); ++p) {
    const auto& mix = probabilities_[p];
    if (mix.empty()) {
      throw Error(ErrorCode::kProbability, "empty mixed strategy", player_location(p));
    }
    T sum = 0;
    for (const T& x : mix) {
      if (x < 0) {
        throw Error(ErrorCode::kProbability, "negative probability", player_location(p));
      }
      sum += x;
    }
    bool ok;
    if constexpr (std::is_same_v<T, Rational>) {
      ok = sum == 1;
    } else {
      ok = std::abs(sum - 1.0) <= kFloatTolerance;
    }
    if (!ok) {
      throw Error(ErrorCode::kProbability, "probabilities do not sum to one",
                  player_location(p));
    }
  }
}

template <class T>
BasicMixedProfile<T> BasicMixedProfile<T>::pure(const std::vector<std::size_t>& shape,
                                                const PureProfile& profile) {
  if (shape.size() != profile.size()) {
    throw Error(ErrorCode::kDimension, "pure profile has wrong player count");
  }
  std::vector<std::vector<T>> probs(shape.size());
  for (std::size_t p = 0; p < shape.size(); ++p) {
    if (profile[p] >= shape[p]) {
      throw Error(ErrorCode::kIndex, "strategy index out of range", player_location(p));
    }
    probs[p].assign(shape[p], T(0));
    probs[p][profile[p]] = T(1);
  }
  return BasicMixedProfile(std::move(probs));
}

template <class T>
std::vector<std::size_t> BasicMixedProfile<T>::shape() const {
  std::vector<std::size_t> out;
  out.reserve(probabilities_.size());
  for (const auto& mix : probabilities_) out.push_back(mix.size());
  return out;
}

template <class T>
std::vector<StrategyIndex> BasicMixedProfile<T>::support(std::size_t player) const {
  std::vector<StrategyIndex> out;
  const auto& mix = probabilities_[player];
  for (std::size_t s = 0; s < mix.size(); ++s) {
    if (mix[s] > 0) out.push_back(s);
  }
  return out;
}

template <class T>
bool BasicMixedProfile<T>::is_pure() const {
  for (std::size_t p = 0; p < probabilities_.size(); ++p) {
    if (support(p).size() != 1) return false;
  }
  return true;
}

template <class T>
BasicMixedProfile<T> BasicMixedProfile<T>::with_player(std::size_t player,
                                                       std::vector<T> mix) const {
  auto probs = probabilities_;
  probs.at(player) = std::move(mix);
  return BasicMixedProfile(std::move(probs));
}

template class BasicMixedProfile<Rational>;
template class BasicMixedProfile<double>;

MixedProfileF to_float(const MixedProfile& profile) {
  std::vector<std::vector<double>> probs;
  for (const auto& mix : profile.values()) {
    std::vector<double> row;
    for (const auto& x : mix) row.push_back(x.get_d());
    probs.push_back(std::move(row));
  }
  return MixedProfileF(std::move(probs));
}

// ---------------------------------------------------------------------------
// Operations

PayoffTensor compose(const StrategicGame& game, const RationalityProfile& deltas) {
  const std::size_t n = game.num_players();
  if (deltas.size() != n) {
    // Name the first player that has no matching delta (or the first extra).
    const std::size_t offending = std::min(deltas.size(), n);
    throw Error(ErrorCode::kDimension,
                "got " + std::to_string(deltas.size()) + " deltas for " +
                    std::to_string(n) + " players",
                player_location(offending));
  }
  const auto& u = game.u();
  const auto& d = game.d();
  std::vector<Rational> entries(u.entries().size());
  for (std::size_t flat = 0; flat < u.num_profiles(); ++flat) {
    for (std::size_t p = 0; p < n; ++p) {
      entries[flat * n + p] = deltas[p] * u.at(flat, p) + (1 - deltas[p]) * d.at(flat, p);
    }
  }
  return PayoffTensor(u.shape(), std::move(entries));
}

namespace {

template <class T>
void check_shape(const PayoffTensor& tensor, const BasicMixedProfile<T>& profile) {
  if (profile.num_players() != tensor.num_players()) {
    throw Error(ErrorCode::kShape, "profile has " + std::to_string(profile.num_players()) +
                                       " players, tensor has " +
                                       std::to_string(tensor.num_players()));
  }
  for (std::size_t p = 0; p < tensor.num_players(); ++p) {
    if (profile[p].size() != tensor.num_strategies(p)) {
      throw Error(ErrorCode::kShape, "mixed strategy length does not match strategy count",
                  player_location(p));
    }
  }
}

}  // namespace

template <class T>
std::vector<T> deviation_payoffs(const PayoffTensor& tensor,
                                 const BasicMixedProfile<T>& profile,
                                 std::size_t player) {
  check_shape(tensor, profile);
  if (player >= tensor.num_players()) {
    throw Error(ErrorCode::kIndex, "no such player", player_location(player));
  }
  const std::size_t n = tensor.num_players();
  std::vector<T> out(tensor.num_strategies(player), T(0));
  PureProfile current(n, 0);
  for (std::size_t flat = 0; flat < tensor.num_profiles(); ++flat) {
    if (flat > 0) {
      // Odometer increment, last player fastest.
      for (std::size_t p = n; p-- > 0;) {
        if (++current[p] < tensor.num_strategies(p)) break;
        current[p] = 0;
      }
    }
    T weight(1);
    for (std::size_t p = 0; p < n && !is_zero(weight); ++p) {
      if (p != player) weight *= profile[p][current[p]];
    }
    if (is_zero(weight)) continue;
    out[current[player]] += weight * scalar_cast<T>(tensor.at(flat, player));
  }
  return out;
}

template <class T>
std::vector<T> expected_payoff(const PayoffTensor& tensor,
                               const BasicMixedProfile<T>& profile) {
  check_shape(tensor, profile);
  std::vector<T> out;
  out.reserve(tensor.num_players());
  for (std::size_t p = 0; p < tensor.num_players(); ++p) {
    const auto dev = deviation_payoffs(tensor, profile, p);
    T total(0);
    for (std::size_t s = 0; s < dev.size(); ++s) total += profile[p][s] * dev[s];
    out.push_back(total);
  }
  return out;
}

template <class T>
std::vector<StrategyIndex> best_response_set(const PayoffTensor& tensor,
                                             const BasicMixedProfile<T>& profile,
                                             std::size_t player) {
  const auto dev = deviation_payoffs(tensor, profile, player);
  T best = dev[0];
  for (const auto& v : dev) {
    if (v > best) best = v;
  }
  std::vector<StrategyIndex> out;
  for (std::size_t s = 0; s < dev.size(); ++s) {
    bool tied;
    if constexpr (std::is_same_v<T, Rational>) {
      tied = dev[s] == best;
    } else {
      tied = dev[s] >= best - kFloatTolerance;
    }
    if (tied) out.push_back(s);
  }
  return out;
}

template std::vector<Rational> deviation_payoffs(const PayoffTensor&, const MixedProfile&,
                                                 std::size_t);
template std::vector<double> deviation_payoffs(const PayoffTensor&, const MixedProfileF&,
                                               std::size_t);
template std::vector<Rational> expected_payoff(const PayoffTensor&, const MixedProfile&);
template std::vector<double> expected_payoff(const PayoffTensor&, const MixedProfileF&);
template std::vector<StrategyIndex> best_response_set(const PayoffTensor&,
                                                      const MixedProfile&, std::size_t);
template std::vector<StrategyIndex> best_response_set(const PayoffTensor&,
                                                      const MixedProfileF&, std::size_t);

}  // namespace deltagames
