#ifndef DELTAGAMES_GAME_HPP
#define DELTAGAMES_GAME_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "deltagames/rational.hpp"

namespace deltagames {

using StrategyIndex = std::size_t;
// One strategy index per player.
using PureProfile = std::vector<StrategyIndex>;

// One payoff per player per pure profile. Profiles are stored row-major with
// player 0 most significant, so flat order is lexicographic in strategy
// indices. Immutable after construction.
class PayoffTensor {
 public:
  PayoffTensor() = default;
  // `entries` is laid out as entries[flat * num_players + player].
  PayoffTensor(std::vector<std::size_t> shape, std::vector<Rational> entries);

  std::size_t num_players() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t num_strategies(std::size_t player) const { return shape_[player]; }
  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t stride(std::size_t player) const { return strides_[player]; }

  std::size_t flat_index(const PureProfile& profile) const;
  PureProfile profile_at(std::size_t flat) const;

  const Rational& at(std::size_t flat, std::size_t player) const {
    return entries_[flat * shape_.size() + player];
  }
  const Rational& at(const PureProfile& profile, std::size_t player) const {
    return at(flat_index(profile), player);
  }
  std::vector<Rational> payoffs(const PureProfile& profile) const;
  const std::vector<Rational>& entries() const { return entries_; }

  bool same_shape(const PayoffTensor& other) const {
    return shape_ == other.shape_;
  }
  bool operator==(const PayoffTensor& other) const = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
  std::vector<Rational> entries_;
};

// A finite strategic-form game with a rational value function U (true
// preferences) and a distortion value function D of the same shape.
class StrategicGame {
 public:
  StrategicGame(std::vector<std::vector<std::string>> strategy_labels,
                PayoffTensor u, PayoffTensor d);

  std::size_t num_players() const { return labels_.size(); }
  std::size_t num_strategies(std::size_t player) const {
    return labels_[player].size();
  }
  const std::vector<std::size_t>& shape() const { return u_.shape(); }
  const std::vector<std::string>& labels(std::size_t player) const {
    return labels_[player];
  }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  // Index of `label` in the player's strategy list; throws kIndex if absent.
  StrategyIndex strategy_index(std::size_t player, const std::string& label) const;

  const PayoffTensor& u() const { return u_; }
  const PayoffTensor& d() const { return d_; }

  bool operator==(const StrategicGame& other) const = default;

 private:
  std::vector<std::vector<std::string>> labels_;
  PayoffTensor u_;
  PayoffTensor d_;
};

// Per-player degree of rationality, each in [0,1].
class RationalityProfile {
 public:
  explicit RationalityProfile(std::vector<Rational> deltas);
  static RationalityProfile constant(std::size_t num_players, const Rational& delta_bar);

  std::size_t size() const { return deltas_.size(); }
  const Rational& operator[](std::size_t player) const { return deltas_[player]; }
  const std::vector<Rational>& values() const { return deltas_; }

  bool operator==(const RationalityProfile& other) const = default;

 private:
  std::vector<Rational> deltas_;
};

// Per-player probability vectors. T is Rational (exact mode, sums are exactly
// one) or double (float mode, sums within kFloatTolerance of one).
template <class T>
class BasicMixedProfile {
 public:
  explicit BasicMixedProfile(std::vector<std::vector<T>> probabilities);
  static BasicMixedProfile pure(const std::vector<std::size_t>& shape,
                                const PureProfile& profile);

  std::size_t num_players() const { return probabilities_.size(); }
  const std::vector<T>& operator[](std::size_t player) const {
    return probabilities_[player];
  }
  const std::vector<std::vector<T>>& values() const { return probabilities_; }
  std::vector<std::size_t> shape() const;
  // Indices with positive probability.
  std::vector<StrategyIndex> support(std::size_t player) const;
  bool is_pure() const;

  // Same profile with one player's vector replaced.
  BasicMixedProfile with_player(std::size_t player, std::vector<T> mix) const;

  bool operator==(const BasicMixedProfile& other) const = default;

 private:
  std::vector<std::vector<T>> probabilities_;
};

using MixedProfile = BasicMixedProfile<Rational>;
using MixedProfileF = BasicMixedProfile<double>;

inline constexpr double kFloatTolerance = 1e-9;

MixedProfileF to_float(const MixedProfile& profile);

// p_i = delta_i * U_i + (1 - delta_i) * D_i, entrywise and exact.
PayoffTensor compose(const StrategicGame& game, const RationalityProfile& deltas);

// Expected payoff of each of `player`'s pure strategies when the other
// players follow `profile`. The player's own component is ignored.
template <class T>
std::vector<T> deviation_payoffs(const PayoffTensor& tensor,
                                 const BasicMixedProfile<T>& profile,
                                 std::size_t player);

// Multilinear extension: one expected payoff per player.
template <class T>
std::vector<T> expected_payoff(const PayoffTensor& tensor,
                               const BasicMixedProfile<T>& profile);

// Pure strategies of `player` attaining the maximal deviation payoff, in
// increasing index order. Never empty.
template <class T>
std::vector<StrategyIndex> best_response_set(const PayoffTensor& tensor,
                                             const BasicMixedProfile<T>& profile,
                                             std::size_t player);

}  // namespace deltagames

#endif  // DELTAGAMES_GAME_HPP
