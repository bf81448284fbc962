// Shared fixtures and hand-rolled generators for the unit and acceptance
// tests. Generators draw from a seeded mt19937_64 so failures reproduce.
#ifndef DELTAGAMES_TESTS_SUPPORT_HPP
#define DELTAGAMES_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "deltagames/game.hpp"

namespace testing_support {

using deltagames::MixedProfile;
using deltagames::PayoffTensor;
using deltagames::PureProfile;
using deltagames::Rational;
using deltagames::RationalityProfile;
using deltagames::StrategicGame;

inline Rational R(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Rows are pure profiles in lexicographic order, one payoff per player.
inline PayoffTensor tensor(std::vector<std::size_t> shape,
                           const std::vector<std::vector<Rational>>& rows) {
  std::vector<Rational> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return PayoffTensor(std::move(shape), std::move(entries));
}

inline std::vector<std::string> labels(std::size_t count, const std::string& stem = "s") {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

// Chicken with an anger distortion x for player 2 going straight.
inline StrategicGame chicken(const Rational& x = 1) {
  auto u = tensor({2, 2}, {{1, 1}, {-2, 2}, {2, -2}, {-4, -4}});
  auto d = tensor({2, 2}, {{0, 0}, {0, x}, {0, 0}, {0, x}});
  return StrategicGame({{"swerve", "straight"}, {"swerve", "straight"}}, u, d);
}

// Prisoner's dilemma; each player's loyalty distortion is -1 for defecting.
inline StrategicGame pd_loyalty() {
  auto u = tensor({2, 2}, {{1, 1}, {4, 0}, {0, 4}, {3, 3}});
  auto d = tensor({2, 2}, {{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});
  return StrategicGame({{"D", "C"}, {"D", "C"}}, u, d);
}

// Player i's payoff depends only on the opponent's strategy.
inline PayoffTensor easy_tensor(const Rational& a, const Rational& b) {
  return tensor({2, 2}, {{a, a}, {b, a}, {a, b}, {b, b}});
}

inline MixedProfile pure(const PayoffTensor& t, const PureProfile& profile) {
  return MixedProfile::pure(t.shape(), profile);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return integer(0, 1) == 1; }

  // Multiple of 1/den in [lo, hi].
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t den = 4) {
    return R(static_cast<long>(integer(lo * den, hi * den)), static_cast<long>(den));
  }

  // Delta in [0,1]; every fourth draw is an endpoint or one half so that
  // knife-edge cases show up.
  Rational delta() {
    switch (integer(0, 11)) {
      case 0: return 0;
      case 1: return 1;
      case 2: return R(1, 2);
      default: return R(static_cast<long>(integer(0, 60)), 60);
    }
  }
  RationalityProfile deltas(std::size_t n) {
    std::vector<Rational> out;
    for (std::size_t p = 0; p < n; ++p) out.push_back(delta());
    return RationalityProfile(out);
  }

  PayoffTensor payoffs(const std::vector<std::size_t>& shape, std::int64_t bound = 10,
                       std::int64_t den = 4) {
    std::size_t profiles = 1;
    for (auto s : shape) profiles *= s;
    std::vector<Rational> entries;
    for (std::size_t k = 0; k < profiles * shape.size(); ++k) {
      entries.push_back(rational(-bound, bound, den));
    }
    return PayoffTensor(shape, entries);
  }

  StrategicGame game(const std::vector<std::size_t>& shape, std::int64_t bound = 10,
                     std::int64_t den = 4) {
    std::vector<std::vector<std::string>> names;
    for (std::size_t p = 0; p < shape.size(); ++p) names.push_back(labels(shape[p]));
    auto u = payoffs(shape, bound, den);
    auto d = payoffs(shape, bound, den);
    return StrategicGame(names, u, d);
  }

  std::vector<Rational> simplex(std::size_t size, std::int64_t den = 12) {
    std::vector<std::int64_t> weights(size);
    std::int64_t total = 0;
    for (auto& w : weights) total += (w = integer(0, den));
    if (total == 0) {
      weights[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(size) - 1))] = 1;
      total = 1;
    }
    std::vector<Rational> out;
    for (auto w : weights) out.push_back(R(static_cast<long>(w), static_cast<long>(total)));
    return out;
  }

  MixedProfile mixed(const std::vector<std::size_t>& shape) {
    std::vector<std::vector<Rational>> out;
    for (auto s : shape) out.push_back(simplex(s));
    return MixedProfile(out);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing_support

#endif  // DELTAGAMES_TESTS_SUPPORT_HPP
