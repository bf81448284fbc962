#include "doctest.h"

#include <algorithm>
#include <set>

#include "deltagames/equilibrium.hpp"
#include "deltagames/error.hpp"
#include "support.hpp"

using namespace deltagames;
using namespace testing_support;

namespace {

// Direct definition: no player has a strictly better pure deviation.
std::vector<PureProfile> brute_force_pure(const PayoffTensor& t) {
  std::vector<PureProfile> out;
  for (std::size_t flat = 0; flat < t.num_profiles(); ++flat) {
    const auto profile = t.profile_at(flat);
    bool stable = true;
    for (std::size_t p = 0; p < t.num_players() && stable; ++p) {
      for (std::size_t s = 0; s < t.num_strategies(p); ++s) {
        auto deviant = profile;
        deviant[p] = s;
        if (t.at(deviant, p) > t.at(profile, p)) stable = false;
      }
    }
    if (stable) out.push_back(profile);
  }
  return out;
}

std::vector<MixedProfile> point_profiles(const EquilibriumSet& set) {
  std::vector<MixedProfile> out;
  for (const auto& point : set.points) out.push_back(point.profile);
  return out;
}

const std::vector<Rational> kElevenPis = [] {
  std::vector<Rational> out;
  for (int k = 0; k <= 10; ++k) out.push_back(R(k, 10));
  return out;
}();

void check_sound(const PayoffTensor& t, const EquilibriumSet& set) {
  for (const auto& point : set.points) {
    CHECK(verify_equilibrium(t, point.profile));
    CHECK(point.payoffs_actual == expected_payoff(t, point.profile));
    CHECK((point.kind == EquilibriumKind::kPure) == point.profile.is_pure());
  }
  for (const auto& c : set.continua) {
    const auto free = c.free_players();
    for (const auto& a : kElevenPis) {
      for (const auto& b : kElevenPis) {
        std::vector<Rational> pis(2);
        bool inside = true;
        for (std::size_t k = 0; k < free.size(); ++k) {
          const Rational raw = k == 0 ? a : b;
          const auto& cp = c.players[free[k]];
          pis[free[k]] = cp.pi_lo + raw * (cp.pi_hi - cp.pi_lo);
          inside = inside && pis[free[k]] >= cp.pi_lo && pis[free[k]] <= cp.pi_hi;
        }
        if (free.size() < 2 && b != 0) continue;
        REQUIRE(inside);
        const auto profile = c.instantiate(pis);
        CHECK(c.contains(profile));
        CHECK(verify_equilibrium(t, profile));
        const auto payoffs = expected_payoff(t, profile);
        for (std::size_t p = 0; p < 2; ++p) CHECK(c.payoffs_actual[p].evaluate(pis) == payoffs[p]);
      }
    }
  }
}

}  // namespace

TEST_CASE("pure_nash examples") {
  const auto chicken_u = chicken().u();
  CHECK(pure_nash(chicken_u) == std::vector<PureProfile>{{0, 1}, {1, 0}});
  const auto pd = compose(pd_loyalty(), RationalityProfile({R(3, 4), R(3, 4)}));
  CHECK(pure_nash(pd) == std::vector<PureProfile>{{0, 0}});
  CHECK(pure_nash(easy_tensor(2, 5)).size() == 4);
}

TEST_CASE("property: pure_nash matches the definition up to 4 players x 4 strategies") {
  Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::size_t> shape;
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    for (std::size_t p = 0; p < n; ++p) shape.push_back(static_cast<std::size_t>(gen.integer(1, 4)));
    // Small integer payoffs so ties are common.
    const auto t = gen.payoffs(shape, 2, 1);
    CHECK(pure_nash(t) == brute_force_pure(t));
  }
}

TEST_CASE("dominant_strategy examples") {
  const auto u = pd_loyalty().u();
  for (std::size_t player = 0; player < 2; ++player) {
    CHECK(dominant_strategy(u, player) == Dominance{0, DominanceKind::kStrict});
  }
  const auto low = compose(pd_loyalty(), RationalityProfile({R(1, 4), R(1, 4)}));
  CHECK(dominant_strategy(low, 0) == Dominance{1, DominanceKind::kStrict});
  const auto half = compose(pd_loyalty(), RationalityProfile({R(1, 2), R(1, 2)}));
  CHECK(dominant_strategy(half, 0) == Dominance{0, DominanceKind::kWeak});
  CHECK_FALSE(dominant_strategy(chicken().u(), 0).has_value());
  // Weak but not strict: ties against one opponent strategy.
  const auto weak = tensor({2, 2}, {{1, 0}, {2, 0}, {1, 0}, {1, 0}});
  CHECK(dominant_strategy(weak, 0) == Dominance{0, DominanceKind::kWeak});
  CHECK_THROWS_AS(dominant_strategy(weak, 2), Error);
}

TEST_CASE("property: strict dominance for every player pins down pure_nash") {
  Gen gen(22);
  int hits = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::size_t> shape;
    const auto n = static_cast<std::size_t>(gen.integer(2, 3));
    for (std::size_t p = 0; p < n; ++p) shape.push_back(static_cast<std::size_t>(gen.integer(2, 3)));
    const auto t = gen.payoffs(shape);
    PureProfile dominant;
    for (std::size_t p = 0; p < n; ++p) {
      const auto d = dominant_strategy(t, p);
      if (!d || d->kind != DominanceKind::kStrict) break;
      dominant.push_back(d->strategy);
    }
    if (dominant.size() != n) continue;
    ++hits;
    CHECK(pure_nash(t) == std::vector<PureProfile>{dominant});
  }
  CHECK(hits > 20);
}

TEST_CASE("solve_2x2 on chicken at full rationality") {
  const auto u = chicken().u();
  const auto set = solve_2x2(u);
  REQUIRE(set.points.size() == 3);
  CHECK(set.continua.empty());
  CHECK_FALSE(set.degenerate);
  CHECK(set.points[0].profile == pure(u, {0, 1}));
  CHECK(set.points[1].profile == pure(u, {1, 0}));
  CHECK(set.points[2].profile == MixedProfile({{R(2, 3), R(1, 3)}, {R(2, 3), R(1, 3)}}));
  CHECK(set.points[2].kind == EquilibriumKind::kMixed);
  check_sound(u, set);
}

TEST_CASE("solve_2x2 boundary continuum at delta = (3/4, 1/2)") {
  const auto t = compose(pd_loyalty(), RationalityProfile({R(3, 4), R(1, 2)}));
  const auto set = solve_2x2(t);
  CHECK(set.degenerate);
  REQUIRE(set.continua.size() == 1);
  const auto& c = set.continua[0];
  CHECK_FALSE(c.players[0].free);
  CHECK(c.players[0].fixed == std::vector<Rational>{1, 0});
  CHECK(c.players[1].free);
  CHECK(c.players[1].pi_lo == 0);
  CHECK(c.players[1].pi_hi == 1);
  for (const auto& pi : {R(0), R(1, 2), R(1)}) {
    const std::vector<Rational> pis{0, pi};
    CHECK(c.payoffs_actual[0].evaluate(pis) == (5 - 3 * pi) * R(3, 4) - 1);
    CHECK(c.payoffs_actual[1].evaluate(pis) == 0);
  }
  CHECK(point_profiles(set) == std::vector<MixedProfile>{pure(t, {0, 0}), pure(t, {0, 1})});
  check_sound(t, set);
}

TEST_CASE("solve_2x2 on the half-rational PD returns the whole square") {
  const auto t = compose(pd_loyalty(), RationalityProfile({R(1, 2), R(1, 2)}));
  const auto set = solve_2x2(t);
  CHECK(set.easy);
  CHECK(set.degenerate);
  REQUIRE(set.continua.size() == 1);
  CHECK(set.continua[0].free_players() == std::vector<std::size_t>{0, 1});
  CHECK(set.points.size() == 4);
  check_sound(t, set);
}

TEST_CASE("solve_2x2 rejects other shapes") {
  Gen gen(23);
  CHECK_THROWS_AS(solve_2x2(gen.payoffs({2, 3})), Error);
  CHECK_THROWS_AS(solve_2x2(gen.payoffs({2, 2, 2})), Error);
}

TEST_CASE("support_enumeration examples") {
  const auto u = chicken().u();
  CHECK(point_profiles(support_enumeration(u)) == point_profiles(solve_2x2(u)));

  const auto t = compose(pd_loyalty(), RationalityProfile({R(3, 4), R(1, 2)}));
  const auto set = support_enumeration(t);
  CHECK(set.degenerate);
  const auto points = point_profiles(set);
  CHECK(std::find(points.begin(), points.end(), pure(t, {0, 0})) != points.end());
  CHECK(std::find(points.begin(), points.end(), pure(t, {0, 1})) != points.end());
  CHECK_THROWS_AS(support_enumeration(Gen(24).payoffs({2, 2, 2})), Error);
}

TEST_CASE("support_enumeration on rock-paper-scissors") {
  const auto t = tensor({3, 3}, {{0, 0}, {-1, 1}, {1, -1},
                                 {1, -1}, {0, 0}, {-1, 1},
                                 {-1, 1}, {1, -1}, {0, 0}});
  const auto set = support_enumeration(t);
  REQUIRE(set.points.size() == 1);
  CHECK(set.points[0].profile == MixedProfile({{R(1, 3), R(1, 3), R(1, 3)}, {R(1, 3), R(1, 3), R(1, 3)}}));
  CHECK_FALSE(set.degenerate);
}

TEST_CASE("support_enumeration with unequal strategy counts") {
  Gen gen(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = gen.payoffs({static_cast<std::size_t>(gen.integer(1, 4)),
                                static_cast<std::size_t>(gen.integer(1, 4))});
    const auto set = support_enumeration(t);
    CHECK_FALSE(set.empty());
    check_sound(t, set);
  }
}

TEST_CASE("verify_equilibrium examples") {
  const auto u = chicken().u();
  CHECK(verify_equilibrium(u, MixedProfile({{R(2, 3), R(1, 3)}, {R(2, 3), R(1, 3)}})));
  CHECK_FALSE(verify_equilibrium(u, MixedProfile({{R(1, 2), R(1, 2)}, {R(2, 3), R(1, 3)}})));
  const auto pd = pd_loyalty().u();
  CHECK_FALSE(verify_equilibrium(pd, pure(pd, {1, 1})));
  CHECK(verify_equilibrium(pd, pure(pd, {1, 1}), R(1)));
  CHECK_FALSE(verify_equilibrium(pd, pure(pd, {1, 1}), R(99, 100)));
  CHECK(verify_equilibrium(pd, to_float(pure(pd, {0, 0}))));
  CHECK_THROWS_AS(verify_equilibrium(pd, pure(pd, {0, 0}), R(-1)), Error);

  Gen gen(26);
  const auto easy = easy_tensor(0, 7);
  for (int trial = 0; trial < 50; ++trial) CHECK(verify_equilibrium(easy, gen.mixed({2, 2})));
}

TEST_CASE("detect_easy_game examples") {
  CHECK(detect_easy_game(easy_tensor(1, -3)));
  CHECK(detect_easy_game(compose(pd_loyalty(), RationalityProfile({R(1, 2), R(1, 2)}))));
  CHECK_FALSE(detect_easy_game(pd_loyalty().u()));
  CHECK_FALSE(detect_easy_game(compose(pd_loyalty(), RationalityProfile({R(1, 2), R(3, 4)}))));
}

TEST_CASE("property: easy games make every mixed profile an equilibrium") {
  Gen gen(27);
  for (int trial = 0; trial < 30; ++trial) {
    // Payoff of each player depends only on the others' strategies.
    const std::vector<std::size_t> shape{2, 3, 2};
    const auto raw = gen.payoffs(shape);
    std::vector<Rational> entries(raw.entries().size());
    for (std::size_t flat = 0; flat < raw.num_profiles(); ++flat) {
      auto profile = raw.profile_at(flat);
      for (std::size_t p = 0; p < 3; ++p) {
        auto base = profile;
        base[p] = 0;
        entries[flat * 3 + p] = raw.at(base, p);
      }
    }
    const PayoffTensor t(shape, entries);
    REQUIRE(detect_easy_game(t));
    for (int k = 0; k < 100; ++k) CHECK(verify_equilibrium(t, gen.mixed(shape)));
  }
}

TEST_CASE("property: existence and soundness on random 2-player games") {
  Gen gen(28);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool square = trial % 2 == 0;
    const std::vector<std::size_t> shape =
        square ? std::vector<std::size_t>{2, 2}
               : std::vector<std::size_t>{static_cast<std::size_t>(gen.integer(1, 3)),
                                          static_cast<std::size_t>(gen.integer(1, 3))};
    const auto game = gen.game(shape, 10, trial % 3 == 0 ? 1 : 4);
    const auto t = compose(game, gen.deltas(2));
    const auto set = solve(t);
    CHECK_FALSE(set.empty());
    check_sound(t, set);
  }
}

TEST_CASE("property: solve_2x2 and support_enumeration agree on nondegenerate 2x2 games") {
  Gen gen(29);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = gen.payoffs({2, 2}, 10, 4);
    const auto exact = solve_2x2(t);
    if (exact.degenerate) continue;
    ++compared;
    const auto enumerated = support_enumeration(t);
    CHECK(exact.continua.empty());
    CHECK_FALSE(enumerated.degenerate);
    CHECK(point_profiles(exact) == point_profiles(enumerated));
  }
  CHECK(compared > 500);
}

TEST_CASE("property: continua are sound on degenerate 2x2 games") {
  Gen gen(30);
  int continua = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    // Payoffs in {-1,0,1} make indifference common.
    const auto t = gen.payoffs({2, 2}, 1, 1);
    const auto set = solve_2x2(t);
    continua += static_cast<int>(set.continua.size());
    CHECK_FALSE(set.empty());
    check_sound(t, set);
    for (const auto& c : set.continua) {
      for (const auto& endpoint : c.endpoints()) {
        const auto points = point_profiles(set);
        CHECK(std::find(points.begin(), points.end(), endpoint) != points.end());
      }
    }
    if (detect_easy_game(t)) CHECK(set.easy);
  }
  CHECK(continua > 100);
}

TEST_CASE("solve output order is reproducible") {
  Gen gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = gen.payoffs({3, 3}, 3, 1);
    const auto a = support_enumeration(t);
    const auto b = support_enumeration(t);
    CHECK(point_profiles(a) == point_profiles(b));
    // Smaller supports come first.
    std::size_t last = 0;
    for (const auto& point : a.points) {
      const std::size_t size = point.profile.support(0).size() + point.profile.support(1).size();
      CHECK(size >= last);
      last = size;
    }
  }
}

TEST_CASE("solve dispatches by shape and n") {
  Gen gen(32);
  const auto three = gen.payoffs({2, 2, 2});
  const auto set = solve(three);
  CHECK(set.continua.empty());
  for (const auto& point : set.points) CHECK(point.profile.is_pure());
  CHECK(point_profiles(set).size() == pure_nash(three).size());
}

TEST_CASE("solve_game attaches payoffs under U") {
  const auto game = pd_loyalty();
  const auto set = solve_game(game, RationalityProfile({R(3, 4), R(3, 4)}));
  REQUIRE(set.points.size() == 1);
  CHECK(set.points[0].payoffs_actual == std::vector<Rational>{R(1, 2), R(1, 2)});
  CHECK(set.points[0].payoffs_true == std::vector<Rational>{1, 1});

  const auto boundary = solve_game(game, RationalityProfile({R(3, 4), R(1, 2)}));
  REQUIRE(boundary.continua.size() == 1);
  const auto& c = boundary.continua[0];
  for (const auto& pi : kElevenPis) {
    const std::vector<Rational> pis{0, pi};
    const auto truth = expected_payoff(game.u(), c.instantiate(pis));
    CHECK(c.payoffs_true[0].evaluate(pis) == truth[0]);
    CHECK(c.payoffs_true[1].evaluate(pis) == truth[1]);
  }
}

TEST_CASE("continuum payoffs on an easy square carry the cross term") {
  // D = 2E - U so that the half-rational game is the easy game E, while U
  // keeps chicken's bilinear expected payoff.
  const auto u = chicken().u();
  const auto e = easy_tensor(1, -3);
  std::vector<Rational> d_entries;
  for (std::size_t k = 0; k < u.entries().size(); ++k) {
    d_entries.push_back(2 * e.entries()[k] - u.entries()[k]);
  }
  const StrategicGame game(chicken().labels(), u, PayoffTensor({2, 2}, d_entries));
  const auto set = solve_game(game, RationalityProfile({R(1, 2), R(1, 2)}));
  CHECK(set.easy);
  REQUIRE(set.continua.size() == 1);
  const auto& c = set.continua[0];
  CHECK_FALSE(c.payoffs_true[0].is_affine());
  CHECK(c.payoffs_actual[0].is_affine());
  for (const auto& a : kElevenPis) {
    for (const auto& b : kElevenPis) {
      const std::vector<Rational> pis{a, b};
      const auto truth = expected_payoff(u, c.instantiate(pis));
      CHECK(c.payoffs_true[0].evaluate(pis) == truth[0]);
      CHECK(c.payoffs_true[1].evaluate(pis) == truth[1]);
    }
  }
}

TEST_CASE("structure_label") {
  const auto game = pd_loyalty();
  const auto label = [&](Rational a, Rational b) {
    return structure_label(solve_game(game, RationalityProfile({a, b})), game.labels());
  };
  CHECK(label(R(3, 4), R(3, 4)) == "(D,D)");
  CHECK(label(R(1, 4), R(1, 4)) == "(C,C)");
  CHECK(label(R(1, 2), R(1, 2)) == "all-profiles");
  CHECK(label(R(3, 4), R(1, 2)) == "(D,*)");
  CHECK(label(R(1, 2), R(1, 4)) == "(*,C)");
  const auto c = chicken();
  CHECK(structure_label(solve_game(c, RationalityProfile({1, 1})), c.labels()) ==
        "(swerve,straight) | (straight,swerve) | (swerve+straight,swerve+straight)");
  CHECK(structure_label(EquilibriumSet{}, c.labels()) == "none");
}

TEST_CASE("MultilinearExpression formatting and evaluation") {
  MultilinearExpression e;
  e.terms = {{{}, R(11, 4)}, {{1}, R(-9, 4)}};
  CHECK(e.to_string() == "11/4 - 9/4*pi2");
  CHECK(e.evaluate({0, R(1, 3)}) == 2);
  CHECK(e.constant() == R(11, 4));
  CHECK(e.linear(1) == R(-9, 4));
  CHECK(e.linear(0) == 0);
  CHECK(e.is_affine());
  MultilinearExpression zero;
  CHECK(zero.to_string() == "0");
}

TEST_CASE("the four boundary continua of the loyalty PD") {
  const auto game = pd_loyalty();
  struct Case {
    Rational d1, d2;
    std::size_t fixed_player;
    std::vector<Rational> fixed;
  };
  const std::vector<Case> cases{{R(3, 4), R(1, 2), 0, {1, 0}},
                                {R(1, 4), R(1, 2), 0, {0, 1}},
                                {R(1, 2), R(3, 4), 1, {1, 0}},
                                {R(1, 2), R(1, 4), 1, {0, 1}}};
  for (const auto& c : cases) {
    const auto t = compose(game, RationalityProfile({c.d1, c.d2}));
    const auto set = solve_2x2(t);
    REQUIRE(set.continua.size() == 1);
    const auto& cont = set.continua[0];
    const std::size_t free_player = 1 - c.fixed_player;
    CHECK(cont.players[c.fixed_player].fixed == c.fixed);
    CHECK(cont.free_players() == std::vector<std::size_t>{free_player});
    for (const auto& pi : kElevenPis) {
      std::vector<Rational> pis(2);
      pis[free_player] = pi;
      const Rational fixed_delta = c.fixed_player == 0 ? c.d1 : c.d2;
      const Rational fixed_value = c.fixed[0] == 1 ? Rational((5 - 3 * pi) * fixed_delta - 1)
                                                   : Rational((1 - pi) * 3 * fixed_delta);
      const Rational free_value = c.fixed[0] == 1 ? Rational(0) : R(3, 2);
      CHECK(cont.payoffs_actual[c.fixed_player].evaluate(pis) == fixed_value);
      CHECK(cont.payoffs_actual[free_player].evaluate(pis) == free_value);
    }
  }
}
