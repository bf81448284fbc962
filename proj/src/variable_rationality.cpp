#include "deltagames/variable_rationality.hpp"

#include <random>

#include "deltagames/equilibrium.hpp"
#include "deltagames/error.hpp"
#include "deltagames/parallel.hpp"

namespace deltagames {

namespace {

constexpr int kMaxRejections = 1'000'000;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kDistribution, message);
}

bool in_unit(const Rational& x) { return x >= 0 && x <= 1; }

}  // namespace

DeltaDistribution DeltaDistribution::point(Rational value) {
  if (!in_unit(value)) invalid("point mass " + deltagames::to_string(value) + " outside [0,1]");
  return DeltaDistribution(Point{std::move(value)});
}

DeltaDistribution DeltaDistribution::uniform(Rational lo, Rational hi) {
  if (!in_unit(lo) || !in_unit(hi)) invalid("uniform bounds must lie in [0,1]");
  if (lo > hi) invalid("uniform lower bound exceeds upper bound");
  return DeltaDistribution(Uniform{std::move(lo), std::move(hi)});
}

DeltaDistribution DeltaDistribution::truncated_normal(Rational mean, Rational sd) {
  if (sgn(sd) <= 0) invalid("normal standard deviation must be positive");
  return DeltaDistribution(TruncatedNormal{std::move(mean), std::move(sd)});
}

DeltaDistribution DeltaDistribution::beta(Rational alpha, Rational beta) {
  if (sgn(alpha) <= 0 || sgn(beta) <= 0) invalid("beta parameters must be positive");
  return DeltaDistribution(Beta{std::move(alpha), std::move(beta)});
}

DeltaDistribution DeltaDistribution::parse(const std::string& spec) {
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    invalid("distribution '" + spec + "' is not of the form name(args)");
  }
  const std::string name = spec.substr(0, open);
  const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<Rational> args;
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    std::string token = inner.substr(start, comma - start);
    // tolerate "uniform(0, 1)"
    token.erase(0, token.find_first_not_of(' '));
    token.erase(token.find_last_not_of(' ') + 1);
    try {
      args.push_back(parse_rational(token));
    } catch (const Error&) {
      invalid("bad argument '" + token + "' in distribution '" + spec + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  auto expect = [&](std::size_t n) {
    if (args.size() != n) {
      invalid(name + " takes " + std::to_string(n) + " argument(s) in '" + spec + "'");
    }
  };
  if (name == "point") {
    expect(1);
    return point(args[0]);
  }
  if (name == "uniform") {
    expect(2);
    return uniform(args[0], args[1]);
  }
  if (name == "normal" || name == "truncated_normal") {
    expect(2);
    return truncated_normal(args[0], args[1]);
  }
  if (name == "beta") {
    expect(2);
    return beta(args[0], args[1]);
  }
  invalid("unknown distribution '" + name + "'");
}

std::string DeltaDistribution::to_string() const {
  using deltagames::to_string;
  struct Printer {
    std::string operator()(const Point& d) const { return "point(" + to_string(d.value) + ")"; }
    std::string operator()(const Uniform& d) const {
      return "uniform(" + to_string(d.lo) + "," + to_string(d.hi) + ")";
    }
    std::string operator()(const TruncatedNormal& d) const {
      return "normal(" + to_string(d.mean) + "," + to_string(d.sd) + ")";
    }
    std::string operator()(const Beta& d) const {
      return "beta(" + to_string(d.alpha) + "," + to_string(d.beta) + ")";
    }
  };
  return std::visit(Printer{}, kind_);
}

namespace {

Rational draw(const DeltaDistribution& dist, std::mt19937_64& engine) {
  using D = DeltaDistribution;
  struct Sampler {
    std::mt19937_64& engine;
    Rational operator()(const D::Point& d) const { return d.value; }
    Rational operator()(const D::Uniform& d) const {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double lo = d.lo.get_d();
      const double hi = d.hi.get_d();
      return snap_to_dyadic(lo + (hi - lo) * unit(engine));
    }
    Rational operator()(const D::TruncatedNormal& d) const {
      std::normal_distribution<double> normal(d.mean.get_d(), d.sd.get_d());
      for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        const double x = normal(engine);
        if (x >= 0.0 && x <= 1.0) return snap_to_dyadic(x);
      }
      invalid("truncated normal rejects nearly all draws; mass on [0,1] too small");
    }
    Rational operator()(const D::Beta& d) const {
      std::gamma_distribution<double> ga(d.alpha.get_d(), 1.0);
      std::gamma_distribution<double> gb(d.beta.get_d(), 1.0);
      const double x = ga(engine);
      const double y = gb(engine);
      const double total = x + y;
      // Both gammas can underflow for tiny shape parameters.
      if (total <= 0.0) return snap_to_dyadic(d.alpha >= d.beta ? 1.0 : 0.0);
      return snap_to_dyadic(x / total);
    }
  };
  return std::visit(Sampler{engine}, dist.kind());
}

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct SampleOutcome {
  std::string label;
  bool degenerate = false;
  bool has_payoff = false;
  std::vector<double> payoff;
  std::vector<double> welfare;
};

void accumulate(StructureStats& stats, const std::vector<const SampleOutcome*>& members,
                std::size_t players, std::size_t total) {
  stats.count = members.size();
  stats.frequency = total == 0 ? 0.0 : static_cast<double>(members.size()) / total;
  stats.mean_payoff.assign(players, 0.0);
  stats.mean_welfare.assign(players, 0.0);
  stats.var_payoff.assign(players, 0.0);
  stats.var_welfare.assign(players, 0.0);
  stats.payoff_samples = 0;
  for (const auto* m : members) {
    if (!m->has_payoff) continue;
    ++stats.payoff_samples;
    for (std::size_t p = 0; p < players; ++p) {
      stats.mean_payoff[p] += m->payoff[p];
      stats.mean_welfare[p] += m->welfare[p];
    }
  }
  if (stats.payoff_samples == 0) return;
  const double n = static_cast<double>(stats.payoff_samples);
  for (std::size_t p = 0; p < players; ++p) {
    stats.mean_payoff[p] /= n;
    stats.mean_welfare[p] /= n;
  }
  for (const auto* m : members) {
    if (!m->has_payoff) continue;
    for (std::size_t p = 0; p < players; ++p) {
      const double dp = m->payoff[p] - stats.mean_payoff[p];
      const double dw = m->welfare[p] - stats.mean_welfare[p];
      stats.var_payoff[p] += dp * dp;
      stats.var_welfare[p] += dw * dw;
    }
  }
  for (std::size_t p = 0; p < players; ++p) {
    stats.var_payoff[p] /= n;
    stats.var_welfare[p] /= n;
  }
}

}  // namespace

RationalityProfile sample_profile(const std::vector<DeltaDistribution>& dists,
                                  std::uint64_t seed, std::uint64_t index) {
  auto engine = sample_engine(seed, index);
  std::vector<Rational> deltas;
  deltas.reserve(dists.size());
  for (const auto& dist : dists) deltas.push_back(draw(dist, engine));
  return RationalityProfile(std::move(deltas));
}

OutcomeDistribution monte_carlo(const StrategicGame& game,
                                const std::vector<DeltaDistribution>& dists,
                                std::size_t samples, std::uint64_t seed,
                                std::size_t threads) {
  if (samples == 0) throw Error(ErrorCode::kUsage, "need at least one sample");
  const std::size_t n = game.num_players();
  if (dists.size() != n) {
    throw Error(ErrorCode::kDimension, "got " + std::to_string(dists.size()) +
                                           " distributions for " + std::to_string(n) +
                                           " players");
  }
  const bool two_by_two = n == 2 && game.num_strategies(0) == 2 && game.num_strategies(1) == 2;

  std::vector<SampleOutcome> outcomes(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    const auto deltas = sample_profile(dists, seed, i);
    const PayoffTensor tensor = compose(game, deltas);
    EquilibriumSet set;
    if (two_by_two) {
      set = solve_2x2(tensor);
    } else {
      set.easy = detect_easy_game(tensor);
      for (const auto& pure : pure_nash(tensor)) {
        auto profile = MixedProfile::pure(tensor.shape(), pure);
        auto payoffs = expected_payoff(tensor, profile);
        set.points.push_back({std::move(profile), std::move(payoffs), {}, EquilibriumKind::kPure});
      }
    }
    attach_true_payoffs(set, game.u());

    SampleOutcome& out = outcomes[i];
    out.label = structure_label(set, game.labels());
    out.degenerate = set.degenerate;
    if (!set.points.empty()) {
      out.has_payoff = true;
      std::vector<Rational> payoff(n, Rational(0));
      std::vector<Rational> welfare(n, Rational(0));
      for (const auto& point : set.points) {
        for (std::size_t p = 0; p < n; ++p) {
          payoff[p] += point.payoffs_actual[p];
          welfare[p] += point.payoffs_true[p];
        }
      }
      const Rational count(static_cast<unsigned long>(set.points.size()));
      for (std::size_t p = 0; p < n; ++p) {
        out.payoff.push_back(Rational(payoff[p] / count).get_d());
        out.welfare.push_back(Rational(welfare[p] / count).get_d());
      }
    }
  });

  OutcomeDistribution result;
  result.samples = samples;
  std::map<std::string, std::vector<const SampleOutcome*>> groups;
  std::vector<const SampleOutcome*> all;
  std::size_t degenerate = 0;
  for (const auto& outcome : outcomes) {
    groups[outcome.label].push_back(&outcome);
    all.push_back(&outcome);
    if (outcome.degenerate) ++degenerate;
  }
  for (const auto& [label, members] : groups) {
    accumulate(result.structures[label], members, n, samples);
  }
  accumulate(result.overall, all, n, samples);
  result.degenerate_fraction = static_cast<double>(degenerate) / samples;
  return result;
}

}  // namespace deltagames
