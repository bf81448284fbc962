#ifndef DELTAGAMES_VARIABLE_RATIONALITY_HPP
#define DELTAGAMES_VARIABLE_RATIONALITY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "deltagames/game.hpp"

namespace deltagames {

// Distribution of one player's rationality index on [0,1].
class DeltaDistribution {
 public:
  struct Point { Rational value; };
  struct Uniform { Rational lo, hi; };
  // Normal(mean, sd) conditioned on [0,1].
  struct TruncatedNormal { Rational mean, sd; };
  struct Beta { Rational alpha, beta; };
  using Kind = std::variant<Point, Uniform, TruncatedNormal, Beta>;

  static DeltaDistribution point(Rational value);
  static DeltaDistribution uniform(Rational lo, Rational hi);
  static DeltaDistribution truncated_normal(Rational mean, Rational sd);
  static DeltaDistribution beta(Rational alpha, Rational beta);
  // "point(3/4)", "uniform(0,1)", "normal(1/2,1/10)", "beta(2,5)".
  static DeltaDistribution parse(const std::string& spec);

  const Kind& kind() const { return kind_; }
  std::string to_string() const;

 private:
  explicit DeltaDistribution(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

// Independent draws, one per player. Sample `index` of a run with `seed`
// always uses the same random stream. Continuous draws are snapped to
// multiples of 2^-32.
RationalityProfile sample_profile(const std::vector<DeltaDistribution>& dists,
                                  std::uint64_t seed, std::uint64_t index = 0);

struct StructureStats {
  std::size_t count = 0;
  double frequency = 0;
  // Per player, averaged over samples; each sample contributes the mean over
  // its extreme equilibria. Samples with no equilibrium point are skipped.
  std::size_t payoff_samples = 0;
  std::vector<double> mean_payoff;
  std::vector<double> var_payoff;
  std::vector<double> mean_welfare;
  std::vector<double> var_welfare;
};

struct OutcomeDistribution {
  std::size_t samples = 0;
  std::map<std::string, StructureStats> structures;  // keyed by structure label
  StructureStats overall;
  double degenerate_fraction = 0;
};

OutcomeDistribution monte_carlo(const StrategicGame& game,
                                const std::vector<DeltaDistribution>& dists,
                                std::size_t samples, std::uint64_t seed,
                                std::size_t threads = 0);

}  // namespace deltagames

#endif  // DELTAGAMES_VARIABLE_RATIONALITY_HPP
