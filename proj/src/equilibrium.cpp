#include "deltagames/equilibrium.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "deltagames/error.hpp"
#include "linear_solve.hpp"

namespace deltagames {

// ---------------------------------------------------------------------------
// MultilinearExpression

Rational MultilinearExpression::evaluate(const std::vector<Rational>& pis) const {
  Rational total = 0;
  for (const auto& [vars, coefficient] : terms) {
    Rational term = coefficient;
    for (std::size_t v : vars) term *= pis.at(v);
    total += term;
  }
  return total;
}

Rational MultilinearExpression::constant() const {
  for (const auto& [vars, coefficient] : terms) {
    if (vars.empty()) return coefficient;
  }
  return 0;
}

Rational MultilinearExpression::linear(std::size_t player) const {
  for (const auto& [vars, coefficient] : terms) {
    if (vars.size() == 1 && vars[0] == player) return coefficient;
  }
  return 0;
}

bool MultilinearExpression::is_affine() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& term) { return term.first.size() <= 1; });
}

std::string MultilinearExpression::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [vars, coefficient] : terms) {
    if (sgn(coefficient) == 0) continue;
    Rational magnitude = abs(coefficient);
    if (first) {
      if (sgn(coefficient) < 0) out << "-";
    } else {
      out << (sgn(coefficient) < 0 ? " - " : " + ");
    }
    first = false;
    if (vars.empty()) {
      out << deltagames::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << deltagames::to_string(magnitude) << "*";
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i > 0) out << "*";
      out << "pi" << vars[i] + 1;
    }
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// ContinuumDescriptor

std::vector<std::size_t> ContinuumDescriptor::free_players() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < players.size(); ++p) {
    if (players[p].free) out.push_back(p);
  }
  return out;
}

MixedProfile ContinuumDescriptor::instantiate(const std::vector<Rational>& pis) const {
  std::vector<std::vector<Rational>> probs;
  for (std::size_t p = 0; p < players.size(); ++p) {
    if (players[p].free) {
      const Rational& pi = pis.at(p);
      if (pi < players[p].pi_lo || pi > players[p].pi_hi) {
        throw Error(ErrorCode::kProbability, "pi outside the continuum's range",
                    "player " + std::to_string(p + 1));
      }
      probs.push_back({pi, 1 - pi});
    } else {
      probs.push_back(players[p].fixed);
    }
  }
  return MixedProfile(std::move(probs));
}

bool ContinuumDescriptor::contains(const MixedProfile& profile) const {
  if (profile.num_players() != players.size()) return false;
  for (std::size_t p = 0; p < players.size(); ++p) {
    if (players[p].free) {
      if (profile[p].size() != 2) return false;
      const Rational& pi = profile[p][0];
      if (pi < players[p].pi_lo || pi > players[p].pi_hi) return false;
    } else if (profile[p] != players[p].fixed) {
      return false;
    }
  }
  return true;
}

std::vector<MixedProfile> ContinuumDescriptor::endpoints() const {
  const auto free = free_players();
  std::vector<MixedProfile> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    std::vector<Rational> pis(players.size(), Rational(0));
    for (std::size_t k = 0; k < free.size(); ++k) {
      const auto& player = players[free[k]];
      pis[free[k]] = (mask >> k) & 1 ? player.pi_hi : player.pi_lo;
    }
    auto profile = instantiate(pis);
    if (std::find(out.begin(), out.end(), profile) == out.end()) {
      out.push_back(std::move(profile));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pure-profile analyses

std::vector<PureProfile> pure_nash(const PayoffTensor& tensor) {
  const std::size_t n = tensor.num_players();
  std::vector<PureProfile> out;
  for (std::size_t flat = 0; flat < tensor.num_profiles(); ++flat) {
    const PureProfile profile = tensor.profile_at(flat);
    bool stable = true;
    for (std::size_t p = 0; p < n && stable; ++p) {
      const std::size_t base = flat - profile[p] * tensor.stride(p);
      for (std::size_t t = 0; t < tensor.num_strategies(p); ++t) {
        if (tensor.at(base + t * tensor.stride(p), p) > tensor.at(flat, p)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(profile);
  }
  return out;
}

std::optional<Dominance> dominant_strategy(const PayoffTensor& tensor,
                                           std::size_t player) {
  if (player >= tensor.num_players()) {
    throw Error(ErrorCode::kIndex, "no such player", "player " + std::to_string(player + 1));
  }
  const std::size_t count = tensor.num_strategies(player);
  const std::size_t stride = tensor.stride(player);
  std::optional<Dominance> weak;
  for (std::size_t s = 0; s < count; ++s) {
    bool strict = true;
    bool weakly = true;
    for (std::size_t flat = 0; flat < tensor.num_profiles() && weakly; ++flat) {
      if ((flat / stride) % count != s) continue;
      const std::size_t base = flat - s * stride;
      for (std::size_t t = 0; t < count; ++t) {
        if (t == s) continue;
        const int order = cmp(tensor.at(flat, player), tensor.at(base + t * stride, player));
        if (order < 0) weakly = false;
        if (order <= 0) strict = false;
      }
    }
    if (strict) return Dominance{s, DominanceKind::kStrict};
    if (weakly && !weak) weak = Dominance{s, DominanceKind::kWeak};
  }
  return weak;
}

bool detect_easy_game(const PayoffTensor& tensor) {
  for (std::size_t p = 0; p < tensor.num_players(); ++p) {
    const std::size_t count = tensor.num_strategies(p);
    const std::size_t stride = tensor.stride(p);
    for (std::size_t flat = 0; flat < tensor.num_profiles(); ++flat) {
      if ((flat / stride) % count != 0) continue;
      for (std::size_t t = 1; t < count; ++t) {
        if (tensor.at(flat + t * stride, p) != tensor.at(flat, p)) return false;
      }
    }
  }
  return true;
}

template <class T>
static bool verify_impl(const PayoffTensor& tensor, const BasicMixedProfile<T>& profile,
                        const T& slack) {
  for (std::size_t p = 0; p < tensor.num_players(); ++p) {
    const auto dev = deviation_payoffs(tensor, profile, p);
    T current(0);
    for (std::size_t s = 0; s < dev.size(); ++s) current += profile[p][s] * dev[s];
    for (const auto& value : dev) {
      if (value - current > slack) return false;
    }
  }
  return true;
}

bool verify_equilibrium(const PayoffTensor& tensor, const MixedProfile& profile,
                        const Rational& slack) {
  if (sgn(slack) < 0) throw Error(ErrorCode::kUsage, "slack must be nonnegative");
  return verify_impl(tensor, profile, slack);
}

bool verify_equilibrium(const PayoffTensor& tensor, const MixedProfileF& profile,
                        double slack) {
  if (slack < 0) throw Error(ErrorCode::kUsage, "slack must be nonnegative");
  return verify_impl(tensor, profile, slack);
}

// ---------------------------------------------------------------------------
// Ordering

namespace {

std::vector<std::vector<StrategyIndex>> supports(const MixedProfile& profile) {
  std::vector<std::vector<StrategyIndex>> out;
  for (std::size_t p = 0; p < profile.num_players(); ++p) out.push_back(profile.support(p));
  return out;
}

std::size_t support_size(const MixedProfile& profile) {
  std::size_t total = 0;
  for (std::size_t p = 0; p < profile.num_players(); ++p) total += profile.support(p).size();
  return total;
}

// Pure before mixed (smaller total support first), then supports
// lexicographically, then probability vectors.
bool profile_less(const MixedProfile& a, const MixedProfile& b) {
  const auto size_a = support_size(a);
  const auto size_b = support_size(b);
  if (size_a != size_b) return size_a < size_b;
  const auto sa = supports(a);
  const auto sb = supports(b);
  if (sa != sb) return sa < sb;
  for (std::size_t p = 0; p < a.num_players(); ++p) {
    for (std::size_t s = 0; s < a[p].size(); ++s) {
      // Higher weight on earlier strategies sorts first.
      if (a[p][s] != b[p][s]) return a[p][s] > b[p][s];
    }
  }
  return false;
}

bool continuum_less(const ContinuumDescriptor& a, const ContinuumDescriptor& b) {
  const auto fa = a.free_players();
  const auto fb = b.free_players();
  if (fa.size() != fb.size()) return fa.size() < fb.size();
  if (fa != fb) return fa < fb;
  for (std::size_t p = 0; p < a.players.size(); ++p) {
    const auto& pa = a.players[p];
    const auto& pb = b.players[p];
    if (pa.free) {
      if (pa.pi_lo != pb.pi_lo) return pa.pi_lo < pb.pi_lo;
      if (pa.pi_hi != pb.pi_hi) return pa.pi_hi < pb.pi_hi;
    } else {
      for (std::size_t s = 0; s < pa.fixed.size(); ++s) {
        if (pa.fixed[s] != pb.fixed[s]) return pa.fixed[s] > pb.fixed[s];
      }
    }
  }
  return false;
}

EquilibriumPoint make_point(const PayoffTensor& tensor, MixedProfile profile) {
  EquilibriumPoint point{std::move(profile), {}, {}, EquilibriumKind::kPure};
  point.payoffs_actual = expected_payoff(tensor, point.profile);
  point.kind = point.profile.is_pure() ? EquilibriumKind::kPure : EquilibriumKind::kMixed;
  return point;
}

void sort_set(EquilibriumSet& set) {
  std::sort(set.points.begin(), set.points.end(),
            [](const auto& a, const auto& b) { return profile_less(a.profile, b.profile); });
  std::sort(set.continua.begin(), set.continua.end(), continuum_less);
}

void check_two_players(const PayoffTensor& tensor, const char* what) {
  if (tensor.num_players() != 2) {
    throw Error(ErrorCode::kDomain, std::string(what) + " needs exactly 2 players, got " +
                                        std::to_string(tensor.num_players()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// 2x2 analysis

namespace {

// Closed axis-aligned box in (p, q) space; p and q are the probabilities the
// row and column player put on their first strategy.
struct Box {
  Rational p_lo, p_hi, q_lo, q_hi;

  bool contains(const Box& o) const {
    return p_lo <= o.p_lo && o.p_hi <= p_hi && q_lo <= o.q_lo && o.q_hi <= q_hi;
  }
  bool operator==(const Box&) const = default;
};

std::optional<Box> intersect(const Box& a, const Box& b) {
  Box out{std::max(a.p_lo, b.p_lo), std::min(a.p_hi, b.p_hi), std::max(a.q_lo, b.q_lo),
          std::min(a.q_hi, b.q_hi)};
  if (out.p_lo > out.p_hi || out.q_lo > out.q_hi) return std::nullopt;
  return out;
}

// {t in [0,1] : c0 + c1 t >= 0} as a closed interval, if nonempty.
std::optional<std::pair<Rational, Rational>> nonnegative_range(const Rational& c0,
                                                               const Rational& c1) {
  if (sgn(c1) == 0) {
    if (sgn(c0) >= 0) return std::make_pair(Rational(0), Rational(1));
    return std::nullopt;
  }
  Rational root = -c0 / c1;
  if (sgn(c1) > 0) {
    if (root > 1) return std::nullopt;
    return std::make_pair(std::max(root, Rational(0)), Rational(1));
  }
  if (root < 0) return std::nullopt;
  return std::make_pair(Rational(0), std::min(root, Rational(1)));
}

// Graph of one player's best-response correspondence as a union of boxes.
// `gain` is (c0, c1): own first strategy minus second strategy, as an affine
// function of the opponent's probability t. `row_player` selects which axis
// is the player's own.
std::vector<Box> best_response_graph(const Rational& c0, const Rational& c1, bool row_player) {
  auto make = [&](Rational own_lo, Rational own_hi, Rational opp_lo, Rational opp_hi) {
    return row_player ? Box{own_lo, own_hi, opp_lo, opp_hi}
                      : Box{opp_lo, opp_hi, own_lo, own_hi};
  };
  std::vector<Box> out;
  if (sgn(c0) == 0 && sgn(c1) == 0) {
    out.push_back(make(0, 1, 0, 1));
    return out;
  }
  if (auto plus = nonnegative_range(c0, c1)) out.push_back(make(1, 1, plus->first, plus->second));
  if (auto minus = nonnegative_range(-c0, -c1)) {
    out.push_back(make(0, 0, minus->first, minus->second));
  }
  if (sgn(c1) != 0) {
    Rational root = -c0 / c1;
    if (root >= 0 && root <= 1) out.push_back(make(0, 1, root, root));
  }
  return out;
}

MixedProfile profile_from(const Rational& p, const Rational& q) {
  return MixedProfile({{p, 1 - p}, {q, 1 - q}});
}

}  // namespace

EquilibriumSet solve_2x2(const PayoffTensor& tensor) {
  if (tensor.num_players() != 2 || tensor.num_strategies(0) != 2 ||
      tensor.num_strategies(1) != 2) {
    throw Error(ErrorCode::kDomain, "solve_2x2 needs a 2x2 game");
  }
  auto a = [&](std::size_t r, std::size_t c) -> const Rational& {
    return tensor.at(PureProfile{r, c}, 0);
  };
  auto b = [&](std::size_t r, std::size_t c) -> const Rational& {
    return tensor.at(PureProfile{r, c}, 1);
  };
  // Row player's gain from row 0 over row 1 at column mix q: r0 + r1 q.
  const Rational r0 = a(0, 1) - a(1, 1);
  const Rational r1 = (a(0, 0) - a(1, 0)) - r0;
  // Column player's gain from column 0 over column 1 at row mix p: k0 + k1 p.
  const Rational k0 = b(1, 0) - b(1, 1);
  const Rational k1 = (b(0, 0) - b(0, 1)) - k0;

  EquilibriumSet set;
  set.degenerate = sgn(r0) == 0 || sgn(r0 + r1) == 0 || sgn(k0) == 0 || sgn(k0 + k1) == 0;
  set.easy = sgn(r0) == 0 && sgn(r1) == 0 && sgn(k0) == 0 && sgn(k1) == 0;

  std::vector<Box> pieces;
  for (const auto& row_box : best_response_graph(r0, r1, true)) {
    for (const auto& col_box : best_response_graph(k0, k1, false)) {
      if (auto box = intersect(row_box, col_box)) pieces.push_back(*box);
    }
  }
  // Keep only maximal pieces.
  std::vector<Box> maximal;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < pieces.size() && !covered; ++j) {
      if (i == j || !pieces[j].contains(pieces[i])) continue;
      // Identical boxes: keep the first occurrence only.
      covered = pieces[i] != pieces[j] || j < i;
    }
    if (!covered) maximal.push_back(pieces[i]);
  }

  std::vector<MixedProfile> vertices;
  auto add_vertex = [&](MixedProfile profile) {
    if (std::find(vertices.begin(), vertices.end(), profile) == vertices.end()) {
      vertices.push_back(std::move(profile));
    }
  };
  for (const auto& box : maximal) {
    const bool p_fixed = box.p_lo == box.p_hi;
    const bool q_fixed = box.q_lo == box.q_hi;
    add_vertex(profile_from(box.p_lo, box.q_lo));
    add_vertex(profile_from(box.p_hi, box.q_lo));
    add_vertex(profile_from(box.p_lo, box.q_hi));
    add_vertex(profile_from(box.p_hi, box.q_hi));
    if (p_fixed && q_fixed) continue;

    ContinuumDescriptor continuum;
    continuum.players.resize(2);
    auto describe = [](ContinuumPlayer& player, const Rational& lo, const Rational& hi) {
      if (lo == hi) {
        player.fixed = {lo, 1 - lo};
      } else {
        player.free = true;
        player.pi_lo = lo;
        player.pi_hi = hi;
      }
    };
    describe(continuum.players[0], box.p_lo, box.p_hi);
    describe(continuum.players[1], box.q_lo, box.q_hi);
    for (std::size_t p = 0; p < 2; ++p) {
      continuum.payoffs_actual.push_back(continuum_payoff(tensor, continuum, p));
    }
    set.continua.push_back(std::move(continuum));
  }
  for (auto& vertex : vertices) set.points.push_back(make_point(tensor, std::move(vertex)));
  sort_set(set);
  return set;
}

// ---------------------------------------------------------------------------
// Support enumeration

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

// Mix for `mixer` over `mixer_support` that makes `indifferent` indifferent
// across `indifferent_support`. Returns nullopt for inconsistent systems and
// reports whether a consistent system was underdetermined.
std::optional<std::vector<Rational>> indifference_mix(
    const PayoffTensor& tensor, std::size_t indifferent,
    const std::vector<std::size_t>& indifferent_support,
    const std::vector<std::size_t>& mixer_support, bool& singular) {
  const std::size_t k = mixer_support.size();
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (std::size_t own : indifferent_support) {
    std::vector<Rational> row;
    for (std::size_t other : mixer_support) {
      PureProfile profile = indifferent == 0 ? PureProfile{own, other} : PureProfile{other, own};
      row.push_back(tensor.at(profile, indifferent));
    }
    row.push_back(-1);
    matrix.push_back(std::move(row));
    rhs.push_back(0);
  }
  std::vector<Rational> normalization(k, Rational(1));
  normalization.push_back(0);
  matrix.push_back(std::move(normalization));
  rhs.push_back(1);

  auto solution = detail::solve_linear(std::move(matrix), std::move(rhs));
  using Status = detail::LinearSolution::Status;
  if (solution.status == Status::kInconsistent) return std::nullopt;
  if (solution.status == Status::kUnderdetermined) singular = true;
  solution.x.pop_back();  // the value variable
  for (const auto& x : solution.x) {
    if (sgn(x) < 0) return std::nullopt;
  }
  return solution.x;
}

}  // namespace

EquilibriumSet support_enumeration(const PayoffTensor& tensor) {
  check_two_players(tensor, "support_enumeration");
  const std::size_t rows = tensor.num_strategies(0);
  const std::size_t cols = tensor.num_strategies(1);

  EquilibriumSet set;
  set.easy = detect_easy_game(tensor);
  std::vector<MixedProfile> found;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const auto row_sets = subsets_of_size(rows, k);
    const auto col_sets = subsets_of_size(cols, k);
    for (const auto& row_support : row_sets) {
      for (const auto& col_support : col_sets) {
        bool singular = false;
        auto y = indifference_mix(tensor, 0, row_support, col_support, singular);
        auto x = y ? indifference_mix(tensor, 1, col_support, row_support, singular)
                   : std::nullopt;
        if (!x || !y) continue;

        std::vector<Rational> row_mix(rows, Rational(0));
        std::vector<Rational> col_mix(cols, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
          row_mix[row_support[i]] = (*x)[i];
          col_mix[col_support[i]] = (*y)[i];
        }
        MixedProfile profile({std::move(row_mix), std::move(col_mix)});
        if (!verify_equilibrium(tensor, profile)) continue;
        // An underdetermined system that still yields an equilibrium means a
        // whole face of equilibria through this support pair.
        if (singular) set.degenerate = true;
        if (std::find(found.begin(), found.end(), profile) == found.end()) {
          found.push_back(std::move(profile));
        }
      }
    }
  }
  for (auto& profile : found) {
    for (std::size_t p = 0; p < 2; ++p) {
      if (best_response_set(tensor, profile, p).size() > profile.support(p).size()) {
        set.degenerate = true;
      }
    }
    set.points.push_back(make_point(tensor, std::move(profile)));
  }
  sort_set(set);
  return set;
}

// ---------------------------------------------------------------------------
// Dispatch and annotation

EquilibriumSet solve(const PayoffTensor& tensor) {
  if (tensor.num_players() == 2) {
    if (tensor.num_strategies(0) == 2 && tensor.num_strategies(1) == 2) {
      return solve_2x2(tensor);
    }
    return support_enumeration(tensor);
  }
  EquilibriumSet set;
  set.easy = detect_easy_game(tensor);
  for (const auto& pure : pure_nash(tensor)) {
    set.points.push_back(make_point(tensor, MixedProfile::pure(tensor.shape(), pure)));
  }
  return set;
}

EquilibriumSet solve_game(const StrategicGame& game, const RationalityProfile& deltas) {
  EquilibriumSet set = solve(compose(game, deltas));
  attach_true_payoffs(set, game.u());
  return set;
}

MultilinearExpression continuum_payoff(const PayoffTensor& tensor,
                                       const ContinuumDescriptor& continuum,
                                       std::size_t player) {
  const auto free = continuum.free_players();
  // Corner values f(S): free players in S at pi = 1, the rest at pi = 0. The
  // multilinear coefficients follow by Moebius inversion over subsets.
  // Corners may lie outside the continuum's range, so evaluate directly.
  auto corner_value = [&](std::size_t mask) {
    std::vector<std::vector<Rational>> probs;
    for (std::size_t p = 0; p < continuum.players.size(); ++p) {
      const auto& cp = continuum.players[p];
      if (!cp.free) {
        probs.push_back(cp.fixed);
        continue;
      }
      const auto k = static_cast<std::size_t>(std::find(free.begin(), free.end(), p) - free.begin());
      Rational pi = (mask >> k) & 1 ? 1 : 0;
      probs.push_back({pi, 1 - pi});
    }
    return expected_payoff(tensor, MixedProfile(std::move(probs)))[player];
  };
  const std::size_t corners = std::size_t{1} << free.size();
  std::vector<Rational> values(corners);
  for (std::size_t mask = 0; mask < corners; ++mask) values[mask] = corner_value(mask);

  MultilinearExpression expression;
  for (std::size_t term = 0; term < corners; ++term) {
    Rational coefficient = 0;
    for (std::size_t sub = term;; sub = (sub - 1) & term) {
      const int parity = std::popcount(term) - std::popcount(sub);
      if (parity % 2 == 0) {
        coefficient += values[sub];
      } else {
        coefficient -= values[sub];
      }
      if (sub == 0) break;
    }
    if (sgn(coefficient) == 0 && term != 0) continue;
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((term >> k) & 1) vars.push_back(free[k]);
    }
    expression.terms.emplace_back(std::move(vars), coefficient);
  }
  std::stable_sort(expression.terms.begin(), expression.terms.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  return expression;
}

void attach_true_payoffs(EquilibriumSet& set, const PayoffTensor& u) {
  for (auto& point : set.points) point.payoffs_true = expected_payoff(u, point.profile);
  for (auto& continuum : set.continua) {
    continuum.payoffs_true.clear();
    for (std::size_t p = 0; p < continuum.players.size(); ++p) {
      continuum.payoffs_true.push_back(continuum_payoff(u, continuum, p));
    }
  }
}

std::string structure_label(const EquilibriumSet& set,
                            const std::vector<std::vector<std::string>>& labels) {
  if (set.easy) return "all-profiles";
  auto join_support = [&](std::size_t player, const std::vector<Rational>& mix) {
    std::string out;
    for (std::size_t s = 0; s < mix.size(); ++s) {
      if (sgn(mix[s]) <= 0) continue;
      if (!out.empty()) out += "+";
      out += labels[player][s];
    }
    return out;
  };
  std::vector<std::string> tokens;
  for (const auto& point : set.points) {
    const bool on_continuum =
        std::any_of(set.continua.begin(), set.continua.end(),
                    [&](const auto& c) { return c.contains(point.profile); });
    if (on_continuum) continue;
    std::string token = "(";
    for (std::size_t p = 0; p < point.profile.num_players(); ++p) {
      if (p > 0) token += ",";
      token += join_support(p, point.profile[p]);
    }
    tokens.push_back(token + ")");
  }
  for (const auto& continuum : set.continua) {
    std::string token = "(";
    for (std::size_t p = 0; p < continuum.players.size(); ++p) {
      if (p > 0) token += ",";
      const auto& cp = continuum.players[p];
      token += cp.free ? "*" : join_support(p, cp.fixed);
    }
    tokens.push_back(token + ")");
  }
  if (tokens.empty()) return "none";
  std::string out = tokens[0];
  for (std::size_t i = 1; i < tokens.size(); ++i) out += " | " + tokens[i];
  return out;
}

}  // namespace deltagames
