#ifndef DELTAGAMES_GAME_IO_HPP
#define DELTAGAMES_GAME_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltagames/game.hpp"
#include "deltagames/variable_rationality.hpp"

namespace deltagames {

inline constexpr int kSchemaVersion = 1;

// A game file. Payoff cells are numbers, exact number strings ("3/4",
// "0.8") or references to a named parameter ("x", "-x").
struct GameDocument {
  int schema_version = kSchemaVersion;
  std::string name;
  std::vector<std::string> players;
  std::map<std::string, Rational> parameters;
  StrategicGame game;
  std::optional<RationalityProfile> deltas;
  std::vector<DeltaDistribution> distributions;  // empty or one per player

  bool operator==(const GameDocument& other) const;
};

// Strict parse of a JSON game document. `overrides` replace the values of
// parameters declared in the document before tables are resolved.
GameDocument parse_game(const std::string& text,
                        const std::map<std::string, Rational>& overrides = {});
GameDocument load_game(const std::string& path,
                       const std::map<std::string, Rational>& overrides = {});

// Canonical JSON for a document; parameters are kept, payoff cells are
// written as resolved exact values.
std::string emit_game(const GameDocument& document);

// Players separated by ';'. Each player is a strategy label or a
// comma-separated probability vector: "D;C", "2/3,1/3;swerve".
MixedProfile parse_profile(const StrategicGame& game, const std::string& spec);
std::string format_profile(const StrategicGame& game, const MixedProfile& profile);

// Comma-separated exact numbers, e.g. "1/2,3/4".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace deltagames

#endif  // DELTAGAMES_GAME_IO_HPP
