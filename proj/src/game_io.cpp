#include "deltagames/game_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "deltagames/error.hpp"
#include "json.hpp"

namespace deltagames {

using json = nlohmann::json;

namespace {

// DOM builder that keeps the source text of floating-point literals as
// strings, so 0.1 stays exactly 1/10.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_float(json::number_float_t, const json::string_t& raw) {
    json::string_t copy = raw;
    return Base::string(copy);
  }
};

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string child(const std::string& pointer, const std::string& key) {
  return pointer + "/" + key;
}
std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

Rational read_number(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) {
      return value.is_number_unsigned() ? Rational(std::to_string(value.get<std::uint64_t>()))
                                        : Rational(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kBadNumber, e.what(), where);
  }
  throw Error(ErrorCode::kBadNumber, "expected a number", where);
}

class DocumentReader {
 public:
  DocumentReader(const json& root, const std::map<std::string, Rational>& overrides)
      : root_(root), overrides_(overrides) {}

  GameDocument read() {
    if (!root_.is_object()) throw Error(ErrorCode::kSyntax, "game document must be an object", "/");
    static const std::set<std::string> known = {"schema_version", "name",    "players",
                                                "strategies",     "parameters", "U",
                                                "D",              "deltas",  "distributions"};
    for (const auto& [key, value] : root_.items()) {
      if (!known.contains(key)) {
        throw Error(ErrorCode::kUnknownKey, "unknown key '" + key + "'", child("", key));
      }
    }

    const int version = read_version();
    std::string name;
    if (root_.contains("name")) {
      if (!root_["name"].is_string()) throw Error(ErrorCode::kSyntax, "name must be a string", "/name");
      name = root_["name"].get<std::string>();
    }
    auto labels = read_strategies();
    const std::size_t n = labels.size();
    auto players = read_players(n);
    read_parameters();

    std::vector<std::size_t> shape;
    for (const auto& l : labels) shape.push_back(l.size());
    PayoffTensor u(shape, read_table("U", shape));
    PayoffTensor d(shape, read_table("D", shape));
    StrategicGame game(std::move(labels), std::move(u), std::move(d));

    GameDocument document{version, std::move(name), std::move(players), parameters_,
                          std::move(game), std::nullopt, {}};
    if (root_.contains("deltas")) document.deltas = read_deltas(n);
    if (root_.contains("distributions")) document.distributions = read_distributions(n);
    return document;
  }

 private:
  const json& required(const std::string& key) {
    if (!root_.contains(key)) {
      throw Error(ErrorCode::kMissingKey, "missing required key '" + key + "'", "/");
    }
    return root_[key];
  }

  int read_version() {
    const json& v = required("schema_version");
    if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion) {
      throw Error(ErrorCode::kSchemaVersion,
                  "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")",
                  "/schema_version");
    }
    return kSchemaVersion;
  }

  std::vector<std::vector<std::string>> read_strategies() {
    const json& s = required("strategies");
    if (!s.is_array() || s.empty()) {
      throw Error(ErrorCode::kShape, "strategies must be a nonempty array of arrays", "/strategies");
    }
    std::vector<std::vector<std::string>> labels;
    for (std::size_t p = 0; p < s.size(); ++p) {
      const std::string where = child("/strategies", p);
      if (!s[p].is_array() || s[p].empty()) {
        throw Error(ErrorCode::kShape, "each player needs a nonempty strategy list", where);
      }
      std::vector<std::string> list;
      std::set<std::string> seen;
      for (std::size_t k = 0; k < s[p].size(); ++k) {
        if (!s[p][k].is_string()) {
          throw Error(ErrorCode::kSyntax, "strategy label must be a string", child(where, k));
        }
        auto label = s[p][k].get<std::string>();
        if (label.empty() || label.find_first_of(";,") != std::string::npos) {
          throw Error(ErrorCode::kSyntax, "strategy labels must be nonempty and free of ';' and ','",
                      child(where, k));
        }
        if (!seen.insert(label).second) {
          throw Error(ErrorCode::kDuplicateLabel, "duplicate strategy label '" + label + "'",
                      child(where, k));
        }
        list.push_back(std::move(label));
      }
      labels.push_back(std::move(list));
    }
    return labels;
  }

  std::vector<std::string> read_players(std::size_t n) {
    std::vector<std::string> players;
    if (!root_.contains("players")) {
      for (std::size_t p = 0; p < n; ++p) players.push_back("Player " + std::to_string(p + 1));
      return players;
    }
    const json& list = root_["players"];
    if (!list.is_array() || list.size() != n) {
      throw Error(ErrorCode::kShape, "players must list one name per strategy set", "/players");
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (!list[p].is_string()) {
        throw Error(ErrorCode::kSyntax, "player name must be a string", child("/players", p));
      }
      players.push_back(list[p].get<std::string>());
    }
    return players;
  }

  void read_parameters() {
    if (root_.contains("parameters")) {
      const json& params = root_["parameters"];
      if (!params.is_object()) {
        throw Error(ErrorCode::kSyntax, "parameters must be an object", "/parameters");
      }
      for (const auto& [key, value] : params.items()) {
        if (key.empty() || !(std::isalpha(static_cast<unsigned char>(key[0])) || key[0] == '_')) {
          throw Error(ErrorCode::kSyntax, "parameter names must start with a letter",
                      child("/parameters", key));
        }
        parameters_[key] = read_number(value, child("/parameters", key));
      }
    }
    for (const auto& [key, value] : overrides_) {
      if (!parameters_.contains(key)) {
        throw Error(ErrorCode::kUnknownParameter,
                    "override for undeclared parameter '" + key + "'", "/parameters");
      }
      parameters_[key] = value;
    }
  }

  Rational read_cell(const json& value, const std::string& where) {
    if (value.is_string()) {
      std::string text = value.get<std::string>();
      bool negate = false;
      std::string name = text;
      if (!name.empty() && name[0] == '-') {
        negate = true;
        name.erase(0, 1);
      }
      if (!name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        auto it = parameters_.find(name);
        if (it == parameters_.end()) {
          throw Error(ErrorCode::kUnknownParameter, "unknown parameter '" + name + "'", where);
        }
        return negate ? Rational(-it->second) : it->second;
      }
    }
    return read_number(value, where);
  }

  std::vector<Rational> read_table(const std::string& key, const std::vector<std::size_t>& shape) {
    const json& table = required(key);
    const std::size_t n = shape.size();
    std::size_t profiles = 1;
    for (auto s : shape) profiles *= s;
    std::vector<Rational> entries(profiles * n);
    std::size_t flat = 0;
    auto recurse = [&](auto&& self, const json& node, std::size_t depth,
                       const std::string& where) -> void {
      if (depth == n) {
        if (!node.is_array() || node.size() != n) {
          throw Error(ErrorCode::kShape,
                      "expected " + std::to_string(n) + " payoffs (one per player)", where);
        }
        for (std::size_t p = 0; p < n; ++p) {
          entries[flat * n + p] = read_cell(node[p], child(where, p));
        }
        ++flat;
        return;
      }
      if (!node.is_array() || node.size() != shape[depth]) {
        throw Error(ErrorCode::kShape,
                    "expected " + std::to_string(shape[depth]) + " entries for player " +
                        std::to_string(depth + 1) + "'s strategies",
                    where);
      }
      for (std::size_t k = 0; k < shape[depth]; ++k) self(self, node[k], depth + 1, child(where, k));
    };
    recurse(recurse, table, 0, "/" + key);
    return entries;
  }

  RationalityProfile read_deltas(std::size_t n) {
    const json& list = root_["deltas"];
    if (!list.is_array() || list.size() != n) {
      throw Error(ErrorCode::kShape, "deltas must list one value per player", "/deltas");
    }
    std::vector<Rational> values;
    for (std::size_t p = 0; p < n; ++p) {
      values.push_back(read_number(list[p], child("/deltas", p)));
      if (values.back() < 0 || values.back() > 1) {
        throw Error(ErrorCode::kDeltaRange, "delta " + to_string(values.back()) + " outside [0,1]",
                    child("/deltas", p));
      }
    }
    return RationalityProfile(std::move(values));
  }

  std::vector<DeltaDistribution> read_distributions(std::size_t n) {
    const json& list = root_["distributions"];
    if (!list.is_array() || list.size() != n) {
      throw Error(ErrorCode::kShape, "distributions must list one spec per player",
                  "/distributions");
    }
    std::vector<DeltaDistribution> out;
    for (std::size_t p = 0; p < n; ++p) {
      if (!list[p].is_string()) {
        throw Error(ErrorCode::kSyntax, "distribution must be a string", child("/distributions", p));
      }
      try {
        out.push_back(DeltaDistribution::parse(list[p].get<std::string>()));
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), child("/distributions", p));
      }
    }
    return out;
  }

  const json& root_;
  const std::map<std::string, Rational>& overrides_;
  std::map<std::string, Rational> parameters_;
};

json number_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return json(static_cast<std::int64_t>(value.get_num().get_si()));
  }
  return json(to_string(value));
}

}  // namespace

bool GameDocument::operator==(const GameDocument& other) const {
  if (distributions.size() != other.distributions.size()) return false;
  for (std::size_t i = 0; i < distributions.size(); ++i) {
    if (distributions[i].to_string() != other.distributions[i].to_string()) return false;
  }
  return schema_version == other.schema_version && name == other.name &&
         players == other.players && parameters == other.parameters && game == other.game &&
         deltas == other.deltas;
}

GameDocument parse_game(const std::string& text, const std::map<std::string, Rational>& overrides) {
  json root;
  ExactNumberSax sax(root, true);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix.
    if (auto pos = message.find(": "); pos != std::string::npos) message = message.substr(pos + 2);
    throw Error(ErrorCode::kSyntax, message, line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  return DocumentReader(root, overrides).read();
}

GameDocument load_game(const std::string& path, const std::map<std::string, Rational>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kUsage, "cannot open game file", path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_game(buffer.str(), overrides);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), path);
  }
}

std::string emit_game(const GameDocument& document) {
  const auto& game = document.game;
  const std::size_t n = game.num_players();
  json root = json::object();
  root["schema_version"] = document.schema_version;
  root["name"] = document.name;
  root["players"] = document.players;
  root["strategies"] = game.labels();
  if (!document.parameters.empty()) {
    json params = json::object();
    for (const auto& [key, value] : document.parameters) params[key] = number_json(value);
    root["parameters"] = std::move(params);
  }
  auto table = [&](const PayoffTensor& tensor) {
    auto build = [&](auto&& self, std::size_t depth, std::size_t base) -> json {
      json node = json::array();
      if (depth == n) {
        for (std::size_t p = 0; p < n; ++p) node.push_back(number_json(tensor.at(base, p)));
        return node;
      }
      for (std::size_t k = 0; k < tensor.num_strategies(depth); ++k) {
        node.push_back(self(self, depth + 1, base + k * tensor.stride(depth)));
      }
      return node;
    };
    return build(build, 0, 0);
  };
  root["U"] = table(game.u());
  root["D"] = table(game.d());
  if (document.deltas) {
    json list = json::array();
    for (const auto& d : document.deltas->values()) list.push_back(number_json(d));
    root["deltas"] = std::move(list);
  }
  if (!document.distributions.empty()) {
    json list = json::array();
    for (const auto& d : document.distributions) list.push_back(d.to_string());
    root["distributions"] = std::move(list);
  }
  return root.dump(2) + "\n";
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string token = text.substr(start, comma - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    out.push_back(parse_rational(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

MixedProfile parse_profile(const StrategicGame& game, const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto semi = spec.find(';', start);
    parts.push_back(spec.substr(start, semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (parts.size() != game.num_players()) {
    throw Error(ErrorCode::kShape, "profile names " + std::to_string(parts.size()) +
                                       " players, game has " + std::to_string(game.num_players()));
  }
  std::vector<std::vector<Rational>> probs;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& labels = game.labels(p);
    auto it = std::find(labels.begin(), labels.end(), parts[p]);
    if (it != labels.end()) {
      std::vector<Rational> mix(labels.size(), Rational(0));
      mix[static_cast<std::size_t>(it - labels.begin())] = 1;
      probs.push_back(std::move(mix));
      continue;
    }
    auto mix = parse_rational_list(parts[p]);
    if (mix.size() != labels.size()) {
      throw Error(ErrorCode::kShape, "mixed strategy needs " + std::to_string(labels.size()) +
                                         " probabilities", "player " + std::to_string(p + 1));
    }
    probs.push_back(std::move(mix));
  }
  return MixedProfile(std::move(probs));
}

std::string format_profile(const StrategicGame& game, const MixedProfile& profile) {
  std::string out;
  for (std::size_t p = 0; p < profile.num_players(); ++p) {
    if (p > 0) out += ";";
    const auto support = profile.support(p);
    if (support.size() == 1) {
      out += game.labels(p)[support[0]];
      continue;
    }
    for (std::size_t s = 0; s < profile[p].size(); ++s) {
      if (s > 0) out += ",";
      out += to_string(profile[p][s]);
    }
  }
  return out;
}

}  // namespace deltagames
