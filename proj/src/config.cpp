#include "levyopt/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "levyopt/errors.hpp"

namespace levyopt {

namespace {

using nlohmann::json;

double require_number(const json& object, const std::string& key, const std::string& where) {
  if (!object.contains(key))
    throw ConfigError(where + ": missing required field \"" + key + "\"");
  const json& value = object.at(key);
  if (!value.is_number())
    throw ConfigError(where + ": field \"" + key + "\" must be a number");
  return value.get<double>();
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known) throw ConfigError(where + ": unknown field \"" + item.key() + "\"");
  }
}

}  // namespace

MarketModel model_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config is not valid JSON: ") + err.what());
  }
  if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");
  reject_unknown_keys(root, {"b", "c", "atoms", "T", "x0", "p"}, "config");

  MarketModel model;
  model.triplet.drift = require_number(root, "b", "config");
  model.triplet.diffusion = require_number(root, "c", "config");
  model.horizon = require_number(root, "T", "config");
  model.initial_wealth = require_number(root, "x0", "config");
  model.utility.relative_risk_aversion = require_number(root, "p", "config");

  if (!root.contains("atoms")) throw ConfigError("config: missing required field \"atoms\"");
  const json& atoms = root.at("atoms");
  if (!atoms.is_array()) throw ConfigError("config: field \"atoms\" must be an array");
  model.triplet.atoms.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const json& entry = atoms[i];
    std::ostringstream where;
    where << "config: atoms[" << i << "]";
    if (!entry.is_object()) throw ConfigError(where.str() + " must be an object");
    reject_unknown_keys(entry, {"x", "lambda"}, where.str());
    JumpAtom atom;
    atom.size = require_number(entry, "x", where.str());
    atom.intensity = require_number(entry, "lambda", where.str());
    model.triplet.atoms.push_back(atom);
  }
  return model;
}

MarketModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

}  // namespace levyopt
