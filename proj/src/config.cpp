#include "sde/config.hpp"

#include <algorithm>
#include <sstream>

namespace sde {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + value +
                      "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::int64_t x = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an integer, got '" +
                      value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    const std::uint64_t x = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key +
                      "': expected a nonnegative integer, got '" + value +
                      "'");
  }
}

void apply(ExperimentSpec& spec, const std::string& key,
           const std::string& value) {
  if (key == "theta") {
    spec.theta = parse_double(key, value);
  } else if (key == "c") {
    spec.c = parse_double(key, value);
  } else if (key == "q") {
    spec.q = static_cast<int>(parse_int(key, value));
  } else if (key == "sigma") {
    spec.sigma = parse_double(key, value);
  } else if (key == "x0") {
    spec.x0 = parse_double(key, value);
  } else if (key == "T") {
    spec.horizon = parse_double(key, value);
  } else if (key == "n") {
    spec.steps = parse_int(key, value);
  } else if (key == "fine_n") {
    spec.fine_steps = parse_int(key, value);
  } else if (key == "levels") {
    spec.levels.clear();
    for (const std::string& item : split_list(value)) {
      spec.levels.push_back(parse_int(key, item));
    }
  } else if (key == "M") {
    spec.paths = parse_int(key, value);
  } else if (key == "p") {
    spec.p = parse_double(key, value);
  } else if (key == "master_seed") {
    spec.master_seed = parse_uint(key, value);
  } else if (key == "path_index") {
    spec.path_index = parse_int(key, value);
  } else if (key == "scheme") {
    try {
      spec.scheme = scheme_from_string(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("key 'scheme': ") + e.what());
    }
  } else if (key == "schemes") {
    std::vector<SchemeKind> parsed;
    for (const std::string& item : split_list(value)) {
      SchemeKind kind;
      try {
        kind = scheme_from_string(item);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("key 'schemes': ") + e.what());
      }
      if (std::find(parsed.begin(), parsed.end(), kind) == parsed.end()) {
        parsed.push_back(kind);
      }
    }
    spec.schemes = std::move(parsed);
  } else if (key == "out") {
    spec.out = value;
  } else if (key == "workers") {
    spec.workers = static_cast<int>(parse_int(key, value));
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void validate(const ExperimentSpec& spec) {
  if (spec.q < 3 || spec.q % 2 == 0) {
    throw ConfigError("q must be odd >= 3, got " + std::to_string(spec.q));
  }
  if (spec.c < 0.0) {
    throw ConfigError("c must be >= 0, got " + std::to_string(spec.c));
  }
  if (!(spec.horizon > 0.0)) {
    throw ConfigError("T must be > 0, got " + std::to_string(spec.horizon));
  }
  if (spec.steps < 1) {
    throw ConfigError("n must be >= 1, got " + std::to_string(spec.steps));
  }
  if (spec.paths < 1) {
    throw ConfigError("M must be >= 1, got " + std::to_string(spec.paths));
  }
  if (!(spec.p >= 2.0)) {
    throw ConfigError("p must be >= 2, got " + std::to_string(spec.p));
  }
  if (spec.path_index < 0) {
    throw ConfigError("path_index must be >= 0");
  }
  if (spec.workers < 1) {
    throw ConfigError("workers must be >= 1");
  }
  for (std::int64_t n : spec.levels) {
    if (n < 1) {
      throw ConfigError("levels entries must be >= 1, got " +
                        std::to_string(n));
    }
  }
  if (spec.fine_steps < 0) {
    throw ConfigError("fine_n must be >= 1 when set");
  }
}

}  // namespace

const char* to_string(Command command) {
  switch (command) {
    case Command::simulate:
      return "simulate";
    case Command::figure1:
      return "figure1";
    case Command::figure2:
      return "figure2";
    case Command::converge:
      return "converge";
    case Command::moments:
      return "moments";
  }
  return "unknown";
}

Command command_from_string(const std::string& name) {
  if (name == "simulate") return Command::simulate;
  if (name == "figure1") return Command::figure1;
  if (name == "figure2") return Command::figure2;
  if (name == "converge") return Command::converge;
  if (name == "moments") return Command::moments;
  throw ConfigError("unknown command '" + name +
                    "' (expected simulate, figure1, figure2, converge or "
                    "moments)");
}

SdeProblem ExperimentSpec::problem() const {
  return power_linear_problem(theta, c, q, sigma, x0, horizon);
}

ExperimentSpec parse_config(const std::string& text) {
  return resolve_spec(text, {});
}

ExperimentSpec resolve_spec(
    const std::string& config_text,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  ExperimentSpec spec;
  std::stringstream ss(config_text);
  std::string line;
  int line_number = 0;
  while (std::getline(ss, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected 'key = value', got '" + line + "'");
    }
    apply(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  for (const auto& [key, value] : overrides) {
    apply(spec, key, value);
  }
  validate(spec);
  return spec;
}

void validate_for(const ExperimentSpec& spec, Command command) {
  switch (command) {
    case Command::converge:
      if (spec.levels.empty()) {
        throw ConfigError("converge requires a nonempty 'levels' list");
      }
      if (spec.fine_steps < 1) {
        throw ConfigError("converge requires fine_n >= 1");
      }
      for (std::int64_t n : spec.levels) {
        if (spec.fine_steps % n != 0) {
          throw ConfigError("every coarse n must divide fine_n: " +
                            std::to_string(n) + " does not divide " +
                            std::to_string(spec.fine_steps));
        }
      }
      break;
    case Command::figure2:
      if (!(spec.x0 > 0.0)) {
        throw ConfigError("positivity analysis requires x0 > 0, got " +
                          std::to_string(spec.x0));
      }
      break;
    case Command::simulate:
      if (spec.schemes.empty()) {
        throw ConfigError("simulate requires a nonempty 'schemes' list");
      }
      break;
    case Command::figure1:
    case Command::moments:
      break;
  }
}

}  // namespace sde
