#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sde/grid.hpp"

namespace sde {

enum class SchemeKind { euler, tamed, semidiscrete };

const char* to_string(SchemeKind kind);

// Parses "euler" | "tamed" | "semidiscrete"; throws std::invalid_argument
// otherwise.
SchemeKind scheme_from_string(const std::string& name);

// Discrete trajectory of one scheme on one grid: values[k] approximates the
// state at node t_k, values[0] is the initial condition. Non-finite entries
// are legal and mark divergence.
struct SchemePath {
  TimeGrid grid;
  std::vector<double> values;  // length grid.steps + 1
  SchemeKind scheme_label = SchemeKind::euler;
  std::int64_t path_index = 0;
  std::uint64_t stream_seed = 0;
};

}  // namespace sde
