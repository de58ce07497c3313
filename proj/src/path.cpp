#include "sde/path.hpp"

#include <stdexcept>

namespace sde {

const char* to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::euler:
      return "euler";
    case SchemeKind::tamed:
      return "tamed";
    case SchemeKind::semidiscrete:
      return "semidiscrete";
  }
  return "unknown";
}

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "euler") return SchemeKind::euler;
  if (name == "tamed") return SchemeKind::tamed;
  if (name == "semidiscrete") return SchemeKind::semidiscrete;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected euler, tamed or semidiscrete)");
}

}  // namespace sde
