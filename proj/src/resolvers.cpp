#include "metdim/host.hpp"

#include <stdexcept>

namespace metdim {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::metric: return "metric";
    case Kind::edge: return "edge";
    default: return "mixed";
  }
}

Kind kind_from_string(const std::string& s) {
  if (s == "metric") return Kind::metric;
  if (s == "edge") return Kind::edge;
  if (s == "mixed") return Kind::mixed;
  throw std::invalid_argument("unknown kind \"" + s + "\" (metric|edge|mixed)");
}

}  // namespace metdim
