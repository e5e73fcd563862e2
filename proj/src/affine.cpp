#include "wonder/affine.hpp"

namespace wonder {

std::string Affine::to_string() const {
  std::string out;
  if (per_m != 0) {
    if (per_m == -1)
      out = "-";
    else if (per_m != 1)
      out = std::to_string(per_m);
    out += "m";
  }
  if (constant != 0 || per_m == 0) {
    if (!out.empty() && constant > 0) out += "+";
    out += std::to_string(constant);
  }
  return out;
}

}  // namespace wonder
