#include "polyzeta/rational.hpp"

#include <stdexcept>

namespace pz {

Rat rat_parse(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational: '" + text + "'");
  r.canonicalize();
  return r;
}

Rat binomial_shifted(const Rat& n, unsigned k) {
  Rat acc(1);
  for (unsigned i = 1; i <= k; ++i) {
    Rat f = n + rat(static_cast<long>(i));
    f /= rat(static_cast<long>(i));
    acc *= f;
  }
  return acc;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace pz
