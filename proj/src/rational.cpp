#include "cyclocover/rational.hpp"

#include <stdexcept>

namespace cyclocover {

Rational rational_from_string(const std::string& s) {
  mpq_class r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace cyclocover
