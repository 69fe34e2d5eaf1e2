#include "oamsense/csv.hpp"

#include <cmath>
#include <cstdio>

namespace oam::csv {

std::string field(double value) {
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) {
      out << ',';
    }
    out << field(v);
    first = false;
  }
  out << '\n';
}

}  // namespace oam::csv
