#pragma once

#include <initializer_list>
#include <ostream>
#include <string>

namespace oam::csv {

/// One numeric CSV field: 12 significant digits, '.' decimal separator;
/// infinities print as the literal token "inf" so files stay loadable by
/// standard tabular tools.
std::string field(double value);

/// Comma-joined fields with an LF terminator.
void write_row(std::ostream& out, std::initializer_list<double> values);

}  // namespace oam::csv
