#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "relspin/bell.hpp"

namespace relspin {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Serializes scan tables sharing one column layout: '#'-prefixed metadata
/// lines, one header row, then one row per grid point (constants, axis
/// coordinates, values, status). Gaps are written as an empty field with
/// status "degenerate". Lines end in '\n'.
void write_csv(std::ostream& out, std::span<const ScanTable> tables);
std::string to_csv(std::span<const ScanTable> tables);
std::string to_csv(const ScanTable& table);

}  // namespace relspin
