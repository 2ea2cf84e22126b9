#include "relspin/format.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "relspin/errors.hpp"

namespace relspin {

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "cannot format double");
  return std::string(buf, end);
}

namespace {

std::vector<std::string> header_of(const ScanTable& t) {
  std::vector<std::string> names;
  for (const auto& [name, value] : t.constants) names.push_back(name);
  for (const auto& axis : t.axes) names.push_back(axis.name);
  for (const auto& col : t.columns) names.push_back(col.name);
  names.emplace_back("status");
  return names;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ScanTable> tables) {
  if (tables.empty()) throw Error(ErrorCode::InvalidArgument, "no scan tables to serialize");
  const auto header = header_of(tables.front());
  for (const auto& t : tables) {
    if (header_of(t) != header) {
      throw Error(ErrorCode::InvalidArgument, "scan tables with different layouts cannot share a CSV");
    }
  }

  out << "# kind: " << tables.front().kind << '\n';
  for (const auto& [key, value] : tables.front().metadata) out << "# " << key << ": " << value << '\n';

  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';

  for (const auto& t : tables) {
    const std::size_t points = t.point_count();
    for (const auto& col : t.columns) {
      if (col.values.size() != points) {
        throw Error(ErrorCode::DimensionMismatch, "column " + col.name + " does not match the grid size");
      }
    }
    for (std::size_t p = 0; p < points; ++p) {
      bool first = true;
      const auto field = [&](const std::string& s) {
        out << (first ? "" : ",") << s;
        first = false;
      };
      for (const auto& [name, value] : t.constants) field(format_double(value));
      for (const double c : t.coordinates(p)) field(format_double(c));
      bool gap = false;
      for (const auto& col : t.columns) {
        if (col.values[p]) {
          field(format_double(*col.values[p]));
        } else {
          field("");
          gap = true;
        }
      }
      field(gap ? "degenerate" : "ok");
      out << '\n';
    }
  }
}

std::string to_csv(std::span<const ScanTable> tables) {
  std::ostringstream out;
  write_csv(out, tables);
  return out.str();
}

std::string to_csv(const ScanTable& table) { return to_csv(std::span<const ScanTable>(&table, 1)); }

}  // namespace relspin
