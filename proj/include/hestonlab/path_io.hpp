#pragma once

#include <filesystem>
#include <iosfwd>

#include "hestonlab/simulate.hpp"

namespace hestonlab {

// CSV with header "t,y,x" and one row per grid point, row 0 holding the
// initial values. Numbers are written with 17 significant digits.
void write_path_csv(std::ostream& out, const XYPath& path);
void write_path_csv(const std::filesystem::path& file, const XYPath& path);

// Throws CsvFormatError on a bad header, malformed numbers, fewer than two
// rows, a nonzero first time or a non-uniform time column.
XYPath read_path_csv(std::istream& in);
XYPath read_path_csv(const std::filesystem::path& file);

}  // namespace hestonlab
