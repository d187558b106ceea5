#include "hestonlab/path_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "hestonlab/error.hpp"
#include "hestonlab/text.hpp"

namespace hestonlab {

void write_path_csv(std::ostream& out, const XYPath& path) {
    out << "t,y,x\n";
    for (std::size_t k = 0; k < path.y.size(); ++k) {
        out << format_double(path.grid.time(k)) << ',' << format_double(path.y[k]) << ','
            << format_double(path.x[k]) << '\n';
    }
}

void write_path_csv(const std::filesystem::path& file, const XYPath& path) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw HestonError(ErrorCode::IoError, "cannot open " + file.string() + " for writing");
    write_path_csv(out, path);
    if (!out) throw HestonError(ErrorCode::IoError, "write failed for " + file.string());
}

XYPath read_path_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "t,y,x") {
        throw HestonError(ErrorCode::CsvFormatError, "expected header 't,y,x'");
    }

    std::vector<double> t, y, x;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            throw HestonError(ErrorCode::CsvFormatError, "line " + std::to_string(line_no) + ": expected 3 fields");
        }
        const auto tv = parse_double(fields[0]);
        const auto yv = parse_double(fields[1]);
        const auto xv = parse_double(fields[2]);
        if (!tv || !yv || !xv) {
            throw HestonError(ErrorCode::CsvFormatError, "line " + std::to_string(line_no) + ": malformed number");
        }
        t.push_back(*tv);
        y.push_back(*yv);
        x.push_back(*xv);
    }

    if (t.size() < 2) throw HestonError(ErrorCode::CsvFormatError, "a path needs at least two rows");
    if (t.front() != 0.0) throw HestonError(ErrorCode::CsvFormatError, "first time must be 0");

    const std::size_t steps = t.size() - 1;
    const double horizon = t.back();
    if (!(horizon > 0.0)) throw HestonError(ErrorCode::CsvFormatError, "time column must increase");
    const TimeGrid grid = TimeGrid::create(horizon, steps);
    for (std::size_t k = 0; k <= steps; ++k) {
        if (std::abs(t[k] - grid.time(k)) > 1e-9 * horizon) {
            throw HestonError(ErrorCode::CsvFormatError,
                              "time column is not a uniform grid at row " + std::to_string(k));
        }
    }
    return XYPath{grid, std::move(y), std::move(x), std::nullopt};
}

XYPath read_path_csv(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw HestonError(ErrorCode::IoError, "cannot open " + file.string());
    return read_path_csv(in);
}

}  // namespace hestonlab
