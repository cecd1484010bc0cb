#pragma once

#include "normkit/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace normkit {

// I/O failure (missing file, parse error); CLI maps this to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// JSON matrix document {"rows": r, "cols": c, "data": [[re, im], ...]},
/// row-major. Numbers written with 17 significant digits.
CMatrix read_matrix_json(const std::string& path);
void write_matrix_json(const std::string& path, const CMatrix& m);

/// Matrix Market "array complex general" import.
CMatrix read_matrix_market(const std::string& path);

/// Dispatch on content: Matrix Market banner or JSON.
CMatrix read_matrix_auto(const std::string& path);

/// Trajectory CSV with header "t,index,re,im".
void write_trajectory_csv(std::ostream& os,
                          const std::vector<std::pair<double, CVector>>& paths);

std::string format_double(double v);  // %.17g

}  // namespace normkit
