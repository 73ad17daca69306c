// matrix_io.hpp — plain-text matrix serialization for debugging and oracle
// comparison: one row per line, space-separated, round-trip-exact decimals.
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace sheafcent {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);

// Throws ParseError on ragged rows or non-numeric tokens; empty input is a
// 0x0 matrix.
Eigen::MatrixXd read_matrix(std::istream& in);

}  // namespace sheafcent
