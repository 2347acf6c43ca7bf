#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hpineq/linalg/matrix.hpp"

namespace hpineq {

// Matrix document:
//   {"dim": m, "entries": [[re, im], ...]}    (m*m pairs, row-major)
// Numbers are written with 17 significant digits, so write -> parse is
// bit-exact for every finite double.
std::string format_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::string_view text);

ComplexMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

// printf("%.17g") of a double; shared by every text writer in the project.
std::string format_double(double x);

}  // namespace hpineq
