#pragma once

#include <cstddef>
#include <vector>

#include "xfkit/rational.hpp"

namespace xfkit {

/// Dense exact row reduction. `rows` are vectors of length `cols`.
struct RowEchelon {
  std::vector<Vector> rows;            // reduced rows, pivot entries equal to 1
  std::vector<std::size_t> pivots;     // pivot column of each reduced row
  std::vector<std::size_t> source;     // index of the input row that produced each reduced row
};

RowEchelon reduce(const std::vector<Vector>& rows, std::size_t cols);

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

/// Basis of { z : <row, z> = 0 for every row }, one vector per free column.
std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t cols);

}  // namespace xfkit
