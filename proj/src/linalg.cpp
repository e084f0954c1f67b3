#include "xfkit/linalg.hpp"

namespace xfkit {

RowEchelon reduce(const std::vector<Vector>& input, std::size_t cols) {
  RowEchelon out;
  std::vector<Vector> work = input;
  std::vector<std::size_t> origin(work.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < work.size(); ++col) {
    std::size_t p = next;
    while (p < work.size() && work[p][col].is_zero()) ++p;
    if (p == work.size()) continue;
    std::swap(work[p], work[next]);
    std::swap(origin[p], origin[next]);
    const Rational inv = Rational(1) / work[next][col];
    for (std::size_t j = col; j < cols; ++j) work[next][j] *= inv;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == next || work[i][col].is_zero()) continue;
      const Rational f = work[i][col];
      for (std::size_t j = col; j < cols; ++j) work[i][j].sub_mul(f, work[next][j]);
    }
    out.pivots.push_back(col);
    out.source.push_back(origin[next]);
    ++next;
  }
  work.resize(next);
  out.rows = std::move(work);
  return out;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) { return reduce(rows, cols).pivots.size(); }

std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t cols) {
  const RowEchelon e = reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector z(cols);
    z[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) z[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace xfkit
