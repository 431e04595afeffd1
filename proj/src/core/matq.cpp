#include "core/matq.hpp"

#include "core/error.hpp"

namespace valkit {

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_columns(const std::vector<std::vector<Rat>>& cols) {
  if (cols.empty()) return MatQ();
  MatQ m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows)
      fail(ErrCode::dimension, "ragged column list");
    for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

MatQ MatQ::from_int_columns(
    const std::vector<std::vector<std::int64_t>>& cols) {
  if (cols.empty()) return MatQ();
  MatQ m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows)
      fail(ErrCode::dimension, "ragged column list");
    for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

MatQ MatQ::transpose() const {
  MatQ t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns false when m is singular. rhs may be
// empty (determinant only). det_out receives the determinant of m.
bool eliminate(MatQ m, MatQ* rhs, Rat* det_out) {
  if (m.rows != m.cols) fail(ErrCode::dimension, "matrix is not square");
  std::size_t n = m.rows;
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) {
      if (det_out) *det_out = 0;
      return false;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m.at(piv, c), m.at(col, c));
      if (rhs)
        for (std::size_t c = 0; c < rhs->cols; ++c)
          std::swap(rhs->at(piv, c), rhs->at(col, c));
      d = -d;
    }
    Rat p = m.at(col, col);
    d *= p;
    for (std::size_t c = 0; c < n; ++c) m.at(col, c) /= p;
    if (rhs)
      for (std::size_t c = 0; c < rhs->cols; ++c) rhs->at(col, c) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
      if (rhs)
        for (std::size_t c = 0; c < rhs->cols; ++c)
          rhs->at(r, c) -= f * rhs->at(col, c);
    }
  }
  if (det_out) *det_out = d;
  return true;
}

}  // namespace

Rat det(const MatQ& m) {
  Rat d;
  eliminate(m, nullptr, &d);
  return d;
}

std::optional<MatQ> inverse(const MatQ& m) {
  MatQ rhs = MatQ::identity(m.rows);
  if (!eliminate(m, &rhs, nullptr)) return std::nullopt;
  return rhs;
}

std::optional<std::vector<Rat>> solve(const MatQ& m,
                                      const std::vector<Rat>& b) {
  if (b.size() != m.rows)
    fail(ErrCode::dimension, "rhs length does not match matrix");
  MatQ rhs(m.rows, 1);
  for (std::size_t r = 0; r < m.rows; ++r) rhs.at(r, 0) = b[r];
  if (!eliminate(m, &rhs, nullptr)) return std::nullopt;
  std::vector<Rat> x(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) x[r] = rhs.at(r, 0);
  return x;
}

std::vector<Rat> mat_vec(const MatQ& m, const std::vector<Rat>& x) {
  if (x.size() != m.cols)
    fail(ErrCode::dimension, "vector length does not match matrix");
  std::vector<Rat> y(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    Rat s = 0;
    for (std::size_t c = 0; c < m.cols; ++c) s += m.at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

}  // namespace valkit
