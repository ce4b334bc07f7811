#include "toric/linalg.hpp"

#include <algorithm>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

namespace {

void check_rectangular(const Mat& a) {
  for (const Vec& row : a)
    if (row.size() != a.front().size())
      throw DimensionError("matrix is not rectangular");
}

}  // namespace

Int pairing(const Vec& m, const Vec& u) {
  if (m.size() != u.size())
    throw DimensionError("pairing: length " + std::to_string(m.size()) +
                         " vs " + std::to_string(u.size()));
  Int acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * u[i];
  return acc;
}

Rat pairing(const QVec& m, const Vec& u) {
  if (m.size() != u.size())
    throw DimensionError("pairing: length " + std::to_string(m.size()) +
                         " vs " + std::to_string(u.size()));
  Rat acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * Rat(u[i]);
  return acc;
}

Vec primitive(const Vec& v) {
  using boost::multiprecision::gcd;
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw ToricError("primitive: zero vector");
  Vec out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(x / g);
  return out;
}

Mat identity_matrix(int n) {
  Mat a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  check_rectangular(a);
  Mat t(a.front().size(), Vec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  check_rectangular(a);
  check_rectangular(b);
  if (a.front().size() != b.size()) throw DimensionError("mat_mul: shape mismatch");
  Mat c(a.size(), Vec(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec out;
  out.reserve(a.size());
  for (const Vec& row : a) out.push_back(pairing(row, x));
  return out;
}

Int det(const Mat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  check_rectangular(a);
  if (static_cast<int>(a.front().size()) != n)
    throw DimensionError("det: matrix not square");
  Mat m = a;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int rank(const Mat& a) {
  if (a.empty()) return 0;
  check_rectangular(a);
  Mat m = a;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

HnfResult hermite_normal_form(const Mat& a) {
  if (a.empty()) throw DimensionError("hermite_normal_form: empty matrix");
  check_rectangular(a);
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a.front().size());
  Mat h = a;
  Mat u = identity_matrix(rows);

  auto row_sub = [&](int i, int r, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
    for (int j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
  };

  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    // Reduce entries below row r in this column to zero by gcd steps.
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        if (best < 0 || abs(h[i][col]) < abs(h[best][col])) best = i;
      }
      if (best < 0) break;  // column is zero from row r down
      if (best != r) {
        std::swap(h[r], h[best]);
        std::swap(u[r], u[best]);
      }
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        row_sub(i, r, h[i][col] / h[r][col]);  // truncated quotient
        if (h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h[r][col] == 0) continue;
    if (h[r][col] < 0) {
      for (int j = 0; j < cols; ++j) h[r][j] = -h[r][j];
      for (int j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    }
    // Entries above the pivot reduced into [0, pivot).
    for (int i = 0; i < r; ++i) row_sub(i, r, floor_div(h[i][col], h[r][col]));
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SolveResult solve_exact(const Mat& a, const QVec& b) {
  if (a.empty()) throw DimensionError("solve_exact: empty matrix");
  check_rectangular(a);
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a.front().size());
  if (static_cast<int>(b.size()) != rows)
    throw DimensionError("solve_exact: rhs length mismatch");

  // Gauss-Jordan on the augmented matrix over Q.
  std::vector<QVec> aug(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = Rat(a[i][j]);
    aug[i][cols] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[r], aug[piv]);
    Rat p = aug[r][col];
    for (int j = col; j <= cols; ++j) aug[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = col; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return {SolveStatus::inconsistent, {}};
  if (static_cast<int>(pivot_col.size()) < cols)
    return {SolveStatus::underdetermined, {}};
  QVec x(cols);
  for (int i = 0; i < cols; ++i) x[pivot_col[i]] = aug[i][cols];
  return {SolveStatus::ok, std::move(x)};
}

SolveResult solve_exact(const Mat& a, const Vec& b) {
  return solve_exact(a, to_qvec(b));
}

Mat kernel_basis(const Mat& a, int cols) {
  for (const Vec& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw DimensionError("kernel_basis: row length mismatch");
  const int rows = static_cast<int>(a.size());
  std::vector<QVec> m(rows, QVec(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);

  std::vector<int> pivot_of_col(cols, -1);
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat p = m[r][col];
    for (int j = col; j < cols; ++j) m[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[col] = r;
    ++r;
  }

  Mat basis;
  for (int free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    QVec x(cols, Rat(0));
    x[free] = 1;
    for (int col = 0; col < cols; ++col) {
      int pr = pivot_of_col[col];
      if (pr >= 0) x[col] = -m[pr][free];
    }
    // Clear denominators and make primitive.
    Int l = 1;
    for (const Rat& q : x) l = boost::multiprecision::lcm(l, den(q));
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = num(x[j]) * (l / den(x[j]));
    basis.push_back(primitive(v));
  }
  return basis;
}

}  // namespace toric
