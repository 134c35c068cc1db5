#include "satake/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace satake {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

std::string extrat_to_string(const ExtRat& r) {
  if (r.is_neg_inf()) return "-inf";
  return rat_to_string(r.value());
}

ExtRat extrat_from_string(const std::string& s) {
  if (s == "-inf") return ExtRat::neg_inf();
  return ExtRat(rat_from_string(s));
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Vec zero_vec(int n) { return Vec(n, Rat(0)); }

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
  return r;
}

Mat identity(int n) {
  Mat m(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat r(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

Vec primitive(const Vec& v) {
  Int den = 1;
  for (const Rat& x : v) den = lcm(den, denominator(x));
  Int g = 0;
  std::vector<Int> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (den / denominator(v[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) return v;
  int sign = 1;
  for (const Int& x : ints) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] * sign, g);
  return r;
}

int rref(Mat& m) {
  if (m.empty()) return 0;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat p = m[rank][col];
    for (int c = 0; c < cols; ++c) m[rank][c] /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

int rank_of(Mat m) { return rref(m); }

Mat kernel_basis(const Mat& m) {
  if (m.empty()) return {};
  int cols = (int)m[0].size();
  Mat r = m;
  int rank = rref(r);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < rank; ++i) {
    for (int c = 0; c < cols; ++c)
      if (r[i][c] != 0) {
        pivot_col[i] = c;
        is_pivot[c] = true;
        break;
      }
  }
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(cols);
    v[c] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -r[i][c];
    basis.push_back(primitive(v));
  }
  return basis;
}

Mat inverse(const Mat& m) {
  int n = (int)m.size();
  Mat aug(n, Vec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  if (rref(aug) != n) throw std::invalid_argument("inverse: singular matrix");
  Mat inv(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

namespace {

// Column-style Hermite reduction of an integer matrix A (rows x cols),
// tracking the unimodular transform U with A' = A U. Columns of U under
// zero columns of A' span the saturated kernel lattice.
void hermite_columns(std::vector<std::vector<Int>>& a,
                     std::vector<std::vector<Int>>& u) {
  int rows = a.empty() ? 0 : (int)a.size();
  int cols = rows == 0 ? (int)u.size() : (int)a[0].size();
  int pivot_col = 0;
  for (int row = 0; row < rows && pivot_col < cols; ++row) {
    // Euclidean elimination across columns pivot_col..cols-1 in this row.
    while (true) {
      int nonzero = -1;
      for (int c = pivot_col; c < cols; ++c)
        if (a[row][c] != 0) {
          if (nonzero < 0 ||
              abs(a[row][c]) < abs(a[row][nonzero]))
            nonzero = c;
        }
      if (nonzero < 0) break;
      // Swap minimal column into pivot position.
      if (nonzero != pivot_col) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][nonzero], a[r][pivot_col]);
        for (size_t r = 0; r < u.size(); ++r)
          std::swap(u[r][nonzero], u[r][pivot_col]);
      }
      bool done = true;
      for (int c = pivot_col + 1; c < cols; ++c) {
        if (a[row][c] == 0) continue;
        Int q = a[row][c] / a[row][pivot_col];
        for (int r = 0; r < rows; ++r) a[r][c] -= q * a[r][pivot_col];
        for (size_t r = 0; r < u.size(); ++r) u[r][c] -= q * u[r][pivot_col];
        if (a[row][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[row][pivot_col] != 0) ++pivot_col;
  }
}

}  // namespace

std::pair<Mat, Mat> integer_kernel_and_complement(const Mat& m) {
  int rows = (int)m.size();
  int cols = rows == 0 ? 0 : (int)m[0].size();
  if (cols == 0) return {};
  // Scale rows to integers.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i) {
    Int den = 1;
    for (int j = 0; j < cols; ++j) den = lcm(den, denominator(m[i][j]));
    for (int j = 0; j < cols; ++j)
      a[i][j] = numerator(m[i][j]) * (den / denominator(m[i][j]));
  }
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;
  hermite_columns(a, u);
  Mat kernel, complement;
  for (int c = 0; c < cols; ++c) {
    bool zero_col = true;
    for (int r = 0; r < rows; ++r)
      if (a[r][c] != 0) {
        zero_col = false;
        break;
      }
    Vec v(cols);
    for (int r = 0; r < cols; ++r) v[r] = Rat(u[r][c]);
    (zero_col ? kernel : complement).push_back(v);
  }
  return {kernel, complement};
}

Mat integer_kernel_basis(const Mat& m) {
  return integer_kernel_and_complement(m).first;
}

std::optional<Vec> solve(Mat m, Vec b) {
  int rows = (int)m.size();
  int cols = rows == 0 ? 0 : (int)m[0].size();
  Mat aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  rref(aug);
  Vec x = zero_vec(cols);
  for (int i = 0; i < rows; ++i) {
    int lead = -1;
    for (int c = 0; c <= cols; ++c)
      if (aug[i][c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    if (lead == cols) return std::nullopt;  // 0 = nonzero
    x[lead] = aug[i][cols];
  }
  return x;
}

bool vec_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace satake
