#include "qnc/matrix.hpp"

#include <algorithm>
#include <utility>

namespace qnc {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    require(row.size() == cols_, "ragged matrix initializer");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  require(cols_ == o.rows_, "matrix product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  IntMat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r = *this;
  for (auto& v : r.a_) v = -v;
  return r;
}

IntVec IntMat::apply(const IntVec& x) const {
  require(x.size() == cols_, "matrix apply shape mismatch");
  IntVec y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

bool IntMat::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

IntMat IntMat::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
  IntMat r(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      r.at(i, j) = at(row_idx[i], col_idx[j]);
  return r;
}

Int bareiss_det(IntMat m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m.at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

void normalize_row_gcd(IntMat& m, std::size_t i) {
  Int g(0);
  for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m.at(i, j));
  if (g > 1)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_divexact(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank(IntMat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    normalize_row_gcd(m, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Int a = m.at(r, c), b = m.at(i, c), g = gcd(a, b);
      Int fa = b / g, fb = a / g;
      for (std::size_t j = c; j < cols; ++j)
        m.at(i, j) = fb * m.at(i, j) - fa * m.at(r, j);
      normalize_row_gcd(m, i);
    }
    ++r;
  }
  return r;
}

IntMat row_hnf(IntMat m, IntMat* transform) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMat u = IntMat::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Clear column c below row r by pairwise extended-gcd row combinations.
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      if (m.at(r, c) == 0) {
        m.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 m.at(r, c).get_mpz_t(), m.at(i, c).get_mpz_t());
      Int a_div = m.at(r, c) / g, b_div = m.at(i, c) / g;
      for (std::size_t j = 0; j < cols; ++j) {
        Int mr = m.at(r, j), mi = m.at(i, j);
        m.at(r, j) = p * mr + q * mi;
        m.at(i, j) = a_div * mi - b_div * mr;
      }
      for (std::size_t j = 0; j < rows; ++j) {
        Int ur = u.at(r, j), ui = u.at(i, j);
        u.at(r, j) = p * ur + q * ui;
        u.at(i, j) = a_div * ui - b_div * ur;
      }
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0) {
      for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
      for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
      if (q != 0) {
        m.add_row(i, r, -q);
        u.add_row(i, r, -q);
      }
    }
    ++r;
  }
  if (transform) *transform = std::move(u);
  return m;
}

IntMat integer_kernel(const IntMat& m) {
  IntMat u;
  IntMat h = row_hnf(m.transpose(), &u);
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols() && zero; ++j) zero = h.at(i, j) == 0;
    if (zero) zero_rows.push_back(i);
  }
  IntMat basis(zero_rows.size(), m.cols());
  for (std::size_t i = 0; i < zero_rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      basis.at(i, j) = u.at(zero_rows[i], j);
  return row_hnf(std::move(basis));
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
  require(b.size() == m.rows(), "solve shape mismatch");
  IntMat u;
  IntMat h = row_hnf(m.transpose(), &u);  // h = u * m^T, so m = h^T u^{-T}
  IntVec residual = b;
  IntVec y(h.rows(), Int(0));
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(i, p) == 0) ++p;
    if (p == h.cols()) break;  // zero rows follow
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[p].get_mpz_t(),
                h.at(i, p).get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[i] = q;
    for (std::size_t j = 0; j < h.cols(); ++j) residual[j] -= q * h.at(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  // x = u^T y
  IntVec x(m.cols(), Int(0));
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (y[i] != 0)
      for (std::size_t j = 0; j < u.cols(); ++j) x[j] += y[i] * u.at(i, j);
  return x;
}

IntMat unimodular_inverse(const IntMat& m) {
  ensure(m.rows() == m.cols(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  IntMat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, Int(0));
    e[j] = 1;
    auto col = solve_integer(m, e);
    ensure(col.has_value(), "matrix is not unimodular");
    for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = (*col)[i];
  }
  return inv;
}

Int dot(const IntVec& x, const IntVec& y) {
  require(x.size() == y.size(), "dot shape mismatch");
  Int s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

IntVec operator+(const IntVec& x, const IntVec& y) {
  require(x.size() == y.size(), "vector sum shape mismatch");
  IntVec r = x;
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

IntVec operator-(const IntVec& x, const IntVec& y) {
  require(x.size() == y.size(), "vector difference shape mismatch");
  IntVec r = x;
  for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  return r;
}

IntVec scale(const Int& c, const IntVec& x) {
  IntVec r = x;
  for (auto& v : r) v *= c;
  return r;
}

bool is_zero(const IntVec& x) {
  return std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
}

}  // namespace qnc
