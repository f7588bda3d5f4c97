#include "gitkit/arith.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "gitkit/error.hpp"

namespace gitkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NonPointed: return "non-pointed";
    case ErrorKind::EmptyClass: return "empty-class";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::NotSaturated: return "not-saturated";
    case ErrorKind::NotInjective: return "not-injective";
    case ErrorKind::BoundExhausted: return "bound-exhausted";
    case ErrorKind::NotEffective: return "not-effective";
    case ErrorKind::NotDrawable: return "not-drawable";
  }
  return "unknown";
}

// ---- IntMatrix -----------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorKind::DimensionMismatch, "matrix column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

RatVector IntMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  RatVector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += Rational((*this)(r, c)) * x[c];
  return y;
}

std::size_t IntMatrix::rank() const { return rational_rank(row_list(), cols_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// ---- vectors -------------------------------------------------------------

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different rank");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "sum of vectors of different rank");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "difference of vectors of different rank");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector scale(std::span<const Integer> a, const Integer& k) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return c;
}

IntVector negate(std::span<const Integer> a) { return scale(a, Integer(-1)); }

RatVector to_rational(std::span<const Integer> v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

IntVector primitive_direction(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * Rational(l);
    out[i] = s.get_num();
  }
  return primitive(std::move(out));
}

std::optional<IntVector> to_integer(std::span<const Rational> v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    out[i] = v[i].get_num();
  }
  return out;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e(n, Integer(0));
  e[i] = 1;
  return e;
}

// ---- rational elimination ------------------------------------------------

RowEchelon rref(std::vector<RatVector> rows, std::size_t cols) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    Rational inv = 1 / rows[lead][c];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[lead][k];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

std::size_t rational_rank(std::span<const IntVector> rows, std::size_t cols) {
  std::vector<RatVector> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rref(std::move(r), cols).pivots.size();
}

std::vector<RatVector> rational_nullspace(std::span<const IntVector> rows, std::size_t cols) {
  std::vector<RatVector> r;
  for (const auto& v : rows) r.push_back(to_rational(v));
  RowEchelon e = rref(std::move(r), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve(const IntMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side has wrong length");
  const std::size_t n = a.cols();
  std::vector<RatVector> aug;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    RatVector row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row[c] = Rational(a(r, c));
    row[n] = b[r];
    aug.push_back(std::move(row));
  }
  RowEchelon e = rref(std::move(aug), n + 1);
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][n];
  }
  return x;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---- integer normal forms ------------------------------------------------

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= k * m(src, c);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= k * m(r, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

IntMatrix reverse_columns(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, m.cols() - 1 - c);
  return out;
}

IntMatrix reverse_rows(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(m.rows() - 1 - r, c);
  return out;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::ptrdiff_t target = static_cast<std::ptrdiff_t>(m.rows()) - 1;
  for (std::ptrdiff_t col = static_cast<std::ptrdiff_t>(m.cols()) - 1; col >= 0 && target >= 0; --col) {
    const auto c = static_cast<std::size_t>(col);
    const auto t = static_cast<std::size_t>(target);
    bool found = false;
    for (;;) {
      // Smallest nonzero magnitude among rows 0..t goes to row t.
      std::ptrdiff_t best = -1;
      for (std::size_t r = 0; r <= t; ++r) {
        if (h(r, c) == 0) continue;
        if (best < 0 || abs(h(r, c)) < abs(h(static_cast<std::size_t>(best), c)))
          best = static_cast<std::ptrdiff_t>(r);
      }
      if (best < 0) break;
      found = true;
      swap_rows(h, static_cast<std::size_t>(best), t);
      swap_rows(u, static_cast<std::size_t>(best), t);
      bool clean = true;
      for (std::size_t r = 0; r < t; ++r) {
        if (h(r, c) == 0) continue;
        Integer q = floor_div(h(r, c), h(t, c));
        row_axpy(h, r, t, q);
        row_axpy(u, r, t, q);
        if (h(r, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(t, c) < 0) {
      negate_row(h, t);
      negate_row(u, t);
    }
    for (std::size_t r = t + 1; r < m.rows(); ++r) {
      Integer q = floor_div(h(r, c), h(t, c));
      row_axpy(h, r, t, q);
      row_axpy(u, r, t, q);
    }
    --target;
  }
  return {std::move(h), std::move(u)};
}

HermiteForm upper_hnf(const IntMatrix& m) {
  HermiteForm low = hnf(reverse_columns(m));
  return {reverse_rows(reverse_columns(low.h)), reverse_rows(low.u)};
}

SmithForm snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    std::size_t br = 0, bc = 0;
    bool any = false;
    for (std::size_t r = t; r < m.rows(); ++r)
      for (std::size_t c = t; c < m.cols(); ++c) {
        if (s(r, c) == 0) continue;
        if (!any || abs(s(r, c)) < abs(s(br, bc))) {
          br = r;
          bc = c;
          any = true;
        }
      }
    if (!any) break;
    swap_rows(s, t, br);
    swap_rows(u, t, br);
    swap_cols(s, t, bc);
    swap_cols(v, t, bc);
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (s(r, t) == 0) continue;
        Integer q = floor_div(s(r, t), s(t, t));
        row_axpy(s, r, t, q);
        row_axpy(u, r, t, q);
        if (s(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (s(t, c) == 0) continue;
        Integer q = floor_div(s(t, c), s(t, t));
        col_axpy(s, c, t, q);
        col_axpy(v, c, t, q);
        if (s(t, c) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t into the pivot.
        std::size_t pr = t, pc = t;
        for (std::size_t r = t + 1; r < m.rows(); ++r)
          if (s(r, t) != 0 && abs(s(r, t)) < abs(s(pr, pc))) { pr = r; pc = t; }
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (s(t, c) != 0 && abs(s(t, c)) < abs(s(pr, pc))) { pr = t; pc = c; }
        swap_rows(s, t, pr);
        swap_rows(u, t, pr);
        swap_cols(s, t, pc);
        swap_cols(v, t, pc);
        continue;
      }
      // Divisibility: every trailing entry must be a multiple of the pivot.
      std::ptrdiff_t bad = -1;
      for (std::size_t r = t + 1; r < m.rows() && bad < 0; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (s(r, c) % s(t, t) != 0) {
            bad = static_cast<std::ptrdiff_t>(r);
            break;
          }
      if (bad < 0) break;
      row_axpy(s, t, static_cast<std::size_t>(bad), Integer(-1));
      row_axpy(u, t, static_cast<std::size_t>(bad), Integer(-1));
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  SmithForm f = snf(m);
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (f.s(i, i) != 0) d.push_back(f.s(i, i));
  return d;
}

namespace {

std::vector<IntVector> canonical_rows(std::vector<IntVector> rows, std::size_t n) {
  if (rows.empty()) return rows;
  IntMatrix h = hnf(IntMatrix::from_rows(rows, n)).h;
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    IntVector row = h.row(r);
    if (!is_zero(row)) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntMatrix::identity(n);
  HermiteForm f = hnf(m.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t r = 0; r < f.h.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < f.h.cols(); ++c)
      if (f.h(r, c) != 0) { zero = false; break; }
    if (!zero) break;  // zero rows come first
    kernel.push_back(f.u.row(r));
  }
  kernel = canonical_rows(std::move(kernel), n);
  return IntMatrix::from_columns(kernel, n);
}

std::vector<IntVector> orthogonal_lattice_basis(std::span<const IntVector> vectors, std::size_t n) {
  return kernel_basis(IntMatrix::from_rows(vectors, n)).column_list();
}

std::vector<IntVector> saturated_span_basis(std::span<const IntVector> vectors, std::size_t n) {
  std::vector<IntVector> perp = orthogonal_lattice_basis(vectors, n);
  return orthogonal_lattice_basis(perp, n);
}

IntVector reduce_modulo_lattice(IntVector x, std::span<const IntVector> basis) {
  if (basis.empty()) return x;
  const std::size_t n = x.size();
  IntMatrix h = upper_hnf(IntMatrix::from_rows(basis, n)).h;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < n && h(r, p) == 0) ++p;
    if (p == n) break;  // zero rows are last
    Integer q = floor_div(x[p], h(r, p));
    if (q == 0) continue;
    for (std::size_t c = 0; c < n; ++c) x[c] -= q * h(r, c);
  }
  return x;
}

IntMatrix integral_right_inverse(const IntMatrix& p) {
  const std::size_t r = p.rows();
  const std::size_t n = p.cols();
  if (r == 0) return IntMatrix(n, 0);
  HermiteForm f = hnf(p.transpose());
  // Surjective p gives h = [0; I_r]; the last r rows of u are the section.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Integer expect = (i >= n - r && i - (n - r) == j) ? 1 : 0;
      if (i < n - r ? f.h(i, j) != 0 : f.h(i, j) != expect)
        throw Error(ErrorKind::NotSaturated, "map is not surjective onto the integer lattice");
    }
  std::vector<IntVector> kernel = kernel_basis(p).column_list();
  IntMatrix s(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    IntVector col = reduce_modulo_lattice(f.u.row(n - r + j), kernel);
    for (std::size_t i = 0; i < n; ++i) s(i, j) = col[i];
  }
  return s;
}

bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

}  // namespace gitkit
