#pragma once

// Exact integer and rational linear algebra over GMP.
//
// Row Hermite normal form convention (used everywhere, golden files depend on
// it): h = u * m where each nonzero row of h has its pivot at its LAST
// nonzero entry, pivot columns strictly increase down the rows, zero rows come
// first, pivots are positive and every entry below a pivot lies in
// [0, pivot). For square nonsingular input this is lower triangular.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gitkit {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;
  std::vector<IntVector> column_list() const;

  IntMatrix transpose() const;
  IntVector apply(std::span<const Integer> x) const;
  RatVector apply(std::span<const Rational> x) const;
  std::size_t rank() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// ---- vectors -------------------------------------------------------------

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Integer content(std::span<const Integer> v);  // gcd of entries, >= 0
bool is_zero(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);
IntVector primitive(IntVector v);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector subtract(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(std::span<const Integer> a, const Integer& k);
IntVector negate(std::span<const Integer> a);
RatVector to_rational(std::span<const Integer> v);

// Smallest positive integer multiple of v (primitive direction).
IntVector primitive_direction(std::span<const Rational> v);
// Exact integer vector if every entry is integral.
std::optional<IntVector> to_integer(std::span<const Rational> v);

IntVector unit_vector(std::size_t n, std::size_t i);

// ---- rational elimination ------------------------------------------------

struct RowEchelon {
  std::vector<RatVector> rows;        // reduced row echelon form, nonzero rows
  std::vector<std::size_t> pivots;    // pivot column per row
};

RowEchelon rref(std::vector<RatVector> rows, std::size_t cols);
std::size_t rational_rank(std::span<const IntVector> rows, std::size_t cols);
// Basis (over Q) of {x : rows * x = 0}.
std::vector<RatVector> rational_nullspace(std::span<const IntVector> rows, std::size_t cols);
// Some x with a * x = b, if one exists.
std::optional<RatVector> solve(const IntMatrix& a, std::span<const Rational> b);
Integer determinant(const IntMatrix& m);

// ---- integer normal forms ------------------------------------------------

struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

HermiteForm hnf(const IntMatrix& m);
// Standard upper echelon: pivot at the first nonzero entry, zero rows last,
// entries above each pivot reduced into [0, pivot).
HermiteForm upper_hnf(const IntMatrix& m);
SmithForm snf(const IntMatrix& m);
std::vector<Integer> invariant_factors(const IntMatrix& m);

// Columns form a basis of the integer kernel {x in Z^cols : m x = 0}, in
// canonical (HNF) form.
IntMatrix kernel_basis(const IntMatrix& m);

// Canonical basis (rows) of Z^n ∩ span_Q(vectors).
std::vector<IntVector> saturated_span_basis(std::span<const IntVector> vectors, std::size_t n);
// Canonical basis (rows) of the integer vectors orthogonal to every vector.
std::vector<IntVector> orthogonal_lattice_basis(std::span<const IntVector> vectors, std::size_t n);

// Integral right inverse s of a surjective p : Z^n -> Z^r (p * s = I_r), each
// column reduced to its canonical representative modulo ker p.
IntMatrix integral_right_inverse(const IntMatrix& p);

// Canonical representative of x modulo the lattice spanned by `basis` rows.
IntVector reduce_modulo_lattice(IntVector x, std::span<const IntVector> basis);

bool is_unimodular(const IntMatrix& m);

}  // namespace gitkit
