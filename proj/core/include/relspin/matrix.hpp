#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace relspin {

using cplx = std::complex<double>;

/// Dense complex vector (two-component spinors, Dirac spinors, pair states).
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : data_(dim, cplx{0.0, 0.0}) {}
  CVector(std::initializer_list<cplx> entries) : data_(entries) {}
  explicit CVector(std::vector<cplx> entries) : data_(std::move(entries)) {}

  std::size_t dim() const noexcept { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  std::span<const cplx> entries() const noexcept { return data_; }

  double norm() const;
  CVector normalized() const;

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(cplx s);

  friend CVector operator+(CVector a, const CVector& b) { return a += b; }
  friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
  friend CVector operator*(cplx s, CVector a) { return a *= s; }

 private:
  std::vector<cplx> data_;
};

/// <u|v>, conjugate-linear in the first argument.
cplx inner(const CVector& u, const CVector& v);
CVector kron(const CVector& u, const CVector& v);
double max_abs(const CVector& v);

/// Makes the first entry with modulus above `threshold` real and positive.
CVector fix_phase(CVector v, double threshold = 1e-12);

/// Square dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {}
  /// Row-major initializer; the entry count must be a perfect square.
  CMatrix(std::initializer_list<cplx> row_major);

  static CMatrix identity(std::size_t dim);
  static CMatrix zero(std::size_t dim) { return CMatrix(dim); }
  static CMatrix diagonal(std::span<const cplx> diag);

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const cplx> entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  cplx trace() const;
  /// max |A_ij - conj(A_ji)|
  double hermiticity_defect() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CVector operator*(const CMatrix& a, const CVector& v);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t dim_{0};
  std::vector<cplx> data_;
};

double max_abs(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);
/// AB - BA; throws DimensionMismatch on unequal dims.
CMatrix commutator(const CMatrix& a, const CMatrix& b);
/// AB + BA
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);
/// <u| A |v>
cplx expectation(const CVector& u, const CMatrix& a, const CVector& v);
/// Gauss-Jordan with partial pivoting; throws SingularMatrix.
CMatrix inverse(const CMatrix& a);

struct HermitianEigen {
  std::vector<double> values;    // ascending
  std::vector<CVector> vectors;  // orthonormal, phase-fixed
};

/// Cyclic complex Jacobi. Throws NonHermitianInput when the Hermiticity
/// defect exceeds 1e-10 (scaled by max(1, max|A|)).
HermitianEigen herm_eig(const CMatrix& a);

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

}  // namespace relspin
