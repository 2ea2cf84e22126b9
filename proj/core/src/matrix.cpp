#include "relspin/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "relspin/errors.hpp"

namespace relspin {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                    std::to_string(b) + " differ");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CVector

double CVector::norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

CVector CVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
  CVector out = *this;
  out *= cplx{1.0 / n, 0.0};
  return out;
}

CVector& CVector::operator+=(const CVector& other) {
  require_same_dim(dim(), other.dim(), "vector sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  require_same_dim(dim(), other.dim(), "vector difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

cplx inner(const CVector& u, const CVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner product");
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

CVector kron(const CVector& u, const CVector& v) {
  CVector out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
  return out;
}

double max_abs(const CVector& v) {
  double m = 0.0;
  for (const auto& z : v.entries()) m = std::max(m, std::abs(z));
  return m;
}

CVector fix_phase(CVector v, double threshold) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mod = std::abs(v[i]);
    if (mod > threshold) {
      v *= std::conj(v[i]) / mod;
      v[i] = cplx{v[i].real(), 0.0};
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::initializer_list<cplx> row_major) : data_(row_major) {
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(data_.size()))));
  if (n * n != data_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "initializer entry count is not a perfect square");
  }
  dim_ = n;
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx CMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::hermiticity_defect() const {
  double defect = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      defect = std::max(defect, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return defect;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix product");
  const std::size_t n = a.dim_;
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  require_same_dim(a.dim_, v.dim(), "matrix-vector product");
  CVector out(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    cplx sum{0.0, 0.0};
    for (std::size_t c = 0; c < a.dim_; ++c) sum += a(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "anticommutator");
  return a * b + b * a;
}

cplx expectation(const CVector& u, const CMatrix& a, const CVector& v) { return inner(u, a * v); }

CMatrix inverse(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  const double scale = std::max(max_abs(a), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    if (std::abs(work(pivot, col)) <= 1e-14 * scale) {
      throw Error(ErrorCode::SingularMatrix, "matrix is singular to working precision");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const cplx d = cplx{1.0, 0.0} / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= d;
      inv(col, c) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = work(r, col);
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver

HermitianEigen herm_eig(const CMatrix& input) {
  const std::size_t n = input.dim();
  const double scale = std::max(1.0, max_abs(input));
  if (input.hermiticity_defect() > 1e-10 * scale) {
    throw Error(ErrorCode::NonHermitianInput,
                "herm_eig: Hermiticity defect " + std::to_string(input.hermiticity_defect()));
  }

  // Work on the exactly Hermitian part.
  CMatrix a = 0.5 * (input + input.adjoint());
  CMatrix v = CMatrix::identity(n);

  double frob = 0.0;
  for (const auto& z : a.entries()) frob += std::norm(z);
  frob = std::sqrt(frob);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && frob > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * frob) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const cplx phase = apq / b;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const cplx upp{c, 0.0};
        const cplx upq{s, 0.0};
        const cplx uqp = -s * std::conj(phase);
        const cplx uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (const std::size_t idx : order) {
    out.values.push_back(a(idx, idx).real());
    CVector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v(k, idx);
    out.vectors.push_back(fix_phase(std::move(col)));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace pauli {
CMatrix identity() { return CMatrix::identity(2); }
CMatrix x() { return CMatrix{0.0, 1.0, 1.0, 0.0}; }
CMatrix y() { return CMatrix{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}; }
CMatrix z() { return CMatrix{1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

}  // namespace relspin
