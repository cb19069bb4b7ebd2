#include "xxring/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xxring {

namespace {

constexpr double kHermiticityTol = 1e-10;   // admission gate for hermitian_eig
constexpr double kJacobiRelTol = 1e-13;     // off-diagonal Frobenius vs ||a||_F
constexpr int kJacobiMaxSweeps = 64;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ComplexMatrix: ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix addition: shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: shape mismatch");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool ComplexVector::is_normalized(double tol) const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::abs(s - 1.0) <= tol;
}

ComplexVector basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis_vector: index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

cplx inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexMatrix outer(const ComplexVector& v) {
  ComplexMatrix m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
      m(i, j) = v[i] * std::conj(v[j]);
    }
  }
  return m;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != v.dim()) throw std::invalid_argument("matvec: dimension mismatch");
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

cplx trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("trace: matrix not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  if (!rho.is_square()) throw std::invalid_argument("partial_trace: matrix not square");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw std::invalid_argument("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != rho.rows()) {
    throw std::invalid_argument("partial_trace: dims product does not match matrix size");
  }
  std::vector<char> kept(dims.size(), 0);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw std::invalid_argument("partial_trace: keep index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate keep index");
    kept[k] = 1;
  }

  // Strides of each subsystem digit in the flat index (row-major, first
  // subsystem most significant).
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    stride[k - 1] = stride[k] * dims[k];
  }

  std::size_t keep_dim = 1, trace_dim = 1;
  std::vector<std::size_t> keep_idx, trace_idx;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (kept[k]) {
      keep_dim *= dims[k];
      keep_idx.push_back(k);
    } else {
      trace_dim *= dims[k];
      trace_idx.push_back(k);
    }
  }

  auto compose = [&](std::size_t packed, const std::vector<std::size_t>& subsys) {
    std::size_t flat = 0;
    for (std::size_t k = subsys.size(); k-- > 0;) {
      const std::size_t d = dims[subsys[k]];
      flat += (packed % d) * stride[subsys[k]];
      packed /= d;
    }
    return flat;
  };

  ComplexMatrix out(keep_dim, keep_dim);
  for (std::size_t i = 0; i < keep_dim; ++i) {
    const std::size_t ri = compose(i, keep_idx);
    for (std::size_t j = 0; j < keep_dim; ++j) {
      const std::size_t rj = compose(j, keep_idx);
      cplx s = 0.0;
      for (std::size_t t = 0; t < trace_dim; ++t) {
        const std::size_t rt = compose(t, trace_idx);
        s += rho(ri + rt, rj + rt);
      }
      out(i, j) = s;
    }
  }
  return out;
}

ComplexVector HermitianEig::eigenvector(std::size_t k) const {
  ComplexVector v(eigenvectors.rows());
  for (std::size_t i = 0; i < eigenvectors.rows(); ++i) v[i] = eigenvectors(i, k);
  return v;
}

HermitianEig hermitian_eig(const ComplexMatrix& a_in) {
  if (!a_in.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
  const std::size_t n = a_in.rows();
  if (max_abs_diff(a_in, dagger(a_in)) > kHermiticityTol) {
    throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");
  }

  // Symmetrize, then run cyclic Jacobi with complex plane rotations.
  ComplexMatrix a = a_in;
  {
    ComplexMatrix ad = dagger(a_in);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (a(i, j) + ad(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius_norm(a);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  if (scale > 0.0) {
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
      if (off_norm() < kJacobiRelTol * scale) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const cplx apq = a(p, q);
          const double h = std::abs(apq);
          if (h <= 1e-18 * scale) continue;
          const cplx phase = apq / h;  // e^{i phi}
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * h);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx phase_conj = std::conj(phase);

          // A <- G^dag A, rows p and q. G mixes the (p,q) plane with the
          // phase-carrying unitary that diagonalizes the 2x2 block.
          for (std::size_t j = 0; j < n; ++j) {
            const cplx apj = a(p, j);
            const cplx aqj = a(q, j);
            a(p, j) = c * apj - s * phase * aqj;
            a(q, j) = s * apj + c * phase * aqj;
          }
          // A <- A G, columns p and q.
          for (std::size_t i = 0; i < n; ++i) {
            const cplx aip = a(i, p);
            const cplx aiq = a(i, q);
            a(i, p) = c * aip - s * phase_conj * aiq;
            a(i, q) = s * aip + c * phase_conj * aiq;
          }
          // Accumulate eigenvectors: V <- V G.
          for (std::size_t i = 0; i < n; ++i) {
            const cplx vip = v(i, p);
            const cplx viq = v(i, q);
            v(i, p) = c * vip - s * phase_conj * viq;
            v(i, q) = s * vip + c * phase_conj * viq;
          }
          // The rotation annihilates the pivot pair analytically.
          a(p, q) = 0.0;
          a(q, p) = 0.0;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = values[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

bool validate_density(const ComplexMatrix& rho, double tol) {
  if (!rho.is_square()) return false;
  if (max_abs_diff(rho, dagger(rho)) > tol) return false;
  if (std::abs(trace(rho) - cplx{1.0, 0.0}) > tol) return false;

  // Eigenvalue check on the symmetrized matrix (the Hermiticity gate above
  // may be looser than hermitian_eig's own admission tolerance).
  const std::size_t n = rho.rows();
  ComplexMatrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sym(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    }
  }
  const HermitianEig eig = hermitian_eig(sym);
  return eig.eigenvalues.back() >= -tol;
}

namespace {
ComplexMatrix make_pauli(int k) {
  switch (k) {
    case 0: return {{1.0, 0.0}, {0.0, 1.0}};
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}};
    default: return {{1.0, 0.0}, {0.0, -1.0}};
  }
}
}  // namespace

const ComplexMatrix& pauli_id() { static const ComplexMatrix m = make_pauli(0); return m; }
const ComplexMatrix& pauli_x() { static const ComplexMatrix m = make_pauli(1); return m; }
const ComplexMatrix& pauli_y() { static const ComplexMatrix m = make_pauli(2); return m; }
const ComplexMatrix& pauli_z() { static const ComplexMatrix m = make_pauli(3); return m; }

}  // namespace xxring
