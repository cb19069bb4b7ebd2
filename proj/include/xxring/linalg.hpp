#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace xxring {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The universal carrier for operators and
/// density matrices in this project (dimensions 2, 4, 8, and the 16x16
/// protocol intermediates). Storage is bit-exact: construction from explicit
/// entries never alters values.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  const std::vector<cplx>& entries() const noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

/// Matrix product; throws std::invalid_argument on non-conformable shapes.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Dense complex column vector (state vectors of dimension 2, 4, 8).
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : entries_(dim) {}
  explicit ComplexVector(std::vector<cplx> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const noexcept { return entries_.size(); }
  cplx& operator[](std::size_t i) noexcept { return entries_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return entries_[i]; }
  const std::vector<cplx>& entries() const noexcept { return entries_; }

  double norm() const;
  /// |<v|v> - 1| <= tol
  bool is_normalized(double tol = 1e-12) const;

 private:
  std::vector<cplx> entries_;
};

/// Computational-basis vector |index> of the given dimension.
ComplexVector basis_vector(std::size_t dim, std::size_t index);

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const ComplexVector& a, const ComplexVector& b);

/// Rank-one projector |v><v|.
ComplexMatrix outer(const ComplexVector& v);

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; dimensions multiply. Left-fold composition is
/// associative: kron(kron(a,b),c) == kron(a,kron(b,c)) entrywise.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Elementwise complex conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Reduced operator over the kept subsystems, in the induced basis ordering
/// (kept factors stay in their original relative order). `dims` lists the
/// subsystem dimensions whose product must equal the side of `rho`; `keep`
/// holds distinct indices into `dims`. Trace is preserved:
/// tr(partial_trace(rho,...)) == tr(rho).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

/// Eigensystem of a Hermitian matrix, eigenvalues sorted descending,
/// eigenvectors orthonormal (columns of `eigenvectors`, same order).
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexVector eigenvector(std::size_t k) const;
};

/// Cyclic Jacobi eigendecomposition for small Hermitian matrices.
///
/// Requires max|a - dagger(a)| <= 1e-10 (throws std::invalid_argument
/// otherwise); the input is symmetrized to (a + a^dag)/2 before
/// decomposition. Sweeps run until the off-diagonal Frobenius norm drops
/// below 1e-13 * ||a||_F. Residuals satisfy ||a v_k - lambda_k v_k|| <=
/// 1e-9 * ||a||; repeated calls on the same input are bit-identical.
/// Within a degenerate eigenspace the basis choice is arbitrary.
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// True iff `rho` is Hermitian within tol, has trace within tol of 1, and
/// minimum eigenvalue >= -tol.
bool validate_density(const ComplexMatrix& rho, double tol);

// Single-qubit Pauli matrices; |0> is the +1 eigenstate of pauli_z.
const ComplexMatrix& pauli_id();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

}  // namespace xxring
