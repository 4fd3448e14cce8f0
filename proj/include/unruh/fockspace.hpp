// Copyright 2026 The unruh-chsh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense states and operators on tensor products of finite-dimensional
// factors. Every Ket and DensityOperator carries its factor dimensions, so
// reductions (partial trace, partial transpose) address factors by position.
//
// Basis ordering is row-major over factors: the last factor varies fastest,
// so |i⟩⊗|j⟩ on dims (d0, d1) lives at flat index i * d1 + j.

#ifndef UNRUH_FOCKSPACE_HPP
#define UNRUH_FOCKSPACE_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "unruh/errors.hpp"

namespace unruh {

using Complex = std::complex<double>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using Matrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Absolute tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;
// Tolerance for quantities that pass through an eigen-decomposition.
inline constexpr double kSpectralTol = 1e-9;

class FactorDims {
 public:
  FactorDims() = default;
  explicit FactorDims(std::vector<std::size_t> dims);
  FactorDims(std::initializer_list<std::size_t> dims)
      : FactorDims(std::vector<std::size_t>(dims)) {}

  std::size_t count() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  std::size_t total() const;
  const std::vector<std::size_t>& values() const { return dims_; }

  /// Dimensions of `this` followed by those of `other`.
  FactorDims concat(const FactorDims& other) const;
  /// Dimensions of the listed factors, in the order given.
  FactorDims select(std::span<const std::size_t> factors) const;

  friend bool operator==(const FactorDims&, const FactorDims&) = default;

 private:
  std::vector<std::size_t> dims_;
};

class Ket {
 public:
  Ket(Vector amplitudes, FactorDims dims);

  const Vector& amplitudes() const { return amplitudes_; }
  const FactorDims& dims() const { return dims_; }
  std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  double norm() const { return amplitudes_.norm(); }
  double squared_norm() const { return amplitudes_.squaredNorm(); }
  bool is_normalized() const;

  /// ⟨this|other⟩
  Complex inner(const Ket& other) const;

  Ket& operator+=(const Ket& other);
  Ket& operator-=(const Ket& other);
  Ket& operator*=(Complex factor);

 private:
  Vector amplitudes_;
  FactorDims dims_;
};

Ket operator+(Ket a, const Ket& b);
Ket operator-(Ket a, const Ket& b);
Ket operator*(Complex factor, Ket a);
Ket operator*(double factor, Ket a);

class DensityOperator {
 public:
  /// Stores the matrix; when `hermitian` is set the matrix is checked against
  /// its adjoint to kAlgebraTol.
  DensityOperator(Matrix matrix, FactorDims dims, bool hermitian);
  /// Sets the hermitian flag from a numerical check.
  DensityOperator(Matrix matrix, FactorDims dims);

  static DensityOperator identity(const FactorDims& dims);

  const Matrix& matrix() const { return matrix_; }
  const FactorDims& dims() const { return dims_; }
  bool hermitian() const { return hermitian_; }
  std::size_t side() const { return static_cast<std::size_t>(matrix_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Complex trace() const { return matrix_.trace(); }
  /// tr(ρ²), real part.
  double purity() const;

  /// Matrix scaled so that the trace is one; hermitian flag is kept.
  DensityOperator normalized() const;

 private:
  Matrix matrix_;
  FactorDims dims_;
  bool hermitian_;
};

DensityOperator operator+(const DensityOperator& a, const DensityOperator& b);
DensityOperator operator-(const DensityOperator& a, const DensityOperator& b);
DensityOperator operator*(const DensityOperator& a, const DensityOperator& b);
DensityOperator operator*(double factor, const DensityOperator& a);

/// Largest elementwise |M - M†|.
double hermiticity_defect(const Matrix& m);

Ket basis_ket(std::size_t dim, std::size_t n);

/// Kronecker product in list order.
Ket tensor(std::span<const Ket> kets);
Ket tensor(std::initializer_list<Ket> kets);

DensityOperator tensor_op(std::span<const DensityOperator> ops);
DensityOperator tensor_op(std::initializer_list<DensityOperator> ops);

/// |a⟩⟨b|
DensityOperator outer(const Ket& a, const Ket& b);
/// |a⟩⟨a|
DensityOperator projector(const Ket& a);

/// Traces out the listed factors; remaining factors keep their order.
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> discard);
DensityOperator partial_trace(const DensityOperator& rho,
                              std::initializer_list<std::size_t> discard);
/// Same as partial_trace(projector(psi), discard) without forming the full
/// projector.
DensityOperator partial_trace(const Ket& psi, std::span<const std::size_t> discard);
DensityOperator partial_trace(const Ket& psi, std::initializer_list<std::size_t> discard);

/// Re tr(ρ·obs). Throws NumericalConsistencyError if |Im| > kSpectralTol.
double expectation(const DensityOperator& rho, const DensityOperator& obs);
/// Re ⟨ψ|obs|ψ⟩, no normalization applied.
double expectation(const Ket& psi, const DensityOperator& obs);
/// Re ⟨ψ|(left ⊗ right)|ψ⟩ where left acts on the leading factors and right
/// on the trailing ones. Avoids building the product operator.
double expectation(const Ket& psi, const DensityOperator& left,
                   const DensityOperator& right);

Ket normalize(const Ket& psi);

DensityOperator partial_transpose(const DensityOperator& rho, std::size_t factor);
DensityOperator partial_transpose(const DensityOperator& rho,
                                  std::span<const std::size_t> factors);

/// log2 of the trace norm of the partial transpose over `partition`, divided
/// by tr ρ. Requires a hermitian ρ.
double log_negativity(const DensityOperator& rho,
                      std::span<const std::size_t> partition);
double log_negativity(const DensityOperator& rho,
                      std::initializer_list<std::size_t> partition);

/// Eigenvalues of a hermitian operator, ascending.
std::vector<double> eigenvalues(const DensityOperator& rho);

/// Number of Schmidt coefficients above `tol` (relative to the largest)
/// across the cut after the first `left_factors` factors.
std::size_t schmidt_rank(const Ket& psi, std::size_t left_factors, double tol = 1e-12);

/// (⟨bra|_factor ⊗ 1)|psi⟩: contracts one factor of psi against a covector.
Ket contract(const Ket& psi, std::size_t factor, const Ket& bra);

}  // namespace unruh

#endif  // UNRUH_FOCKSPACE_HPP
