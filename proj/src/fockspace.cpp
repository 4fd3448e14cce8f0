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

#include "unruh/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace unruh {
namespace {

using Index = Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

std::vector<std::size_t> strides_of(const FactorDims& dims) {
  std::vector<std::size_t> strides(dims.count(), 1);
  for (std::size_t k = dims.count(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

// Flat offsets of every basis state of the listed factors (row-major in list
// order) inside the full space. The full flat index of a basis state is the
// sum of the offsets contributed by disjoint factor groups.
std::vector<std::size_t> offsets_of(const FactorDims& dims,
                                    std::span<const std::size_t> factors) {
  const auto strides = strides_of(dims);
  std::vector<std::size_t> offsets{0};
  for (std::size_t f : factors) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[f]);
    for (std::size_t base : offsets)
      for (std::size_t d = 0; d < dims[f]; ++d) next.push_back(base + d * strides[f]);
    offsets = std::move(next);
  }
  return offsets;
}

void check_factor_set(const FactorDims& dims, std::span<const std::size_t> factors,
                      const char* what) {
  std::vector<bool> seen(dims.count(), false);
  for (std::size_t f : factors) {
    if (f >= dims.count())
      throw ArgumentError(std::string(what) + ": factor index " + std::to_string(f) +
                          " out of range for " + std::to_string(dims.count()) +
                          " factors");
    if (seen[f])
      throw ArgumentError(std::string(what) + ": factor index " + std::to_string(f) +
                          " repeated");
    seen[f] = true;
  }
}

std::vector<std::size_t> complement(std::size_t count, std::span<const std::size_t> factors) {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < count; ++k)
    if (std::find(factors.begin(), factors.end(), k) == factors.end()) rest.push_back(k);
  return rest;
}

void require_same_dims(const FactorDims& a, const FactorDims& b, const char* what) {
  if (!(a == b)) throw ArgumentError(std::string(what) + ": factor dimensions differ");
}

}  // namespace

// ---------------------------------------------------------------------------
// FactorDims

FactorDims::FactorDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ArgumentError("FactorDims: at least one factor required");
  for (std::size_t d : dims_)
    if (d < 1) throw ArgumentError("FactorDims: every factor needs dimension >= 1");
}

std::size_t FactorDims::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                         std::multiplies<>());
}

FactorDims FactorDims::concat(const FactorDims& other) const {
  std::vector<std::size_t> joined = dims_;
  joined.insert(joined.end(), other.dims_.begin(), other.dims_.end());
  return FactorDims(std::move(joined));
}

FactorDims FactorDims::select(std::span<const std::size_t> factors) const {
  std::vector<std::size_t> picked;
  for (std::size_t f : factors) picked.push_back(dims_.at(f));
  return FactorDims(std::move(picked));
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(Vector amplitudes, FactorDims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dims_.total())
    throw ArgumentError("Ket: " + std::to_string(amplitudes_.size()) +
                        " amplitudes for total dimension " +
                        std::to_string(dims_.total()));
}

bool Ket::is_normalized() const { return std::abs(squared_norm() - 1.0) < kAlgebraTol; }

Complex Ket::inner(const Ket& other) const {
  require_same_dims(dims_, other.dims_, "inner");
  return amplitudes_.dot(other.amplitudes_);
}

Ket& Ket::operator+=(const Ket& other) {
  require_same_dims(dims_, other.dims_, "ket addition");
  amplitudes_ += other.amplitudes_;
  return *this;
}

Ket& Ket::operator-=(const Ket& other) {
  require_same_dims(dims_, other.dims_, "ket subtraction");
  amplitudes_ -= other.amplitudes_;
  return *this;
}

Ket& Ket::operator*=(Complex factor) {
  amplitudes_ *= factor;
  return *this;
}

Ket operator+(Ket a, const Ket& b) { return a += b; }
Ket operator-(Ket a, const Ket& b) { return a -= b; }
Ket operator*(Complex factor, Ket a) { return a *= factor; }
Ket operator*(double factor, Ket a) { return a *= Complex(factor, 0.0); }

// ---------------------------------------------------------------------------
// DensityOperator

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(Matrix matrix, FactorDims dims, bool hermitian)
    : matrix_(std::move(matrix)), dims_(std::move(dims)), hermitian_(hermitian) {
  if (matrix_.rows() != matrix_.cols())
    throw ArgumentError("DensityOperator: matrix is not square");
  if (static_cast<std::size_t>(matrix_.rows()) != dims_.total())
    throw ArgumentError("DensityOperator: side " + std::to_string(matrix_.rows()) +
                        " does not match total dimension " +
                        std::to_string(dims_.total()));
  if (hermitian_ && hermiticity_defect(matrix_) >= kAlgebraTol)
    throw NumericalConsistencyError("DensityOperator: flagged hermitian but M != M†");
}

DensityOperator::DensityOperator(Matrix matrix, FactorDims dims)
    : DensityOperator(matrix, dims, hermiticity_defect(matrix) < kAlgebraTol) {}

DensityOperator DensityOperator::identity(const FactorDims& dims) {
  const Index n = idx(dims.total());
  return DensityOperator(Matrix::Identity(n, n), dims, true);
}

double DensityOperator::purity() const {
  // tr(ρ²) = Σ_ij ρ_ij ρ_ji
  return matrix_.cwiseProduct(matrix_.transpose()).sum().real();
}

DensityOperator DensityOperator::normalized() const {
  const Complex tr = trace();
  if (std::abs(tr) < 1e-300) throw DegenerateInputError("normalized: zero trace");
  Matrix scaled = matrix_ / tr;
  if (hermitian_) scaled = 0.5 * (scaled + scaled.adjoint()).eval();
  return DensityOperator(std::move(scaled), dims_, hermitian_);
}

DensityOperator operator+(const DensityOperator& a, const DensityOperator& b) {
  require_same_dims(a.dims(), b.dims(), "operator addition");
  return DensityOperator(a.matrix() + b.matrix(), a.dims());
}

DensityOperator operator-(const DensityOperator& a, const DensityOperator& b) {
  require_same_dims(a.dims(), b.dims(), "operator subtraction");
  return DensityOperator(a.matrix() - b.matrix(), a.dims());
}

DensityOperator operator*(const DensityOperator& a, const DensityOperator& b) {
  require_same_dims(a.dims(), b.dims(), "operator product");
  return DensityOperator(a.matrix() * b.matrix(), a.dims());
}

DensityOperator operator*(double factor, const DensityOperator& a) {
  return DensityOperator(factor * a.matrix(), a.dims(), a.hermitian());
}

// ---------------------------------------------------------------------------
// Construction

Ket basis_ket(std::size_t dim, std::size_t n) {
  if (dim < 1) throw ArgumentError("basis_ket: dimension must be positive");
  if (n >= dim)
    throw ArgumentError("basis_ket: occupation " + std::to_string(n) +
                        " out of range for dimension " + std::to_string(dim));
  Vector v = Vector::Zero(idx(dim));
  v(idx(n)) = 1.0;
  return Ket(std::move(v), FactorDims{dim});
}

Ket tensor(std::span<const Ket> kets) {
  if (kets.empty()) throw ArgumentError("tensor: empty list");
  Vector acc = kets.front().amplitudes();
  FactorDims dims = kets.front().dims();
  for (const Ket& k : kets.subspan(1)) {
    const Vector& rhs = k.amplitudes();
    Vector next(acc.size() * rhs.size());
    for (Index i = 0; i < acc.size(); ++i) next.segment(i * rhs.size(), rhs.size()) = acc(i) * rhs;
    acc = std::move(next);
    dims = dims.concat(k.dims());
  }
  return Ket(std::move(acc), std::move(dims));
}

Ket tensor(std::initializer_list<Ket> kets) {
  return tensor(std::span<const Ket>(kets.begin(), kets.size()));
}

DensityOperator tensor_op(std::span<const DensityOperator> ops) {
  if (ops.empty()) throw ArgumentError("tensor_op: empty list");
  Matrix acc = ops.front().matrix();
  FactorDims dims = ops.front().dims();
  bool hermitian = ops.front().hermitian();
  for (const DensityOperator& op : ops.subspan(1)) {
    const Matrix& rhs = op.matrix();
    const Index r = rhs.rows();
    Matrix next(acc.rows() * r, acc.cols() * r);
    for (Index i = 0; i < acc.rows(); ++i)
      for (Index j = 0; j < acc.cols(); ++j) next.block(i * r, j * r, r, r) = acc(i, j) * rhs;
    acc = std::move(next);
    dims = dims.concat(op.dims());
    hermitian = hermitian && op.hermitian();
  }
  // A product of hermitian factors is hermitian up to rounding in the products.
  if (hermitian) return DensityOperator(std::move(acc), std::move(dims));
  return DensityOperator(std::move(acc), std::move(dims), false);
}

DensityOperator tensor_op(std::initializer_list<DensityOperator> ops) {
  return tensor_op(std::span<const DensityOperator>(ops.begin(), ops.size()));
}

DensityOperator outer(const Ket& a, const Ket& b) {
  require_same_dims(a.dims(), b.dims(), "outer");
  Matrix m = a.amplitudes() * b.amplitudes().adjoint();
  const bool same = (&a == &b) || a.amplitudes() == b.amplitudes();
  return DensityOperator(std::move(m), a.dims(), same);
}

DensityOperator projector(const Ket& a) { return outer(a, a); }

// ---------------------------------------------------------------------------
// Reduction

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> discard) {
  const FactorDims& dims = rho.dims();
  check_factor_set(dims, discard, "partial_trace");
  if (discard.size() >= dims.count())
    throw ArgumentError("partial_trace: cannot discard every factor");
  const auto keep = complement(dims.count(), discard);
  const auto keep_off = offsets_of(dims, keep);
  const auto disc_off = offsets_of(dims, discard);

  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(idx(keep_off.size()), idx(keep_off.size()));
  for (std::size_t i = 0; i < keep_off.size(); ++i)
    for (std::size_t j = 0; j < keep_off.size(); ++j) {
      Complex sum = 0.0;
      for (std::size_t d : disc_off) sum += m(idx(keep_off[i] + d), idx(keep_off[j] + d));
      out(idx(i), idx(j)) = sum;
    }
  return DensityOperator(std::move(out), dims.select(keep), rho.hermitian());
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::initializer_list<std::size_t> discard) {
  return partial_trace(rho, std::span<const std::size_t>(discard.begin(), discard.size()));
}

DensityOperator partial_trace(const Ket& psi, std::span<const std::size_t> discard) {
  const FactorDims& dims = psi.dims();
  check_factor_set(dims, discard, "partial_trace");
  if (discard.size() >= dims.count())
    throw ArgumentError("partial_trace: cannot discard every factor");
  const auto keep = complement(dims.count(), discard);
  const auto keep_off = offsets_of(dims, keep);
  const auto disc_off = offsets_of(dims, discard);

  // Reshape ψ into a (kept × discarded) coefficient matrix; ρ = C C†.
  Matrix coeff(idx(keep_off.size()), idx(disc_off.size()));
  for (std::size_t i = 0; i < keep_off.size(); ++i)
    for (std::size_t d = 0; d < disc_off.size(); ++d)
      coeff(idx(i), idx(d)) = psi[keep_off[i] + disc_off[d]];
  Matrix out = coeff * coeff.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityOperator(std::move(out), dims.select(keep), true);
}

DensityOperator partial_trace(const Ket& psi, std::initializer_list<std::size_t> discard) {
  return partial_trace(psi, std::span<const std::size_t>(discard.begin(), discard.size()));
}

// ---------------------------------------------------------------------------
// Measurement

double expectation(const DensityOperator& rho, const DensityOperator& obs) {
  if (rho.side() != obs.side())
    throw ArgumentError("expectation: state side " + std::to_string(rho.side()) +
                        " vs observable side " + std::to_string(obs.side()));
  if (!obs.hermitian()) throw ArgumentError("expectation: observable is not hermitian");
  // tr(ρ O) = Σ_ij ρ_ij O_ji
  const Complex value = rho.matrix().cwiseProduct(obs.matrix().transpose()).sum();
  if (std::abs(value.imag()) > kSpectralTol)
    throw NumericalConsistencyError("expectation: imaginary part " +
                                    std::to_string(value.imag()) + " exceeds tolerance");
  return value.real();
}

double expectation(const Ket& psi, const DensityOperator& obs) {
  if (psi.size() != obs.side())
    throw ArgumentError("expectation: ket length " + std::to_string(psi.size()) +
                        " vs observable side " + std::to_string(obs.side()));
  if (!obs.hermitian()) throw ArgumentError("expectation: observable is not hermitian");
  const Complex value = psi.amplitudes().dot(obs.matrix() * psi.amplitudes());
  if (std::abs(value.imag()) > kSpectralTol)
    throw NumericalConsistencyError("expectation: imaginary part " +
                                    std::to_string(value.imag()) + " exceeds tolerance");
  return value.real();
}

double expectation(const Ket& psi, const DensityOperator& left,
                   const DensityOperator& right) {
  if (left.side() * right.side() != psi.size())
    throw ArgumentError("expectation: operator pair does not cover the ket");
  if (!left.hermitian() || !right.hermitian())
    throw ArgumentError("expectation: observable is not hermitian");
  const Index rows = idx(left.side());
  const Index cols = idx(right.side());
  // ψ as a (left × right) matrix C; (L ⊗ R)ψ ↦ L C Rᵀ.
  const Eigen::Map<const Matrix> coeff(psi.amplitudes().data(), rows, cols);
  const Matrix image = left.matrix() * coeff * right.matrix().transpose();
  const Complex value = coeff.conjugate().cwiseProduct(image).sum();
  if (std::abs(value.imag()) > kSpectralTol)
    throw NumericalConsistencyError("expectation: imaginary part " +
                                    std::to_string(value.imag()) + " exceeds tolerance");
  return value.real();
}

Ket normalize(const Ket& psi) {
  const double n = psi.norm();
  if (!(n > 1e-15)) throw DegenerateInputError("normalize: vector norm below 1e-15");
  return Ket(psi.amplitudes() / n, psi.dims());
}

// ---------------------------------------------------------------------------
// Partial transpose and entanglement

DensityOperator partial_transpose(const DensityOperator& rho, std::size_t factor) {
  const std::size_t f[] = {factor};
  return partial_transpose(rho, f);
}

DensityOperator partial_transpose(const DensityOperator& rho,
                                  std::span<const std::size_t> factors) {
  const FactorDims& dims = rho.dims();
  check_factor_set(dims, factors, "partial_transpose");
  const auto rest = complement(dims.count(), factors);
  const auto t_off = offsets_of(dims, factors);
  const auto r_off = offsets_of(dims, rest);

  // Entry (a⊕x, b⊕y) moves to (a⊕y, b⊕x), where x, y index the transposed
  // factors and a, b the others.
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t a : r_off)
    for (std::size_t b : r_off)
      for (std::size_t x : t_off)
        for (std::size_t y : t_off) out(idx(a + y), idx(b + x)) = m(idx(a + x), idx(b + y));
  return DensityOperator(std::move(out), dims, rho.hermitian());
}

std::vector<double> eigenvalues(const DensityOperator& rho) {
  if (!rho.hermitian()) throw ArgumentError("eigenvalues: operator is not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalConsistencyError("eigenvalues: decomposition did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double log_negativity(const DensityOperator& rho, std::span<const std::size_t> partition) {
  if (!rho.hermitian()) throw ArgumentError("log_negativity: input is not hermitian");
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw DegenerateInputError("log_negativity: non-positive trace");
  double trace_norm = 0.0;
  for (double lambda : eigenvalues(partial_transpose(rho, partition)))
    trace_norm += std::abs(lambda);
  return std::max(0.0, std::log2(trace_norm / tr));
}

double log_negativity(const DensityOperator& rho,
                      std::initializer_list<std::size_t> partition) {
  return log_negativity(rho,
                        std::span<const std::size_t>(partition.begin(), partition.size()));
}

std::size_t schmidt_rank(const Ket& psi, std::size_t left_factors, double tol) {
  const FactorDims& dims = psi.dims();
  if (left_factors > dims.count())
    throw ArgumentError("schmidt_rank: cut beyond the last factor");
  std::size_t rows = 1;
  for (std::size_t k = 0; k < left_factors; ++k) rows *= dims[k];
  const std::size_t cols = psi.size() / rows;
  const Eigen::Map<const Matrix> coeff(psi.amplitudes().data(), idx(rows), idx(cols));
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  std::size_t rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank;
}

Ket contract(const Ket& psi, std::size_t factor, const Ket& bra) {
  const FactorDims& dims = psi.dims();
  if (factor >= dims.count()) throw ArgumentError("contract: factor index out of range");
  if (dims.count() < 2) throw ArgumentError("contract: cannot contract the only factor");
  if (bra.dims() != FactorDims{dims[factor]})
    throw ArgumentError("contract: covector dimension does not match the factor");
  const std::size_t f[] = {factor};
  const auto rest = complement(dims.count(), f);
  const auto r_off = offsets_of(dims, rest);
  const auto f_off = offsets_of(dims, f);
  Vector out = Vector::Zero(idx(r_off.size()));
  for (std::size_t i = 0; i < r_off.size(); ++i)
    for (std::size_t d = 0; d < f_off.size(); ++d)
      out(idx(i)) += std::conj(bra[d]) * psi[r_off[i] + f_off[d]];
  return Ket(std::move(out), dims.select(rest));
}

}  // namespace unruh
