#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "sorder/ordered_algebra.hpp"

namespace sorder::fock {

using cplx = std::complex<double>;

// Dense matrices only; desk-scale verification needs nothing bigger.
inline constexpr int kDimCap = 128;

class FockMatrix {
 public:
  FockMatrix() = default;
  explicit FockMatrix(int dim);
  static FockMatrix identity(int dim);

  int dim() const { return dim_; }
  cplx& operator()(int row, int col) { return a_[row * dim_ + col]; }
  const cplx& operator()(int row, int col) const { return a_[row * dim_ + col]; }
  const std::vector<cplx>& data() const { return a_; }

  FockMatrix& operator+=(const FockMatrix& other);
  FockMatrix& operator-=(const FockMatrix& other);
  FockMatrix& operator*=(cplx scale);

 private:
  int dim_ = 0;
  std::vector<cplx> a_;  // row-major
};

FockMatrix adjoint(const FockMatrix& x);

// Parallel product (rows split across threads, fixed-order inner loops:
// bitwise identical to the serial reference for any thread count).
FockMatrix matmul(const FockMatrix& x, const FockMatrix& y);
FockMatrix matmul_serial(const FockMatrix& x, const FockMatrix& y);
FockMatrix matpow(const FockMatrix& x, int k);

// (A, A_dagger) with A[k-1][k] = sqrt(k).
std::pair<FockMatrix, FockMatrix> ladder(int dim);

FockMatrix basis_projector(int n, int m, int dim);

// Coherent amplitudes v_k = e^(-|beta|^2/2) beta^k / sqrt(k!).  Errors out
// when the dropped tail of the occupation distribution exceeds 1e-12.
std::vector<cplx> coherent_vector(cplx beta, int dim);

FockMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);

// Max-abs entry difference over the leading (dim - margin) block.
double matrix_distance(const FockMatrix& x, const FockMatrix& y,
                       int interior_margin);

// Matrix image of a polynomial: the terms are re-expressed in normal order
// (exact finite sums) and substituted with ladder matrices.  Accumulation
// runs in extended precision; the alternating sums behind projector-like
// polynomials cancel far below double resolution at high Fock levels.
FockMatrix eval_poly(const algebra::OrderedPoly& poly, int dim);

// Matrix image of an ordered exponential, expanded internally at `cutoff`
// entirely in extended precision (double coefficients underflow long
// before the matrix elements stop caring about the tail).
FockMatrix eval_exp(const algebra::OrderedExp& e, int dim, int cutoff);

// Same, for the shifted-Gaussian coherent projector.
FockMatrix eval_coherent(const algebra::CoherentProjector& cp, int dim,
                         int cutoff);

}  // namespace sorder::fock
