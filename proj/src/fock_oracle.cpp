#include "sorder/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/kernels.hpp"
#include "sorder/errors.hpp"

namespace sorder::fock {

namespace {

using detail::QComplex;
using detail::quad;

void check_dim(int dim, const char* who) {
  if (dim < 1) throw error(std::string(who) + ": dimension must be positive");
  if (dim > kDimCap)
    throw error(std::string(who) + ": dimension exceeds cap " +
                std::to_string(kDimCap));
}

// Internal degree cap for the extended-precision route; far above anything
// the double-coefficient algebra permits, still safe for __float128 range.
constexpr int kOracleDegreeCap = 2048;

struct FallTables {
  std::vector<quad> fact;       // k!
  std::vector<quad> sqrt_fact;  // sqrt(k!)
  explicit FallTables(int dim) : fact(dim), sqrt_fact(dim) {
    fact[0] = 1;
    for (int k = 1; k < dim; ++k) fact[k] = fact[k - 1] * static_cast<quad>(k);
    for (int k = 0; k < dim; ++k) sqrt_fact[k] = detail::sqrt_quad(fact[k]);
  }
};

// Normal-ordered terms to a dense matrix:
// <j'| ad^p a^q |j> = sqrt(j! j'!) / (j-q)!  when j' = j - q + p.
FockMatrix eval_normal_terms(const detail::TermMap<QComplex>& terms, int dim) {
  const FallTables tables(dim);
  std::vector<QComplex> acc(static_cast<std::size_t>(dim) * dim);
  for (const auto& [key, c] : terms) {
    for (int j = key.q; j < dim; ++j) {
      const int jp = j - key.q + key.p;
      if (jp >= dim) break;
      const quad elem = tables.sqrt_fact[j] * tables.sqrt_fact[jp] /
                        tables.fact[j - key.q];
      acc[static_cast<std::size_t>(jp) * dim + j] += c * elem;
    }
  }
  FockMatrix out(dim);
  for (int r = 0; r < dim; ++r)
    for (int col = 0; col < dim; ++col)
      out(r, col) = acc[static_cast<std::size_t>(r) * dim + col].to_double();
  return out;
}

FockMatrix eval_terms_at_order(const detail::TermMap<QComplex>& terms,
                               double order_s, int dim) {
  const quad tau = (quad{1} - static_cast<quad>(order_s)) / quad{2};
  auto normal = detail::convert_terms(terms, tau, kOracleDegreeCap);
  return eval_normal_terms(normal, dim);
}

}  // namespace

FockMatrix::FockMatrix(int dim)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
  check_dim(dim, "FockMatrix");
}

FockMatrix FockMatrix::identity(int dim) {
  FockMatrix out(dim);
  for (int k = 0; k < dim; ++k) out(k, k) = 1.0;
  return out;
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& other) {
  if (other.dim_ != dim_) throw error("FockMatrix: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& other) {
  if (other.dim_ != dim_) throw error("FockMatrix: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

FockMatrix& FockMatrix::operator*=(cplx scale) {
  for (auto& v : a_) v *= scale;
  return *this;
}

FockMatrix adjoint(const FockMatrix& x) {
  FockMatrix out(x.dim());
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.dim(); ++c) out(c, r) = std::conj(x(r, c));
  return out;
}

namespace {

inline void matmul_row(const FockMatrix& x, const FockMatrix& y, int row,
                       FockMatrix& out) {
  const int dim = x.dim();
  for (int c = 0; c < dim; ++c) {
    cplx acc = 0.0;
    for (int k = 0; k < dim; ++k) acc += x(row, k) * y(k, c);
    out(row, c) = acc;
  }
}

}  // namespace

FockMatrix matmul(const FockMatrix& x, const FockMatrix& y) {
  if (x.dim() != y.dim()) throw error("matmul: dimension mismatch");
  FockMatrix out(x.dim());
#pragma omp parallel for schedule(static)
  for (int row = 0; row < x.dim(); ++row) matmul_row(x, y, row, out);
  return out;
}

FockMatrix matmul_serial(const FockMatrix& x, const FockMatrix& y) {
  if (x.dim() != y.dim()) throw error("matmul: dimension mismatch");
  FockMatrix out(x.dim());
  for (int row = 0; row < x.dim(); ++row) matmul_row(x, y, row, out);
  return out;
}

FockMatrix matpow(const FockMatrix& x, int k) {
  if (k < 0) throw error("matpow: power must be nonnegative");
  FockMatrix out = FockMatrix::identity(x.dim());
  for (int i = 0; i < k; ++i) out = matmul(out, x);
  return out;
}

std::pair<FockMatrix, FockMatrix> ladder(int dim) {
  check_dim(dim, "ladder");
  if (dim < 2) throw error("ladder: dimension must be at least 2");
  FockMatrix a(dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return {a, adjoint(a)};
}

FockMatrix basis_projector(int n, int m, int dim) {
  check_dim(dim, "basis_projector");
  if (n < 0 || m < 0 || n >= dim || m >= dim)
    throw error("basis_projector: index out of range");
  FockMatrix out(dim);
  out(n, m) = 1.0;
  return out;
}

std::vector<cplx> coherent_vector(cplx beta, int dim) {
  check_dim(dim, "coherent_vector");
  const double nb2 = std::norm(beta);
  // dropped tail sum_{k>=dim} nb2^k / k!; bound by first term * geometric
  double term = std::exp(-nb2);
  for (int k = 1; k <= dim; ++k) term *= nb2 / k;
  const double ratio = nb2 / (dim + 1.0);
  const double tail = ratio < 1.0 ? term / (1.0 - ratio) : 1.0;
  if (tail > 1e-12)
    throw error("coherent_vector: truncation too coarse for |beta|");
  std::vector<cplx> v(dim);
  cplx amp = std::exp(-nb2 / 2.0);
  for (int k = 0; k < dim; ++k) {
    v[k] = amp;
    amp *= beta / std::sqrt(static_cast<double>(k + 1));
  }
  return v;
}

FockMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  if (u.size() != v.size()) throw error("outer: dimension mismatch");
  FockMatrix out(static_cast<int>(u.size()));
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      out(static_cast<int>(r), static_cast<int>(c)) = u[r] * std::conj(v[c]);
  return out;
}

double matrix_distance(const FockMatrix& x, const FockMatrix& y,
                       int interior_margin) {
  if (x.dim() != y.dim()) throw error("matrix_distance: dimension mismatch");
  if (interior_margin < 0 || interior_margin >= x.dim())
    throw error("matrix_distance: bad margin");
  const int lead = x.dim() - interior_margin;
  double worst = 0.0;
  for (int r = 0; r < lead; ++r)
    for (int c = 0; c < lead; ++c)
      worst = std::max(worst, std::abs(x(r, c) - y(r, c)));
  return worst;
}

FockMatrix eval_poly(const algebra::OrderedPoly& poly, int dim) {
  check_dim(dim, "eval_poly");
  detail::TermMap<QComplex> terms;
  for (const auto& [key, c] : poly.terms()) terms.emplace(key, QComplex(c));
  return eval_terms_at_order(terms, poly.order().s, dim);
}

FockMatrix eval_exp(const algebra::OrderedExp& e, int dim, int cutoff) {
  check_dim(dim, "eval_exp");
  if (cutoff < 0) throw error("eval_exp: cutoff must be nonnegative");
  if (e.n + e.m + 2 * cutoff > kOracleDegreeCap)
    throw error("eval_exp: degree too large");
  auto terms = detail::expand_exp_terms(QComplex(e.prefactor), e.n, e.m,
                                        QComplex(e.kappa), QComplex(e.lambda),
                                        cutoff);
  return eval_terms_at_order(terms, e.order.s, dim);
}

FockMatrix eval_coherent(const algebra::CoherentProjector& cp, int dim,
                         int cutoff) {
  check_dim(dim, "eval_coherent");
  if (cutoff < 0) throw error("eval_coherent: cutoff must be nonnegative");
  if (2 * cutoff > kOracleDegreeCap) throw error("eval_coherent: degree too large");
  auto terms = detail::expand_shifted_gaussian(
      QComplex(static_cast<quad>(cp.prefactor)), QComplex(cp.center),
      static_cast<quad>(cp.rate), cutoff);
  return eval_terms_at_order(terms, cp.order.s, dim);
}

}  // namespace sorder::fock
