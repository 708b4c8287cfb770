#pragma once

// Quasiprobability symbols and their trace pairing.
//
// Convention (fixed operationally by the matrix-element consistency tests):
// the t-parameterized symbol W_F(alpha, t) of an operator F is the
// classical kernel of F written in (-t)-ordered form, with ad -> conj(alpha)
// and a -> alpha.  Symbols at opposite parameters pair under
// (1/pi) integral d^2alpha, i.e. Tr(F G) = (1/pi) int W_F(a,t) W_G(a,-t).

#include <complex>
#include <functional>
#include <vector>

#include "sorder/ordered_algebra.hpp"

namespace sorder::phase {

using cplx = std::complex<double>;
using algebra::OrderParameter;

using Symbol = std::function<cplx(cplx)>;

// Uniform midpoint tensor grid on [-L, L]^2; node k = iy*N + ix is
// alpha = x(ix) + i y(iy), weight (2L/N)^2 per node.
struct QuadratureGrid {
  double L = 6.0;
  int N = 160;
  double weight = 0.0;
  std::vector<cplx> nodes;  // row-major, x varies fastest

  static QuadratureGrid midpoint(double L, int N);
  double axis(int i) const;  // i-th midpoint coordinate
};

// |(1/pi) sum w e^(-|a|^2) - 1|; the gate every quadrature claim sits behind.
double calibration_error(const QuadratureGrid& grid);

// W_{|n><m|}(alpha, -t) read off the t-ordered projector:
// (n!m!)^(-1/2) f^(n+m+1) h_{n,m}(conj a, a | kappa) e^(-f|a|^2),
// f = 2/(t+1), kappa = (t^2-1)/4.
cplx w_projector(int n, int m, cplx alpha, OrderParameter t);

// W_{|beta><beta|}(alpha, t) = 2/(1-t) exp(-2|beta-alpha|^2 / (1-t)).
double w_coherent(cplx beta, cplx alpha, OrderParameter t);

// Symbol factories with the coefficient tables hoisted out of the node loop.
Symbol projector_symbol(int n, int m, OrderParameter t);
Symbol coherent_symbol(cplx beta, OrderParameter t);
Symbol constant_symbol(cplx value);

// t-parameterized symbol of a polynomial: converts to order -t once, then
// evaluates the classical kernel at each alpha.
Symbol poly_symbol(const algebra::OrderedPoly& poly, OrderParameter t);

// (1/pi) sum_nodes w * Wf(alpha) * Wg(alpha).  The parallel version reduces
// over fixed 512-node chunks combined in index order, so results are
// bitwise reproducible for any thread count.
cplx trace_pair(const Symbol& wf, const Symbol& wg, const QuadratureGrid& grid);
cplx trace_pair_serial(const Symbol& wf, const Symbol& wg,
                       const QuadratureGrid& grid);

struct IntegrationCheck {
  cplx lhs;        // conj(beta)^n beta^m
  cplx rhs;        // quadrature value of the closed-form integral
  double abs_err;  // |lhs - rhs|
};

// conj(beta)^n beta^m  =  2 f^(n+m+1) e^{|beta|^2} / (1-t) *
//   (1/pi) int h_{n,m}(conj a, a|kappa) e^{-f|a|^2 - 2|beta-a|^2/(1-t)}.
// Requires t in (-1, 1) so both Gaussian rates stay positive.
IntegrationCheck verify_integration_formula(int n, int m, cplx beta,
                                            OrderParameter t,
                                            const QuadratureGrid& grid);

// Tabulated symbol on the same midpoint layout as QuadratureGrid.
struct ComplexGrid {
  double L = 0.0;
  int N = 0;
  std::vector<cplx> values;  // N*N, row-major, x fastest
  double axis(int i) const;
};

ComplexGrid sample_grid(const Symbol& symbol, double L, int N);
ComplexGrid sample_grid_serial(const Symbol& symbol, double L, int N);

// CSV: header "x,y,re,im", one row per node in grid order, shortest
// round-trip decimal formatting.
void write_csv(const ComplexGrid& grid, std::ostream& out);

}  // namespace sorder::phase
