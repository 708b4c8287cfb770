#pragma once

#include <complex>
#include <vector>

#include "sorder/biguint.hpp"

namespace sorder::hermite {

using cplx = std::complex<double>;

// Exact coefficient tables are built for m+n up to this bound; beyond it
// the coefficients stop being representable exactly and we refuse rather
// than degrade to rounded floats.
inline constexpr int kDegreeCap = 64;

struct H2Term {
  int i = 0;
  detail::BigUint c;  // C(m,i) * C(n,i) * i!
};

// Contraction coefficients of the incomplete two-dimensional Hermite
// polynomial h_{m,n}(x,y|tau) = sum_i c_i tau^i x^(m-i) y^(n-i).
struct H2Coeffs {
  int m = 0;
  int n = 0;
  std::vector<H2Term> terms;  // i = 0 .. min(m,n), exact integers
};

H2Coeffs h2_coeffs(int m, int n);

// Same table with coefficients rounded once to double; shared by every
// numeric evaluation path so there is exactly one evaluation formula.
std::vector<double> h2_coeffs_double(int m, int n);

cplx h2_eval_with(const std::vector<double>& ci, int m, int n, cplx x, cplx y,
                  cplx tau);
cplx h2_eval(int m, int n, cplx x, cplx y, cplx tau);

// Ordinary Laguerre polynomial L_n(z) by the three-term recurrence.
cplx laguerre_eval(int n, cplx z);

enum class Axis {
  kFirst,   // sum over the first index: (y + tau*lam)^n e^(lam x)
  kSecond,  // sum over the second index: (x + tau*lam)^n e^(lam y)
};

// Closed form of the single-index exponential generating sum; the fixed
// index is n, lam is the generating variable.
cplx h2_partial_sum_closed(int n, cplx lam, cplx x, cplx y, cplx tau,
                           Axis which);

// Integer power by repeated multiplication (no exp/log branch cuts).
cplx pow_int(cplx base, int k);

}  // namespace sorder::hermite
