#include "sorder/hermite2d.hpp"

#include <algorithm>
#include <string>

#include "sorder/errors.hpp"

namespace sorder::hermite {

namespace {

void check_degree(int m, int n) {
  if (m < 0 || n < 0) throw error("hermite2d: indices must be nonnegative");
  if (m + n > kDegreeCap) {
    throw error("hermite2d: degree too large (m+n=" + std::to_string(m + n) +
                " exceeds cap " + std::to_string(kDegreeCap) + ")");
  }
}

}  // namespace

H2Coeffs h2_coeffs(int m, int n) {
  check_degree(m, n);
  H2Coeffs out;
  out.m = m;
  out.n = n;
  const int imax = std::min(m, n);
  out.terms.reserve(imax + 1);
  detail::BigUint c(1);
  for (int i = 0; i <= imax; ++i) {
    out.terms.push_back({i, c});
    if (i < imax) {
      // c_{i+1} = c_i * (m-i)(n-i) / (i+1), exactly divisible
      c.mul_u64(static_cast<std::uint64_t>(m - i));
      c.mul_u64(static_cast<std::uint64_t>(n - i));
      c.div_exact_u64(static_cast<std::uint64_t>(i + 1));
    }
  }
  return out;
}

std::vector<double> h2_coeffs_double(int m, int n) {
  const H2Coeffs table = h2_coeffs(m, n);
  std::vector<double> ci;
  ci.reserve(table.terms.size());
  for (const auto& term : table.terms) ci.push_back(term.c.to_double());
  return ci;
}

cplx h2_eval_with(const std::vector<double>& ci, int m, int n, cplx x, cplx y,
                  cplx tau) {
  // power tables avoid 0^0 pitfalls of std::pow
  std::vector<cplx> xp(m + 1), yp(n + 1);
  xp[0] = 1.0;
  for (int k = 1; k <= m; ++k) xp[k] = xp[k - 1] * x;
  yp[0] = 1.0;
  for (int k = 1; k <= n; ++k) yp[k] = yp[k - 1] * y;

  cplx acc = 0.0;
  cplx taup = 1.0;
  const int imax = static_cast<int>(ci.size()) - 1;
  for (int i = 0; i <= imax; ++i) {
    acc += ci[i] * taup * xp[m - i] * yp[n - i];
    taup *= tau;
  }
  return acc;
}

cplx h2_eval(int m, int n, cplx x, cplx y, cplx tau) {
  return h2_eval_with(h2_coeffs_double(m, n), m, n, x, y, tau);
}

cplx laguerre_eval(int n, cplx z) {
  if (n < 0) throw error("laguerre_eval: order must be nonnegative");
  if (n > kDegreeCap) throw error("laguerre_eval: degree too large");
  cplx prev = 1.0;  // L_0
  if (n == 0) return prev;
  cplx cur = 1.0 - z;  // L_1
  for (int k = 1; k < n; ++k) {
    cplx next = ((2.0 * k + 1.0 - z) * cur - static_cast<double>(k) * prev) /
                static_cast<double>(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx pow_int(cplx base, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

cplx h2_partial_sum_closed(int n, cplx lam, cplx x, cplx y, cplx tau,
                           Axis which) {
  if (n < 0) throw error("h2_partial_sum_closed: index must be nonnegative");
  if (n > kDegreeCap) throw error("h2_partial_sum_closed: degree too large");
  switch (which) {
    case Axis::kFirst:
      return pow_int(y + tau * lam, n) * std::exp(lam * x);
    case Axis::kSecond:
      return pow_int(x + tau * lam, n) * std::exp(lam * y);
  }
  throw error("h2_partial_sum_closed: bad axis");
}

}  // namespace sorder::hermite
