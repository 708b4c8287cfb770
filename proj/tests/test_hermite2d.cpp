#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>

#include "doctest.h"
#include "sorder/biguint.hpp"
#include "sorder/errors.hpp"
#include "sorder/hermite2d.hpp"

using namespace sorder;
using hermite::cplx;

namespace {

// independent explicit-series route, used only as a test oracle
cplx laguerre_series(int n, cplx z) {
  cplx acc = 0.0;
  double binom = 1.0;  // C(n,k)
  double kfac = 1.0;   // k!
  cplx zp = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += binom * (k % 2 ? -1.0 : 1.0) * zp / kfac;
    binom *= static_cast<double>(n - k) / (k + 1.0);
    kfac *= (k + 1.0);
    zp *= z;
  }
  return acc;
}

}  // namespace

TEST_CASE("BigUint word arithmetic and formatting") {
  detail::BigUint v(1);
  v.mul_u64(1ull << 63);
  v.mul_u64(4);  // crosses the 64-bit limb boundary
  CHECK(v.to_string() == "36893488147419103232");
  v.div_exact_u64(4);
  CHECK(v.to_string() == "9223372036854775808");
  CHECK(v.to_double() == doctest::Approx(9.223372036854776e18));
  CHECK_THROWS_AS(detail::BigUint(10).div_exact_u64(3), std::logic_error);
  CHECK(detail::BigUint(0).to_string() == "0");
}

TEST_CASE("coefficient tables: shape and exact values") {
  auto t11 = hermite::h2_coeffs(1, 1);
  REQUIRE(t11.terms.size() == 2);
  CHECK(t11.terms[0].i == 0);
  CHECK(t11.terms[0].c == detail::BigUint(1));
  CHECK(t11.terms[1].c == detail::BigUint(1));

  auto t21 = hermite::h2_coeffs(2, 1);
  REQUIRE(t21.terms.size() == 2);
  CHECK(t21.terms[1].c == detail::BigUint(2));

  auto t05 = hermite::h2_coeffs(0, 5);
  REQUIRE(t05.terms.size() == 1);
  CHECK(t05.terms[0].c == detail::BigUint(1));

  // c_0 = 1 everywhere, lists have no gaps
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) {
      auto t = hermite::h2_coeffs(m, n);
      REQUIRE(static_cast<int>(t.terms.size()) == std::min(m, n) + 1);
      CHECK(t.terms[0].c == detail::BigUint(1));
      for (std::size_t i = 0; i < t.terms.size(); ++i)
        CHECK(t.terms[i].i == static_cast<int>(i));
    }
}

TEST_CASE("coefficient tables: index symmetry is exact") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= m; ++n) {
      auto a = hermite::h2_coeffs(m, n);
      auto b = hermite::h2_coeffs(n, m);
      REQUIRE(a.terms.size() == b.terms.size());
      for (std::size_t i = 0; i < a.terms.size(); ++i)
        CHECK(a.terms[i].c == b.terms[i].c);
    }
}

TEST_CASE("top of the exact range exceeds 128-bit integers") {
  auto t = hermite::h2_coeffs(32, 32);
  // c_32 = 32!, too large for unsigned __int128 territory errors to hide
  CHECK(t.terms[32].c.to_string() == "263130836933693530167218012160000000");
}

TEST_CASE("degree cap is an error, not a rounding") {
  CHECK_THROWS_AS(hermite::h2_coeffs(40, 30), error);
  CHECK_THROWS_AS(hermite::h2_eval(33, 32, 1.0, 1.0, 1.0), error);
  CHECK_THROWS_AS(hermite::h2_coeffs(-1, 2), error);
  CHECK_NOTHROW(hermite::h2_coeffs(32, 32));
}

TEST_CASE("h2_eval: pinned small values") {
  CHECK(hermite::h2_eval(1, 1, 2.0, 3.0, 0.5) == cplx{6.5, 0.0});
  CHECK(hermite::h2_eval(0, 3, 0.0, 2.0, 0.7) == cplx{8.0, 0.0});
  // tau = 0 leaves the bare monomial
  const cplx x{1.3, -0.2}, y{0.4, 0.9};
  CHECK(hermite::h2_eval(3, 2, x, y, 0.0) ==
        hermite::pow_int(x, 3) * hermite::pow_int(y, 2));
}

TEST_CASE("laguerre_eval: recurrence vs explicit series") {
  const cplx zs[] = {{1.0, 0.0}, {0.3, -0.8}, {-2.2, 1.4}};
  CHECK(hermite::laguerre_eval(0, zs[1]) == cplx{1.0});
  CHECK(hermite::laguerre_eval(1, zs[1]) == cplx{1.0} - zs[1]);
  for (const cplx& z : zs)
    for (int n = 2; n <= 10; ++n) {
      const cplx got = hermite::laguerre_eval(n, z);
      const cplx want = laguerre_series(n, z);
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  // frozen spot value: L_3(1) = 1 - 3 + 3/2 - 1/6 = -2/3
  CHECK(std::abs(hermite::laguerre_eval(3, 1.0) - cplx{-2.0 / 3.0}) < 1e-15);
}

TEST_CASE("diagonal values match the Laguerre route") {
  const cplx x{0.9, 0.3}, y{-0.5, 1.1};
  for (double ta : {0.1, 0.7, 2.0})
    for (double phase : {0.0, 2.1})
      for (int n = 0; n <= 10; ++n) {
        const cplx tau = std::polar(ta, phase);
        const cplx lhs = hermite::h2_eval(n, n, x, y, tau);
        double nf = 1.0;
        for (int k = 2; k <= n; ++k) nf *= k;
        const cplx rhs = hermite::pow_int(tau, n) * nf *
                         hermite::laguerre_eval(n, -x * y / tau);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
      }
}

TEST_CASE("partial sums against the closed form") {
  const cplx x = 1.0, y = 2.0, tau = 0.7, lam = 0.3;
  // n = 0 collapses to the exponential
  CHECK(std::abs(hermite::h2_partial_sum_closed(0, lam, x, y, tau,
                                                hermite::Axis::kFirst) -
                 std::exp(lam * x)) < 1e-15);
  // lam = 0 leaves y^n
  CHECK(hermite::h2_partial_sum_closed(2, 0.0, x, y, tau,
                                       hermite::Axis::kFirst) ==
        hermite::pow_int(y, 2));

  // pinned case: (y + tau*lam)^2 e^(lam x)
  const cplx closed = hermite::h2_partial_sum_closed(2, lam, x, y, tau,
                                                     hermite::Axis::kFirst);
  CHECK(std::abs(closed - cplx{2.21 * 2.21} * std::exp(cplx{0.3})) < 1e-12);

  // the generating series reaches it with a sub-1e-10 tail
  cplx series = 0.0, lm = 1.0;
  for (int m = 0; m <= 30; ++m) {
    series += lm * hermite::h2_eval(m, 2, x, y, tau);
    lm *= lam / static_cast<double>(m + 1);
  }
  CHECK(std::abs(series - closed) < 1e-10);

  // second-axis variant
  const cplx closed2 = hermite::h2_partial_sum_closed(3, lam, x, y, tau,
                                                      hermite::Axis::kSecond);
  cplx series2 = 0.0, mn = 1.0;
  for (int n = 0; n <= 30; ++n) {
    series2 += mn * hermite::h2_eval(3, n, x, y, tau);
    mn *= lam / static_cast<double>(n + 1);
  }
  CHECK(std::abs(series2 - closed2) < 1e-10);
}

TEST_CASE("generating function over the sampled disc") {
  const cplx x{1.1, 0.2}, y{-0.6, 0.5}, tau{0.4, -0.3};
  for (const cplx lam : {cplx{0.5, 0.0}, cplx{-0.2, 0.4}})
    for (const cplx mu : {cplx{0.45, 0.1}, cplx{0.0, -0.5}}) {
      cplx sum = 0.0, lm = 1.0;
      for (int m = 0; m <= 30; ++m) {
        cplx term = lm;
        for (int n = 0; n <= 30; ++n) {
          sum += term * hermite::h2_eval(m, n, x, y, tau);
          term *= mu / static_cast<double>(n + 1);
        }
        lm *= lam / static_cast<double>(m + 1);
      }
      CHECK(std::abs(sum - std::exp(lam * x + mu * y + tau * lam * mu)) < 1e-10);
    }
}

TEST_CASE("single evaluation path: table handed in equals table rebuilt") {
  const cplx x{0.7, 0.1}, y{1.2, -0.4}, tau{0.3, 0.2};
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      const auto ci = hermite::h2_coeffs_double(m, n);
      // bit-for-bit: same code path, same table
      CHECK(hermite::h2_eval_with(ci, m, n, x, y, tau) ==
            hermite::h2_eval(m, n, x, y, tau));
    }
}
