#include "sorder/ordered_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "detail/kernels.hpp"
#include "sorder/errors.hpp"
#include "sorder/hermite2d.hpp"

namespace sorder::algebra {

namespace {

double factorial_d(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

void check_nonneg(int p, int q, const char* who) {
  if (p < 0 || q < 0)
    throw error(std::string(who) + ": exponents must be nonnegative");
}

void require_pure_exponential(const OrderedExp& e, const char* who) {
  if (e.n != 0 || e.m != 0)
    throw error(std::string(who) + ": requires a pure exponential (n = m = 0)");
}

}  // namespace

void OrderedPoly::add(int p, int q, cplx c) {
  check_nonneg(p, q, "OrderedPoly::add");
  auto [it, inserted] = terms_.try_emplace(ExponentKey{p, q}, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

cplx OrderedPoly::coeff(int p, int q) const {
  auto it = terms_.find(ExponentKey{p, q});
  return it == terms_.end() ? cplx{0.0} : it->second;
}

int OrderedPoly::degree() const {
  int deg = -1;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.p + key.q);
  return deg;
}

bool approx_equal(const OrderedPoly& a, const OrderedPoly& b, double rel_tol) {
  if (!(a.order() == b.order())) return false;
  double scale = 0.0;
  for (const auto& [k, c] : a.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [k, c] : b.terms()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  const double tol = rel_tol * scale;
  for (const auto& [k, c] : a.terms())
    if (std::abs(c - b.coeff(k.p, k.q)) > tol) return false;
  for (const auto& [k, c] : b.terms())
    if (std::abs(c - a.coeff(k.p, k.q)) > tol) return false;
  return true;
}

OrderedPoly convert_monomial(int p, int q, OrderParameter s, OrderParameter t) {
  check_nonneg(p, q, "convert_monomial");
  if (p + q > kAlgebraDegreeCap) throw error("convert_monomial: degree too large");
  detail::TermMap<cplx> in;
  in[ExponentKey{p, q}] = 1.0;
  const double tau = (t.s - s.s) / 2.0;
  auto converted = detail::convert_terms(in, tau, kAlgebraDegreeCap);
  OrderedPoly out(t);
  for (const auto& [key, c] : converted) out.add(key.p, key.q, c);
  return out;
}

OrderedPoly convert_poly(const OrderedPoly& poly, OrderParameter t) {
  const double tau = (t.s - poly.order().s) / 2.0;
  auto converted = detail::convert_terms(poly.terms(), tau, kAlgebraDegreeCap);
  OrderedPoly out(t);
  for (const auto& [key, c] : converted) out.add(key.p, key.q, c);
  return out;
}

OrderedPoly number_op_power(int k) {
  if (k < 0) throw error("number_op_power: power must be nonnegative");
  if (2 * k > kAlgebraDegreeCap) throw error("number_op_power: degree too large");
  // (ad a)^k = sum_p c_p ad^p a^p in normal order; applying ad a once maps
  // c_p -> c_{p-1} (raise) + p c_p (stay).
  std::vector<double> c{1.0};  // k = 0: identity
  for (int step = 0; step < k; ++step) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t p = 0; p < c.size(); ++p) {
      next[p + 1] += c[p];
      next[p] += static_cast<double>(p) * c[p];
    }
    c = std::move(next);
  }
  OrderedPoly out(kNormal);
  for (std::size_t p = 0; p < c.size(); ++p)
    if (c[p] != 0.0) out.add(static_cast<int>(p), static_cast<int>(p), c[p]);
  return out;
}

OrderedExp exp_reorder(const OrderedExp& e, OrderParameter t) {
  require_pure_exponential(e, "exp_reorder");
  const cplx denom = 2.0 - e.lambda * (t.s - e.order.s);
  if (std::abs(denom) < 1e-12 * (2.0 + std::abs(e.lambda * (t.s - e.order.s))))
    throw error("exp_reorder: ordering pole (lambda*(t-s) = 2)");
  const cplx f = 2.0 / denom;
  return OrderedExp{e.prefactor * f, 0, 0, 0.0, e.lambda * f, t};
}

OrderedExp sandwich(const OrderedExp& e, int n_left, int m_right) {
  require_pure_exponential(e, "sandwich");
  check_nonneg(n_left, m_right, "sandwich");
  const double tau_minus = (e.order.s - 1.0) / 2.0;
  const cplx kappa = tau_minus * e.lambda + 1.0;
  if (n_left == 0 && m_right == 0) return e;
  if (std::abs(kappa) < 1e-12)
    throw error("sandwich: degenerate kappa (tau*lambda + 1 = 0)");
  return OrderedExp{e.prefactor * hermite::pow_int(kappa, n_left + m_right),
                    n_left,
                    m_right,
                    tau_minus / kappa,
                    e.lambda,
                    e.order};
}

OrderedExp projector(int n, int m, OrderParameter t) {
  check_nonneg(n, m, "projector");
  if (n + m > hermite::kDegreeCap) throw error("projector: degree too large");
  if (std::abs(t.s + 1.0) < 1e-12)
    throw error("projector: antinormal pole (t = -1)");
  const double f = 2.0 / (t.s + 1.0);
  const double kappa = (t.s * t.s - 1.0) / 4.0;
  const double pref = std::pow(f, n + m + 1) / std::sqrt(factorial_d(n) * factorial_d(m));
  return OrderedExp{pref, n, m, kappa, -f, t};
}

LaguerreForm projector_diagonal(int n, OrderParameter t) {
  if (n < 0) throw error("projector_diagonal: index must be nonnegative");
  if (2 * n > hermite::kDegreeCap) throw error("projector_diagonal: degree too large");
  if (std::abs(t.s + 1.0) < 1e-12)
    throw error("projector_diagonal: antinormal pole (t = -1)");
  const double f = 2.0 / (t.s + 1.0);
  const double kappa = (t.s * t.s - 1.0) / 4.0;
  return LaguerreForm{std::pow(f, 2 * n + 1), n, f, kappa, t};
}

CoherentProjector coherent_projector(cplx beta, OrderParameter t) {
  if (std::abs(1.0 - t.s) < 1e-12)
    throw error("coherent_projector: pole at t = 1");
  const double rate = 2.0 / (1.0 - t.s);
  return CoherentProjector{rate, beta, rate, OrderParameter{-t.s}};
}

ExpansionResult exp_to_poly(const OrderedExp& e, int cutoff) {
  if (cutoff < 0) throw error("exp_to_poly: cutoff must be nonnegative");
  if (e.n + e.m + 2 * cutoff > kAlgebraDegreeCap)
    throw error("exp_to_poly: degree too large (n+m+2*cutoff exceeds cap)");
  auto terms = detail::expand_exp_terms(e.prefactor, e.n, e.m, e.kappa,
                                        e.lambda, cutoff);
  OrderedPoly poly(e.order);
  for (const auto& [key, c] : terms) poly.add(key.p, key.q, c);

  // first dropped exponential coefficient, scaled by the largest Hermite
  // table entry, as a truncation diagnostic
  double max_h = 0.0;
  double hci = 1.0;
  const cplx kap = e.kappa;
  for (int i = 0; i <= std::min(e.n, e.m); ++i) {
    max_h = std::max(max_h, hci);
    hci *= std::abs(kap) * (e.n - i) * (e.m - i) / (i + 1.0);
  }
  double tail = std::abs(e.prefactor);
  for (int k = 1; k <= cutoff + 1; ++k) tail *= std::abs(e.lambda) / k;
  return ExpansionResult{std::move(poly), tail * max_h};
}

OrderedPoly laguerre_form_to_poly(const LaguerreForm& lf, int cutoff) {
  if (cutoff < 0) throw error("laguerre_form_to_poly: cutoff must be nonnegative");
  if (2 * (lf.n + cutoff) > kAlgebraDegreeCap)
    throw error("laguerre_form_to_poly: degree too large");
  // prefactor * kappa^n L_n(-ad a / kappa) e^(-f ad a)
  //   = prefactor * sum_k C(n,k) kappa^(n-k) (ad a)^k / k! * sum_j (-f)^j (ad a)^j / j!
  OrderedPoly out(lf.order);
  for (int p = 0; p <= lf.n + cutoff; ++p) {
    double coeff = 0.0;
    double binom = 1.0;  // C(n,k)
    double kf = 1.0;     // 1/k!
    for (int k = 0; k <= std::min(lf.n, p); ++k) {
      double term = binom * std::pow(lf.kappa, lf.n - k) * kf;
      // exponential part (-f)^(p-k)/(p-k)!
      double ef = 1.0;
      for (int j = 1; j <= p - k; ++j) ef *= -lf.f / j;
      coeff += term * ef;
      binom *= static_cast<double>(lf.n - k) / (k + 1.0);
      kf /= (k + 1.0);
    }
    if (coeff != 0.0) out.add(p, p, lf.prefactor * coeff);
  }
  return out;
}

OrderedPoly coherent_to_poly(const CoherentProjector& cp, int cutoff) {
  if (cutoff < 0) throw error("coherent_to_poly: cutoff must be nonnegative");
  if (2 * cutoff > kAlgebraDegreeCap)
    throw error("coherent_to_poly: degree too large");
  auto terms = detail::expand_shifted_gaussian(cplx{cp.prefactor},
                                               cp.center, cp.rate, cutoff);
  OrderedPoly out(cp.order);
  for (const auto& [key, c] : terms) out.add(key.p, key.q, c);
  return out;
}

}  // namespace sorder::algebra
