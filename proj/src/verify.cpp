#include "sorder/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "sorder/errors.hpp"
#include "sorder/fock_oracle.hpp"
#include "sorder/hermite2d.hpp"

namespace sorder::verify {

namespace {

using algebra::OrderedExp;
using algebra::OrderedPoly;
using algebra::OrderParameter;
using fock::FockMatrix;

double factorial_d(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

CheckResult check(std::string name, double err, double tol,
                  std::string note = {}) {
  return {std::move(name), err, tol, err <= tol, false, std::move(note)};
}

CheckResult skipped(std::string name, double err, std::string note) {
  return {std::move(name), err, 0.0, true, true, std::move(note)};
}

CheckResult gate_blocked(std::string name, std::string note) {
  return {std::move(name), 0.0, 0.0, false, true, std::move(note)};
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// (ad a)^2 = {(ad a)^2}_s + [(s+1)/2 + 3(s-1)/2] {ad a}_s
//            + (s+1)(s-1)/4 + ((s-1)/2)^2
OrderedPoly number_squared_at_order(double s) {
  OrderedPoly poly(OrderParameter{s});
  poly.add(2, 2, 1.0);
  poly.add(1, 1, (s + 1.0) / 2.0 + 3.0 * (s - 1.0) / 2.0);
  poly.add(0, 0, (s + 1.0) * (s - 1.0) / 4.0 +
                     (s - 1.0) * (s - 1.0) / 4.0);
  return poly;
}

OrderedExp pure_exp(double lambda, double s) {
  return OrderedExp{1.0, 0, 0, 0.0, lambda, OrderParameter{s}};
}

FockMatrix diag_powers(int dim, int power) {
  FockMatrix out(dim);
  for (int k = 0; k < dim; ++k)
    out(k, k) = std::pow(static_cast<double>(k), power);
  return out;
}

double poly_mismatch(const OrderedPoly& a, const OrderedPoly& b) {
  double scale = 0.0;
  for (const auto& [k, c] : a.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [k, c] : b.terms()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& [k, c] : a.terms())
    worst = std::max(worst, std::abs(c - b.coeff(k.p, k.q)));
  for (const auto& [k, c] : b.terms())
    worst = std::max(worst, std::abs(c - a.coeff(k.p, k.q)));
  return worst / scale;
}

template <class Fn>
CheckResult expect_throw(std::string name, Fn&& fn) {
  bool threw = false;
  try {
    fn();
  } catch (const error&) {
    threw = true;
  }
  return {std::move(name), threw ? 0.0 : 1.0, 0.5, threw, false,
          threw ? "" : "expected sorder::error was not thrown"};
}

}  // namespace

// ---------------------------------------------------------------- measures

double worked_example_error(double s, int dim, int margin) {
  const FockMatrix got = fock::eval_poly(number_squared_at_order(s), dim);
  return fock::matrix_distance(got, diag_powers(dim, 2), margin);
}

double series_ratio(double lambda, double s) {
  return std::abs(lambda) * (1.0 - s) / 2.0;
}

double exp_reorder_error(double lambda, double s, double t, int dim,
                         int margin, int cutoff) {
  const OrderedExp lhs = pure_exp(lambda, s);
  const OrderedExp rhs = algebra::exp_reorder(lhs, OrderParameter{t});
  return fock::matrix_distance(fock::eval_exp(lhs, dim, cutoff),
                               fock::eval_exp(rhs, dim, cutoff), margin);
}

double projector_reconstruction_error(int n, int m, double t, int dim,
                                      int margin, int cutoff) {
  const FockMatrix got =
      fock::eval_exp(algebra::projector(n, m, OrderParameter{t}), dim, cutoff);
  return fock::matrix_distance(got, fock::basis_projector(n, m, dim), margin);
}

double sandwich_error(double s, double lambda, int n, int m, int dim,
                      int margin, int cutoff) {
  const OrderedExp e = pure_exp(lambda, s);
  const FockMatrix lhs =
      fock::eval_exp(algebra::sandwich(e, n, m), dim, cutoff);
  const FockMatrix mid = fock::eval_exp(e, dim, cutoff);
  auto [a, ad] = fock::ladder(dim);
  const FockMatrix rhs =
      fock::matmul(fock::matmul(fock::matpow(ad, n), mid), fock::matpow(a, m));
  return fock::matrix_distance(lhs, rhs, margin);
}

int sandwich_cutoff(double s, double lambda) {
  const double r = series_ratio(lambda, s);
  if (r < 0.05) return 40;
  if (r < 0.30) return 120;
  if (r < 0.55) return 280;
  return -1;  // expansion does not converge on desk-scale matrix elements
}

double laguerre_diag_mismatch(int n, double t, int cutoff) {
  const OrderedPoly h_form =
      algebra::exp_to_poly(algebra::projector(n, n, OrderParameter{t}), cutoff)
          .poly;
  const OrderedPoly l_form = algebra::laguerre_form_to_poly(
      algebra::projector_diagonal(n, OrderParameter{t}), cutoff);
  return poly_mismatch(h_form, l_form);
}

double coherent_expansion_error(cplx beta, double t, int dim, int margin,
                                int cutoff) {
  const auto cp = algebra::coherent_projector(beta, OrderParameter{t});
  const FockMatrix got = fock::eval_coherent(cp, dim, cutoff);
  const auto v = fock::coherent_vector(beta, dim);
  return fock::matrix_distance(got, fock::outer(v, v), margin);
}

double projector_pairing_error(int n, int m, double t, cplx beta,
                               const phase::QuadratureGrid& grid) {
  const cplx got =
      phase::trace_pair(phase::projector_symbol(n, m, OrderParameter{t}),
                        phase::coherent_symbol(beta, OrderParameter{t}), grid);
  const cplx want = hermite::pow_int(beta, m) *
                    hermite::pow_int(std::conj(beta), n) *
                    std::exp(-std::norm(beta)) /
                    std::sqrt(factorial_d(n) * factorial_d(m));
  return std::abs(got - want);
}

// ---------------------------------------------------------------- hermite

std::vector<CheckResult> hermite_suite() {
  std::vector<CheckResult> out;
  using hermite::h2_eval;
  const cplx samples[][3] = {
      {{1.3, 0.4}, {-0.7, 0.9}, {0.8, -0.3}},
      {{-2.0, 0.1}, {1.1, 1.2}, {-0.5, 0.6}},
      {{0.3, -1.1}, {2.0, 0.0}, {1.5, 0.2}},
  };

  {  // index symmetry h_{m,n}(x,y|tau) = h_{n,m}(y,x|tau)
    double worst = 0.0;
    for (const auto& smp : samples)
      for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 12; ++n) {
          const cplx lhs = h2_eval(m, n, smp[0], smp[1], smp[2]);
          const cplx rhs = h2_eval(n, m, smp[1], smp[0], smp[2]);
          worst = std::max(worst,
                           std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    out.push_back(check("hermite symmetry m<->n (m,n<=12)", worst, 1e-12));
  }

  {  // generating function, M = 30
    double worst = 0.0;
    const cplx lams[] = {{0.5, 0.0}, {-0.3, 0.2}, {0.0, 0.45}};
    const cplx mus[] = {{0.4, -0.1}, {0.5, 0.0}, {-0.2, -0.3}};
    for (int i = 0; i < 3; ++i) {
      const cplx lam = lams[i], mu = mus[i];
      const cplx x = samples[i][0], y = samples[i][1], tau = samples[i][2];
      cplx sum = 0.0;
      cplx lm = 1.0;  // lam^m / m!
      for (int m = 0; m <= 30; ++m) {
        cplx mn = lm;  // lam^m mu^n / (m! n!)
        for (int n = 0; n <= 30; ++n) {
          sum += mn * h2_eval(m, n, x, y, tau);
          mn *= mu / static_cast<double>(n + 1);
        }
        lm *= lam / static_cast<double>(m + 1);
      }
      worst = std::max(worst,
                       std::abs(sum - std::exp(lam * x + mu * y + tau * lam * mu)));
    }
    out.push_back(check("hermite generating function (M=30)", worst, 1e-10));
  }

  {  // diagonal Laguerre relation, tau in an annulus
    double worst = 0.0;
    const cplx taus[] = {{0.1, 0.0}, {0.5, 0.5}, {-1.2, 0.4}, {0.0, 2.0},
                         {1.9, -0.3}, {-0.15, -0.1}};
    for (const cplx& tau : taus)
      for (int n = 0; n <= 10; ++n) {
        const cplx x = samples[0][0], y = samples[1][0];
        const cplx lhs = h2_eval(n, n, x, y, tau);
        const cplx rhs = hermite::pow_int(tau, n) * factorial_d(n) *
                         hermite::laguerre_eval(n, -x * y / tau);
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    out.push_back(check("hermite diagonal Laguerre relation", worst, 1e-12));
  }

  {  // tau -> 0 joins the tau = 0 table value
    double worst_seq = 0.0;
    const cplx x = samples[2][0], y = samples[2][1];
    for (int n = 1; n <= 6; ++n) {
      const cplx mono = hermite::pow_int(x, n) * hermite::pow_int(y, n);
      double prev = 1e300;
      for (double tau : {1e-2, 1e-4, 1e-6}) {
        const double err = std::abs(h2_eval(n, n, x, y, tau) - mono);
        if (err > prev * 1.5) worst_seq = std::max(worst_seq, err);
        prev = err;
      }
      worst_seq = std::max(worst_seq, std::abs(h2_eval(n, n, x, y, 0.0) - mono));
    }
    out.push_back(check("hermite tau->0 continuity (exact at 0)", worst_seq, 0.0));
  }

  {  // partial sums against the closed forms
    double worst = 0.0;
    const cplx x = 1.0, y = 2.0, tau = 0.7, lam = 0.3;
    cplx series = 0.0, lm = 1.0;
    for (int m = 0; m <= 30; ++m) {
      series += lm * h2_eval(m, 2, x, y, tau);
      lm *= lam / static_cast<double>(m + 1);
    }
    worst = std::max(worst, std::abs(series - hermite::h2_partial_sum_closed(
                                                  2, lam, x, y, tau,
                                                  hermite::Axis::kFirst)));
    // second axis mirror
    series = 0.0;
    lm = 1.0;
    for (int n = 0; n <= 30; ++n) {
      series += lm * h2_eval(2, n, x, y, tau);
      lm *= lam / static_cast<double>(n + 1);
    }
    worst = std::max(worst, std::abs(series - hermite::h2_partial_sum_closed(
                                                  2, lam, x, y, tau,
                                                  hermite::Axis::kSecond)));
    out.push_back(check("hermite partial sums (closed vs series)", worst, 1e-10));
  }

  out.push_back(expect_throw("hermite degree cap enforced",
                             [] { hermite::h2_coeffs(40, 30); }));
  return out;
}

// --------------------------------------------------------------- ordering

std::vector<CheckResult> ordering_suite(const Options& opt) {
  std::vector<CheckResult> out;
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(0, 4);

  {  // conversion transitivity and round trip on random polynomials
    double worst_tr = 0.0, worst_rt = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
      OrderParameter s{coeff(rng)}, u{coeff(rng)}, t{coeff(rng)};
      OrderedPoly poly(s);
      for (int k = 0; k < 6; ++k)
        poly.add(expo(rng), expo(rng), {coeff(rng), coeff(rng)});
      const OrderedPoly via_u =
          algebra::convert_poly(algebra::convert_poly(poly, u), t);
      const OrderedPoly direct = algebra::convert_poly(poly, t);
      worst_tr = std::max(worst_tr, poly_mismatch(via_u, direct));
      const OrderedPoly back =
          algebra::convert_poly(algebra::convert_poly(poly, t), s);
      worst_rt = std::max(worst_rt, poly_mismatch(back, poly));
    }
    out.push_back(check("conversion transitivity (deg<=8)", worst_tr, 1e-12));
    out.push_back(check("conversion round trip s->t->s", worst_rt, 1e-12));
  }

  {  // the four-term (ad a)^2 expansion: coefficients and oracle
    double worst_coeff = 0.0, worst_oracle = 0.0;
    const OrderedPoly normal_form = algebra::number_op_power(2);
    for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const OrderedPoly converted =
          algebra::convert_poly(number_squared_at_order(s), algebra::kNormal);
      worst_coeff = std::max(worst_coeff, poly_mismatch(converted, normal_form));
      worst_oracle = std::max(worst_oracle, worked_example_error(s, opt.D, opt.margin));
    }
    out.push_back(check("(ad a)^2 ordered expansion vs normal form", worst_coeff, 1e-12));
    out.push_back(check("(ad a)^2 ordered expansion vs oracle", worst_oracle, 1e-10));
  }

  {  // antinormal -> normal monomial: a a_dag = ad a + 1
    const OrderedPoly conv =
        algebra::convert_monomial(1, 1, algebra::kAntinormal, algebra::kNormal);
    const double err = std::abs(conv.coeff(1, 1) - 1.0) +
                       std::abs(conv.coeff(0, 0) - 1.0);
    out.push_back(check("monomial conversion a.ad = ad.a + 1", err, 1e-15));
  }

  {  // number_op_power(3) vs diag(n^3)
    const FockMatrix got = fock::eval_poly(algebra::number_op_power(3), 12);
    out.push_back(check("number operator cubed vs oracle",
                        fock::matrix_distance(got, diag_powers(12, 3), 0), 1e-9));
  }

  {  // exponential reordering sweep; decidability is classified per combo
    int decidable = 0;
    for (double lam : {-1.0, -0.5, 0.3})
      for (double s : {-0.5, 0.0, 0.5, 1.0})
        for (double t : {-0.5, 0.0, 0.5, 1.0}) {
          std::ostringstream name;
          name << "exp reorder lam=" << lam << " s=" << s << " t=" << t;
          const OrderedExp rhs =
              algebra::exp_reorder(pure_exp(lam, s), OrderParameter{t});
          const double d0 =
              exp_reorder_error(lam, s, t, opt.D, opt.margin, opt.cutoff);
          if (d0 <= 1e-8) {
            ++decidable;
            out.push_back(check(name.str(), d0, 1e-8));
            continue;
          }
          const double ratio = std::max(series_ratio(lam, s),
                                        series_ratio(std::abs(rhs.lambda), t));
          if (ratio >= 0.45) {
            out.push_back(skipped(name.str(), ratio,
                                  "series ratio too large for the pinned cutoff "
                                  "(diverges outright at >= 1)"));
            continue;
          }
          const double d1 =
              exp_reorder_error(lam, s, t, opt.D, opt.margin, opt.cutoff + 10);
          if (d1 < 0.9 * d0) {
            out.push_back(skipped(name.str(), d0,
                                  "series unconverged at cutoff " +
                                      std::to_string(opt.cutoff) +
                                      " (still shrinking: " + fmt(d1) + ")"));
          } else {
            out.push_back(check(name.str(), d0, 1e-8,
                                "converged disagreement"));
          }
        }
    out.push_back(check("exp reorder decidable combos (>=9)",
                        decidable >= 9 ? 0.0 : 1.0, 0.5,
                        std::to_string(decidable) + " combos decided at 1e-8"));
  }

  {  // ladder sandwich against the matrix product
    for (double s : {0.0, 0.5, 1.0})
      for (double lam : {-1.0, -0.4}) {
        const int cutoff = sandwich_cutoff(s, lam);
        double worst = 0.0;
        for (auto [n, m] : {std::pair{0, 1}, {1, 2}, {2, 2}, {4, 3}, {4, 4}})
          worst = std::max(worst, sandwich_error(s, lam, n, m, opt.D,
                                                 opt.margin, cutoff));
        std::ostringstream name;
        name << "sandwich s=" << s << " lam=" << lam << " (cutoff " << cutoff
             << ")";
        out.push_back(check(name.str(), worst, 1e-8));
      }
  }

  out.push_back(expect_throw("exp reorder pole detected", [] {
    algebra::exp_reorder(pure_exp(2.0, 0.0), OrderParameter{1.0});
  }));
  out.push_back(expect_throw("sandwich degenerate kappa detected", [] {
    algebra::sandwich(pure_exp(1.0, -1.0), 1, 0);
  }));
  return out;
}

// -------------------------------------------------------------- projector

std::vector<CheckResult> projector_suite(const Options& opt) {
  std::vector<CheckResult> out;
  const int dim = std::max(opt.D, 20);

  {  // reconstruction where the expansion converges
    for (double t : {0.5, 1.0}) {
      const int cutoff = (t >= 0.999) ? 40 : (dim <= 30 ? 160 : 200);
      double worst = 0.0;
      for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
          worst = std::max(worst, projector_reconstruction_error(
                                      n, m, t, dim, opt.margin, cutoff));
      std::ostringstream name;
      name << "projector reconstruction t=" << t << " (cutoff " << cutoff << ")";
      out.push_back(check(name.str(), worst, 1e-8));
    }
  }

  {  // divergent orderings: documented, then cross-checked by quadrature
    const double sample = projector_reconstruction_error(1, 1, 0.0, dim,
                                                         opt.margin, opt.cutoff);
    out.push_back(skipped(
        "projector matrix route t=0 (series ratio 1)", sample,
        "normal-ordered expansion of the t-ordered exponential has geometric "
        "ratio (1-t)/(1+t) >= 1 here; no cutoff converges"));

    const auto grid = phase::QuadratureGrid::midpoint(opt.L, opt.N);
    const cplx betas[] = {{0.7, 0.2}, {-0.4, 1.1}, {1.2, -0.5}};
    for (double t : {-0.5, 0.0}) {
      double worst = 0.0;
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
          for (const cplx& beta : betas)
            worst = std::max(worst,
                             projector_pairing_error(n, m, t, beta, grid));
      std::ostringstream name;
      name << "projector vs coherent amplitudes (quadrature) t=" << t;
      out.push_back(check(name.str(), worst, 1e-6));
    }
  }

  {  // diagonal Laguerre form, pure coefficient identity (all orderings)
    double worst = 0.0;
    for (double t : {-0.5, 0.0, 0.5, 1.0})
      for (int n = 0; n <= 5; ++n)
        worst = std::max(worst, laguerre_diag_mismatch(n, t, opt.cutoff));
    out.push_back(check("projector diagonal Laguerre form", worst, 1e-12));
  }

  {  // completeness at t = 0.5 on the lowest levels
    FockMatrix sum(30);
    for (int n = 0; n <= 11; ++n)
      sum += fock::eval_exp(algebra::projector(n, n, OrderParameter{0.5}), 30, 160);
    double worst = 0.0;
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c)
        worst = std::max(worst,
                         std::abs(sum(r, c) - (r == c ? 1.0 : 0.0)));
    out.push_back(check("projector completeness (n<=11, 7 levels)", worst, 1e-6));
  }

  {  // hermiticity: matrices where convergent, symbols everywhere
    double worst_m = 0.0;
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        const FockMatrix x = fock::eval_exp(
            algebra::projector(n, m, OrderParameter{0.5}), dim, 160);
        const FockMatrix y = fock::eval_exp(
            algebra::projector(m, n, OrderParameter{0.5}), dim, 160);
        worst_m = std::max(worst_m,
                           fock::matrix_distance(x, fock::adjoint(y), opt.margin));
      }
    out.push_back(check("projector hermiticity (matrix, t=0.5)", worst_m, 1e-10));

    double worst_s = 0.0;
    const cplx alphas[] = {{0.3, 0.4}, {-1.1, 0.7}, {2.0, -1.5}, {0.0, 0.0}};
    for (double t : {-0.5, 0.0, 0.5, 1.0})
      for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
          for (const cplx& a : alphas) {
            const cplx x = phase::w_projector(n, m, a, OrderParameter{t});
            const cplx y = phase::w_projector(m, n, a, OrderParameter{t});
            worst_s = std::max(worst_s, std::abs(x - std::conj(y)) /
                                            std::max(1.0, std::abs(x)));
          }
    out.push_back(check("projector hermiticity (symbols)", worst_s, 1e-14));
  }

  {  // growing the basis never worsens agreement on a fixed leading block
    const auto e = algebra::projector(2, 1, OrderParameter{0.5});
    const FockMatrix small = fock::eval_exp(e, 25, 160);
    const FockMatrix big = fock::eval_exp(e, 40, 160);
    double d_small = 0.0, d_big = 0.0;
    for (int r = 0; r < 20; ++r)
      for (int c = 0; c < 20; ++c) {
        const double want = (r == 2 && c == 1) ? 1.0 : 0.0;
        d_small = std::max(d_small, std::abs(small(r, c) - want));
        d_big = std::max(d_big, std::abs(big(r, c) - want));
      }
    out.push_back(check("truncation monotonicity (fixed block)",
                        d_big - d_small, 1e-12));
  }

  out.push_back(expect_throw("projector antinormal pole detected", [] {
    algebra::projector(1, 1, OrderParameter{-1.0});
  }));
  return out;
}

// ------------------------------------------------------------ phase space

std::vector<CheckResult> phase_space_suite(const Options& opt) {
  std::vector<CheckResult> out;
  const auto grid = phase::QuadratureGrid::midpoint(opt.L, opt.N);

  const double gate = phase::calibration_error(grid);
  out.push_back(check("quadrature calibration gate", gate, 1e-8));
  if (gate > 1e-8) {
    for (const char* name :
         {"vacuum symbols", "coherent pairing", "normalization",
          "matrix-element consistency", "projector orthonormality",
          "integration formula", "integration formula convergence"})
      out.push_back(gate_blocked(name, "calibration gate failed"));
    return out;
  }

  {  // vacuum symbols against coherent amplitudes and purity
    double worst = 0.0;
    for (const cplx a : {cplx{0.4, 0.3}, cplx{-1.0, 0.8}, cplx{1.7, -0.2}}) {
      const auto v = fock::coherent_vector(a, 30);
      worst = std::max(worst,
                       std::abs(phase::w_projector(0, 0, a, OrderParameter{1.0}) -
                                std::norm(v[0])));
      worst = std::max(worst,
                       std::abs(phase::w_projector(0, 0, a, OrderParameter{0.0}) -
                                2.0 * std::exp(-2.0 * std::norm(a))));
    }
    const cplx purity =
        phase::trace_pair(phase::projector_symbol(0, 0, OrderParameter{0.0}),
                          phase::projector_symbol(0, 0, OrderParameter{0.0}), grid);
    worst = std::max(worst, std::abs(purity - 1.0));
    out.push_back(check("vacuum symbols", worst, 1e-8));
  }

  {  // coherent symbol paired against the vacuum
    double worst = 0.0;
    for (const cplx beta : {cplx{0.5, 0.0}, cplx{0.7, 0.2}, cplx{-0.9, 1.0}})
      for (double t : {-0.5, 0.0, 0.5}) {
        const cplx got = phase::trace_pair(
            phase::projector_symbol(0, 0, OrderParameter{t}),
            phase::coherent_symbol(beta, OrderParameter{t}), grid);
        worst = std::max(worst, std::abs(got - std::exp(-std::norm(beta))));
      }
    out.push_back(check("coherent pairing vs vacuum", worst, 1e-6));
  }

  {  // identity symbol is 1 at every ordering
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n)
      for (double t : {-0.5, 0.0, 0.5}) {
        const cplx got =
            phase::trace_pair(phase::projector_symbol(n, n, OrderParameter{t}),
                              phase::constant_symbol(1.0), grid);
        worst = std::max(worst, std::abs(got - 1.0));
      }
    out.push_back(check("normalization vs identity symbol", worst, 1e-6));
  }

  {  // random polynomials: pairing reproduces oracle matrix elements
    std::mt19937 rng(0xabcd);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      OrderedPoly poly(algebra::kNormal);
      for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 2; ++q)
          poly.add(p, q, {coeff(rng), coeff(rng)});
      const FockMatrix mat = fock::eval_poly(poly, 30);
      for (double t : {-0.5, 0.0, 0.5}) {
        const auto wp = phase::poly_symbol(poly, OrderParameter{t});
        for (int n = 0; n <= 3; ++n)
          for (int m = 0; m <= 3; ++m) {
            const cplx got = phase::trace_pair(
                phase::projector_symbol(n, m, OrderParameter{t}), wp, grid);
            worst = std::max(worst, std::abs(got - mat(m, n)));
          }
      }
    }
    out.push_back(check("matrix-element consistency (deg<=3)", worst, 1e-6));
  }

  {  // Tr(E_nn E_mm) = delta_nm with symbols at opposite parameters
    double worst = 0.0;
    for (double t : {-0.5, 0.5})
      for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
          const cplx got = phase::trace_pair(
              phase::projector_symbol(n, n, OrderParameter{t}),
              phase::projector_symbol(m, m, OrderParameter{-t}), grid);
          worst = std::max(worst, std::abs(got - (n == m ? 1.0 : 0.0)));
        }
    out.push_back(check("projector orthonormality", worst, 1e-6));
  }

  {  // the Hermite-Gaussian integral identity
    double worst = 0.0;
    for (double t : {-0.5, 0.0, 0.5})
      for (const cplx beta : {cplx{0.0, 0.0}, cplx{0.7, 0.2}, cplx{1.2, -0.5}})
        for (int n = 0; n <= 3; ++n)
          for (int m = 0; m <= 3; ++m)
            worst = std::max(
                worst, phase::verify_integration_formula(n, m, beta,
                                                         OrderParameter{t}, grid)
                           .abs_err);
    std::ostringstream note;
    const auto at_opt = phase::verify_integration_formula(
        1, 0, opt.beta, OrderParameter{std::clamp(opt.t, -0.89, 0.89)}, grid);
    note << "at t=" << std::clamp(opt.t, -0.89, 0.89) << " beta=" << opt.beta
         << ": lhs=" << at_opt.lhs << " rhs=" << at_opt.rhs
         << " err=" << at_opt.abs_err;
    out.push_back(check("integration formula (n,m<=3)", worst, 1e-6, note.str()));
  }

  {  // halving the spacing gains at least 4x until the floor
    double prev = -1.0;
    double worst_ratio_excess = 0.0;
    for (int n : {12, 24, 48, 96}) {
      const auto g = phase::QuadratureGrid::midpoint(opt.L, n);
      const double err = phase::verify_integration_formula(
                             2, 1, {0.7, 0.2}, OrderParameter{0.3}, g)
                             .abs_err;
      if (prev >= 0.0) {
        const double allowed = std::max(prev / 4.0, 1e-9);
        worst_ratio_excess = std::max(worst_ratio_excess, err - allowed);
      }
      prev = err;
    }
    out.push_back(check("integration formula convergence (4x per halving)",
                        worst_ratio_excess, 0.0));
  }

  {  // pointwise symbol hermiticity
    double worst = 0.0;
    const cplx alphas[] = {{0.2, 0.9}, {-1.4, 0.3}, {2.2, -1.0}};
    for (double t : {-0.5, 0.0, 0.5, 1.0})
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
          for (const cplx& a : alphas) {
            const cplx x = phase::w_projector(n, m, a, OrderParameter{t});
            const cplx y = phase::w_projector(m, n, a, OrderParameter{t});
            worst = std::max(worst, std::abs(x - std::conj(y)) /
                                        std::max(1.0, std::abs(x)));
          }
    out.push_back(check("symbol hermiticity (pointwise)", worst, 1e-14));
  }

  return out;
}

std::vector<CheckResult> run_suites(const std::string& which,
                                    const Options& opt) {
  std::vector<CheckResult> out;
  const bool all = which == "all";
  if (all || which == "hermite") {
    auto r = hermite_suite();
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || which == "ordering") {
    auto r = ordering_suite(opt);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || which == "projector") {
    auto r = projector_suite(opt);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (all || which == "phase-space") {
    auto r = phase_space_suite(opt);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (out.empty()) throw error("unknown suite: " + which);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace sorder::verify
