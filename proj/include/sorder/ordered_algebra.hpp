#pragma once

#include <complex>
#include <map>

namespace sorder::algebra {

using cplx = std::complex<double>;

// Ordering label: s = 1 normal, s = 0 symmetric (Weyl), s = -1 antinormal.
struct OrderParameter {
  double s = 1.0;
  friend bool operator==(const OrderParameter&, const OrderParameter&) = default;
};

inline constexpr OrderParameter kNormal{1.0};
inline constexpr OrderParameter kWeyl{0.0};
inline constexpr OrderParameter kAntinormal{-1.0};

struct ExponentKey {
  int p = 0;  // creation exponent
  int q = 0;  // annihilation exponent
  auto operator<=>(const ExponentKey&) const = default;
};

// Numeric ordering conversions are exact finite sums, but their
// coefficients grow factorially; this cap keeps them inside double range.
inline constexpr int kAlgebraDegreeCap = 256;

// Coefficients below this are dropped as true underflow.  Nothing else is
// pruned; identity checks run at tight tolerances.
inline constexpr double kPruneThreshold = 1e-300;

// Finite polynomial sum c_{p,q} {ad^p a^q}_s under a single ordering
// symbol.  Inside the symbol the generators commute, so (p,q) keys are
// unique and the map is a normal form.
class OrderedPoly {
 public:
  OrderedPoly() = default;
  explicit OrderedPoly(OrderParameter order) : order_(order) {}

  OrderParameter order() const { return order_; }
  const std::map<ExponentKey, cplx>& terms() const { return terms_; }

  void add(int p, int q, cplx c);
  cplx coeff(int p, int q) const;
  int degree() const;  // max p+q, -1 when empty
  bool empty() const { return terms_.empty(); }

 private:
  OrderParameter order_{};
  std::map<ExponentKey, cplx> terms_;
};

// Coefficient-map comparison: both maps are scanned against the common
// scale max|c|; matched or missing keys must agree to rel_tol * scale.
bool approx_equal(const OrderedPoly& a, const OrderedPoly& b,
                  double rel_tol = 1e-12);

// Closed form c * { h_{n,m}(ad, a | kappa) * e^(lambda ad a) }_order.
// n = m = 0 with arbitrary kappa is a plain ordered exponential.
struct OrderedExp {
  cplx prefactor = 1.0;
  int n = 0;
  int m = 0;
  cplx kappa = 0.0;
  cplx lambda = 0.0;
  OrderParameter order{};
};

// Diagonal projector in Laguerre form:
// prefactor * { L_n(-ad a / kappa) e^(-f ad a) }_order, stored so that
// kappa = 0 stays regular (kappa enters as kappa^(n-k), never divided by).
struct LaguerreForm {
  double prefactor = 1.0;  // f^(2n+1) kappa^n absorbed via kappa powers below
  int n = 0;
  double f = 1.0;
  double kappa = 0.0;
  OrderParameter order{};
};

// Coherent projector as a shifted Gaussian:
// prefactor * { exp[-rate (conj(center) - ad)(center - a)] }_order.
struct CoherentProjector {
  double prefactor = 1.0;
  cplx center = 0.0;
  double rate = 1.0;
  OrderParameter order{};
};

// {ad^p a^q}_s re-expressed at order t:
// sum_i C(p,i) C(q,i) i! ((t-s)/2)^i {ad^(p-i) a^(q-i)}_t.
OrderedPoly convert_monomial(int p, int q, OrderParameter s, OrderParameter t);

// Term-by-term conversion of a whole polynomial to order t.
OrderedPoly convert_poly(const OrderedPoly& poly, OrderParameter t);

// Normal-ordered expansion of (ad a)^k, built by applying the number
// operator to normal form k times (coefficients are Stirling numbers).
OrderedPoly number_op_power(int k);

// {e^(lambda ad a)}_s = f {e^(g ad a)}_t with f = 2/(2 - lambda (t-s)),
// g = lambda f.  Requires a pure exponential (n = m = 0).
OrderedExp exp_reorder(const OrderedExp& e, OrderParameter t);

// ad^n_left * {e^(lambda ad a)}_s * a^m_right folded into a single symbol:
// kappa^(n+m) { h_{n,m}(ad, a | tau/kappa) e^(lambda ad a) }_s with
// tau = (s-1)/2, kappa = tau*lambda + 1.
OrderedExp sandwich(const OrderedExp& e, int n_left, int m_right);

// |n><m| at order t: (n! m!)^(-1/2) f^(n+m+1)
// { h_{n,m}(ad, a | kappa) e^(-f ad a) }_t, f = 2/(t+1), kappa = (t^2-1)/4.
OrderedExp projector(int n, int m, OrderParameter t);

// The m = n special case in Laguerre form, f^(2n+1) kappa^n L_n(...)e^(...).
LaguerreForm projector_diagonal(int n, OrderParameter t);

// |beta><beta| = 2/(1-t) { exp[-2/(1-t) (conj(beta)-ad)(beta-a)] }_{-t}.
CoherentProjector coherent_projector(cplx beta, OrderParameter t);

struct ExpansionResult {
  OrderedPoly poly;
  double tail_bound = 0.0;  // magnitude of the first dropped exponential coefficient
};

// Expands the exponential inside the symbol to order `cutoff` in lambda
// (classical multiplication inside the symbol) and merges with the
// Hermite coefficient table.
ExpansionResult exp_to_poly(const OrderedExp& e, int cutoff);

// Laguerre-form projector expanded the same way; regular at kappa = 0.
OrderedPoly laguerre_form_to_poly(const LaguerreForm& lf, int cutoff);

// Shifted-Gaussian coherent projector expanded by binomials of the
// shifted exponent, cutting the exponential series at `cutoff`.
OrderedPoly coherent_to_poly(const CoherentProjector& cp, int cutoff);

}  // namespace sorder::algebra
