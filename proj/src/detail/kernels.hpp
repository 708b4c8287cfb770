#pragma once

// Shared expansion/conversion cores, templated on the complex scalar so the
// public double-precision algebra and the extended-precision matrix oracle
// run the same formulas.  QComplex wraps __float128: the oracle accumulates
// matrix elements through cancellations that double cannot survive at high
// Fock levels (alternating sums reach ~1e20 while the result is O(1)).

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "sorder/errors.hpp"
#include "sorder/ordered_algebra.hpp"

namespace sorder::detail {

using quad = __float128;

inline quad sqrt_quad(quad a) {
  if (a < 0) throw error("sqrt_quad: negative argument");
  if (a == 0) return 0;
  quad x = static_cast<quad>(std::sqrt(static_cast<double>(a)));
  for (int i = 0; i < 3; ++i) x = quad{0.5} * (x + a / x);
  return x;
}

struct QComplex {
  using value_type = quad;
  quad re = 0;
  quad im = 0;

  QComplex() = default;
  QComplex(quad r) : re(r) {}  // NOLINT: implicit, like std::complex
  QComplex(quad r, quad i) : re(r), im(i) {}
  explicit QComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  QComplex& operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QComplex operator*(const QComplex& a, quad s) {
    return {a.re * s, a.im * s};
  }
  friend QComplex operator/(const QComplex& a, quad s) {
    return {a.re / s, a.im / s};
  }
  double abs_double() const {
    return std::hypot(static_cast<double>(re), static_cast<double>(im));
  }
};

template <class C>
using TermMap = std::map<algebra::ExponentKey, C>;

template <class C>
inline void add_term(TermMap<C>& map, int p, int q, const C& c) {
  auto [it, inserted] = map.emplace(algebra::ExponentKey{p, q}, c);
  if (!inserted) it->second += c;
}

// c * {h_{n,m}(ad,a|kappa) e^(lambda ad a)} expanded inside the symbol:
// keys (n-i+k, m-i+k), coefficients c * C(n,i)C(m,i)i! kappa^i * lambda^k/k!.
template <class C>
TermMap<C> expand_exp_terms(const C& prefactor, int n, int m, const C& kappa,
                            const C& lambda, int cutoff) {
  using R = typename C::value_type;
  TermMap<C> out;
  C hci = prefactor;  // prefactor * C(n,i)C(m,i)i! kappa^i
  const int imax = std::min(n, m);
  for (int i = 0; i <= imax; ++i) {
    C ek = hci;  // hci * lambda^k / k!
    for (int k = 0; k <= cutoff; ++k) {
      add_term(out, n - i + k, m - i + k, ek);
      ek = ek * lambda / static_cast<R>(k + 1);
    }
    hci = hci * kappa *
          (static_cast<R>(n - i) * static_cast<R>(m - i) / static_cast<R>(i + 1));
  }
  return out;
}

// Re-expression of every {ad^p a^q} at tau = (t_to - t_from)/2 away:
// sum_w C(p,w)C(q,w)w! tau^w {ad^(p-w) a^(q-w)}.
template <class C>
TermMap<C> convert_terms(const TermMap<C>& in, typename C::value_type tau,
                         int degree_cap) {
  using R = typename C::value_type;
  TermMap<C> out;
  for (const auto& [key, c] : in) {
    if (key.p + key.q > degree_cap)
      throw error("ordering conversion: degree too large");
    C coef = c;  // c * C(p,w)C(q,w)w! tau^w
    const int wmax = std::min(key.p, key.q);
    for (int w = 0; w <= wmax; ++w) {
      add_term(out, key.p - w, key.q - w, coef);
      coef = coef * (static_cast<R>(key.p - w) * static_cast<R>(key.q - w) *
                     tau / static_cast<R>(w + 1));
    }
  }
  return out;
}

template <class C>
C conj_of(const C& z) {
  return {z.re, -z.im};
}
template <>
inline std::complex<double> conj_of(const std::complex<double>& z) {
  return std::conj(z);
}

// prefactor * {exp[-rate (conj(center) - ad)(center - a)]} expanded by
// binomials; keys (u,v), exponential series cut at `cutoff`.
template <class C>
TermMap<C> expand_shifted_gaussian(const C& prefactor, const C& center,
                                   typename C::value_type rate, int cutoff) {
  using R = typename C::value_type;
  const C cc = conj_of(center);
  std::vector<C> cpow(cutoff + 1), ccpow(cutoff + 1);
  cpow[0] = C{static_cast<R>(1)};
  ccpow[0] = C{static_cast<R>(1)};
  for (int j = 1; j <= cutoff; ++j) {
    cpow[j] = cpow[j - 1] * center;
    ccpow[j] = ccpow[j - 1] * cc;
  }
  TermMap<C> out;
  C rk = prefactor;  // prefactor * (-rate)^k / k!
  std::vector<R> binom(cutoff + 2);
  for (int k = 0; k <= cutoff; ++k) {
    binom[0] = static_cast<R>(1);  // row C(k, .)
    for (int u = 1; u <= k; ++u)
      binom[u] = binom[u - 1] * static_cast<R>(k - u + 1) / static_cast<R>(u);
    // (conj(b) - ad)^k (b - a)^k = sum_{u,v} C(k,u)C(k,v)(-1)^{u+v}
    //                              conj(b)^(k-u) b^(k-v) ad^u a^v
    for (int u = 0; u <= k; ++u) {
      const C left = ccpow[k - u] * ((u % 2) ? -binom[u] : binom[u]);
      for (int v = 0; v <= k; ++v) {
        const C c = rk * (left * cpow[k - v]) * ((v % 2) ? -binom[v] : binom[v]);
        add_term(out, u, v, c);
      }
    }
    rk = rk * (-rate) / static_cast<R>(k + 1);
  }
  return out;
}

}  // namespace sorder::detail
