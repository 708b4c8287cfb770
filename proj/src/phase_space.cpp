#include "sorder/phase_space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "sorder/errors.hpp"
#include "sorder/hermite2d.hpp"

namespace sorder::phase {

namespace {

constexpr std::size_t kChunk = 512;

double factorial_d(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Fixed-chunk reduction: each chunk accumulates in index order and chunks
// combine in index order, independent of the thread count.
template <class F>
cplx chunked_sum(std::size_t count, F&& f) {
  const std::size_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<cplx> partial(nchunks);
#pragma omp parallel for schedule(static)
  for (long long ci = 0; ci < static_cast<long long>(nchunks); ++ci) {
    const std::size_t lo = static_cast<std::size_t>(ci) * kChunk;
    const std::size_t hi = std::min(count, lo + kChunk);
    cplx acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) acc += f(k);
    partial[static_cast<std::size_t>(ci)] = acc;
  }
  cplx total = 0.0;
  for (const cplx& p : partial) total += p;
  return total;
}

void check_projector_order(OrderParameter t, const char* who) {
  if (std::abs(t.s + 1.0) < 1e-12)
    throw error(std::string(who) + ": pole at t = -1");
}

void check_grid_args(double L, int N, const char* who) {
  if (!(L > 0.0)) throw error(std::string(who) + ": half-width must be positive");
  if (N < 2 || N % 2 != 0)
    throw error(std::string(who) + ": points-per-axis must be positive and even");
}

}  // namespace

QuadratureGrid QuadratureGrid::midpoint(double L, int N) {
  check_grid_args(L, N, "QuadratureGrid");
  QuadratureGrid grid;
  grid.L = L;
  grid.N = N;
  const double h = 2.0 * L / N;
  grid.weight = h * h;
  grid.nodes.resize(static_cast<std::size_t>(N) * N);
  for (int iy = 0; iy < N; ++iy) {
    const double y = grid.axis(iy);
    for (int ix = 0; ix < N; ++ix)
      grid.nodes[static_cast<std::size_t>(iy) * N + ix] = {grid.axis(ix), y};
  }
  return grid;
}

// (2i+1-N)*(L/N): the integer factor negates exactly under i -> N-1-i, so
// the grid is mirror-symmetric to the last bit.
double QuadratureGrid::axis(int i) const {
  return (2.0 * i + 1.0 - N) * (L / N);
}

double calibration_error(const QuadratureGrid& grid) {
  const cplx total = chunked_sum(grid.nodes.size(), [&](std::size_t k) {
    return cplx{std::exp(-std::norm(grid.nodes[k])), 0.0};
  });
  return std::abs(total * grid.weight / std::numbers::pi - 1.0);
}

cplx w_projector(int n, int m, cplx alpha, OrderParameter t) {
  return projector_symbol(n, m, t)(alpha);
}

double w_coherent(cplx beta, cplx alpha, OrderParameter t) {
  if (std::abs(1.0 - t.s) < 1e-12) throw error("w_coherent: pole at t = 1");
  const double rate = 2.0 / (1.0 - t.s);
  return rate * std::exp(-rate * std::norm(beta - alpha));
}

Symbol projector_symbol(int n, int m, OrderParameter t) {
  check_projector_order(t, "projector_symbol");
  if (n < 0 || m < 0) throw error("projector_symbol: negative index");
  const double f = 2.0 / (t.s + 1.0);
  const cplx kappa = (t.s * t.s - 1.0) / 4.0;
  const double pref =
      std::pow(f, n + m + 1) / std::sqrt(factorial_d(n) * factorial_d(m));
  return [n, m, f, kappa, pref, ci = hermite::h2_coeffs_double(n, m)](cplx a) {
    return pref * hermite::h2_eval_with(ci, n, m, std::conj(a), a, kappa) *
           std::exp(-f * std::norm(a));
  };
}

Symbol coherent_symbol(cplx beta, OrderParameter t) {
  if (std::abs(1.0 - t.s) < 1e-12) throw error("coherent_symbol: pole at t = 1");
  const double rate = 2.0 / (1.0 - t.s);
  return [beta, rate](cplx a) {
    return cplx{rate * std::exp(-rate * std::norm(beta - a)), 0.0};
  };
}

Symbol constant_symbol(cplx value) {
  return [value](cplx) { return value; };
}

Symbol poly_symbol(const algebra::OrderedPoly& poly, OrderParameter t) {
  const auto kernel = algebra::convert_poly(poly, OrderParameter{-t.s});
  std::vector<std::tuple<int, int, cplx>> terms;
  terms.reserve(kernel.terms().size());
  for (const auto& [key, c] : kernel.terms()) terms.emplace_back(key.p, key.q, c);
  return [terms = std::move(terms)](cplx a) {
    const cplx ac = std::conj(a);
    cplx acc = 0.0;
    for (const auto& [p, q, c] : terms)
      acc += c * hermite::pow_int(ac, p) * hermite::pow_int(a, q);
    return acc;
  };
}

cplx trace_pair(const Symbol& wf, const Symbol& wg, const QuadratureGrid& grid) {
  const cplx total = chunked_sum(grid.nodes.size(), [&](std::size_t k) {
    const cplx a = grid.nodes[k];
    return wf(a) * wg(a);
  });
  return total * grid.weight / std::numbers::pi;
}

cplx trace_pair_serial(const Symbol& wf, const Symbol& wg,
                       const QuadratureGrid& grid) {
  cplx total = 0.0;
  for (const cplx& a : grid.nodes) total += wf(a) * wg(a);
  return total * grid.weight / std::numbers::pi;
}

IntegrationCheck verify_integration_formula(int n, int m, cplx beta,
                                            OrderParameter t,
                                            const QuadratureGrid& grid) {
  if (n < 0 || m < 0) throw error("verify_integration_formula: negative index");
  if (!(t.s > -1.0 && t.s < 1.0))
    throw error("verify_integration_formula: t must lie in (-1, 1)");
  const double f = 2.0 / (t.s + 1.0);
  const double rate = 2.0 / (1.0 - t.s);
  const cplx kappa = (t.s * t.s - 1.0) / 4.0;
  const auto ci = hermite::h2_coeffs_double(n, m);

  const cplx integral = chunked_sum(grid.nodes.size(), [&](std::size_t k) {
    const cplx a = grid.nodes[k];
    return hermite::h2_eval_with(ci, n, m, std::conj(a), a, kappa) *
           std::exp(-f * std::norm(a) - rate * std::norm(beta - a));
  });
  const cplx rhs = 2.0 * std::pow(f, n + m + 1) * std::exp(std::norm(beta)) /
                   (1.0 - t.s) * integral * grid.weight / std::numbers::pi;
  const cplx lhs =
      hermite::pow_int(std::conj(beta), n) * hermite::pow_int(beta, m);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

double ComplexGrid::axis(int i) const { return (2.0 * i + 1.0 - N) * (L / N); }

ComplexGrid sample_grid(const Symbol& symbol, double L, int N) {
  check_grid_args(L, N, "sample_grid");
  ComplexGrid grid;
  grid.L = L;
  grid.N = N;
  grid.values.resize(static_cast<std::size_t>(N) * N);
#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < N; ++iy) {
    const double y = grid.axis(iy);
    for (int ix = 0; ix < N; ++ix)
      grid.values[static_cast<std::size_t>(iy) * N + ix] = symbol({grid.axis(ix), y});
  }
  return grid;
}

ComplexGrid sample_grid_serial(const Symbol& symbol, double L, int N) {
  check_grid_args(L, N, "sample_grid");
  ComplexGrid grid;
  grid.L = L;
  grid.N = N;
  grid.values.resize(static_cast<std::size_t>(N) * N);
  for (int iy = 0; iy < N; ++iy) {
    const double y = grid.axis(iy);
    for (int ix = 0; ix < N; ++ix)
      grid.values[static_cast<std::size_t>(iy) * N + ix] = symbol({grid.axis(ix), y});
  }
  return grid;
}

namespace {

void append_double(std::string& line, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  line.append(buf, ptr);
}

}  // namespace

void write_csv(const ComplexGrid& grid, std::ostream& out) {
  out << "x,y,re,im\n";
  std::string line;
  for (int iy = 0; iy < grid.N; ++iy) {
    for (int ix = 0; ix < grid.N; ++ix) {
      const cplx v = grid.values[static_cast<std::size_t>(iy) * grid.N + ix];
      line.clear();
      append_double(line, grid.axis(ix));
      line.push_back(',');
      append_double(line, grid.axis(iy));
      line.push_back(',');
      append_double(line, v.real());
      line.push_back(',');
      append_double(line, v.imag());
      line.push_back('\n');
      out << line;
    }
  }
}

}  // namespace sorder::phase
