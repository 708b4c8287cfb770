// The parallel kernels must match their serial references: matmul and
// sample_grid bitwise (independent per-element work), trace_pair through a
// fixed reduction tree that makes results thread-count independent.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <cstring>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "sorder/fock_oracle.hpp"
#include "sorder/phase_space.hpp"

using namespace sorder;
using fock::cplx;

namespace {

fock::FockMatrix random_matrix(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  fock::FockMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = {u(rng), u(rng)};
  return m;
}

bool bitwise_equal(const fock::FockMatrix& a, const fock::FockMatrix& b) {
  return a.dim() == b.dim() &&
         std::memcmp(a.data().data(), b.data().data(),
                     a.data().size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_CASE("matmul: parallel equals serial bitwise") {
  const auto x = random_matrix(64, 1);
  const auto y = random_matrix(64, 2);
  CHECK(bitwise_equal(fock::matmul(x, y), fock::matmul_serial(x, y)));
}

TEST_CASE("sample_grid: parallel equals serial bitwise") {
  const auto symbol = phase::projector_symbol(2, 1, algebra::OrderParameter{0.5});
  const auto par = phase::sample_grid(symbol, 4.0, 64);
  const auto ser = phase::sample_grid_serial(symbol, 4.0, 64);
  REQUIRE(par.values.size() == ser.values.size());
  CHECK(std::memcmp(par.values.data(), ser.values.data(),
                    par.values.size() * sizeof(cplx)) == 0);
}

TEST_CASE("trace_pair: chunked reduction is close to the serial reference") {
  const auto grid = phase::QuadratureGrid::midpoint(6.0, 160);
  const auto wf = phase::projector_symbol(2, 2, algebra::OrderParameter{0.5});
  const auto wg = phase::projector_symbol(2, 2, algebra::OrderParameter{-0.5});
  const cplx par = phase::trace_pair(wf, wg, grid);
  const cplx ser = phase::trace_pair_serial(wf, wg, grid);
  CHECK(std::abs(par - ser) < 1e-12 * std::max(1.0, std::abs(ser)));
}

TEST_CASE("trace_pair: bitwise reproducible across thread counts") {
  const auto grid = phase::QuadratureGrid::midpoint(6.0, 160);
  const auto wf = phase::projector_symbol(1, 0, algebra::OrderParameter{0.3});
  const auto wg = phase::coherent_symbol({0.7, 0.2}, algebra::OrderParameter{0.3});

  const cplx first = phase::trace_pair(wf, wg, grid);
  const cplx again = phase::trace_pair(wf, wg, grid);
  CHECK(std::memcmp(&first, &again, sizeof(cplx)) == 0);

#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const cplx single = phase::trace_pair(wf, wg, grid);
  omp_set_num_threads(saved);
  CHECK(std::memcmp(&first, &single, sizeof(cplx)) == 0);
#endif
}

TEST_CASE("eval_exp is reproducible") {
  const algebra::OrderedExp e = algebra::projector(2, 1, algebra::OrderParameter{0.5});
  const auto a = fock::eval_exp(e, 30, 160);
  const auto b = fock::eval_exp(e, 30, 160);
  CHECK(bitwise_equal(a, b));
}
