// Timing harness: OpenMP kernels against their serial references.
// Usage: sorder_bench [reps]

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sorder/fock_oracle.hpp"
#include "sorder/ordered_algebra.hpp"
#include "sorder/phase_space.hpp"

using namespace sorder;
using cplx = std::complex<double>;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(const char* name, double serial_s, double parallel_s,
            double deviation) {
  std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   max|diff| %.2e\n",
              name, serial_s, parallel_s, serial_s / parallel_s, deviation);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d, reps: %d\n", omp_get_max_threads(), reps);
#else
  std::printf("threads: 1 (OpenMP disabled), reps: %d\n", reps);
#endif

  {  // symbol sampling over a dense grid
    const auto symbol = phase::projector_symbol(3, 2, algebra::OrderParameter{0.5});
    phase::ComplexGrid ser, par;
    double ts = 0.0, tp = 0.0;
    for (int r = 0; r < reps; ++r) {
      double t0 = now_s();
      ser = phase::sample_grid_serial(symbol, 6.0, 256);
      ts += now_s() - t0;
      t0 = now_s();
      par = phase::sample_grid(symbol, 6.0, 256);
      tp += now_s() - t0;
    }
    double dev = 0.0;
    for (std::size_t k = 0; k < ser.values.size(); ++k)
      dev = std::max(dev, std::abs(ser.values[k] - par.values[k]));
    report("sample_grid N=256", ts, tp, dev);
  }

  {  // trace pairing batch
    const auto grid = phase::QuadratureGrid::midpoint(6.0, 160);
    double ts = 0.0, tp = 0.0, dev = 0.0;
    for (int r = 0; r < reps; ++r)
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
          const auto wf = phase::projector_symbol(n, m, algebra::OrderParameter{0.5});
          const auto wg = phase::coherent_symbol({0.7, 0.2},
                                                 algebra::OrderParameter{0.5});
          double t0 = now_s();
          const cplx a = phase::trace_pair_serial(wf, wg, grid);
          ts += now_s() - t0;
          t0 = now_s();
          const cplx b = phase::trace_pair(wf, wg, grid);
          tp += now_s() - t0;
          dev = std::max(dev, std::abs(a - b));
        }
    report("trace_pair batch (16 pairings)", ts, tp, dev);
  }

  {  // dense matrix product at the dimension cap
    auto [a, ad] = fock::ladder(128);
    const auto m1 = fock::matmul_serial(ad, a);
    double ts = 0.0, tp = 0.0, dev = 0.0;
    fock::FockMatrix rs(128), rp(128);
    for (int r = 0; r < reps * 4; ++r) {
      double t0 = now_s();
      rs = fock::matmul_serial(m1, m1);
      ts += now_s() - t0;
      t0 = now_s();
      rp = fock::matmul(m1, m1);
      tp += now_s() - t0;
    }
    dev = fock::matrix_distance(rs, rp, 0);
    report("matmul D=128", ts, tp, dev);
  }

  {  // projector batch through the extended-precision oracle
    std::vector<algebra::OrderedExp> batch;
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= 5; ++m)
        batch.push_back(algebra::projector(n, m, algebra::OrderParameter{0.5}));

    std::vector<fock::FockMatrix> out_ser(batch.size()), out_par(batch.size());
    double t0 = now_s();
    for (std::size_t i = 0; i < batch.size(); ++i)
      out_ser[i] = fock::eval_exp(batch[i], 40, 200);
    const double ts = now_s() - t0;

    t0 = now_s();
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
      out_par[static_cast<std::size_t>(i)] =
          fock::eval_exp(batch[static_cast<std::size_t>(i)], 40, 200);
    const double tp = now_s() - t0;

    double dev = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i)
      dev = std::max(dev, fock::matrix_distance(out_ser[i], out_par[i], 0));
    report("projector batch eval (36 forms)", ts, tp, dev);
  }

  return 0;
}
