// Command-line front end: Hermite evaluation, ordering conversion,
// projector construction, symbol grids, and the verification suites.
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sorder/errors.hpp"
#include "sorder/fock_oracle.hpp"
#include "sorder/hermite2d.hpp"
#include "sorder/json_io.hpp"
#include "sorder/ordered_algebra.hpp"
#include "sorder/phase_space.hpp"
#include "sorder/verify.hpp"

namespace {

using cplx = std::complex<double>;
using sorder::algebra::OrderParameter;

cplx parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw sorder::error("bad complex value: " + text);
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      throw sorder::error("bad complex value (want re or re,im): " + text);
  }
  std::string rest;
  if (is >> rest) throw sorder::error("bad complex value: " + text);
  return {re, im};
}

std::string format_complex(cplx v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v.real());
  std::string out = buf;
  std::snprintf(buf, sizeof(buf), "%.15g", std::abs(v.imag()));
  out += (v.imag() < 0.0 ? " - " : " + ");
  out += buf;
  out += "i";
  return out;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sorder::error("cannot open output file: " + path);
  out << payload;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sorder::error("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

int cmd_eval_hermite(int m, int n, const std::string& xs, const std::string& ys,
                     const std::string& taus, bool check_laguerre) {
  const cplx x = parse_complex(xs), y = parse_complex(ys),
             tau = parse_complex(taus);
  const cplx value = sorder::hermite::h2_eval(m, n, x, y, tau);
  std::cout << format_complex(value) << "\n";
  if (check_laguerre) {
    if (m != n) throw sorder::error("--check-laguerre requires m = n");
    if (std::abs(tau) == 0.0)
      throw sorder::error("--check-laguerre requires tau != 0");
    const cplx lag = sorder::hermite::pow_int(tau, n) *
                     [&] {
                       double f = 1.0;
                       for (int k = 2; k <= n; ++k) f *= k;
                       return f;
                     }() *
                     sorder::hermite::laguerre_eval(n, -x * y / tau);
    std::cout << "laguerre route: " << format_complex(lag) << "\n";
    std::cout << "difference:     " << format_complex(value - lag) << "\n";
  }
  return 0;
}

int cmd_convert_order(double t, const std::string& in_path,
                      const std::string& out_path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_input(in_path));
  } catch (const nlohmann::json::exception& e) {
    throw sorder::error(std::string("malformed JSON input: ") + e.what());
  }
  const auto poly = sorder::algebra::poly_from_json(doc);
  const auto converted = sorder::algebra::convert_poly(poly, OrderParameter{t});
  write_output(out_path, sorder::algebra::poly_to_json(converted).dump(2) + "\n");
  return 0;
}

int cmd_projector(int n, int m, double t, bool laguerre_form, int expand,
                  bool verify, int dim, int margin, double tol,
                  const std::string& out_path) {
  if (t <= -1.0)
    throw sorder::error("projector requires t > -1 (antinormal pole)");
  const auto form = sorder::algebra::projector(n, m, OrderParameter{t});

  if (laguerre_form) {
    if (n != m) throw sorder::error("--laguerre-form requires n = m");
    const auto lf = sorder::algebra::projector_diagonal(n, OrderParameter{t});
    std::ostringstream os;
    os.precision(15);
    os << "laguerre form: f^(2n+1) kappa^n L_n(-ad a / kappa) e^(-f ad a)\n"
       << "  n        = " << lf.n << "\n"
       << "  order    = " << lf.order.s << "\n"
       << "  f        = " << lf.f << "\n"
       << "  kappa    = " << lf.kappa << "\n"
       << "  f^(2n+1) = " << lf.prefactor << "\n"
       << "  kappa^n  = " << sorder::hermite::pow_int(lf.kappa, lf.n).real()
       << "\n";
    write_output(out_path, os.str());
    return 0;
  }

  if (expand >= 0 && !verify) {
    const auto expansion = sorder::algebra::exp_to_poly(form, expand);
    std::string payload =
        sorder::algebra::poly_to_json(expansion.poly).dump(2) + "\n";
    std::cerr << "truncation diagnostic (dropped coefficient): "
              << expansion.tail_bound << "\n";
    write_output(out_path, payload);
  } else if (!verify) {
    std::ostringstream os;
    os.precision(15);
    os << "ordered exponential form: c { h_{n,m}(ad, a | kappa) e^(lambda ad a) }_t\n"
       << "  n      = " << form.n << "\n"
       << "  m      = " << form.m << "\n"
       << "  order  = " << form.order.s << "\n"
       << "  c      = " << format_complex(form.prefactor) << "\n"
       << "  kappa  = " << format_complex(form.kappa) << "\n"
       << "  lambda = " << format_complex(form.lambda) << "\n";
    write_output(out_path, os.str());
  }

  if (verify) {
    const int cutoff = expand >= 0 ? expand : 40;
    const double ratio = (1.0 - t) / (1.0 + t);
    if (ratio >= 0.95)
      std::cerr << "note: normal-ordered series ratio (1-t)/(1+t) = " << ratio
                << " does not converge; expect a large distance\n";
    const double dist = sorder::verify::projector_reconstruction_error(
        n, m, t, dim, margin, cutoff);
    std::cout.precision(15);
    std::cout << "interior distance to basis projector (D=" << dim
              << ", margin=" << margin << ", cutoff=" << cutoff
              << "): " << dist << "\n";
    return dist <= tol ? 0 : 1;
  }
  return 0;
}

int cmd_quasiprob_grid(int n, int m, double t, double L, int N,
                       const std::string& format, const std::string& out_path) {
  if (t <= -1.0)
    throw sorder::error("quasiprob-grid requires t > -1 (antinormal pole)");
  const auto symbol = sorder::phase::projector_symbol(n, m, OrderParameter{t});
  const auto grid = sorder::phase::sample_grid(symbol, L, N);
  if (format == "csv") {
    std::ostringstream os;
    sorder::phase::write_csv(grid, os);
    write_output(out_path, os.str());
  } else if (format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (int iy = 0; iy < grid.N; ++iy)
      for (int ix = 0; ix < grid.N; ++ix) {
        const cplx v = grid.values[static_cast<std::size_t>(iy) * grid.N + ix];
        values.push_back({{"x", grid.axis(ix)},
                          {"y", grid.axis(iy)},
                          {"re", v.real()},
                          {"im", v.imag()}});
      }
    nlohmann::json doc{{"L", grid.L}, {"N", grid.N}, {"values", std::move(values)}};
    write_output(out_path, doc.dump(2) + "\n");
  } else {
    throw sorder::error("unknown format: " + format + " (want csv or json)");
  }
  return 0;
}

int cmd_verify(const std::string& suite, const sorder::verify::Options& opt) {
  const auto results = sorder::verify::run_suites(suite, opt);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failed = 0;
  for (const auto& r : results) {
    const char* status = r.skipped ? (r.pass ? "SKIP" : "GATE")
                                   : (r.pass ? "ok  " : "FAIL");
    if (!r.pass) ++failed;
    std::printf("%s  %-*s  err=%-11.3e tol=%-9.1e %s\n", status,
                static_cast<int>(width), r.name.c_str(), r.err, r.tol,
                r.note.c_str());
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-ordered boson operator toolkit"};
  app.require_subcommand(1);

  // eval-hermite
  auto* eh = app.add_subcommand("eval-hermite",
                                "evaluate h_{m,n}(x, y | tau)");
  int eh_m = 0, eh_n = 0;
  std::string eh_x = "0", eh_y = "0", eh_tau = "0";
  bool eh_check = false;
  eh->add_option("--m", eh_m, "first index")->required();
  eh->add_option("--n", eh_n, "second index")->required();
  eh->add_option("--x", eh_x, "first argument, re or re,im");
  eh->add_option("--y", eh_y, "second argument, re or re,im");
  eh->add_option("--tau", eh_tau, "contraction parameter, re or re,im");
  eh->add_flag("--check-laguerre", eh_check,
               "also print the diagonal Laguerre route and the difference");

  // convert-order
  auto* co = app.add_subcommand("convert-order",
                                "re-express a polynomial at another ordering");
  double co_t = 1.0;
  std::string co_in = "-", co_out = "-";
  co->add_option("--t", co_t, "target ordering parameter")->required();
  co->add_option("--input", co_in, "input JSON file (default stdin)");
  co->add_option("--out", co_out, "output file (default stdout)");

  // projector
  auto* pj = app.add_subcommand("projector",
                                "ordered form of the Fock projector |n><m|");
  int pj_n = 0, pj_m = 0, pj_D = 30, pj_margin = 5, pj_expand = -1;
  double pj_t = 1.0, pj_tol = 1e-8;
  bool pj_lag = false, pj_verify = false;
  std::string pj_out;
  pj->add_option("--n", pj_n, "row index")->required();
  pj->add_option("--m", pj_m, "column index")->required();
  pj->add_option("--t", pj_t, "ordering parameter")->required();
  pj->add_flag("--laguerre-form", pj_lag, "print the diagonal Laguerre form");
  pj->add_option("--expand", pj_expand, "expand to a polynomial at this cutoff");
  pj->add_flag("--verify", pj_verify,
               "compare against the basis matrix in a truncated Fock space");
  pj->add_option("--D", pj_D, "oracle dimension");
  pj->add_option("--margin", pj_margin, "interior margin");
  pj->add_option("--tol", pj_tol, "verification tolerance");
  pj->add_option("--out", pj_out, "output file (default stdout)");

  // quasiprob-grid
  auto* qg = app.add_subcommand(
      "quasiprob-grid", "sample the projector quasiprobability symbol");
  int qg_n = 0, qg_m = 0, qg_N = 160;
  double qg_t = 0.0, qg_L = 6.0;
  std::string qg_format = "csv", qg_out;
  qg->add_option("--n", qg_n, "row index")->required();
  qg->add_option("--m", qg_m, "column index")->required();
  qg->add_option("--t", qg_t, "ordering parameter")->required();
  qg->add_option("--L", qg_L, "grid half-width");
  qg->add_option("--N", qg_N, "points per axis (even)");
  qg->add_option("--format", qg_format, "csv or json");
  qg->add_option("--out", qg_out, "output file (default stdout)");

  // verify
  auto* vf = app.add_subcommand("verify", "run the identity suites");
  std::string vf_suite = "all", vf_beta = "0.7,0.2";
  sorder::verify::Options opt;
  vf->add_option("--suite", vf_suite,
                 "hermite | ordering | projector | phase-space | all");
  vf->add_option("--D", opt.D, "oracle dimension");
  vf->add_option("--cutoff", opt.cutoff, "exponential series cutoff");
  vf->add_option("--L", opt.L, "quadrature half-width");
  vf->add_option("--N", opt.N, "quadrature points per axis");
  vf->add_option("--margin", opt.margin, "interior margin");
  vf->add_option("--t", opt.t, "ordering parameter for reported checks");
  vf->add_option("--beta", vf_beta, "coherent amplitude re,im");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (eh->parsed())
      return cmd_eval_hermite(eh_m, eh_n, eh_x, eh_y, eh_tau, eh_check);
    if (co->parsed()) return cmd_convert_order(co_t, co_in, co_out);
    if (pj->parsed())
      return cmd_projector(pj_n, pj_m, pj_t, pj_lag, pj_expand, pj_verify,
                           pj_D, pj_margin, pj_tol, pj_out);
    if (qg->parsed())
      return cmd_quasiprob_grid(qg_n, qg_m, qg_t, qg_L, qg_N, qg_format, qg_out);
    if (vf->parsed()) {
      opt.beta = parse_complex(vf_beta);
      return cmd_verify(vf_suite, opt);
    }
  } catch (const sorder::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
