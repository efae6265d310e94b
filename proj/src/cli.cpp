#include "starcong/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "starcong/construct.hpp"
#include "starcong/json_io.hpp"
#include "starcong/random_case.hpp"
#include "starcong/reduce.hpp"
#include "starcong/spec_grid.hpp"

namespace starcong::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitDegeneracy = 3;
constexpr int kExitCheckFailed = 4;

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (z.imag() != 0.0) {
    os << (z.imag() < 0 ? "-" : "+") << std::setprecision(17) << std::abs(z.imag()) << "i";
  }
  return os.str();
}

void print_matrix_ascii(const Matrix& a, std::ostream& out) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out << (j == 0 ? "" : "  ") << format_complex(a(i, j));
    }
    out << '\n';
  }
}

std::string spec_label(const CanonicalSpec& spec) {
  std::ostringstream os;
  for (size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    if (i) os << "+";
    switch (b.kind) {
      case BlockKind::H:
        os << "H" << b.size << "(" << format_complex(b.lambda) << ")";
        break;
      case BlockKind::Delta:
        os << "D" << b.size << "(" << format_complex(b.mu) << ")";
        break;
      case BlockKind::Jordan:
        os << "J" << b.size;
        break;
    }
  }
  return os.str();
}

CanonicalSpec require_spec(const CommandConfig& cfg) {
  if (cfg.spec_path.empty()) throw RejectedInput("command requires --spec");
  return load_spec_file(cfg.spec_path);
}

Matrix generated_perturbation(const CommandConfig& cfg, const Matrix& a) {
  RandomSource rng(derive_seed(cfg.seed, 0));
  const Eigen::Index n = a.rows();
  Matrix e(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) e(i, j) = rng.gaussian_complex();
  }
  const double target = cfg.norm < 0 ? 1e-3 * a.norm() : cfg.norm;
  e *= target / e.norm();
  return e;
}

int run_pattern(const CommandConfig& cfg, std::ostream& out) {
  const Pattern p = assemble_pattern(require_spec(cfg));
  if (cfg.format == CommandConfig::Format::Json) {
    out << to_json(p).dump() << '\n';
  } else {
    out << to_ascii(p) << '\n';
  }
  return kExitOk;
}

int run_codim(const CommandConfig& cfg, std::ostream& out) {
  const CanonicalSpec spec = require_spec(cfg);
  const int from_pattern = codim(assemble_pattern(spec));
  const int from_kernel = codim_via_kernel(assemble_canonical(spec), cfg.tol);
  const bool agree = from_pattern == from_kernel;
  if (cfg.format == CommandConfig::Format::Json) {
    out << Json{{"pattern_codim", from_pattern},
                {"kernel_codim", from_kernel},
                {"agree", agree}}
               .dump()
        << '\n';
  } else {
    out << "pattern codim: " << from_pattern << '\n'
        << "kernel codim:  " << from_kernel << '\n'
        << "agree: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int run_verify(const CommandConfig& cfg, std::ostream& out) {
  const CanonicalSpec spec = require_spec(cfg);
  const DecompositionReport report =
      verify_direct_sum(assemble_canonical(spec), assemble_pattern(spec), cfg.tol);
  if (cfg.format == CommandConfig::Format::Json) {
    out << to_json(report).dump() << '\n';
  } else {
    out << "n: " << report.n << "  tangent rank: " << report.tangent_rank
        << "  pattern params: " << report.pattern_params
        << "  combined rank: " << report.combined_rank << '\n'
        << "sigma kept/dropped: " << report.sigma_min_kept << " / "
        << report.sigma_max_dropped << '\n'
        << (report.passed ? "PASS" : "FAIL") << '\n';
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int run_greedy(const CommandConfig& cfg, std::ostream& out) {
  if (!cfg.spec_path.empty() && !cfg.matrix_path.empty()) {
    throw RejectedInput("greedy takes --spec or --matrix, not both");
  }
  Matrix a;
  if (!cfg.matrix_path.empty()) {
    a = load_matrix_file(cfg.matrix_path);
  } else {
    a = assemble_canonical(require_spec(cfg));
  }
  const GreedyResult g = greedy_miniversal(a, cfg.tol);
  if (cfg.format == CommandConfig::Format::Json) {
    out << to_json(g).dump() << '\n';
  } else {
    out << to_ascii(g.pattern) << '\n'
        << "tangent rank: " << g.tangent_rank
        << "  parameters: " << codim(g.pattern) << '\n';
  }
  return kExitOk;
}

int run_reduce(const CommandConfig& cfg, std::ostream& out) {
  const CanonicalSpec spec = require_spec(cfg);
  const Matrix a = assemble_canonical(spec);
  const Matrix e = cfg.matrix_path.empty() ? generated_perturbation(cfg, a)
                                           : load_matrix_file(cfg.matrix_path);
  const ReductionResult r = reduce_perturbation(spec, e);
  if (cfg.format == CommandConfig::Format::Json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << "iterations: " << r.iterations
        << "  off-pattern residual: " << r.off_pattern_residual
        << "  converged: " << (r.converged ? "yes" : "no") << '\n'
        << "d:\n";
    print_matrix_ascii(r.d, out);
  }
  return r.converged ? kExitOk : kExitCheckFailed;
}

int run_split(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.matrix_path.empty()) throw RejectedInput("split requires --matrix");
  const HermitianPair hk = hermitian_split(load_matrix_file(cfg.matrix_path));
  if (cfg.format == CommandConfig::Format::Json) {
    out << to_json(hk).dump() << '\n';
  } else {
    out << "h:\n";
    print_matrix_ascii(hk.h, out);
    out << "k:\n";
    print_matrix_ascii(hk.k, out);
  }
  return kExitOk;
}

int run_suite(const CommandConfig& cfg, std::ostream& out) {
  const bool json = cfg.format == CommandConfig::Format::Json;
  bool all_ok = true;
  int count = 0;

  for (const CanonicalSpec& spec : enumerate_grid_specs(cfg.max_n)) {
    const Matrix a = assemble_canonical(spec);
    const Pattern p = assemble_pattern(spec);
    const DecompositionReport report = verify_direct_sum(a, p, cfg.tol);
    const int kernel_codim = codim_via_kernel(a, cfg.tol);
    const GreedyResult g = greedy_miniversal(a, cfg.tol);
    const int params = codim(p);
    const bool ok = report.passed && kernel_codim == params && codim(g.pattern) == params;
    all_ok = all_ok && ok;
    ++count;
    if (json) {
      out << Json{{"spec", to_json(spec)},
                  {"n", report.n},
                  {"codim", params},
                  {"kernel_codim", kernel_codim},
                  {"greedy_params", codim(g.pattern)},
                  {"verify_passed", report.passed},
                  {"ok", ok}}
                 .dump()
          << '\n';
    } else {
      out << (ok ? "ok   " : "FAIL ") << "n=" << report.n << " codim=" << params
          << " " << spec_label(spec) << '\n';
    }
  }

  for (int t = 0; t < cfg.trials; ++t) {
    auto [spec, e] = random_case(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)),
                                 cfg.max_n, cfg.norm);
    const ReductionResult r = reduce_perturbation(spec, e);
    const bool ok = r.converged;
    all_ok = all_ok && ok;
    if (json) {
      out << Json{{"trial", t},
                  {"spec", to_json(spec)},
                  {"iterations", r.iterations},
                  {"off_pattern_residual", r.off_pattern_residual},
                  {"ok", ok}}
                 .dump()
          << '\n';
    } else {
      out << (ok ? "ok   " : "FAIL ") << "reduce trial " << t << " iters="
          << r.iterations << " residual=" << r.off_pattern_residual << " "
          << spec_label(spec) << '\n';
    }
  }

  if (!json) {
    out << (all_ok ? "all checks passed" : "checks FAILED") << " (" << count
        << " specs, " << cfg.trials << " reduce trials)\n";
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.tol > 0)) throw RejectedInput("tol must be positive");
    if (config.trials < 1) throw RejectedInput("trials must be >= 1");
    switch (config.command) {
      case CommandConfig::Command::Pattern: return run_pattern(config, out);
      case CommandConfig::Command::Codim: return run_codim(config, out);
      case CommandConfig::Command::Verify: return run_verify(config, out);
      case CommandConfig::Command::Greedy: return run_greedy(config, out);
      case CommandConfig::Command::Reduce: return run_reduce(config, out);
      case CommandConfig::Command::Split: return run_split(config, out);
      case CommandConfig::Command::Suite: return run_suite(config, out);
    }
    throw RejectedInput("unknown command");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const RejectedInput& e) {
    err << "rejected input: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const DegeneracyError& e) {
    err << "numerical degeneracy: " << e.what() << '\n';
    return kExitDegeneracy;
  }
}

}  // namespace starcong::cli
