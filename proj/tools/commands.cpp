#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "cohere/core.hpp"
#include "cohere/interference.hpp"
#include "cohere/measures.hpp"
#include "cohere/prbox.hpp"
#include "cohere/state_io.hpp"
#include "cohere/suites.hpp"
#include "cohere/variational.hpp"

namespace cohere::cli {

namespace {

// Loads a file and maps every decoding/validation failure onto one exit code.
template <class T>
std::optional<T> load(const std::function<T()>& loader, int invalid_code, std::ostream& err,
                      int& code) {
  try {
    return loader();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = e.code() == ErrorCode::ParseError ? kParseError : invalid_code;
  }
  return std::nullopt;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError: return kParseError;
    case ErrorCode::WrongDimension: return kWrongDimension;
    case ErrorCode::InvalidConfig: return kInvalidArgs;
    default: return kComputeError;
  }
}

// Writes text to the named file (binary mode keeps LF endings) or to out.
bool emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out,
          std::ostream& err) {
  if (!path) {
    out << text;
    return true;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << *path << '\n';
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("COHERE_SEED")) {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, end, v);
    if (res.ec == std::errc() && res.ptr == end && res.ptr != env) return v;
  }
  return kDefaultSeed;
}

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.measure != "ed" && args.measure != "mod-k" && args.measure != "mod-f" &&
      args.measure != "all") {
    err << "error: --measure must be one of ed, mod-k, mod-f, all\n";
    return kInvalidArgs;
  }
  if (args.method != "closed" && args.method != "variational") {
    err << "error: --method must be closed or variational\n";
    return kInvalidArgs;
  }

  int code = kOk;
  const auto rho = load<DensityMatrix>([&] { return read_state_file(args.state_path); },
                                       kInvalidState, err, code);
  if (!rho) return code;

  std::string label = "computational";
  std::optional<MeasurementBasis> basis;
  if (args.basis_path) {
    basis = load<MeasurementBasis>([&] { return read_basis_file(*args.basis_path); },
                                   kInvalidBasis, err, code);
    if (!basis) return code;
    if (basis->dim() != rho->dim()) {
      err << "error: basis dimension " << basis->dim() << " differs from state dimension "
          << rho->dim() << '\n';
      return kInvalidBasis;
    }
    label = *args.basis_path;
  } else {
    basis = MeasurementBasis::computational(rho->dim());
  }

  try {
    OptimizerConfig cfg;
    cfg.seed = args.seed;
    const bool variational = args.method == "variational";
    out << "basis: " << label << '\n';
    out << "method: " << args.method << '\n';
    if (variational) out << "seed: " << args.seed << '\n';

    auto print = [&](const std::string& name, double closed, const std::function<double()>& var) {
      if (!variational) {
        out << name << ": " << fmt12(closed) << '\n';
        return;
      }
      const double v = var();
      out << name << ": " << fmt12(v) << '\n';
      out << name << "-residual: " << fmt12(std::abs(v - closed)) << '\n';
    };

    const bool all = args.measure == "all";
    if (all || args.measure == "ed") {
      print("ed", coherence_ed(*rho, *basis), [&] { return variational_ed(*rho, *basis, cfg); });
    }
    if (all || args.measure == "mod-k") {
      print("mod-k", coherence_mod_k(*rho, *basis),
            [&] { return variational_mod_k(*rho, *basis, cfg); });
    }
    if (all || args.measure == "mod-f") {
      // The search runs on the regularised state; compare against the same.
      const double closed = variational
                                ? coherence_mod_f(regularize_for_fidelity_search(*rho), *basis)
                                : coherence_mod_f(*rho, *basis);
      print("mod-f", closed, [&] { return variational_mod_f(*rho, *basis, cfg); });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  SuiteOptions opts;
  opts.suite = args.suite;
  opts.dims = args.dims;
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.tol = args.tol;
  opts.grid = args.grid;

  SuiteReport rep;
  try {
    rep = run_suite(opts);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  const std::string text = rep.to_json().dump(2) + "\n";
  if (args.out_path) {
    if (!emit(args.out_path, text, out, err)) return kInvalidArgs;
    out << "suite " << rep.suite << ": trials=" << rep.trials << " failures=" << rep.failures
        << " worst_violation=" << fmt12(rep.worst_violation) << " seed=" << rep.seed << '\n';
  } else {
    out << text;
  }
  return rep.failures == 0 ? kOk : kSuiteFailed;
}

int cmd_fringe(const FringeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.samples < 8) {
    err << "error: --samples must be at least 8\n";
    return kInvalidArgs;
  }
  int code = kOk;
  const auto rho = load<DensityMatrix>([&] { return read_state_file(args.state_path); },
                                       kInvalidState, err, code);
  if (!rho) return code;
  if (rho->dim() != 2) {
    err << "error: fringe requires a qubit state, got dim " << rho->dim() << '\n';
    return kWrongDimension;
  }

  std::string csv = "phi,intensity\n";
  for (int k = 0; k < args.samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / args.samples;
    const FringeSample s = qubit_fringe(*rho, phi);
    csv += format_shortest(s.phi) + "," + format_shortest(s.intensity) + "\n";
  }
  const double v = qubit_visibility(*rho, args.samples);
  const double c = coherence_mod_k(*rho, MeasurementBasis::computational(2));
  csv += "# visibility=" + format_shortest(v) + ",two_mod_k=" + format_shortest(2.0 * c) + "\n";
  return emit(args.out_path, csv, out, err) ? kOk : kInvalidArgs;
}

int cmd_prbox(const PrboxArgs& args, std::ostream& out, std::ostream& err) {
  if (args.grid < 2) {
    err << "error: --grid must be at least 2\n";
    return kInvalidArgs;
  }
  const double quantum = quantum_counterpart_sum({1.0, 0.0}, {1.0, 0.0});
  std::string csv = "p,bound_w00,bound_w01,sum,quantum_sum\n";
  for (int i = 0; i < args.grid; ++i) {
    const double p0 = static_cast<double>(i) / (args.grid - 1);
    const auto t = SequentialTransition::from_probs(p0, 1.0 - p0);
    const double b00 = pr_mod_k_lower_bound({0, 0}, t);
    const double b01 = pr_mod_k_lower_bound({1, 0}, t);
    csv += format_shortest(p0) + "," + format_shortest(b00) + "," + format_shortest(b01) + "," +
           format_shortest(pr_gap_sum(t)) + "," + format_shortest(quantum) + "\n";
  }
  return emit(args.out_path, csv, out, err) ? kOk : kInvalidArgs;
}

int cmd_entropy(const EntropyArgs& args, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto rho = load<DensityMatrix>([&] { return read_state_file(args.state_path); },
                                       kInvalidState, err, code);
  if (!rho) return code;
  try {
    OptimizerConfig cfg;
    cfg.seed = args.seed;
    const double measured = measurement_entropy(*rho, cfg);
    const double vn = von_neumann_entropy(*rho);
    out << "seed: " << args.seed << '\n';
    out << "measurement-entropy: " << fmt12(measured) << '\n';
    out << "von-neumann-entropy: " << fmt12(vn) << '\n';
    out << "residual: " << fmt12(std::abs(measured - vn)) << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence measures: closed and variational forms, verification suites"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute coherence measures of a state");
  c->add_option("--state", compute.state_path, "State JSON file")->required();
  c->add_option("--basis", compute.basis_path, "Preferred-basis JSON file");
  c->add_option("--measure", compute.measure, "ed | mod-k | mod-f | all");
  c->add_option("--method", compute.method, "closed | variational");
  c->add_option("--seed", seed_flag, "Optimizer seed");

  VerifyArgs verify;
  std::string dims_text;
  auto* v = app.add_subcommand("verify", "Run a property-verification suite");
  v->add_option("--suite", verify.suite,
                "closed-vs-variational | monotonicity | additivity | visibility-bound | "
                "prbox-gap | all");
  v->add_option("--dims", dims_text, "Comma-separated dimensions from {2,3,4}");
  v->add_option("--trials", verify.trials, "Trials per dimension");
  v->add_option("--seed", seed_flag, "Base seed");
  v->add_option("--tol", verify.tol, "Override each suite's primary tolerance");
  v->add_option("--grid", verify.grid, "PR-box transition grid points");
  v->add_option("--out", verify.out_path, "Report path (JSON)");

  FringeArgs fringe;
  auto* f = app.add_subcommand("fringe", "Qubit interference fringe as CSV");
  f->add_option("--state", fringe.state_path, "Qubit state JSON file")->required();
  f->add_option("--samples", fringe.samples, "Phase samples over [0, 2pi)");
  f->add_option("--out", fringe.out_path, "CSV path");

  PrboxArgs prbox;
  auto* p = app.add_subcommand("prbox", "PR-box coherence lower bounds as CSV");
  p->add_option("--grid", prbox.grid, "Transition grid points");
  p->add_option("--out", prbox.out_path, "CSV path");

  EntropyArgs entropy;
  auto* e = app.add_subcommand("entropy", "Variational measurement entropy of a state");
  e->add_option("--state", entropy.state_path, "State JSON file")->required();
  e->add_option("--seed", seed_flag, "Optimizer seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex, out, err);
    return rc == 0 ? kOk : kInvalidArgs;
  }

  const std::uint64_t seed = resolve_seed(seed_flag);

  if (c->parsed()) {
    compute.seed = seed;
    return cmd_compute(compute, out, err);
  }
  if (v->parsed()) {
    verify.seed = seed;
    if (!dims_text.empty()) {
      verify.dims.clear();
      std::stringstream ss(dims_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        int d = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), d);
        if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
          err << "error: bad --dims entry '" << item << "'\n";
          return kInvalidArgs;
        }
        verify.dims.push_back(d);
      }
    }
    return cmd_verify(verify, out, err);
  }
  if (f->parsed()) return cmd_fringe(fringe, out, err);
  if (p->parsed()) return cmd_prbox(prbox, out, err);
  if (e->parsed()) {
    entropy.seed = seed;
    return cmd_entropy(entropy, out, err);
  }
  return kInvalidArgs;
}

}  // namespace cohere::cli
