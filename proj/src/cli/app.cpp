#include "specbound/cli/app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "specbound/cli/record.hpp"
#include "specbound/cohom1/bound.hpp"
#include "specbound/cohom1/checks.hpp"
#include "specbound/cohom1/io.hpp"
#include "specbound/cohom1/spectrum.hpp"
#include "specbound/errors.hpp"
#include "specbound/specfun/bessel.hpp"
#include "specbound/toric/bound.hpp"
#include "specbound/toric/io.hpp"
#include "specbound/toric/potential.hpp"
#include "specbound/toric/spectrum.hpp"

namespace specbound::cli {

namespace {

// Slack used when comparing a computed eigenvalue against its bound, and
// the curvature gate that decides whether a bound applies at all.
constexpr double kBoundSlack = 1e-6;
constexpr double kScalGate = -1e-8;
constexpr int kCurvatureSamples = 1000;
constexpr double kIbpTolerance = 1e-6;

struct Options {
  std::string file;
  std::string potential_file;
  std::string direction;
  std::string out_path;
  int k = 1;
  int n = 2;
  int count = 3;
  int mesh = 4000;
  int degree = 4;
  bool sweep = false;
};

struct Outcome {
  int code = kOk;
  std::string text;
  std::optional<RunRecord> record;
};

std::string polynomial_text(const numerics::Polynomial& p, const char* var) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i)
      s += " + ";
    s += fmt::format("({:.10g}){}", p.coeffs()[i], i == 0 ? "" : fmt::format("{}^{}", var, i));
  }
  return s.empty() ? "0" : s;
}

std::string coeff_list(const numerics::Polynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    s += (i ? "," : "") + format_number(p.coeffs()[i]);
  return s;
}

toric::Point2 parse_direction(const std::string& text, int dim) {
  std::vector<double> v;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size())
        throw InputError("malformed direction component '" + part + "'");
    } catch (const std::logic_error&) {
      throw InputError("malformed direction '" + text + "'");
    }
  }
  if (static_cast<int>(v.size()) != dim)
    throw InputError("direction needs " + std::to_string(dim) + " comma-separated component(s)");
  return {v[0], dim == 2 ? v[1] : 0.0};
}

Outcome bound_toric(const Options& o) {
  if (o.k < 1)
    throw InputError("--k must be >= 1");
  const auto file = toric::read_toric_file(o.file);
  if (!file.polytope)
    throw InputError("'" + o.file + "' does not describe a polytope");
  const toric::Polytope& P = *file.polytope;
  const toric::Point2 w =
      o.direction.empty() ? toric::Point2{1.0, 0.0} : parse_direction(o.direction, P.dim());
  if (o.sweep && P.dim() != 2)
    throw InputError("--sweep needs a 2D polytope");

  Outcome r;
  RunRecord rec("bound toric");
  rec.input("file", o.file);
  rec.input("dim", static_cast<double>(P.dim()));
  rec.input("k", static_cast<double>(o.k));
  std::ostringstream os;
  os << fmt::format("toric bound C_k, dim {}, {} facets{}\n", P.dim(), P.facets().size(),
                    P.delzant() ? "" : " (NOT Delzant: values are formal)");
  std::vector<toric::ToricBoundResult> results;
  for (int k = 1; k <= o.k; ++k)
    results.push_back(toric::compute_Ck(P, k, w));
  const auto& dir = results.front().direction;
  rec.input("direction", format_number(dir[0]) + "," + format_number(dir[1]));
  os << fmt::format("direction ({:.6g}, {:.6g}), t in [{:.10g}, {:.10g}]\n", dir[0], dir[1],
                    results.front().pencil.t_min, results.front().pencil.t_max);
  os << fmt::format("{:>4}  {:>20}\n", "k", "C_k");
  rec.table_header({"k", "C_k"});
  for (const auto& res : results) {
    os << fmt::format("{:>4}  {:>20.12f}\n", res.k, res.value);
    rec.output(fmt::format("C_{}", res.k), res.value);
    rec.output(fmt::format("maximizer_{}", res.k), coeff_list(res.maximizer));
    rec.table_row({static_cast<double>(res.k), res.value});
  }
  os << "maximizer (top k, variable t = <w,x>): " << polynomial_text(results.back().maximizer, "t")
     << "\n";
  if (o.sweep) {
    os << fmt::format("{:>4}  {:>20}  {:>12}\n", "k", "min_w C_k", "angle");
    for (int k = 1; k <= o.k; ++k) {
      const auto s = toric::direction_sweep(P, k, 32);
      os << fmt::format("{:>4}  {:>20.12f}  {:>12.8f}\n", k, s.value, s.angle);
      rec.output(fmt::format("sweep_C_{}", k), s.value);
      rec.output(fmt::format("sweep_angle_{}", k), s.angle);
    }
    rec.convergence("sweep_samples", 32.0);
    rec.convergence("sweep_angular_tol", 1e-6);
  }
  rec.output("delzant", P.delzant() ? "true" : "false");
  rec.convergence("eigensolver_offdiag_tol", 1e-13);
  r.text = os.str();
  r.record = std::move(rec);
  r.code = P.delzant() ? kOk : kNonDelzant;
  return r;
}

Outcome bound_cohom1(const Options& o) {
  if (o.n < 2)
    throw InputError("--n (sphere dimension) must be >= 2");
  if (o.k < 1)
    throw InputError("--k must be >= 1");
  Outcome r;
  RunRecord rec("bound cohom1");
  rec.input("n", static_cast<double>(o.n));
  rec.input("k", static_cast<double>(o.k));
  std::ostringstream os;
  os << fmt::format("cohomogeneity-one bound D_k on S^{}\n", o.n);
  os << fmt::format("{:>4}  {:>20}\n", "k", "D_k");
  rec.table_header({"k", "D_k"});
  int pts = 0;
  for (int k = 1; k <= o.k; ++k) {
    const auto d = cohom1::compute_Dk(o.n, k);
    pts = std::max(pts, d.quadrature_points);
    os << fmt::format("{:>4}  {:>20.12f}\n", k, d.value);
    rec.output(fmt::format("D_{}", k), d.value);
    rec.output(fmt::format("maximizer_{}", k), coeff_list(d.maximizer));
    rec.table_row({static_cast<double>(k), d.value});
  }
  rec.convergence("quadrature_rel_tol", 1e-12);
  rec.convergence("quadrature_points_max", static_cast<double>(pts));
  r.text = os.str();
  r.record = std::move(rec);
  return r;
}

// Shared tail of both spectrum commands: table, bound check, exit code.
void report_spectrum(const numerics::SpectrumResult& spec, const std::vector<double>& bounds,
                     double min_scal, const char* bound_name, std::ostringstream& os,
                     RunRecord& rec, Outcome& r) {
  const bool applicable = min_scal >= kScalGate;
  bool all_pass = true;
  os << fmt::format("{:>4}  {:>20}  {:>20}  {}\n", "k", "lambda_k", bound_name, "check");
  rec.table_header({"k", "lambda_k", bound_name});
  for (std::size_t k = 1; k < spec.eigenvalues.size(); ++k) {
    const double lam = spec.eigenvalues[k];
    const double b = bounds[k - 1];
    const bool pass = lam <= b + kBoundSlack;
    all_pass = all_pass && pass;
    os << fmt::format("{:>4}  {:>20.12f}  {:>20.12f}  {}\n", k, lam, b,
                      applicable ? (pass ? "PASS" : "FAIL") : "NOT APPLICABLE");
    rec.output(fmt::format("lambda_{}", k), lam);
    rec.output(fmt::format("{}_{}", bound_name, k), b);
    rec.table_row({static_cast<double>(k), lam, b});
  }
  rec.output("min_scal", min_scal);
  rec.output("bound_check",
             applicable ? (all_pass ? "PASS" : "FAIL") : "NOT_APPLICABLE");
  rec.convergence("mesh", static_cast<double>(spec.mesh));
  rec.convergence("coarse_mesh", static_cast<double>(spec.coarse_mesh));
  rec.convergence("relative_change", spec.relative_change);
  os << fmt::format("min Scal (sampled) = {:.10g}; bound check {}\n", min_scal,
                    applicable ? (all_pass ? "PASS" : "FAIL")
                               : "NOT APPLICABLE (scalar curvature is negative somewhere)");
  os << fmt::format("mesh {} (relative change vs mesh {}: {:.3e})\n", spec.mesh, spec.coarse_mesh,
                    spec.relative_change);
  if (applicable && !all_pass)
    r.code = kBoundCheckFailure;
}

Outcome spectrum_toric1d(const Options& o) {
  if (o.count < 1)
    throw InputError("--count must be >= 1");
  const auto file = toric::read_toric_file(o.file);
  if (!file.polytope)
    throw InputError("'" + o.file + "' does not describe a polytope");
  numerics::Polynomial2 perturbation = file.perturbation;
  if (!o.potential_file.empty()) {
    const auto pot = toric::read_toric_file(o.potential_file);
    if (!pot.has_potential)
      throw InputError("'" + o.potential_file + "' does not describe a potential");
    perturbation = pot.perturbation;
  }
  if (file.polytope->dim() != 1)
    throw InputError("spectrum toric1d needs a 1D polytope");
  const toric::SymplecticPotential u(*file.polytope, perturbation);
  u.validate();
  numerics::SpectrumOptions so;
  so.mesh = o.mesh;
  const auto spec = toric::toric1d_spectrum(u, o.count, so);
  const auto scal = toric::sample_scalar_curvature(u, kCurvatureSamples);
  std::vector<double> bounds;
  for (int k = 1; k <= o.count; ++k)
    bounds.push_back(toric::compute_Ck(*file.polytope, k).value);

  Outcome r;
  RunRecord rec("spectrum toric1d");
  rec.input("file", o.file);
  if (!o.potential_file.empty())
    rec.input("potential", o.potential_file);
  rec.input("count", static_cast<double>(o.count));
  rec.input("mesh", static_cast<double>(o.mesh));
  std::ostringstream os;
  const auto& v = file.polytope->vertices();
  os << fmt::format("torus-invariant spectrum on [{:.10g}, {:.10g}]\n", v[0][0], v[1][0]);
  report_spectrum(spec, bounds, scal.min, "C_k", os, rec, r);
  r.text = os.str();
  r.record = std::move(rec);
  return r;
}

Outcome spectrum_cohom1(const Options& o) {
  if (o.count < 1)
    throw InputError("--count must be >= 1");
  const auto profile = cohom1::read_profile_file(o.file);
  numerics::SpectrumOptions so;
  so.mesh = o.mesh;
  const auto spec = cohom1::cohom1_spectrum(profile, o.count, so);
  const auto l3 = cohom1::check_lemma3(profile, kCurvatureSamples);
  const auto l4 = cohom1::check_lemma4(profile, kCurvatureSamples);
  std::vector<double> bounds;
  for (int k = 1; k <= o.count; ++k)
    bounds.push_back(cohom1::compute_Dk(profile.n(), k).value);

  Outcome r;
  RunRecord rec("spectrum cohom1");
  rec.input("file", o.file);
  rec.input("profile", profile.describe());
  rec.input("count", static_cast<double>(o.count));
  rec.input("mesh", static_cast<double>(o.mesh));
  std::ostringstream os;
  os << "SO(n)-invariant spectrum, " << profile.describe() << "\n";
  report_spectrum(spec, bounds, l3.min_scal, "D_k", os, rec, r);
  os << fmt::format("max |rho'| = {:.10g}; max (Phi - Phi_max) = {:.3e}\n", l3.max_abs_rho_dot,
                    l4.max_excess);
  rec.output("max_abs_rho_dot", l3.max_abs_rho_dot);
  rec.output("max_phi_excess", l4.max_excess);
  rec.output("lemma3_implication", l3.implication_holds ? "holds" : "VIOLATED");
  r.text = os.str();
  r.record = std::move(rec);
  return r;
}

Outcome verify_ibp(const Options& o) {
  if (o.degree < 0)
    throw InputError("--degree must be >= 0");
  const auto file = toric::read_toric_file(o.file);
  if (!file.polytope)
    throw InputError("'" + o.file + "' does not describe a polytope");
  numerics::Polynomial2 perturbation = file.perturbation;
  if (!o.potential_file.empty()) {
    const auto pot = toric::read_toric_file(o.potential_file);
    if (!pot.has_potential)
      throw InputError("'" + o.potential_file + "' does not describe a potential");
    perturbation = pot.perturbation;
  }
  const toric::Polytope& P = *file.polytope;
  const toric::SymplecticPotential u(P, perturbation);
  u.validate();

  Outcome r;
  RunRecord rec("verify ibp");
  rec.input("file", o.file);
  if (!o.potential_file.empty())
    rec.input("potential", o.potential_file);
  rec.input("degree", static_cast<double>(o.degree));
  std::ostringstream os;
  os << fmt::format("{:>3} {:>3}  {:>18}  {:>18}  {:>18}  {:>12}\n", "i", "j", "hessian",
                    "boundary", "curvature", "residual");
  rec.table_header({"i", "j", "hessian", "boundary", "curvature", "residual"});
  double worst = 0.0;
  int points = 0;
  for (int total = 0; total <= o.degree; ++total)
    for (int j = 0; j <= (P.dim() == 2 ? total : 0); ++j) {
      const int i = total - j;
      numerics::Polynomial2 F;
      F.set(i, j, 1.0);
      const auto res = toric::ibp_residual(u, F);
      worst = std::max(worst, std::abs(res.residual));
      points = std::max(points, res.points);
      os << fmt::format("{:>3} {:>3}  {:>18.12f}  {:>18.12f}  {:>18.12f}  {:>12.3e}\n", i, j,
                        res.hessian_term, res.boundary_term, res.curvature_term, res.residual);
      rec.table_row({static_cast<double>(i), static_cast<double>(j), res.hessian_term,
                     res.boundary_term, res.curvature_term, res.residual});
    }
  const bool pass = worst < kIbpTolerance;
  os << fmt::format("max |residual| = {:.3e}  {}\n", worst, pass ? "PASS" : "FAIL");
  rec.output("max_abs_residual", worst);
  rec.output("result", pass ? "PASS" : "FAIL");
  rec.convergence("quadrature_rel_tol", 1e-12);
  rec.convergence("quadrature_points_max", static_cast<double>(points));
  r.text = os.str();
  r.record = std::move(rec);
  r.code = pass ? kOk : kNumericalFailure;
  return r;
}

Outcome compare_af(const Options& o) {
  if (o.k < 1 || o.k > 12)
    throw InputError("--k must lie in [1, 12]");
  const toric::Polytope P = toric::interval(-1.0, 1.0);
  Outcome r;
  RunRecord rec("compare af");
  rec.input("k", static_cast<double>(o.k));
  std::ostringstream os;
  os << "S^1-invariant metrics on S^2 (moment interval [-1, 1], volume 4 pi), Scal >= 0.\n"
        "Both columns bound the same invariant eigenvalues; the Bessel constant is sharp.\n";
  os << fmt::format("{:>4}  {:>16}  {:>16}  {:>16}  {:>12}\n", "k", "xi_k", "xi_k^2/2",
                    "C_k([-1,1])", "gap");
  rec.table_header({"k", "xi_k", "af_bound", "C_k", "gap"});
  for (int k = 1; k <= o.k; ++k) {
    const auto af = specfun::xi_k(k);
    const double c = toric::compute_Ck(P, k).value;
    os << fmt::format("{:>4}  {:>16.10f}  {:>16.10f}  {:>16.10f}  {:>12.6f}\n", k, af.xi,
                      af.bound, c, c - af.bound);
    rec.output(fmt::format("xi_{}", k), af.xi);
    rec.output(fmt::format("af_bound_{}", k), af.bound);
    rec.output(fmt::format("C_{}", k), c);
    rec.table_row({static_cast<double>(k), af.xi, af.bound, c, c - af.bound});
  }
  rec.convergence("bessel_zero_tol", 1e-13);
  r.text = os.str();
  r.record = std::move(rec);
  return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds for invariant Laplace spectra under non-negative scalar curvature",
               "specbound"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "compute eigenvalue bounds");
  bound->require_subcommand(1);
  auto* bound_toric_cmd = bound->add_subcommand("toric", "C_k for a moment polytope");
  bound_toric_cmd->add_option("file", o.file, "polytope file")->required();
  bound_toric_cmd->add_option("--k", o.k, "largest k")->required();
  bound_toric_cmd->add_option("--direction", o.direction, "projection direction a,b");
  bound_toric_cmd->add_flag("--sweep", o.sweep, "also minimise over directions");
  bound_toric_cmd->add_option("--out", o.out_path, "write key=value record here");
  auto* bound_cohom1_cmd = bound->add_subcommand("cohom1", "D_k for SO(n)-invariant spheres");
  bound_cohom1_cmd->add_option("--n", o.n, "sphere dimension")->required();
  bound_cohom1_cmd->add_option("--k", o.k, "largest k")->required();
  bound_cohom1_cmd->add_option("--out", o.out_path, "write key=value record here");

  auto* spectrum = app.add_subcommand("spectrum", "compute invariant spectra");
  spectrum->require_subcommand(1);
  auto* spec_toric = spectrum->add_subcommand("toric1d", "toric metric over an interval");
  spec_toric->add_option("file", o.file, "polytope file (may include potential lines)")->required();
  spec_toric->add_option("--potential", o.potential_file, "separate potential file");
  spec_toric->add_option("--count", o.count, "number of nonzero eigenvalues");
  spec_toric->add_option("--mesh", o.mesh, "finite-difference cells");
  spec_toric->add_option("--out", o.out_path, "write key=value record here");
  auto* spec_cohom1 = spectrum->add_subcommand("cohom1", "SO(n)-invariant sphere metric");
  spec_cohom1->add_option("file", o.file, "profile file")->required();
  spec_cohom1->add_option("--count", o.count, "number of nonzero eigenvalues");
  spec_cohom1->add_option("--mesh", o.mesh, "finite-difference cells");
  spec_cohom1->add_option("--out", o.out_path, "write key=value record here");

  auto* verify = app.add_subcommand("verify", "consistency checks");
  verify->require_subcommand(1);
  auto* ibp = verify->add_subcommand("ibp", "integration-by-parts residuals");
  ibp->add_option("file", o.file, "polytope file")->required();
  ibp->add_option("potential", o.potential_file, "potential file");
  ibp->add_option("--degree,--k", o.degree, "largest total degree of monomial test functions");
  ibp->add_option("--out", o.out_path, "write key=value record here");

  auto* compare = app.add_subcommand("compare", "comparisons with known constants");
  compare->require_subcommand(1);
  auto* af = compare->add_subcommand("af", "Bessel-zero constants vs C_k on [-1, 1]");
  af->add_option("--k", o.k, "largest k (1..12)")->required();
  af->add_option("--out", o.out_path, "write key=value record here");

  std::vector<std::string> argv_store{"specbound"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Outcome result;
  try {
    if (bound_toric_cmd->parsed())
      result = bound_toric(o);
    else if (bound_cohom1_cmd->parsed())
      result = bound_cohom1(o);
    else if (spec_toric->parsed())
      result = spectrum_toric1d(o);
    else if (spec_cohom1->parsed())
      result = spectrum_cohom1(o);
    else if (ibp->parsed())
      result = verify_ibp(o);
    else if (af->parsed())
      result = compare_af(o);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidGeometry& e) {
    err << "invalid geometry: " << e.what() << "\n";
    return kInvalidGeometry;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }

  if (!o.out_path.empty() && result.record) {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "input error: cannot write '" << o.out_path << "'\n";
      return kInputError;
    }
    f << result.record->to_text();
  }
  out << result.text;
  if (result.code == kNonDelzant)
    err << "warning: polygon is not Delzant; bounds are formal\n";
  if (result.code == kBoundCheckFailure)
    err << "bound check FAILED on a metric with non-negative scalar curvature\n";
  return result.code;
}

} // namespace specbound::cli
