#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nilspec/chain_complex.hpp"
#include "nilspec/intertwiner.hpp"
#include "nilspec/lie.hpp"
#include "nilspec/linalg.hpp"
#include "nilspec/matrix_io.hpp"
#include "nilspec/multilinear.hpp"
#include "nilspec/obstruction.hpp"
#include "nilspec/smith.hpp"
#include "nilspec/spectra.hpp"
#include "report.hpp"

#ifndef NILSPEC_DEFAULT_CATALOGUE
#define NILSPEC_DEFAULT_CATALOGUE "data/catalogue"
#endif

namespace nilspec::cli {

std::filesystem::path default_catalogue_dir() {
  if (const char* env = std::getenv("NILSPEC_CATALOGUE_DIR"); env && *env) return env;
  return NILSPEC_DEFAULT_CATALOGUE;
}

namespace {

/// Bad command-line values (as opposed to malformed files).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
  }
  return out;
}

Poly parse_poly_list(const std::string& text) {
  std::vector<Rat> coeffs;
  for (const auto& item : split_commas(text)) {
    try {
      coeffs.push_back(parse_rat(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--poly: " + std::string(e.what()));
    }
  }
  if (coeffs.empty()) throw UsageError("--poly: empty coefficient list");
  return Poly::from_highest_first(coeffs);
}

BettiVector parse_betti(const std::string& text, const std::string& flag) {
  std::vector<std::size_t> values;
  for (const auto& item : split_commas(text)) {
    try {
      Integer v = parse_integer(item);
      if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument("negative");
      values.push_back(v.get_ui());
    } catch (const std::invalid_argument&) {
      throw UsageError(flag + ": expected non-negative integers, got '" + item + "'");
    }
  }
  try {
    return BettiVector(std::move(values));
  } catch (const InvalidBettiVector& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void print_matrix(std::ostream& out, const QMat& m) { out << format_matrix(m); }

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool machine = false;

  void emit(const Json& j) const { out << line(j) << '\n'; }
};

// ---------------------------------------------------------------- matrix

int matrix_command(const Context& ctx, const std::string& op, const std::string& file,
                   const std::string& file2, std::size_t degree) {
  const QMat m = read_matrix_file(file);
  Json j;
  j["cmd"] = "matrix." + op;
  if (op == "rank") {
    const auto r = rank(m);
    if (ctx.machine) {
      j["rank"] = r;
      ctx.emit(j);
    } else {
      ctx.out << r << '\n';
    }
  } else if (op == "kernel" || op == "image") {
    const QMat basis = op == "kernel" ? kernel_basis(m) : image_basis(m);
    if (ctx.machine) {
      j["basis"] = to_json(basis.transpose());
      ctx.emit(j);
    } else {
      ctx.out << "# " << basis.cols() << " basis vector(s) as columns\n";
      print_matrix(ctx.out, basis);
    }
  } else if (op == "charpoly") {
    const Poly p = char_poly(m);
    if (ctx.machine) {
      j["char_poly"] = to_json(p);
      ctx.emit(j);
    } else {
      ctx.out << p.to_string() << '\n';
    }
  } else if (op == "snf") {
    const SmithForm s = smith_normal_form(to_integer(m));
    std::vector<std::string> diag;
    for (const auto& d : s.diagonal) diag.push_back(d.get_str());
    if (ctx.machine) {
      j["diagonal"] = diag;
      j["left"] = to_json(to_rational(s.left));
      j["right"] = to_json(to_rational(s.right));
      ctx.emit(j);
    } else {
      ctx.out << "diagonal:";
      for (const auto& d : diag) ctx.out << ' ' << d;
      ctx.out << "\nleft:\n";
      print_matrix(ctx.out, to_rational(s.left));
      ctx.out << "right:\n";
      print_matrix(ctx.out, to_rational(s.right));
    }
  } else if (op == "exterior-power") {
    const QMat e = exterior_power(m, degree);
    if (ctx.machine) {
      j["degree"] = degree;
      j["matrix"] = to_json(e);
      ctx.emit(j);
    } else {
      const ExteriorBasis basis(m.rows(), degree);
      ctx.out << "# basis:";
      for (const auto& t : basis.tuples()) ctx.out << ' ' << tuple_name(t);
      ctx.out << '\n';
      print_matrix(ctx.out, e);
    }
  } else if (op == "intertwiners") {
    const QMat g = read_matrix_file(file2);
    const auto space = intertwiner_space(m, g);
    if (ctx.machine) {
      Json basis = Json::array();
      for (const auto& h : space) basis.push_back(to_json(h));
      j["dimension"] = space.size();
      j["basis"] = std::move(basis);
      ctx.emit(j);
    } else {
      ctx.out << "dimension " << space.size() << '\n';
      for (const auto& h : space) print_matrix(ctx.out, h);
    }
  } else if (op == "no-intertwiner") {
    const QMat g = read_matrix_file(file2);
    const auto check = verify_no_intertwiner(to_integer(m), to_integer(g));
    if (ctx.machine) {
      j["confirmed"] = check.confirmed;
      if (check.witness) j["witness"] = to_json(*check.witness);
      ctx.emit(j);
    } else if (check.confirmed) {
      ctx.out << "confirmed: only h = 0 satisfies h f = g h\n";
    } else {
      ctx.out << "counterexample witness:\n";
      print_matrix(ctx.out, *check.witness);
    }
    return check.confirmed ? kSuccess : kNegativeVerdict;
  } else if (op == "exterior-check") {
    const auto report = char_poly_exterior_check(m, degree);
    if (ctx.machine) {
      j["applicable"] = report.applicable;
      j["confirmed"] = report.confirmed;
      j["exterior_char_poly"] = to_json(report.exterior_char_poly);
      ctx.emit(j);
    } else {
      ctx.out << report.message << '\n';
    }
    return !report.applicable || report.confirmed ? kSuccess : kNegativeVerdict;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- spectra

int spectra_certify(const Context& ctx, const std::string& poly_text, const std::string& matrix_file,
                    const std::string& expect) {
  if (poly_text.empty() == matrix_file.empty()) {
    throw UsageError("spectra certify: give exactly one of --poly or --matrix");
  }
  const Poly p = poly_text.empty() ? char_poly(read_matrix_file(matrix_file)) : parse_poly_list(poly_text);
  if (p.is_zero()) throw UsageError("spectra certify: zero polynomial");
  const ExpansionVerdict v = is_expanding_poly(p);
  if (ctx.machine) {
    Json j = to_json(v);
    j["cmd"] = "spectra.certify";
    j["poly"] = to_json(p);
    ctx.emit(j);
  } else {
    ctx.out << "polynomial: " << p.to_string() << '\n';
    ctx.out << "verdict: " << v.describe() << '\n';
    if (!v.circle_real_roots.empty()) {
      ctx.out << "root(s) at";
      for (int r : v.circle_real_roots) ctx.out << ' ' << r;
      ctx.out << '\n';
    }
    if (!v.trace_intervals.empty()) {
      ctx.out << "circle factor " << v.circle_factor.to_string() << " = x^m Q(x + 1/x), Q(y) = "
              << v.trace_poly.to_string('y') << '\n';
      for (const auto& iv : v.trace_intervals) {
        ctx.out << "  Q has a root in (" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]\n";
      }
    }
  }
  if (expect.empty()) return kSuccess;
  const bool want = expect == "expanding";
  return v.expanding() == want ? kSuccess : kNegativeVerdict;
}

int spectra_product(const Context& ctx, const std::string& a, const std::string& b) {
  const Poly p = parse_poly_list(a), q = parse_poly_list(b);
  if (p.leading() != 1 || q.leading() != 1) throw UsageError("spectra product: polynomials must be monic");
  const Poly r = eigen_product_multiset(p, q);
  if (ctx.machine) {
    ctx.emit({{"cmd", "spectra.product"}, {"poly", to_json(r)}});
  } else {
    ctx.out << r.to_string() << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- lie

int lie_command(const Context& ctx, const std::string& op, const std::string& algebra_file,
                const std::string& matrix_file) {
  const LieAlgebra g = read_lie_algebra_file(algebra_file);
  if (op == "betti") {
    const auto b = betti(g);
    if (ctx.machine) {
      ctx.emit({{"cmd", "lie.betti"}, {"betti", b}});
    } else {
      for (std::size_t i = 0; i < b.size(); ++i) ctx.out << (i ? " " : "") << b[i];
      ctx.out << '\n';
    }
    return kSuccess;
  }
  const QMat a = read_matrix_file(matrix_file);
  if (op == "check-aut") {
    try {
      check_automorphism(g, a);
    } catch (const NotBracketPreserving& e) {
      if (ctx.machine) {
        Json residual = Json::array();
        for (const auto& r : e.residual()) residual.push_back(to_string(r));
        ctx.emit({{"cmd", "lie.check-aut"},
                  {"valid", false},
                  {"failure", "NotBracketPreserving"},
                  {"pair", {e.i() + 1, e.j() + 1}},
                  {"residual", residual}});
      } else {
        ctx.out << "invalid: " << e.what() << '\n';
      }
      return kNegativeVerdict;
    } catch (const NotInvertible& e) {
      if (ctx.machine) {
        ctx.emit({{"cmd", "lie.check-aut"}, {"valid", false}, {"failure", "NotInvertible"}});
      } else {
        ctx.out << "invalid: " << e.what() << '\n';
      }
      return kNegativeVerdict;
    }
    if (ctx.machine) {
      ctx.emit({{"cmd", "lie.check-aut"}, {"valid", true}});
    } else {
      ctx.out << "valid automorphism\n";
    }
    return kSuccess;
  }
  // certify
  const LieAutomorphism aut = check_automorphism(g, a);
  const ExpansionCertificate cert = certify_expanding_on_cohomology(aut);
  if (ctx.machine) {
    Json j = to_json(cert);
    j["cmd"] = "lie.certify";
    ctx.emit(j);
  } else {
    ctx.out << "automorphism: " << cert.automorphism_verdict.describe() << '\n';
    ctx.out << "betti:";
    for (auto b : cert.betti) ctx.out << ' ' << b;
    ctx.out << '\n';
    for (const auto& d : cert.degrees) {
      ctx.out << "degree " << d.degree << ": dim " << d.dimension << ", spectrum "
              << spectrum_string(d.char_poly) << ", char poly " << d.char_poly.to_string() << ", "
              << to_string(d.verdict.verdict);
      if (!d.verdict.expanding()) ctx.out << " (" << to_string(d.verdict.reason) << ")";
      ctx.out << '\n';
    }
    if (cert.alarm) {
      ctx.out << "ALARM: expanding automorphism induced a non-expanding cohomology map\n";
    }
  }
  return cert.alarm ? kNegativeVerdict : kSuccess;
}

// ---------------------------------------------------------------- bundle / theorem

int bundle_gysin(const Context& ctx, const std::string& betti_text, std::size_t q) {
  const BettiVector base = parse_betti(betti_text, "--betti");
  if (q < 2) throw UsageError("--q must be >= 2");
  const BettiVector b = gysin_boundary_betti(base, q);
  if (ctx.machine) {
    ctx.emit({{"cmd", "bundle.gysin"}, {"base", to_json(base)}, {"q", q}, {"boundary", to_json(b)}});
  } else {
    ctx.out << "boundary Betti numbers: " << b.to_string() << '\n';
  }
  return kSuccess;
}

AttractorPairSpec make_spec(std::size_t n, std::size_t q1, std::size_t q2, const std::string& b1,
                            const std::string& b2) {
  BettiVector x1 = b1.empty() && n > q1 ? BettiVector::all_ones(n - q1) : parse_betti(b1, "--betti1");
  BettiVector x2 = b2.empty() && n > q2 ? BettiVector::all_ones(n - q2) : parse_betti(b2, "--betti2");
  try {
    return AttractorPairSpec::make(n, q1, q2, std::move(x1), std::move(x2));
  } catch (const InvalidAttractorSpec& e) {
    throw UsageError(e.what());
  }
}

std::string describe(const ObstructionVerdict& v) {
  std::ostringstream out;
  if (const auto* c = std::get_if<Case1Contradiction>(&v)) {
    out << "Case1Contradiction at degree " << c->degree << ": dim Im <= " << c->gap.image_bound << " < "
        << c->gap.target_dim << " = b_l(X1) + b_l(X2); witness degrees:";
    for (auto l : c->witness_degrees) out << ' ' << l;
  } else if (const auto* s = std::get_if<SphereForced>(&v)) {
    out << "SphereForced: M has Betti numbers " << s->manifold_betti.to_string()
        << " (rational homology sphere)";
  } else if (const auto* bad = std::get_if<InputInconsistent>(&v)) {
    out << "InputInconsistent: " << bad->reason;
  }
  return out.str();
}

int theorem_sphere(const Context& ctx, const AttractorPairSpec& spec, const std::string& expect) {
  const auto v = sphere_theorem_check(spec);
  if (ctx.machine) {
    Json j = to_json(v);
    j["cmd"] = "theorem.sphere-check";
    j["n"] = spec.n;
    j["q"] = {spec.q1, spec.q2};
    ctx.emit(j);
  } else {
    ctx.out << describe(v) << '\n';
    if (const auto* s = std::get_if<SphereForced>(&v)) {
      for (const auto& ineq : s->chain) ctx.out << "  " << ineq.to_string() << '\n';
    }
  }
  if (!expect.empty() && expect != verdict_tag(v)) return kNegativeVerdict;
  return kSuccess;
}

int theorem_gap(const Context& ctx, const AttractorPairSpec& spec, long degree) {
  const auto g = mv_surjectivity_gap(spec, degree);
  if (ctx.machine) {
    ctx.emit({{"cmd", "theorem.gap"},
              {"degree", g.degree},
              {"boundary_dim", g.boundary_dim},
              {"kernel_dim", g.kernel_dim},
              {"image_bound", g.image_bound},
              {"target_dim", g.target_dim},
              {"impossible", g.impossible}});
  } else {
    ctx.out << "degree " << g.degree << ": dim H_l(dN2) = " << g.boundary_dim << ", forced kernel "
            << g.kernel_dim << ", image <= " << g.image_bound << ", target " << g.target_dim << " -> "
            << (g.impossible ? "surjection impossible" : "no gap") << '\n';
  }
  return kSuccess;
}

int theorem_toric(const Context& ctx, std::size_t n) {
  if (n < 3) throw UsageError("--n must be >= 3");
  const auto r = toric_corollary_check(n);
  if (ctx.machine) {
    ctx.emit({{"cmd", "theorem.toric"},
              {"n", n},
              {"boundary_b1", r.boundary_b1},
              {"target_b1", r.target_b1},
              {"impossible", r.impossible}});
  } else if (r.impossible) {
    ctx.out << "impossible (" << r.boundary_b1 << " < " << r.target_b1 << ")\n";
  } else {
    ctx.out << "not obstructed (" << r.boundary_b1 << " >= " << r.target_b1 << ")\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nilspec: exact Chevalley-Eilenberg cohomology, expansion certificates and "
               "attractor obstruction bookkeeping"};
  app.name("nilspec");
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "Emit one JSON line per result");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Exact linear algebra on matrix files");
  matrix->require_subcommand(1);
  std::string m_file, m_file2;
  std::size_t m_degree = 1;
  std::string m_op;
  for (const char* op : {"rank", "kernel", "image", "charpoly", "snf"}) {
    auto* sub = matrix->add_subcommand(op, std::string("Compute ") + op);
    sub->add_option("matrix", m_file, "Matrix file")->required();
    sub->final_callback([&m_op, op] { m_op = op; });
  }
  for (const char* op : {"exterior-power", "exterior-check"}) {
    auto* sub = matrix->add_subcommand(op, op == std::string("exterior-power")
                                               ? "Compound matrix of l x l minors"
                                               : "Brute-force exterior spectrum check");
    sub->add_option("matrix", m_file, "Matrix file")->required();
    sub->add_option("--degree,-l", m_degree, "Exterior degree")->required();
    sub->final_callback([&m_op, op] { m_op = op; });
  }
  for (const char* op : {"intertwiners", "no-intertwiner"}) {
    auto* sub = matrix->add_subcommand(op, op == std::string("intertwiners")
                                               ? "Basis of {h : h f = g h}"
                                               : "Confirm no nonzero intertwiner (f expanding, g unimodular)");
    sub->add_option("f", m_file, "Matrix file for f")->required();
    sub->add_option("g", m_file2, "Matrix file for g")->required();
    sub->final_callback([&m_op, op] { m_op = op; });
  }

  // spectra
  auto* spectra = app.add_subcommand("spectra", "Exact unit-disk root location");
  spectra->require_subcommand(1);
  std::string s_poly, s_matrix, s_expect, s_poly2;
  auto* certify = spectra->add_subcommand("certify", "Decide whether all roots lie outside the closed unit disk");
  certify->add_option("--poly", s_poly, "Coefficients, highest degree first, e.g. 1,-5,6");
  certify->add_option("--matrix", s_matrix, "Matrix file; its characteristic polynomial is tested");
  certify->add_option("--expect", s_expect, "Expected verdict")
      ->check(CLI::IsMember({"expanding", "not-expanding"}));
  auto* product = spectra->add_subcommand("product", "Polynomial of pairwise root products");
  product->add_option("--poly", s_poly, "First monic polynomial, highest degree first")->required();
  product->add_option("--with", s_poly2, "Second monic polynomial, highest degree first")->required();

  // lie
  auto* lie = app.add_subcommand("lie", "Chevalley-Eilenberg cohomology of Lie algebras");
  lie->require_subcommand(1);
  std::string l_algebra, l_matrix, l_op;
  auto* lbetti = lie->add_subcommand("betti", "Betti numbers of the CE complex");
  lbetti->add_option("algebra", l_algebra, "Lie algebra file")->required();
  lbetti->final_callback([&] { l_op = "betti"; });
  for (const char* op : {"check-aut", "certify"}) {
    auto* sub = lie->add_subcommand(op, op == std::string("certify")
                                            ? "Certify expansion on cohomology in every positive degree"
                                            : "Validate an automorphism");
    sub->add_option("algebra", l_algebra, "Lie algebra file")->required();
    sub->add_option("automorphism", l_matrix, "Automorphism matrix file")->required();
    sub->final_callback([&l_op, op] { l_op = op; });
  }

  // bundle
  auto* bundle = app.add_subcommand("bundle", "Sphere-bundle Betti arithmetic");
  bundle->require_subcommand(1);
  std::string b_betti;
  std::size_t b_q = 2;
  auto* gysin = bundle->add_subcommand("gysin", "Betti numbers of the boundary sphere bundle (zero Euler class)");
  gysin->add_option("--betti", b_betti, "Base Betti numbers, e.g. 1,2,1")->required();
  gysin->add_option("--q", b_q, "Fibre disk dimension (>= 2)")->required();

  // theorem
  auto* theorem = app.add_subcommand("theorem", "Replay the attractor obstruction arguments");
  theorem->require_subcommand(1);
  std::size_t t_n = 0, t_q1 = 2, t_q2 = 2;
  long t_l = 1;
  std::string t_b1, t_b2, t_expect;
  auto* sphere = theorem->add_subcommand("sphere-check", "Case analysis on the two attractor types");
  auto* gap = theorem->add_subcommand("gap", "Dimension count for surjectivity in one degree");
  for (auto* sub : {sphere, gap}) {
    sub->add_option("--n", t_n, "Ambient dimension")->required();
    sub->add_option("--q1", t_q1, "Fibre dimension of the first attractor");
    sub->add_option("--q2", t_q2, "Fibre dimension of the second attractor");
    sub->add_option("--betti1", t_b1, "Betti numbers of X1 (default all ones)");
    sub->add_option("--betti2", t_b2, "Betti numbers of X2 (default all ones)");
  }
  sphere->add_option("--expect", t_expect, "Expected verdict tag")
      ->check(CLI::IsMember({"Case1Contradiction", "SphereForced", "InputInconsistent"}));
  gap->add_option("--l", t_l, "Homology degree")->required();
  auto* toric = theorem->add_subcommand("toric", "First-Betti count for torus bases");
  toric->add_option("--n", t_n, "Ambient dimension (>= 3)")->required();

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run the catalogue and the obstruction grid");
  VerifyOptions vopts;
  std::string v_catalogue, v_golden;
  verify->add_option("--catalogue", v_catalogue, "Catalogue directory");
  verify->add_option("--golden", v_golden, "Golden report file");
  verify->add_flag("--write-golden", vopts.write_golden, "Rewrite the golden file from this run");
  verify->add_option("--jobs,-j", vopts.jobs, "Worker threads (0 = hardware concurrency)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const Context ctx{out, err, machine};
  try {
    if (matrix->parsed()) return matrix_command(ctx, m_op, m_file, m_file2, m_degree);
    if (certify->parsed()) return spectra_certify(ctx, s_poly, s_matrix, s_expect);
    if (product->parsed()) return spectra_product(ctx, s_poly, s_poly2);
    if (lie->parsed()) return lie_command(ctx, l_op, l_algebra, l_matrix);
    if (gysin->parsed()) return bundle_gysin(ctx, b_betti, b_q);
    if (sphere->parsed()) return theorem_sphere(ctx, make_spec(t_n, t_q1, t_q2, t_b1, t_b2), t_expect);
    if (gap->parsed()) return theorem_gap(ctx, make_spec(t_n, t_q1, t_q2, t_b1, t_b2), t_l);
    if (toric->parsed()) return theorem_toric(ctx, t_n);
    if (verify->parsed()) {
      vopts.catalogue = v_catalogue.empty() ? default_catalogue_dir() : std::filesystem::path(v_catalogue);
      vopts.golden = v_golden;
      vopts.machine = machine;
      return verify_paper(vopts, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const JacobiViolation& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no command given\n";
  return kInputError;
}

}  // namespace nilspec::cli
