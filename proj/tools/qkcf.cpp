#include "qkcf/algebra_io.hpp"
#include "qkcf/classify.hpp"
#include "qkcf/deform.hpp"
#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"
#include "qkcf/random.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace qkcf;
namespace fs = std::filesystem;

namespace {

enum Exit { Verified = 0, PredicateFailure = 1, InputError = 2 };

struct Options {
  std::string format = "table";
  std::string metric;
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  bool json() const { return format == "json"; }
};

// Errors raised while reading input are input errors; everything later is a
// failed predicate or precondition.
struct InputFailure {
  std::string source;
  std::string message;
};

LoadedAlgebra load(const std::string &arg) {
  try {
    return load_algebra(arg);
  } catch (const Error &e) {
    throw InputFailure{arg, std::string(error_code_name(e.code())) + ": " +
                                e.what()};
  }
}

const AlmostComplexStructure &require_j(const LoadedAlgebra &a) {
  if (!a.pair.j)
    throw Error(ErrorCode::PreconditionViolated,
                "input has no almost complex structure \"J\"");
  return *a.pair.j;
}

std::string complex_bracket_table(const ComplexSplitting &s) {
  const std::size_t m = s.half_dim();
  std::ostringstream os;
  auto vec_name = [&](std::size_t k) {
    return (k < m ? "Z" : "Zb") + std::to_string(k % m + 1);
  };
  bool any = false;
  for (std::size_t a = 0; a < 2 * m; ++a)
    for (std::size_t b = a + 1; b < 2 * m; ++b) {
      const Vector v = s.bracket(a, b);
      if (is_zero(v))
        continue;
      any = true;
      os << "  [" << vec_name(a) << "," << vec_name(b) << "] =";
      bool first = true;
      for (std::size_t k = 0; k < 2 * m; ++k) {
        if (v[k].is_zero())
          continue;
        os << (first ? " " : " + ") << "(" << v[k].str() << ") " << vec_name(k);
        first = false;
      }
      os << "\n";
    }
  if (!any)
    os << "  (all brackets vanish)\n";
  return os.str();
}

json complex_bracket_json(const ComplexSplitting &s) {
  const std::size_t m = s.half_dim();
  json out = json::array();
  for (std::size_t a = 0; a < 2 * m; ++a)
    for (std::size_t b = a + 1; b < 2 * m; ++b) {
      const Vector v = s.bracket(a, b);
      json terms = json::array();
      for (std::size_t k = 0; k < 2 * m; ++k)
        if (!v[k].is_zero())
          terms.push_back({{"k", k + 1}, {"coeff", v[k].str()}});
      if (!terms.empty())
        out.push_back({{"i", a + 1}, {"j", b + 1}, {"out", terms}});
    }
  return out;
}

void print_matrix(std::ostream &os, const std::string &title,
                  const Matrix &m) {
  os << title << ":\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << std::setw(8) << m(r, c).str();
    os << "\n";
  }
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<std::string> expand_inputs(const std::vector<std::string> &args) {
  std::vector<std::string> out;
  for (const std::string &a : args) {
    if (!a.empty() && a.front() != '@' && fs::is_directory(a)) {
      std::vector<std::string> files;
      for (const auto &e : fs::directory_iterator(a))
        if (e.is_regular_file() && e.path().extension() == ".json")
          files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<Check> run_checks(const LoadedAlgebra &a, const Options &opt) {
  const LieAlgebra &g = a.pair.algebra;
  std::vector<Check> checks;
  const auto jac = jacobi_defect(g.constants());
  checks.push_back({"jacobi", jac.empty(),
                    jac.empty() ? "" : std::to_string(jac.size()) + " triples"});
  const auto step = nilpotency_step(g);
  checks.push_back({"nilpotent", step.has_value(),
                    step ? "step " + std::to_string(*step) : "not nilpotent"});
  if (!a.pair.j) {
    checks.push_back({"almost_complex", false, "no J supplied"});
    return checks;
  }
  const AlmostComplexStructure &j = *a.pair.j;
  const ChernFlatReport cf = is_chern_flat(g, j);
  checks.push_back({"chern_flat", cf.holds,
                    cf.witness ? cf.witness->what : ""});
  const QkChernFlatReport qk = is_qk_chern_flat(g, j);
  std::string qd = std::string("brackets=") + (qk.via_brackets ? "y" : "n") +
                   " forms=" + (qk.via_forms ? "y" : "n") +
                   " J=" + (qk.via_j ? "y" : "n");
  if (qk.witness)
    qd += "; " + qk.witness->what;
  checks.push_back({"qk_chern_flat", qk.holds, qd});
  if (cf.holds) {
    checks.push_back({"center_j_invariant", check_center_j_invariant(g, j), ""});
  } else {
    checks.push_back({"center_j_invariant", false, "needs Chern-flat"});
  }
  const ComplexSplitting s = split(g, j);
  HermitianMetric h = HermitianMetric::identity(s.half_dim());
  std::string metric_name = "identity metric";
  if (!opt.metric.empty()) {
    try {
      h = load_metric(opt.metric);
    } catch (const Error &e) {
      throw InputFailure{opt.metric, e.what()};
    }
    if (h.half_dim() != s.half_dim())
      throw InputFailure{opt.metric, "metric size differs from complex dim"};
    metric_name = opt.metric;
  }
  checks.push_back({"quasi_kaehler", is_quasi_kaehler(s, h), metric_name});
  return checks;
}

int cmd_verify(const std::vector<std::string> &args, const Options &opt) {
  int code = Verified;
  json all = json::array();
  for (const std::string &in : expand_inputs(args)) {
    json rec;
    rec["input"] = in;
    try {
      const LoadedAlgebra a = load(in);
      const std::vector<Check> checks = run_checks(a, opt);
      const bool ok = std::all_of(checks.begin(), checks.end(),
                                  [](const Check &c) { return c.pass; });
      std::optional<bool> integrable;
      if (a.pair.j)
        integrable = is_integrable(a.pair.algebra, *a.pair.j);
      code = std::max(code, ok ? int(Verified) : int(PredicateFailure));
      rec["verified"] = ok;
      rec["checks"] = json::array();
      for (const Check &c : checks)
        rec["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      if (integrable)
        rec["integrable"] = *integrable;
      if (!opt.json()) {
        std::cout << in << " (dim " << a.pair.algebra.dim() << ")\n";
        for (const Check &c : checks)
          std::cout << "  " << std::left << std::setw(20) << c.name
                    << (c.pass ? "pass" : "FAIL")
                    << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        if (integrable)
          std::cout << "  " << std::setw(20) << "integrable"
                    << (*integrable ? "yes" : "no") << "\n";
        std::cout << "  verdict: " << (ok ? "verified" : "failed") << "\n";
      }
    } catch (const InputFailure &f) {
      code = InputError;
      rec["error"] = f.message;
      if (!opt.json())
        std::cout << in << "\n  input error: " << f.message << "\n";
    }
    all.push_back(rec);
  }
  if (opt.json())
    std::cout << all.dump(2) << "\n";
  return code;
}

// ----------------------------------------------------------- normal-form

int cmd_normal_form(const std::string &in, const std::string &mode,
                    const std::string &output, const Options &opt) {
  const LoadedAlgebra a = load(in);
  const AlmostComplexStructure &j = require_j(a);
  const LieAlgebra &g = a.pair.algebra;
  const NormalForm nf = mode == "dim4" ? dim4_normal_form(g, j)
                                       : center_one_normal_form(g, j);
  const ScrambledPair normalized = scramble_frame(g, j, nf.frame_change);
  const std::string file = write_algebra(normalized.algebra, normalized.j);
  if (!output.empty()) {
    std::ofstream(output) << file;
  }
  if (opt.json()) {
    json out;
    out["input"] = in;
    out["mode"] = mode;
    out["steps"] = nf.steps;
    out["frame_change"] = json::parse(matrix_json(nf.frame_change));
    out["real_change"] = json::parse(matrix_json(normalized.real_change));
    out["complex_brackets"] = complex_bracket_json(nf.splitting);
    out["algebra"] = json::parse(file);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << in << ": " << mode << " normal form\n";
    for (const std::string &s : nf.steps)
      std::cout << "  step: " << s << "\n";
    std::cout << "complex brackets in the new frame:\n"
              << complex_bracket_table(nf.splitting);
    print_matrix(std::cout, "frame change (new frame = split frame * P)",
                 nf.frame_change);
    if (output.empty())
      std::cout << "normalized algebra:\n" << file;
    else
      std::cout << "normalized algebra written to " << output << "\n";
  }
  return Verified;
}

// ---------------------------------------------------------------- deform

int cmd_deform(const std::string &in, bool dump, const Options &opt) {
  const LoadedAlgebra a = load(in);
  const AlmostComplexStructure &j = require_j(a);
  const DeformationSpace d = deformation_space(a.pair.algebra, j);
  const ConstraintReport c =
      structural_constraints_check(d, a.pair.algebra, j);
  if (opt.json()) {
    json out;
    out["input"] = in;
    out["kernel_dim"] = d.kernel_basis.size();
    out["inner_rank"] = d.inner_rank;
    out["quotient_dim"] = d.quotient_dim;
    out["quotient_complex_dim"] = d.quotient_dim / 2;
    out["constraints_hold"] = c.holds;
    if (dump) {
      out["kernel_basis"] = json::array();
      for (const Matrix &l : d.kernel_basis)
        out["kernel_basis"].push_back(json::parse(matrix_json(l)));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << in << "\n"
              << "  kernel_dim    " << d.kernel_basis.size() << "\n"
              << "  inner_rank    " << d.inner_rank << "\n"
              << "  quotient_dim  " << d.quotient_dim << " (real; complex "
              << d.quotient_dim / 2 << ")\n"
              << "  constraints   "
              << (c.holds ? "L([g,g]) = 0 and L(g) in center"
                          : "FAIL: " + c.what + " at kernel element " +
                                std::to_string(*c.index + 1))
              << "\n";
    if (dump)
      for (std::size_t k = 0; k < d.kernel_basis.size(); ++k)
        print_matrix(std::cout, "kernel element " + std::to_string(k + 1),
                     d.kernel_basis[k]);
  }
  return c.holds ? Verified : PredicateFailure;
}

// ----------------------------------------------------------------- lemma

int cmd_lemma(const std::string &in, bool show, const Options &opt) {
  const LoadedAlgebra a = load(in);
  const AlmostComplexStructure &j = require_j(a);
  if (!is_qk_chern_flat(a.pair.algebra, j).holds)
    throw Error(ErrorCode::PreconditionViolated,
                "structure is not quasi-Kaehler Chern-flat");
  const ComplexSplitting s = split(a.pair.algebra, j);
  const LemmaReport r = lemma_tosatti_space(s);
  if (opt.json()) {
    json out;
    out["input"] = in;
    out["unknowns"] = r.unknowns;
    out["solution_dim"] = r.solution_dim;
    out["all_closed"] = r.all_closed;
    if (r.counterexample)
      out["counterexample"] = to_string(*r.counterexample);
    if (show) {
      out["solutions"] = json::array();
      for (const InvariantForm &f : r.solutions)
        out["solutions"].push_back(to_string(f));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << in << "\n"
              << "  (2,0)-forms (real dim)   " << r.unknowns << "\n"
              << "  solution space (real)    " << r.solution_dim << "\n"
              << "  all solutions closed     " << (r.all_closed ? "yes" : "NO")
              << "\n";
    if (r.counterexample)
      std::cout << "  counterexample: " << to_string(*r.counterexample) << "\n";
    if (show)
      for (const InvariantForm &f : r.solutions)
        std::cout << "  beta = " << to_string(f) << "\n";
  }
  return r.all_closed ? Verified : PredicateFailure;
}

// ------------------------------------------------------------- construct

int cmd_construct(const std::string &in, const std::string &output) {
  const LoadedAlgebra a = load(in);
  const AlmostComplexLieAlgebra d =
      conjugate_complexification(a.pair.algebra);
  const std::string file = write_algebra(d.algebra, d.j);
  if (output.empty())
    std::cout << file;
  else
    std::ofstream(output) << file;
  return Verified;
}

// --------------------------------------------------------------- catalog

int cmd_catalog(const std::string &name, const Options &opt) {
  if (name.empty()) {
    if (opt.json()) {
      std::cout << json(catalog_names()).dump(2) << "\n";
    } else {
      for (const std::string &n : catalog_names()) {
        const CatalogEntry e = catalog(n);
        std::cout << "@" << std::left << std::setw(32) << n << " dim "
                  << e.pair.algebra.dim() << (e.pair.j ? "  with J" : "")
                  << "\n";
      }
    }
    return Verified;
  }
  const LoadedAlgebra a = load(name.front() == '@' ? name : "@" + name);
  std::cout << write_algebra(a.pair.algebra, a.pair.j);
  return Verified;
}

// -------------------------------------------------------------- scramble

int cmd_scramble(const std::string &in, const std::string &mode,
                 const std::string &output, const Options &opt) {
  const LoadedAlgebra a = load(in);
  const AlmostComplexStructure &j = require_j(a);
  const LieAlgebra &g = a.pair.algebra;
  RandomSource rng(opt.seed);
  const std::size_t m = g.dim() / 2;
  if (mode.empty()) {
    const ScrambledPair sp = scramble_frame(g, j, rng.invertible(m, true, 3));
    const std::string file = write_algebra(sp.algebra, sp.j);
    if (output.empty())
      std::cout << file;
    else
      std::ofstream(output) << file;
    return Verified;
  }
  const Fingerprint base = fingerprint(g, j);
  std::size_t recovered = 0;
  json trials = json::array();
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const ScrambledPair sp = scramble_frame(g, j, rng.invertible(m, true, 3));
    bool ok = false;
    std::string note;
    try {
      const NormalForm nf = mode == "dim4"
                                ? dim4_normal_form(sp.algebra, sp.j)
                                : center_one_normal_form(sp.algebra, sp.j);
      const ScrambledPair back =
          scramble_frame(sp.algebra, sp.j, nf.frame_change);
      // round trip: the normalized algebra maps back onto the input
      const bool round_trip =
          change_basis(back.algebra, inverse(back.real_change)) == sp.algebra;
      ok = round_trip && fingerprint(sp.algebra, sp.j) == base;
      note = ok ? "recovered" : "round trip or fingerprint mismatch";
    } catch (const Error &e) {
      note = e.what();
    }
    recovered += ok;
    trials.push_back({{"trial", t + 1}, {"ok", ok}, {"note", note}});
    if (!opt.json())
      std::cout << "trial " << t + 1 << ": " << note << "\n";
  }
  if (opt.json()) {
    json out{{"input", in},     {"mode", mode},           {"seed", opt.seed},
             {"trials", trials}, {"recovered", recovered}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << recovered << "/" << opt.trials << " scrambles recovered\n";
  }
  return recovered == opt.trials ? Verified : PredicateFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact checks for quasi-Kaehler Chern-flat Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", opt.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  std::vector<std::string> inputs;
  std::string input, mode, output, name;
  bool dump = false, show = false;

  auto *verify = app.add_subcommand("verify", "run every predicate");
  verify->add_option("inputs", inputs, "files, directories or @names")
      ->required();
  verify->add_option("--metric", opt.metric, "Hermitian metric JSON file");
  add_common(verify);

  auto *nf = app.add_subcommand("normal-form", "normalize a (1,0)-frame");
  nf->add_option("input", input)->required();
  nf->add_option("--mode", mode, "dim4 or center1")
      ->required()
      ->check(CLI::IsMember({"dim4", "center1"}));
  nf->add_option("-o,--output", output, "write the normalized algebra here");
  add_common(nf);

  auto *deform = app.add_subcommand("deform", "virtual tangent space");
  deform->add_option("input", input)->required();
  deform->add_flag("--dump-kernel", dump, "print the kernel basis");
  add_common(deform);

  auto *lemma = app.add_subcommand("lemma", "closedness of (2,0) solutions");
  lemma->add_option("input", input)->required();
  lemma->add_flag("--show-solutions", show, "print a solution basis");
  add_common(lemma);

  auto *construct =
      app.add_subcommand("construct", "conjugate complexification h (x) C");
  construct->add_option("input", input)->required();
  construct->add_option("-o,--output", output);

  auto *cat = app.add_subcommand("catalog", "list or print catalog entries");
  cat->add_option("name", name);
  add_common(cat);

  auto *scr = app.add_subcommand(
      "scramble", "random (1,0)-frame change; with --mode, recover trials");
  scr->add_option("input", input)->required();
  scr->add_option("--seed", opt.seed);
  scr->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
  scr->add_option("--mode", mode)->check(CLI::IsMember({"dim4", "center1"}));
  scr->add_option("-o,--output", output);
  add_common(scr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : InputError;
  }

  try {
    if (*verify)
      return cmd_verify(inputs, opt);
    if (*nf)
      return cmd_normal_form(input, mode, output, opt);
    if (*deform)
      return cmd_deform(input, dump, opt);
    if (*lemma)
      return cmd_lemma(input, show, opt);
    if (*construct)
      return cmd_construct(input, output);
    if (*cat)
      return cmd_catalog(name, opt);
    if (*scr)
      return cmd_scramble(input, mode, output, opt);
  } catch (const InputFailure &f) {
    std::cerr << "error: " << f.source << ": " << f.message << "\n";
    return InputError;
  } catch (const Error &e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what()
              << "\n";
    return PredicateFailure;
  }
  return InputError;
}
