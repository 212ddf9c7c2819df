#include "eos/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "eos/error.hpp"
#include "eos/feasibility.hpp"
#include "eos/generator.hpp"
#include "eos/io_schema.hpp"
#include "eos/moment_core.hpp"
#include "eos/oracle.hpp"
#include "eos/recovery.hpp"

namespace eos::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named input file that cannot be read: a data error, not a usage error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool csv = false;
  bool exact = false;
  bool floating = false;
  double tol = kDefaultTol;
  std::string input;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankDetectionAmbiguous: return kAmbiguous;
    case ErrorCode::RecoveryFailed:
    case ErrorCode::IntegrationFailure: return kNumerical;
    case ErrorCode::UnsupportedFormat: return kUsage;
    default: return kDataError;
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Messages can quote raw user bytes; invalid UTF-8 is replaced, not thrown.
std::string safe_dump(const nlohmann::json& j) { return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace); }

// Resolved once per invocation; commands read their input through this.
class Context {
 public:
  Context(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  const Options& opt() const { return opt_; }
  std::ostream& out() { return out_; }

  std::vector<Number> numbers(const std::string& inline_text) const {
    std::vector<Number> xs = parse_number_list(inline_text, opt_.exact);
    return opt_.floating ? to_floats(xs) : xs;
  }

  Document document(DocKind expected) {
    std::string text;
    if (opt_.input == "-") {
      text = read_all(in_);
    } else {
      std::ifstream f(opt_.input, std::ios::binary);
      if (!f) throw InputError("cannot open input file '" + opt_.input + "'");
      text = read_all(f);
    }
    Document doc = parse(text, opt_.exact);
    if (doc.kind() != expected) {
      throw Error(ErrorCode::InvariantViolation,
                  std::string("expected a '") + to_string(expected) + "' document, got '" + to_string(doc.kind()) + "'",
                  "kind");
    }
    return doc;
  }

  std::vector<Number> adjust(std::vector<Number> xs) const { return opt_.floating ? to_floats(xs) : xs; }

  bool use_exact(const std::vector<Number>& xs) const { return !opt_.floating && all_exact(xs); }

  void emit_doc(const Document& doc) {
    if (opt_.csv) {
      out_ << emit(doc, Format::Csv) << '\n';
    } else {
      out_ << emit(doc, Format::Json) << '\n';
    }
  }

 private:
  static std::vector<Number> to_floats(const std::vector<Number>& xs) {
    std::vector<Number> out;
    for (const Number& x : xs) out.emplace_back(x.value());
    return out;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

// Exactly one of the inline flag and --input must be given.
void one_source(const Options& opt, bool has_inline, const char* flag) {
  const bool has_input = !opt.input.empty();
  if (has_inline == has_input) {
    throw UsageError(std::string("give exactly one input source: ") + flag + " or --input");
  }
}

bool machine(const Options& opt) { return opt.json || opt.csv; }

void print_measure(std::ostream& out, const AtomicMeasure& m, const char* indent) {
  for (const Atom& a : m.atoms()) out << indent << a.location.str() << ' ' << a.weight.str() << '\n';
}

int report_verdict(Context& ctx, const FeasibilityVerdict& v) {
  if (ctx.opt().csv) throw Error(ErrorCode::UnsupportedFormat, "verdicts have no csv form");
  if (ctx.opt().json) {
    ctx.emit_doc(Document{VerdictDoc{v}});
  } else {
    std::ostream& out = ctx.out();
    out << to_string(v.status) << '\n';
    out << "reason: " << to_string(v.reason) << '\n';
    out << "arithmetic: " << (v.exact ? "exact" : "floating") << '\n';
    if (v.epsilon_witness) out << "epsilon_witness: " << v.epsilon_witness->str() << '\n';
    if (v.boundary_distance) out << "boundary_distance: " << format_double(*v.boundary_distance) << '\n';
    if (v.certificate) {
      out << "certificate (location weight):\n";
      print_measure(out, *v.certificate, "  ");
    }
    if (v.endpoint_measure) {
      out << "representing measure on [0, 1] (location weight):\n";
      print_measure(out, *v.endpoint_measure, "  ");
    }
  }
  return v.feasible() ? kSuccess : kInfeasible;
}

template <typename T>
FeasibilityVerdict eos_verdict(const std::vector<Number>& xs, double tol) {
  return check_eos(BetaSequence<T>(from_numbers<T>(xs)), tol);
}

template <typename T>
FeasibilityVerdict mixture_verdict(const std::vector<Number>& xs, double tol) {
  return check_mixture(ProbabilityVector<T>(from_numbers<T>(xs)), tol);
}

template <typename T>
FeasibilityVerdict hull_verdict(const std::vector<Number>& xs, double tol) {
  return check_moment_hull(from_numbers<T>(xs), tol);
}

template <typename T>
NuDoc nu_doc(const std::vector<Number>& xs) {
  const NuVector<T> nu = nu_from_beta(BetaSequence<T>(from_numbers<T>(xs)));
  return NuDoc{to_numbers(nu.nu), Number(nu.lambda), nu.n};
}

template <typename T>
Recovery recover_nu(const std::vector<Number>& nu, double tol) {
  return recover(from_numbers<T>(nu), tol);
}

// ------------------------------------------------------------ commands

int cmd_check_eos(Context& ctx, const std::string& beta) {
  one_source(ctx.opt(), !beta.empty(), "--beta");
  const std::vector<Number> xs =
      beta.empty() ? ctx.adjust(std::get<BetaDoc>(ctx.document(DocKind::Beta).payload).values) : ctx.numbers(beta);
  const double tol = ctx.opt().tol;
  return report_verdict(ctx, ctx.use_exact(xs) ? eos_verdict<Rational>(xs, tol) : eos_verdict<double>(xs, tol));
}

int cmd_check_mixture(Context& ctx, const std::string& p) {
  one_source(ctx.opt(), !p.empty(), "--p");
  const std::vector<Number> xs =
      p.empty() ? ctx.adjust(std::get<PDoc>(ctx.document(DocKind::P).payload).values) : ctx.numbers(p);
  const double tol = ctx.opt().tol;
  return report_verdict(ctx, ctx.use_exact(xs) ? mixture_verdict<Rational>(xs, tol) : mixture_verdict<double>(xs, tol));
}

int cmd_check_hull(Context& ctx, const std::string& u) {
  one_source(ctx.opt(), !u.empty(), "--u");
  const std::vector<Number> xs =
      u.empty() ? ctx.adjust(std::get<UDoc>(ctx.document(DocKind::U).payload).values) : ctx.numbers(u);
  const double tol = ctx.opt().tol;
  return report_verdict(ctx, ctx.use_exact(xs) ? hull_verdict<Rational>(xs, tol) : hull_verdict<double>(xs, tol));
}

int cmd_nu(Context& ctx, const std::string& beta) {
  one_source(ctx.opt(), !beta.empty(), "--beta");
  const std::vector<Number> xs =
      beta.empty() ? ctx.adjust(std::get<BetaDoc>(ctx.document(DocKind::Beta).payload).values) : ctx.numbers(beta);
  const NuDoc doc = ctx.use_exact(xs) ? nu_doc<Rational>(xs) : nu_doc<double>(xs);
  if (machine(ctx.opt())) {
    ctx.emit_doc(Document{doc});
  } else {
    ctx.out() << "n: " << doc.n << '\n' << "lambda: " << doc.lambda.str() << '\n';
    for (std::size_t k = 0; k < doc.nu.size(); ++k) ctx.out() << "nu_" << k << ": " << doc.nu[k].str() << '\n';
  }
  return kSuccess;
}

int cmd_recover(Context& ctx, const std::string& nu_text, const std::string& beta_text) {
  if (!nu_text.empty() && !beta_text.empty()) throw UsageError("give --nu or --beta, not both");
  const bool has_inline = !nu_text.empty() || !beta_text.empty();
  one_source(ctx.opt(), has_inline, "--nu/--beta");
  std::vector<Number> nu;
  if (!beta_text.empty()) {
    const std::vector<Number> xs = ctx.numbers(beta_text);
    nu = (ctx.use_exact(xs) ? nu_doc<Rational>(xs) : nu_doc<double>(xs)).nu;
  } else if (!nu_text.empty()) {
    nu = ctx.numbers(nu_text);
  } else {
    nu = ctx.adjust(std::get<NuDoc>(ctx.document(DocKind::Nu).payload).nu);
  }
  const double tol = ctx.opt().tol;
  Recovery rec;
  if (nu.size() == 1) {
    rec.measure = AtomicMeasure({Atom{Number(Rational(1, 2)), Number(1)}});
    rec.boundary_distance = 0.5;
  } else {
    rec = ctx.use_exact(nu) ? recover_nu<Rational>(nu, tol) : recover_nu<double>(nu, tol);
  }
  if (machine(ctx.opt())) {
    ctx.emit_doc(Document{MeasureDoc{rec.measure}});
  } else {
    ctx.out() << "atoms (location weight):\n";
    print_measure(ctx.out(), rec.measure, "  ");
    ctx.out() << "endpoint atom: " << (rec.endpoint_atom ? "yes" : "no") << '\n';
  }
  return kSuccess;
}

LawSpec law_input(Context& ctx, const std::string& t) {
  one_source(ctx.opt(), !t.empty(), "--t");
  if (!t.empty()) return parse_law_spec(t, ctx.opt().exact);
  return std::get<TSpecDoc>(ctx.document(DocKind::TSpec).payload).law;
}

std::string law_label(const LawSpec& law) {
  switch (law.kind) {
    case LawKind::Beta: return "beta:" + law.a.str() + "," + law.b.str();
    case LawKind::Degenerate: return "degenerate:" + law.rho.str();
    case LawKind::Atomic: return "atomic";
    default: return "uniform";
  }
}

void print_table(Context& ctx, const ReportDoc& doc) {
  if (machine(ctx.opt())) {
    ctx.emit_doc(Document{doc});
    return;
  }
  for (const auto& [k, v] : doc.fields) ctx.out() << k << ": " << v << '\n';
  ctx.out() << emit(Document{doc}, Format::Csv) << '\n';
}

int cmd_generate(Context& ctx, const std::string& t, int grid) {
  const LawSpec law = law_input(ctx, t);
  const MixingDistribution mixing = law.to_mixing();
  const QuantileFunction q = quantile_from_T(mixing);
  const Number c = compute_cT(mixing);
  if (q.kind() == QuantileKind::Step && grid <= 0) {
    const DistDoc doc{q.values(), q.masses()};
    if (machine(ctx.opt())) {
      ctx.emit_doc(Document{doc});
    } else {
      ctx.out() << "c_T: " << c.str() << '\n' << "X (value mass):\n";
      for (std::size_t i = 0; i < doc.values.size(); ++i) {
        ctx.out() << "  " << doc.values[i].str() << ' ' << doc.masses[i].str() << '\n';
      }
    }
    return kSuccess;
  }
  ReportDoc doc;
  doc.name = "quantile";
  doc.columns = {"t", "x"};
  doc.fields = {{"law", law_label(law)}, {"c_T", c.str()}};
  for (double u : default_grid(grid > 0 ? grid : 1001)) doc.rows.push_back({format_double(u), format_double(q(u))});
  print_table(ctx, doc);
  return kSuccess;
}

QuantileFunction quantile_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<Number> params;
  if (colon != std::string::npos) params = parse_number_list(text.substr(colon + 1));
  struct Family {
    const char* name;
    ClosedFormTag tag;
    double p1, p2;
  };
  static const Family kFamilies[] = {
      {"uniform", ClosedFormTag::UniformInterval, 0, 1},
      {"shifted-exponential", ClosedFormTag::ShiftedExponential, 0, 1},
      {"reflected-exponential", ClosedFormTag::ReflectedExponential, 0, 1},
      {"logistic", ClosedFormTag::Logistic, 0, 1},
  };
  for (const Family& f : kFamilies) {
    if (name != f.name) continue;
    if (!params.empty() && params.size() != 2) throw Error(ErrorCode::SyntaxError, "quantile takes two parameters");
    return params.empty() ? QuantileFunction::closed_form(f.tag, f.p1, f.p2)
                          : QuantileFunction::closed_form(f.tag, params[0].value(), params[1].value());
  }
  throw Error(ErrorCode::SyntaxError, "unknown quantile family '" + name + "'");
}

QuantileFunction dist_quantile(const DistDoc& d) { return QuantileFunction::step(d.values, d.masses); }

DistDoc dist_input(Context& ctx, const std::string& dist) {
  if (!dist.empty()) {
    DistDoc d = parse_dist_spec(dist, ctx.opt().exact);
    d.values = ctx.adjust(d.values);
    d.masses = ctx.adjust(d.masses);
    return d;
  }
  DistDoc d = std::get<DistDoc>(ctx.document(DocKind::Dist).payload);
  d.values = ctx.adjust(d.values);
  d.masses = ctx.adjust(d.masses);
  return d;
}

int cmd_tmap(Context& ctx, const std::string& dist, const std::string& quantile, int grid) {
  if (!dist.empty() && !quantile.empty()) throw UsageError("give --dist or --quantile, not both");
  one_source(ctx.opt(), !dist.empty() || !quantile.empty(), "--dist/--quantile");
  const QuantileFunction q = quantile.empty() ? dist_quantile(dist_input(ctx, dist)) : quantile_spec(quantile);
  const TransformResult r = T_from_X(q, default_grid(grid > 0 ? grid : 1001));
  ReportDoc doc;
  doc.fields = {{"lambda", r.lambda.str()}};
  if (r.atoms && grid <= 0) {
    doc.name = "tmap-atoms";
    doc.columns = {"location", "weight"};
    for (const Atom& a : r.atoms->atoms()) doc.rows.push_back({a.location.str(), a.weight.str()});
  } else {
    doc.name = "tmap";
    doc.columns = {"t", "cdf"};
    if (r.density) doc.columns.push_back("density");
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      std::vector<std::string> row{format_double(r.grid[i]), format_double(r.cdf[i])};
      if (r.density) row.push_back(format_double((*r.density)[i]));
      doc.rows.push_back(std::move(row));
    }
  }
  print_table(ctx, doc);
  return kSuccess;
}

template <typename T>
std::vector<Number> eos_numbers(const DistDoc& d, int n) {
  return to_numbers(eos_exact(DiscreteDistribution<T>(from_numbers<T>(d.values), from_numbers<T>(d.masses)), n));
}

int cmd_eos(Context& ctx, const std::string& dist, int n) {
  one_source(ctx.opt(), !dist.empty(), "--dist");
  const DistDoc d = dist_input(ctx, dist);
  const bool exact = ctx.use_exact(d.values) && ctx.use_exact(d.masses);
  const std::vector<Number> beta = exact ? eos_numbers<Rational>(d, n) : eos_numbers<double>(d, n);
  if (machine(ctx.opt())) {
    ctx.emit_doc(Document{BetaDoc{beta}});
  } else {
    for (std::size_t j = 0; j < beta.size(); ++j) ctx.out() << "E X_" << (j + 1) << ":" << n << " = " << beta[j].str() << '\n';
  }
  return kSuccess;
}

int cmd_verify_lemma1(Context& ctx, const std::string& t, int kmax) {
  const LawSpec law = law_input(ctx, t);
  const Lemma1Report r = verify_lemma1(law.to_mixing(), kmax, ctx.opt().tol);
  ReportDoc doc;
  doc.name = "lemma1";
  doc.columns = {"k", "deviation"};
  for (std::size_t k = 0; k < r.deviations.size(); ++k) doc.rows.push_back({std::to_string(k), format_double(r.deviations[k])});
  doc.fields = {{"law", law_label(law)},
                {"kmax", std::to_string(kmax)},
                {"mu1", format_double(r.mu1)},
                {"max_deviation", format_double(r.max_deviation)},
                {"exact", r.exact ? "true" : "false"},
                {"passed", r.passed ? "true" : "false"}};
  print_table(ctx, doc);
  return r.passed ? kSuccess : kInfeasible;
}

// One document per line; each line gets its own verdict or error and the
// batch continues. Exit status is the largest per-line code.
int cmd_batch(Context& ctx, std::istream& in, std::ostream& err) {
  if (ctx.opt().input.empty()) throw UsageError("batch needs --input FILE or --input -");
  std::ifstream file;
  std::istream* src = &in;
  if (ctx.opt().input != "-") {
    file.open(ctx.opt().input, std::ios::binary);
    if (!file) throw InputError("cannot open input file '" + ctx.opt().input + "'");
    src = &file;
  }
  int worst = kSuccess;
  std::string line;
  int number = 0;
  while (std::getline(*src, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int code = kSuccess;
    try {
      const Document doc = parse(line, ctx.opt().exact);
      std::vector<Number> xs;
      const double tol = ctx.opt().tol;
      FeasibilityVerdict v;
      switch (doc.kind()) {
        case DocKind::Beta:
          xs = ctx.adjust(std::get<BetaDoc>(doc.payload).values);
          v = ctx.use_exact(xs) ? eos_verdict<Rational>(xs, tol) : eos_verdict<double>(xs, tol);
          break;
        case DocKind::P:
          xs = ctx.adjust(std::get<PDoc>(doc.payload).values);
          v = ctx.use_exact(xs) ? mixture_verdict<Rational>(xs, tol) : mixture_verdict<double>(xs, tol);
          break;
        case DocKind::U:
          xs = ctx.adjust(std::get<UDoc>(doc.payload).values);
          v = ctx.use_exact(xs) ? hull_verdict<Rational>(xs, tol) : hull_verdict<double>(xs, tol);
          break;
        default:
          throw Error(ErrorCode::InvariantViolation, "batch accepts beta, p and u documents", "kind");
      }
      code = v.feasible() ? kSuccess : kInfeasible;
      if (ctx.opt().json) {
        ctx.out() << emit(Document{VerdictDoc{v}}) << '\n';
      } else {
        ctx.out() << number << ": " << to_string(v.status) << " (" << to_string(v.reason) << ")\n";
      }
    } catch (const Error& e) {
      code = exit_code_for(e.code());
      err << "line " << number << ": " << e.what() << '\n';
      if (ctx.opt().json) {
        const nlohmann::json j = {{"line", number}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        ctx.out() << safe_dump(j) << '\n';
      } else {
        ctx.out() << number << ": error " << to_string(e.code()) << '\n';
      }
    }
    worst = std::max(worst, code);
  }
  return worst;
}

double env_tolerance() {
  const char* env = std::getenv("EOS_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v)) throw UsageError("EOS_TOL must be a positive number");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  bool json_requested = false;
  for (const std::string& a : args) json_requested = json_requested || a == "--json";

  auto fail_json = [&](const std::string& code, const std::string& message) {
    if (json_requested) out << safe_dump(nlohmann::json{{"error", code}, {"message", message}}) << '\n';
  };

  CLI::App app{"Expected order statistics: feasibility, recovery and generator tools", "eos"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string beta, p, u, nu, t, dist, quantile;
  int grid = 0;
  int n = 0;
  int kmax = 6;
  std::optional<double> tol_flag;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Machine-readable JSON on stdout");
    sub->add_flag("--csv", opt.csv, "CSV on stdout (vector, measure and table outputs)");
    auto* ex = sub->add_flag("--exact", opt.exact, "Convert decimal input exactly to rationals");
    sub->add_flag("--float", opt.floating, "Use floating-point arithmetic throughout")->excludes(ex);
    sub->add_option("--tol", tol_flag, "Numerical tolerance (default 1e-9, or EOS_TOL)");
    sub->add_option("--input", opt.input, "Document file, or - for stdin");
  };

  auto* check_eos_cmd = app.add_subcommand("check-eos", "Decide whether beta_1 < ... < beta_n are expected order statistics");
  common(check_eos_cmd);
  check_eos_cmd->add_option("--beta", beta, "Comma-separated candidate values");

  auto* check_mix = app.add_subcommand("check-mixture", "Decide whether p is a mixture of binomial laws with 0 < V < 1");
  common(check_mix);
  check_mix->add_option("--p", p, "Comma-separated probabilities p_0, ..., p_n");

  auto* check_hull_cmd = app.add_subcommand("check-hull", "Decide membership of u in the hull of the open moment curve");
  common(check_hull_cmd);
  check_hull_cmd->add_option("--u", u, "Comma-separated u_0 = 1, u_1, ..., u_n");

  auto* nu_cmd = app.add_subcommand("nu", "Print the normalized moment vector and lambda");
  common(nu_cmd);
  nu_cmd->add_option("--beta", beta, "Comma-separated candidate values");

  auto* recover_cmd = app.add_subcommand("recover", "Recover an atomic representing measure on [0, 1]");
  common(recover_cmd);
  recover_cmd->add_option("--nu", nu, "Comma-separated moments nu_0 = 1, nu_1, ...");
  recover_cmd->add_option("--beta", beta, "Comma-separated candidate values");

  auto* generate_cmd = app.add_subcommand("generate", "Quantile of X generated by a law of T");
  common(generate_cmd);
  generate_cmd->add_option("--t", t, "Law of T: beta:a,b | uniform | degenerate:rho | atomic:t:w,...");
  generate_cmd->add_option("--grid", grid, "Tabulate on N midpoint grid points");

  auto* tmap_cmd = app.add_subcommand("tmap", "Law of T induced by a law of X");
  common(tmap_cmd);
  tmap_cmd->add_option("--dist", dist, "atoms:v1:m1,v2:m2,...");
  tmap_cmd->add_option("--quantile", quantile, "uniform|shifted-exponential|reflected-exponential|logistic[:p1,p2]");
  tmap_cmd->add_option("--grid", grid, "Tabulate on N midpoint grid points");

  auto* eos_cmd = app.add_subcommand("eos", "Expected order statistics of a finitely supported law");
  common(eos_cmd);
  eos_cmd->add_option("--dist", dist, "atoms:v1:m1,v2:m2,...");
  eos_cmd->add_option("--n", n, "Sample size")->required()->check(CLI::Range(1, kMaxOrder));

  auto* lemma_cmd = app.add_subcommand("verify-lemma1", "Check mu_1 = 0 and mu_{k+2} - mu_{k+1} = E T^k");
  common(lemma_cmd);
  lemma_cmd->add_option("--t", t, "Law of T");
  lemma_cmd->add_option("--kmax", kmax, "Largest k checked")->check(CLI::Range(0, 60));

  auto* batch_cmd = app.add_subcommand("batch", "Decide one beta, p or u document per input line");
  common(batch_cmd);

  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  std::string prog = "eos";
  argv.push_back(prog.data());
  for (std::string& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    fail_json("UsageError", e.what());
    return kUsage;
  }

  try {
    opt.tol = tol_flag ? *tol_flag : env_tolerance();
    if (!(opt.tol > 0) || !std::isfinite(opt.tol)) throw UsageError("--tol must be positive");
    if (opt.json && opt.csv) throw UsageError("--json and --csv are exclusive");
    Context ctx(opt, in, out);
    if (*check_eos_cmd) return cmd_check_eos(ctx, beta);
    if (*check_mix) return cmd_check_mixture(ctx, p);
    if (*check_hull_cmd) return cmd_check_hull(ctx, u);
    if (*nu_cmd) return cmd_nu(ctx, beta);
    if (*recover_cmd) return cmd_recover(ctx, nu, beta);
    if (*generate_cmd) return cmd_generate(ctx, t, grid);
    if (*tmap_cmd) return cmd_tmap(ctx, dist, quantile, grid);
    if (*eos_cmd) return cmd_eos(ctx, dist, n);
    if (*lemma_cmd) return cmd_verify_lemma1(ctx, t, kmax);
    if (*batch_cmd) return cmd_batch(ctx, in, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    fail_json("UsageError", e.what());
    return kUsage;
  } catch (const InputError& e) {
    err << e.what() << '\n';
    fail_json("InputError", e.what());
    return kDataError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    fail_json(std::string(to_string(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    fail_json("InternalError", e.what());
    return kNumerical;
  }
  return kUsage;
}

}  // namespace eos::cli
