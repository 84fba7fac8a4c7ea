#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>

#include "bipoisson/bracket_io.hpp"
#include "bipoisson/brackets.hpp"
#include "bipoisson/cli.hpp"
#include "bipoisson/errors.hpp"
#include "bipoisson/sl3.hpp"
#include "bipoisson/tensor_io.hpp"
#include "bipoisson/verify.hpp"

namespace bipoisson::cli {

namespace {

using nlohmann::ordered_json;

struct Global {
  unsigned jobs = 1;
  std::string format = "text";
  bool timing = false;
};

class Output {
 public:
  Output(const Global& g, std::string command, std::ostream& out) : g_(g), command_(std::move(command)), out_(out) {}

  void add(Report r) { reports_.push_back(std::move(r)); }
  void set(const std::string& k, ordered_json v) { extra_[k] = std::move(v); }

  int finish() {
    bool passed = std::all_of(reports_.begin(), reports_.end(), [](const Report& r) { return r.passed; });
    if (g_.format == "json") {
      ordered_json doc;
      doc["command"] = command_;
      doc["status"] = passed ? "pass" : "fail";
      for (auto& [k, v] : extra_.items()) doc[k] = v;
      ordered_json list = ordered_json::array();
      for (const Report& r : reports_) list.push_back(r.to_json(g_.timing));
      doc["reports"] = std::move(list);
      out_ << doc.dump(2) << '\n';
    } else {
      for (auto& [k, v] : extra_.items()) out_ << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      for (const Report& r : reports_) out_ << r.to_text(g_.timing);
      out_ << command_ << ": " << (passed ? "PASS" : "FAIL") << '\n';
    }
    return passed ? kPass : kFail;
  }

 private:
  const Global& g_;
  std::string command_;
  std::ostream& out_;
  std::vector<Report> reports_;
  ordered_json extra_ = ordered_json::object();
};

sl3::Params parse_params(const std::vector<std::string>& bindings) {
  sl3::Params p = sl3::Params::symbolic();
  for (const std::string& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw ParseError("parameter binding '" + b + "' is not NAME=VALUE");
    std::string name = b.substr(0, eq), value = b.substr(eq + 1);
    std::optional<Polynomial> v;
    if (value == "symbolic") {
      v = Polynomial::variable(name == "t" ? VarId::t() : VarId::a());
    } else {
      v = Polynomial(parse_rational(value));
    }
    if (name == "t") {
      p.t = v;
    } else if (name == "a") {
      p.a = v;
    } else {
      throw ParseError("unknown parameter '" + name + "' (expected t or a)");
    }
  }
  return p;
}

struct Inputs {
  std::string key;
  sl3::Pair pair;
};

// (c, b) from a catalog key or from two files; nullopt if neither was given.
std::optional<Inputs> load_pair(const std::string& key, const std::vector<std::string>& params, const std::string& c_file,
                                const std::string& b_file) {
  if (!key.empty()) {
    if (!c_file.empty() || !b_file.empty()) throw ParseError("give either --case or --c/--b, not both");
    sl3::Params p = parse_params(params);
    if (auto f = sl3::parse_form(key)) return Inputs{key, sl3::normal_form(*f, p)};
    if (key == "rmatrix-example") return Inputs{key, sl3::rmatrix_example_parts()};
    throw ParseError("unknown case '" + key + "' (expected a1..c3 or rmatrix-example)");
  }
  if (c_file.empty() != b_file.empty()) throw ParseError("--c and --b must be given together");
  if (c_file.empty()) return std::nullopt;
  Tensor4 c = load_tensor(c_file);
  Tensor4 b = load_tensor(b_file);
  if (c.dim() != b.dim()) throw ParseError("--c has N=" + std::to_string(c.dim()) + ", --b has N=" + std::to_string(b.dim()));
  return Inputs{"files", sl3::Pair{std::move(c), std::move(b)}};
}

Report fp4_report(const Tensor4& c, const Tensor4& b, unsigned jobs) {
  Report r;
  r.identity = "fp4";
  ReportTimer timer(r);
  Residual6 res = fp4_residual(c, b, jobs);
  std::size_t n = static_cast<std::size_t>(c.dim());
  r.checked = n * n * n * n * n * n;
  for (const auto& [idx, v] : res.entries()) r.fail(format_index(idx), v);
  r.note = std::to_string(res.size()) + " nonzero residual entries";
  return r;
}

// ---------------------------------------------------------------------------

int cmd_catalog_list(const Global& g, std::ostream& out) {
  if (g.format == "json") {
    ordered_json list = ordered_json::array();
    for (const auto& e : sl3::catalog()) list.push_back({{"key", e.key}, {"parameters", e.parameters}, {"description", e.description}});
    out << list.dump(2) << '\n';
  } else {
    for (const auto& e : sl3::catalog()) {
      std::string ps;
      for (const auto& p : e.parameters) ps += (ps.empty() ? "" : ",") + p;
      out << e.key << (ps.empty() ? "" : " [" + ps + "]") << "  " << e.description << '\n';
    }
  }
  return kPass;
}

int cmd_catalog_export(const std::string& key, const std::vector<std::string>& params, const std::string& prefix,
                       std::ostream& out) {
  std::optional<Tensor4> c, b;
  // Basis tensors: c0..c9, except that c1..c3 are normal forms and the basis
  // tensors of those names are basis-c1..basis-c3 (basis-cK works for all K).
  std::string_view k = key;
  bool prefixed = k.starts_with("basis-");
  if (prefixed) k.remove_prefix(6);
  bool basis = k.size() == 2 && k[0] == 'c' && std::isdigit(static_cast<unsigned char>(k[1])) &&
               (prefixed || !sl3::parse_form(k));
  if (prefixed && !basis) throw ParseError("unknown key '" + key + "'");
  if (basis) {
    if (!params.empty()) throw ParseError("basis tensors take no parameters");
    c = sl3::basis_c(k[1] - '0');
  } else {
    auto in = load_pair(key, params, "", "");
    c = in->pair.c;
    b = in->pair.b;
  }
  if (prefix.empty()) {
    ordered_json doc;
    doc["key"] = key;
    doc["c"] = tensor_to_json(*c);
    if (b) doc["b"] = tensor_to_json(*b);
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(prefix + ".c.json", tensor_to_json(*c));
    if (b) write_json_file(prefix + ".b.json", tensor_to_json(*b));
    out << "wrote " << prefix << ".c.json" << (b ? " and " + prefix + ".b.json" : std::string()) << '\n';
  }
  return kPass;
}

int cmd_check_fp4(const Global& g, const std::string& c_file, const std::string& b_file, std::ostream& out) {
  auto in = load_pair("", {}, c_file, b_file);
  Output o(g, "check-fp4", out);
  o.add(validate_c(in->pair.c));
  o.add(validate_b(in->pair.b));
  o.add(fp4_report(in->pair.c, in->pair.b, g.jobs));
  return o.finish();
}

int cmd_build(const Global& g, const std::optional<Inputs>& in, const std::string& lambda_text, const std::string& out_file,
              bool restrict, std::ostream& out) {
  if (!in) throw ParseError("build needs --case KEY or --c FILE --b FILE");
  Rational lambda = parse_rational(lambda_text);
  if (lambda == 0) throw ParseError("--lambda must be nonzero");
  Output o(g, "build", out);
  Report vc = validate_c(in->pair.c), vb = validate_b(in->pair.b);
  bool valid = vc.passed && vb.passed;
  o.add(std::move(vc));
  o.add(std::move(vb));
  if (!valid) return o.finish();
  BracketTable table = quadratic_bracket(in->pair.c, in->pair.b, lambda, g.jobs);
  Report casimir = trace_casimir_check(table);
  bool casimir_ok = casimir.passed;
  o.add(std::move(casimir));
  if (restrict) {
    // Restricting to sum S_ii = 0 is only meaningful when the trace is a Casimir.
    if (!casimir_ok) return o.finish();
    table = restrict_sl(table);
  }
  write_json_file(out_file, table_to_json(table));
  o.set("table", out_file);
  o.set("restricted", table.is_restricted());
  return o.finish();
}

struct VerifyFlags {
  bool all = false, jacobi = false, compat = false, decomp = false, casimir = false, s0flow = false, schouten = false;
  bool unrestricted = false;
  std::string s0flow_form = "same";
};

int cmd_verify(const Global& g, const std::string& table_file, VerifyFlags f, const std::optional<Inputs>& in,
               std::ostream& out) {
  BracketTable table = load_table(table_file);
  if (!(f.jacobi || f.compat || f.decomp || f.casimir || f.s0flow || f.schouten)) f.all = true;
  Output o(g, "verify", out);
  if (f.casimir && table.is_restricted()) throw ParseError("--casimir needs an unrestricted table");
  if (f.s0flow && !in) throw ParseError("--s0flow needs the tensors: --case KEY or --c FILE --b FILE");
  if (f.s0flow && !table.lambda()) throw ParseError("--s0flow needs a table with a lambda");

  if ((f.all || f.casimir) && !table.is_restricted()) o.add(trace_casimir_check(table));
  const BracketTable work = f.unrestricted ? table : restrict_sl(table);
  o.set("checked_on", work.is_restricted() ? "restricted coordinates" : "full coordinates");
  if (f.all || f.jacobi) o.add(jacobi_check(work, g.jobs));
  if (f.all || f.compat) {
    BracketTable lin = work.is_restricted() ? restrict_sl(linear_bracket(work.dim())) : linear_bracket(work.dim());
    o.add(compatibility_check(lin, work, g.jobs));
  }
  if (f.all || f.decomp) {
    if (work.lambda()) {
      o.add(decomposition_check(pencil_parts(work), g.jobs));
    } else if (f.decomp) {
      throw ParseError("--decomp needs a quadratic table (with lambda)");
    }
  }
  if (f.all || f.schouten) o.add(schouten_factor_check(work, g.jobs));
  if ((f.all && in && table.lambda()) || f.s0flow) {
    if (f.s0flow_form != "same" && f.s0flow_form != "opposite") throw ParseError("--s0flow-form is same or opposite");
    if (in->pair.c.dim() != table.dim()) throw ParseError("tensors and table have different N");
    o.add(s0_flow_check(work, hamiltonian_H(in->pair.c, in->pair.b),
                        f.s0flow_form == "same" ? S0FlowForm::Same : S0FlowForm::Opposite));
  }
  return o.finish();
}

int cmd_gauge(const Global& g, const std::string& c_file, const std::string& b_file, const std::string& x_file,
              const std::string& prefix, std::ostream& out) {
  auto in = load_pair("", {}, c_file, b_file);
  MatrixX x = load_matrix(x_file);
  if (x.dim() != in->pair.c.dim()) throw ParseError("--x has a different N than the tensors");
  if (x.trace() != 0) throw ParseError("--x must be traceless");
  Output o(g, "gauge", out);
  Report input_c = validate_c(in->pair.c);
  bool ok = input_c.passed;
  o.add(std::move(input_c));
  if (!ok) return o.finish();
  GaugeResult res = gauge_transform(in->pair.c, in->pair.b, x);
  res.c_check.identity = "validate-c (gauged)";
  o.add(res.c_check);
  write_json_file(prefix + ".c.json", tensor_to_json(res.c));
  write_json_file(prefix + ".b.json", tensor_to_json(res.b));
  // Reported, not asserted: whether b' stays symmetric and (c', b') stays a solution.
  o.set("b_symmetric", res.b_check.children[0].passed);
  o.set("b_traceless", res.b_check.children[1].passed && res.b_check.children[2].passed);
  o.set("fp4_residual_entries_before", fp4_residual(in->pair.c, in->pair.b, g.jobs).size());
  o.set("fp4_residual_entries_after", fp4_residual(res.c, res.b, g.jobs).size());
  o.set("wrote", ordered_json::array({prefix + ".c.json", prefix + ".b.json"}));
  return o.finish();
}

int cmd_selftest(const Global& g, std::ostream& out) {
  Output o(g, "selftest", out);
  {
    Report r;
    r.identity = "basis tensors valid";
    for (int alpha = 0; alpha < 10; ++alpha) {
      Report v = validate_c(sl3::basis_c(alpha));
      v.identity = "c" + std::to_string(alpha);
      r.add_child(std::move(v));
    }
    o.add(std::move(r));
  }
  {
    auto y = sl3::symbolic_y();
    Report r = fp4_report(sl3::c_of_y(y), sl3::b_of_y(y), g.jobs);
    r.identity = "fp4(sum y_a c_a, b(y))";
    o.add(std::move(r));
  }
  const sl3::Params sym = sl3::Params::symbolic();
  for (sl3::NormalForm f : sl3::kNormalForms) {
    sl3::Pair p = sl3::normal_form(f, sym);
    Report r;
    r.identity = "normal form " + sl3::key(f);
    Report fp = fp4_report(p.c, p.b, g.jobs);
    r.add_child(std::move(fp));
    auto y = sl3::y_assignment(f, sym);
    Report match;
    match.identity = "matches (c(y), b(y))";
    match.checked = 2;
    Tensor4 dc = p.c - sl3::c_of_y(y), db = p.b - sl3::b_of_y(y);
    if (!dc.is_zero()) match.fail("c" + format_index(dc.entries().begin()->first), dc.entries().begin()->second);
    if (!db.is_zero()) match.fail("b" + format_index(db.entries().begin()->first), db.entries().begin()->second);
    r.add_child(std::move(match));
    o.add(std::move(r));
  }
  {
    Report r;
    r.identity = "schouten factor";
    Report lin = schouten_factor_check(restrict_sl(linear_bracket(3)), g.jobs);
    lin.identity = "pi1";
    r.add_child(std::move(lin));
    sl3::Pair a1 = sl3::normal_form(sl3::NormalForm::A1, sym);
    Report q = schouten_factor_check(restrict_sl(quadratic_bracket(a1.c, a1.b, Rational(1, 3), g.jobs)), g.jobs);
    q.identity = "pi2(a1), lambda = 1/3";
    r.add_child(std::move(q));
    o.add(std::move(r));
  }
  return o.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compatible linear and quadratic Poisson brackets on (sl(N) + C)*: construction and exact verification"};
  app.name("bipoisson");
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", g.timing, "include elapsed times in reports");

  auto* catalog = app.add_subcommand("catalog", "list or export catalog entries");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog keys");
  auto* exp = catalog->add_subcommand("export", "write the tensors of a catalog entry");
  std::string key, prefix;
  std::vector<std::string> params;
  exp->add_option("key", key, "a1..c3, rmatrix-example, or a basis tensor c0, c4..c9, basis-c0..basis-c9")->required();
  exp->add_option("--param", params, "t=VALUE, a=VALUE or NAME=symbolic (default symbolic)");
  exp->add_option("--out-prefix", prefix, "write PREFIX.c.json and PREFIX.b.json instead of printing");

  std::string c_file, b_file, x_file, lambda_text, out_file, table_file;
  auto* fp4 = app.add_subcommand("check-fp4", "residual of the tensor equation for (c, b)");
  fp4->add_option("--c", c_file, "c tensor file")->required();
  fp4->add_option("--b", b_file, "b tensor file")->required();

  auto* build = app.add_subcommand("build", "build the quadratic bracket table");
  bool restrict = false;
  build->add_option("--case", key, "catalog case a1..c3 or rmatrix-example");
  build->add_option("--param", params, "t=VALUE, a=VALUE or NAME=symbolic");
  build->add_option("--c", c_file, "c tensor file");
  build->add_option("--b", b_file, "b tensor file");
  build->add_option("--lambda", lambda_text, "scaling of the S0 row, p/q")->required();
  build->add_option("--out", out_file, "output table file")->required();
  build->add_flag("--restrict", restrict, "eliminate S_NN (after the trace-Casimir check)");

  auto* verify = app.add_subcommand("verify", "verify identities of a bracket table");
  VerifyFlags vf;
  verify->add_option("--table", table_file, "bracket table file")->required();
  verify->add_flag("--all", vf.all, "every applicable check (default)");
  verify->add_flag("--jacobi", vf.jacobi, "Jacobi identity");
  verify->add_flag("--compat", vf.compat, "compatibility with the linear bracket");
  verify->add_flag("--decomp", vf.decomp, "the three decomposition identities");
  verify->add_flag("--casimir", vf.casimir, "trace Casimir (unrestricted table)");
  verify->add_flag("--s0flow", vf.s0flow, "S0 row against the hamiltonian flow of H");
  verify->add_flag("--schouten", vf.schouten, "[P,P] against -2 x Jacobiator");
  verify->add_flag("--unrestricted", vf.unrestricted, "do not eliminate S_NN before the checks");
  verify->add_option("--s0flow-form", vf.s0flow_form, "same: {S,S0} = lambda{S,H}; opposite: {S0,S} = -lambda{H,S}");
  verify->add_option("--case", key, "catalog case providing H");
  verify->add_option("--param", params, "t=VALUE, a=VALUE or NAME=symbolic");
  verify->add_option("--c", c_file, "c tensor file providing H");
  verify->add_option("--b", b_file, "b tensor file providing H");

  auto* gauge = app.add_subcommand("gauge", "apply a gauge transform");
  gauge->add_option("--c", c_file, "c tensor file")->required();
  gauge->add_option("--b", b_file, "b tensor file")->required();
  gauge->add_option("--x", x_file, "traceless matrix file")->required();
  gauge->add_option("--out-prefix", prefix, "write PREFIX.c.json and PREFIX.b.json")->required();

  auto* selftest = app.add_subcommand("selftest", "symbolic sl(3) suite and Schouten factor check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kBadInput;
  }

  try {
    if (catalog->parsed()) {
      if (exp->parsed()) return cmd_catalog_export(key, params, prefix, out);
      return cmd_catalog_list(g, out);
    }
    if (fp4->parsed()) return cmd_check_fp4(g, c_file, b_file, out);
    if (build->parsed()) return cmd_build(g, load_pair(key, params, c_file, b_file), lambda_text, out_file, restrict, out);
    if (verify->parsed()) return cmd_verify(g, table_file, vf, load_pair(key, params, c_file, b_file), out);
    if (gauge->parsed()) return cmd_gauge(g, c_file, b_file, x_file, prefix, out);
    if (selftest->parsed()) return cmd_selftest(g, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace bipoisson::cli
