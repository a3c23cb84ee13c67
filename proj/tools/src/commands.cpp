#include "symkit_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "symkit/abp.hpp"
#include "symkit/algind.hpp"
#include "symkit/error.hpp"
#include "symkit/io.hpp"
#include "symkit/pdc.hpp"
#include "symkit/symmetric.hpp"
#include "symkit/transforms.hpp"

namespace symkit::cli {

using nlohmann::json;
using nlohmann::ordered_json;

unsigned parse_field(std::string_view text) {
  if (text == "rational" || text == "Q") return 1;
  std::string digits;
  if (text.rfind("cyclotomic", 0) == 0) {
    for (char c : text.substr(10))
      if (c >= '0' && c <= '9') digits += c;
      else if (c != ':' && c != '(' && c != ')') digits.clear(), digits += 'x';
  }
  if (digits.empty() || digits.find('x') != std::string::npos)
    fail(ErrorCode::ParseError, "field must be 'rational' or 'cyclotomic:N', got '" + std::string(text) + "'");
  const unsigned n = static_cast<unsigned>(std::stoul(digits));
  if (n == 0) fail(ErrorCode::ParseError, "cyclotomic order must be positive");
  return n;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    if (!content.empty() && content.back() != '\n') os << '\n';
    os.flush();
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::string> scalar_strings(std::span<const Scalar> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::vector<std::string> matrix_names(std::size_t l) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      names.push_back(l <= 9 ? "z" + std::to_string(i + 1) + std::to_string(j + 1)
                             : "z" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return names;
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (!cfg.output_path.empty()) write_atomic(cfg.output_path, content);
}

// --- schur -------------------------------------------------------------------------

struct SchurArgs {
  std::string route = "all";
  std::string lambda;
  std::string mu;
  std::size_t n = 0;
};

int cmd_schur(const SchurArgs& a, const RunConfig& cfg, std::ostream& out) {
  SkewShape shape = parse_skew(a.lambda);
  if (!a.mu.empty()) shape.inner = Partition::parse(a.mu);
  const Partition& lambda = shape.outer;
  ordered_json doc{{"lambda", lambda.to_string()}, {"n", a.n}, {"route", a.route}};

  if (shape.inner.length() > 0) {
    if (a.route != "jt-h" && a.route != "all")
      fail(ErrorCode::LengthError, "skew shapes are built by the jt-h route only");
    const Poly s = skew_schur_h(lambda, shape.inner, a.n);
    doc["mu"] = shape.inner.to_string();
    doc["polynomials"] = {{"jt-h", json::parse(poly_to_json(s))}};
    out << to_string(s) << "\n";
    emit(cfg, doc.dump(2));
    return kOk;
  }

  static const std::vector<std::string> kRoutes = {"bialternant", "jt-h", "jt-e", "ssyt"};
  std::vector<std::string> routes;
  if (a.route == "all") routes = kRoutes;
  else if (std::find(kRoutes.begin(), kRoutes.end(), a.route) != kRoutes.end()) routes = {a.route};
  else fail(ErrorCode::ParseError, "unknown route '" + a.route + "'");

  std::vector<std::pair<std::string, Poly>> results;
  for (const auto& r : routes) {
    if (r == "bialternant") results.emplace_back(r, schur_bialternant(lambda, a.n));
    if (r == "jt-h") results.emplace_back(r, schur_jt_h(lambda, a.n));
    if (r == "jt-e") results.emplace_back(r, schur_jt_e(lambda, a.n));
    if (r == "ssyt") results.emplace_back(r, schur_ssyt(lambda, a.n));
  }
  bool agree = true;
  for (const auto& [r, p] : results) agree = agree && p == results.front().second;
  ordered_json polys;
  for (const auto& [r, p] : results) polys[r] = json::parse(poly_to_json(p));
  doc["polynomials"] = polys;
  if (results.size() == 1) {
    out << to_string(results.front().second) << "\n";
  } else {
    for (const auto& [r, p] : results) out << r << ": " << to_string(p) << "\n";
    doc["agree"] = agree;
    out << "agree=" << (agree ? "true" : "false") << "\n";
  }
  emit(cfg, doc.dump(2));
  return agree ? kOk : kVerificationFailed;
}

// --- reduce ----------------------------------------------------------------------------

struct ReduceArgs {
  std::string lambda;
  std::size_t n = 0;
  std::string formula_in;
  std::string report_out;
};

ordered_json report_json(const ReductionReport& r) {
  ordered_json passes = ordered_json::array();
  for (const auto& p : r.passes) passes.push_back({{"pass", p.name}, {"size", p.size}, {"depth", p.depth}});
  return {{"lambda", r.lambda.to_string()},
          {"n", r.n},
          {"ell", r.ell},
          {"input", {{"size", r.input_size}, {"depth", r.input_depth}}},
          {"output", {{"size", r.output_size}, {"depth", r.output_depth}}},
          {"depth_increase", static_cast<long>(r.output_depth) - static_cast<long>(r.input_depth)},
          {"witness", {{"field_order", r.n}, {"point", scalar_strings(r.witness)}}},
          {"q_labels", r.q_labels},
          {"pivots", r.pivots},
          {"size_constant", r.size_constant},
          {"size_bound_holds", r.size_bound_holds},
          {"passes", passes}};
}

int cmd_reduce(const ReduceArgs& a, const RunConfig& cfg, std::ostream& out) {
  const Partition lambda = Partition::parse(a.lambda);
  if (!check_main_theorem_hypothesis(lambda, a.n)) {
    out << "hypothesis failed: lambda=(" << lambda.to_string() << "), n=" << a.n << "\n";
    return kHypothesisFailed;
  }
  const Formula input = a.formula_in.empty() ? schur_jt_formula(lambda, a.n) : formula_from_json(read_file(a.formula_in));
  ReduceOptions opts;
  opts.seed = cfg.seed;
  SchurReduction red = schur_to_det_reduce(lambda, a.n, input, opts);

  const std::size_t l = lambda.length();
  const Poly got = formula_expand(red.formula, cfg.term_budget);
  const Poly want = symbolic_det_poly(l);
  const bool verified = got == want;
  ordered_json rep = report_json(red.report);
  rep["verified"] = verified;
  rep["expansion"] = to_string(got, matrix_names(l));

  out << "input  size=" << red.report.input_size << " depth=" << red.report.input_depth << "\n";
  out << "output size=" << red.report.output_size << " depth=" << red.report.output_depth << "\n";
  out << "det_" << l << (verified ? " verified: " : " MISMATCH: ") << to_string(got, matrix_names(l)) << "\n";
  emit(cfg, formula_to_json(red.formula));
  if (!a.report_out.empty()) write_atomic(a.report_out, rep.dump(2));
  return verified ? kOk : kVerificationFailed;
}

// --- witness ---------------------------------------------------------------------------

struct WitnessArgs {
  std::string family = "e";
  std::size_t n = 0;
};

int cmd_witness(const WitnessArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.n < 2) fail(ErrorCode::LengthError, "witness needs n >= 2");
  ordered_json doc{{"family", a.family}, {"n", a.n}};
  if (a.family == "shifted") {
    std::vector<Poly> q;
    for (unsigned i = 1; i <= a.n; ++i) q.push_back(e_poly(i, a.n));
    const ShiftedWitness w = shifted_witness(q, cfg.seed);
    if (!property_s_check(w.shifted, w.point, cfg.seed)) fail(ErrorCode::VerificationFailed, "shifted witness failed re-verification");
    std::vector<Scalar> residuals;
    for (const auto& s : w.shifted) residuals.push_back(poly_eval(s, w.point));
    const std::size_t rank = mat_rank(evaluate_jacobian(jacobian(w.shifted), w.point));
    doc["seed"] = cfg.seed;
    doc["field_order"] = 1;
    doc["point"] = scalar_strings(w.point);
    doc["shifts"] = scalar_strings(w.shifts);
    doc["certified_rank"] = rank;
    doc["residuals"] = scalar_strings(residuals);
    out << "shifted e-family, n=" << a.n << ": point (" ;
    for (std::size_t i = 0; i < w.point.size(); ++i) out << (i ? ", " : "") << w.point[i];
    out << "), rank " << rank << "\n";
  } else {
    PropertySWitness w;
    if (a.family == "e") w = roots_of_unity_witness(a.n);
    else if (a.family == "h") w = h_family_witness(a.n);
    else if (a.family == "p") w = p_family_witness(a.n);
    else fail(ErrorCode::ParseError, "family must be e, h, p or shifted");
    doc["field_order"] = a.n;
    doc["point"] = scalar_strings(w.point);
    doc["certified_rank"] = w.rank;
    doc["residuals"] = scalar_strings(w.residuals);
    out << a.family << "-family, n=" << a.n << ": residuals";
    for (const auto& r : w.residuals) out << " " << r;
    out << ", rank " << w.rank << "\n";
  }
  emit(cfg, doc.dump(2));
  return kOk;
}

// --- pdc ---------------------------------------------------------------------------------

struct PdcArgs {
  std::optional<unsigned> monomial;
  std::string poly;
  std::string poly_file;
  std::string family;
  unsigned k = 0;
  std::size_t n = 0;
};

int cmd_pdc(const PdcArgs& a, const RunConfig& cfg, std::ostream& out) {
  ordered_json doc;
  if (a.family == "shifted") {
    const std::size_t k = a.k;
    if (k == 0) fail(ErrorCode::LengthError, "--k must be positive");
    std::vector<Poly> q;
    for (unsigned i = 1; i <= k; ++i) q.push_back(e_poly(i, k + 1));
    const ShiftedPdcReport r = shifted_product_pdc_check(q, cfg.seed);
    doc = {{"family", "shifted"}, {"k", k}, {"n", k + 1}, {"seed", cfg.seed},
           {"shifts", scalar_strings(r.shifts)}, {"point", scalar_strings(r.point)},
           {"dimension", r.product.dimension}, {"bound", r.product.bound}, {"pass", r.product.pass}};
    out << r.product.dimension << "\n";
    emit(cfg, doc.dump(2));
    return r.product.pass ? kOk : kVerificationFailed;
  }
  Poly p;
  if (a.monomial) {
    const std::size_t k = *a.monomial;
    if (k == 0) {
      p = Poly::constant(1, 1);
    } else {
      Monomial m(k);
      for (std::size_t i = 0; i < k; ++i) m.set(i, 1);
      p = Poly::term(m, 1);
    }
  } else if (!a.poly.empty()) {
    if (a.n == 0) fail(ErrorCode::LengthError, "--poly needs --n");
    p = parse_poly(a.poly, a.n, cfg.field_order);
  } else if (!a.poly_file.empty()) {
    p = poly_from_json(read_file(a.poly_file));
  } else if (a.family == "e" || a.family == "h" || a.family == "p") {
    if (a.n == 0) fail(ErrorCode::LengthError, "--family needs --n");
    p = a.family == "e" ? e_poly(a.k, a.n) : a.family == "h" ? h_poly(a.k, a.n) : p_poly(a.k, a.n);
  } else {
    fail(ErrorCode::LengthError, "pdc needs --monomial, --poly, --poly-file or --family");
  }
  const std::size_t dim = pdc_dimension(p, cfg.term_budget);
  doc = {{"polynomial", to_string(p)}, {"arity", p.arity()}, {"dimension", dim}};
  out << dim << "\n";
  emit(cfg, doc.dump(2));
  return kOk;
}

// --- convert ------------------------------------------------------------------------------

struct ConvertArgs {
  std::string basis;
  bool e_to_h = false;
  bool e_to_p = false;
  bool to_e = false;
  unsigned k = 0;
  std::size_t n = 0;
  std::string poly;
};

int cmd_convert(const ConvertArgs& a, const RunConfig& cfg, std::ostream& out) {
  std::string basis = a.basis;
  if (a.e_to_h) basis = "e-to-h";
  if (a.e_to_p) basis = "e-to-p";
  if (a.to_e) basis = "to-e-basis";
  Poly result;
  std::string prefix;
  if (basis == "e-to-h" || basis == "e-to-p") {
    const std::size_t n = a.n == 0 ? a.k : a.n;
    result = basis == "e-to-h" ? e_in_h_basis(a.k, n) : e_in_p_basis(a.k, n);
    prefix = basis == "e-to-h" ? "h" : "p";
  } else if (basis == "to-e-basis") {
    if (a.poly.empty() || a.n == 0) fail(ErrorCode::LengthError, "to-e-basis needs --poly and --n");
    result = express_in_e_basis(parse_poly(a.poly, a.n, cfg.field_order));
    prefix = "e";
  } else {
    fail(ErrorCode::ParseError, "choose one of --e-to-h, --e-to-p, --to-e-basis");
  }
  const std::string text = to_string(result, prefix);
  out << text << "\n";
  ordered_json doc{{"basis", basis}, {"variables", prefix}, {"text", text}, {"polynomial", json::parse(poly_to_json(result))}};
  emit(cfg, doc.dump(2));
  return kOk;
}

// --- bench ----------------------------------------------------------------------------------

struct BenchArgs {
  std::string suite = "schur-routes";
  unsigned max_weight = 4;
  std::size_t n = 0;
};

int cmd_bench(const BenchArgs& a, const RunConfig& cfg, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  std::ostringstream csv;
  csv << "lambda,n,route,size,depth,millis\n";
  auto ms = [](clock::time_point t0) { return std::chrono::duration<double, std::milli>(clock::now() - t0).count(); };
  auto row = [&](const std::string& lam, std::size_t n, const std::string& route, std::uint64_t size, long depth, double millis) {
    csv << '"' << lam << '"' << ',' << n << ',' << route << ',' << size << ',' << depth << ',';
    csv << std::fixed << std::setprecision(3) << millis << std::defaultfloat << "\n";
  };
  if (a.suite == "schur-routes") {
    for (unsigned w = 1; w <= a.max_weight; ++w)
      for (const auto& lam : partitions_of(w)) {
        const std::size_t n = a.n == 0 ? std::max<std::size_t>(lam.length(), 1) : a.n;
        if (lam.length() > n) continue;
        for (const std::string route : {"bialternant", "jt-h", "jt-e", "ssyt"}) {
          const auto t0 = clock::now();
          Poly p;
          if (route == "bialternant") p = schur_bialternant(lam, n);
          else if (route == "jt-h") p = schur_jt_h(lam, n);
          else if (route == "jt-e") p = schur_jt_e(lam, n);
          else p = schur_ssyt(lam, n);
          row(lam.to_string(), n, route, p.num_terms(), p.total_degree(), ms(t0));
        }
      }
  } else if (a.suite == "reduce") {
    const std::vector<std::pair<std::string, std::size_t>> cases = {{"3,2", 5}, {"4,2", 6}, {"6,3", 8}};
    for (const auto& [text, n] : cases) {
      const Partition lam = Partition::parse(text);
      if (lam.weight() > a.max_weight && a.max_weight != 0) continue;
      const Formula f = schur_jt_formula(lam, n);
      row(text, n, "input", formula_size(f), formula_depth(f), 0.0);
      const auto t0 = clock::now();
      ReduceOptions opts;
      opts.seed = cfg.seed;
      const SchurReduction red = schur_to_det_reduce(lam, n, f, opts);
      row(text, n, "reduce", formula_size(red.formula), formula_depth(red.formula), ms(t0));
    }
  } else if (a.suite == "det-abp") {
    for (std::size_t n = 1; n <= std::max(1U, a.max_weight); ++n) {
      const auto t0 = clock::now();
      const ABP abp = det_abp(n);
      row(std::to_string(n), n, "det-abp", abp.num_nodes(), static_cast<long>(abp.layers.size()) - 1, ms(t0));
    }
  } else {
    fail(ErrorCode::ParseError, "suite must be schur-routes, reduce or det-abp");
  }
  out << csv.str();
  emit(cfg, csv.str());
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisFailed: return kHypothesisFailed;
    case ErrorCode::VerificationFailed: return kVerificationFailed;
    case ErrorCode::BudgetExceeded: return kBudgetExceeded;
    default: return kFailure;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric polynomials, formula passes and Schur-to-determinant reduction"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string field = "rational";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for every randomized choice");
    sub->add_option("--budget", cfg.term_budget, "term / multi-index budget for expansions");
    sub->add_option("--field", field, "scalar field: rational or cyclotomic:N");
    sub->add_option("--out", cfg.output_path, "output file (written atomically)");
  };

  SchurArgs schur;
  auto* s = app.add_subcommand("schur", "build s_lambda by one or all routes");
  s->add_option("--route", schur.route, "bialternant, jt-h, jt-e, ssyt or all");
  s->add_option("--lambda", schur.lambda, "partition, e.g. 3,2,1 (skew: 5,3/1)")->required();
  s->add_option("--mu", schur.mu, "inner partition of a skew shape");
  s->add_option("--n", schur.n, "number of variables")->required();
  common(s);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "turn a formula for s_lambda into one for det_l");
  r->add_option("--lambda", reduce.lambda, "partition")->required();
  r->add_option("--n", reduce.n, "number of variables")->required();
  r->add_option("--formula", reduce.formula_in, "input formula JSON (default: built from Jacobi-Trudi)");
  r->add_option("--report", reduce.report_out, "reduction report JSON");
  common(r);

  WitnessArgs witness;
  auto* w = app.add_subcommand("witness", "Property S witness for the e, h, p or shifted e family");
  w->add_option("--family", witness.family, "e, h, p or shifted");
  w->add_option("--n", witness.n, "number of variables")->required();
  common(w);

  PdcArgs pdc;
  auto* p = app.add_subcommand("pdc", "dimension of the partial-derivative space");
  p->add_option("--monomial", pdc.monomial, "use x1*...*xk");
  p->add_option("--poly", pdc.poly, "polynomial text");
  p->add_option("--poly-file", pdc.poly_file, "polynomial JSON file");
  p->add_option("--family", pdc.family, "e, h, p (single polynomial) or shifted (product check)");
  p->add_option("--k", pdc.k, "family index / number of factors");
  p->add_option("--n", pdc.n, "number of variables");
  common(p);

  ConvertArgs conv;
  auto* c = app.add_subcommand("convert", "basis conversions");
  c->add_option("--basis", conv.basis, "e-to-h, e-to-p or to-e-basis");
  c->add_flag("--e-to-h", conv.e_to_h, "e_k in the h basis");
  c->add_flag("--e-to-p", conv.e_to_p, "e_k in the p basis");
  c->add_flag("--to-e-basis", conv.to_e, "symmetric polynomial in the e basis");
  c->add_option("--k", conv.k, "index k of e_k");
  c->add_option("--n", conv.n, "number of variables");
  c->add_option("--poly", conv.poly, "polynomial text for --to-e-basis");
  common(c);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "CSV of sizes, depths and timings");
  b->add_option("--suite", bench.suite, "schur-routes, reduce or det-abp");
  b->add_option("--max-weight", bench.max_weight, "largest |lambda| (det-abp: largest n)");
  b->add_option("--n", bench.n, "number of variables (default: l(lambda))");
  common(b);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    cfg.field_order = parse_field(field);
    if (s->parsed()) return cmd_schur(schur, cfg, out);
    if (r->parsed()) return cmd_reduce(reduce, cfg, out);
    if (w->parsed()) return cmd_witness(witness, cfg, out);
    if (p->parsed()) return cmd_pdc(pdc, cfg, out);
    if (c->parsed()) return cmd_convert(conv, cfg, out);
    if (b->parsed()) return cmd_bench(bench, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace symkit::cli
