// Command-line front end: numeric evaluation, closed forms, reductions and
// verification reports.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tornheim/alpha_calculus.hpp"
#include "tornheim/bernoulli.hpp"
#include "tornheim/complex_io.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/quadrature.hpp"
#include "tornheim/tornheim_eval.hpp"
#include "tornheim/verify.hpp"

using nlohmann::json;
using namespace tornheim;

namespace {

enum class Format { text, json, csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  Format format = Format::text;
  std::optional<int> quad_order;
  std::optional<int> max_depth;
  std::optional<int> cutoff;
  std::optional<int> tail_terms;
};

Complex complex_arg(const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::optional<int> as_integer(Complex z) {
  if (z.imag() != 0.0 || z.real() != std::round(z.real()) || std::abs(z.real()) > 1e6) return std::nullopt;
  return static_cast<int>(z.real());
}

SummationSettings summation_settings(const Options& o) {
  SummationSettings s;
  if (o.cutoff) s.cutoff = *o.cutoff;
  if (o.tail_terms) s.tail_terms = *o.tail_terms;
  if (o.tol) s.target_tol = *o.tol;
  if (s.cutoff < 2 || s.tail_terms < 1 || s.tail_terms > 30) throw UsageError("invalid --cutoff or --tail-terms");
  s.max_cutoff = std::max(s.max_cutoff, 4 * s.cutoff);
  return s;
}

QuadSettings quad_settings(const Options& o) {
  QuadSettings q;
  if (o.quad_order) q.gauss_order = *o.quad_order;
  if (o.max_depth) q.max_depth = *o.max_depth;
  if (o.tol) q.target_tol = *o.tol;
  if (q.gauss_order < 2 || q.max_depth < 0) throw UsageError("invalid --quad-order or --max-depth");
  return q;
}

json cjson(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_value(const Options& o, const std::string& label, Complex value,
                 const std::optional<ClosedForm>& closed = std::nullopt) {
  switch (o.format) {
    case Format::text:
      std::cout << format_complex(value) << '\n';
      if (closed) std::cout << "exact: " << closed->to_string() << '\n';
      break;
    case Format::json: {
      json j{{"expression", label}, {"value", cjson(value)}};
      if (closed) {
        j["closed_form"] = to_json(*closed);
        j["closed_form_text"] = closed->to_string();
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "expression,re,im,closed_form\n"
                << csv_quote(label) << ',' << format_double(value.real()) << ',' << format_double(value.imag()) << ','
                << csv_quote(closed ? closed->to_string() : "") << '\n';
      break;
  }
}

void print_closed(const Options& o, const std::string& label, const ClosedForm& c) {
  const Complex value = closedform_eval(c);
  switch (o.format) {
    case Format::text:
      std::cout << c.to_string() << " = " << format_double(value.real()) << '\n';
      break;
    case Format::json:
      std::cout << json{{"expression", label}, {"closed_form", to_json(c)}, {"text", c.to_string()},
                        {"value", cjson(value)}}
                       .dump(2)
                << '\n';
      break;
    case Format::csv:
      std::cout << "expression,closed_form,value\n"
                << csv_quote(label) << ',' << csv_quote(c.to_string()) << ',' << format_double(value.real()) << '\n';
      break;
  }
}

// z(s) | dz(s), optionally z(s,refl), joined by '*'
IntegrandSpec parse_integrand(const std::string& text) {
  IntegrandSpec spec;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::size_t pos = 0;
  while (pos < compact.size()) {
    ZetaFactor f;
    if (compact.compare(pos, 3, "dz(") == 0) {
      f.r = 1;
      pos += 3;
    } else if (compact.compare(pos, 2, "z(") == 0) {
      pos += 2;
    } else {
      throw UsageError("integral: expected z(...) or dz(...) at '" + compact.substr(pos) + "'");
    }
    const std::size_t close = compact.find(')', pos);
    if (close == std::string::npos) throw UsageError("integral: missing ')'");
    std::string inner = compact.substr(pos, close - pos);
    if (const std::size_t comma = inner.find(','); comma != std::string::npos) {
      if (inner.substr(comma + 1) != "refl") throw UsageError("integral: only 'refl' may follow the argument");
      f.reflected = true;
      inner.resize(comma);
    }
    f.s = complex_arg(inner);
    spec.factors.push_back(f);
    pos = close + 1;
    if (pos < compact.size()) {
      if (compact[pos] != '*') throw UsageError("integral: factors must be joined by '*'");
      ++pos;
    }
  }
  if (spec.factors.empty()) throw UsageError("integral: no factors given");
  return spec;
}

int cmd_eval(const Options& o, const std::vector<std::string>& args) {
  const Complex s1 = complex_arg(args.at(0));
  const Complex s2 = complex_arg(args.at(1));
  const Complex s3 = complex_arg(args.at(2));
  std::optional<ClosedForm> closed;
  const auto a = as_integer(s1);
  const auto b = as_integer(s2);
  const auto c = as_integer(s3);
  if (a && b && c) closed = tornheim_closed(*a, *b, *c);
  const Complex value = tornheim_numeric({s1, s2, s3}, summation_settings(o));
  print_value(o, "T(" + args[0] + "," + args[1] + "," + args[2] + ")", value, closed);
  return 0;
}

int cmd_zeta(const Options& o, const std::string& s_text, const std::optional<double>& alpha, bool deriv) {
  const Complex s = complex_arg(s_text);
  const int r = deriv ? 1 : 0;
  EvalSettings settings;
  if (o.tol) settings.target_tol = *o.tol;
  const Complex value = alpha ? hurwitz_zeta(s, *alpha, r, settings) : riemann_zeta(s, r, settings);
  std::string label = deriv ? "zeta'(" : "zeta(";
  label += s_text;
  if (alpha) label += "," + format_double(*alpha);
  print_value(o, label + ")", value);
  return 0;
}

int cmd_bernoulli(const Options& o, int n, bool poly) {
  if (n < 0) throw UsageError("bernoulli: n must be nonnegative");
  const auto un = static_cast<unsigned>(n);
  if (poly) {
    const Polynomial p = bernoulli_polynomial(un);
    switch (o.format) {
      case Format::text:
        std::cout << p.to_string() << '\n';
        break;
      case Format::json: {
        json coeffs = json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
        std::cout << json{{"n", n}, {"coefficients", coeffs}}.dump(2) << '\n';
        break;
      }
      case Format::csv:
        std::cout << "power,coefficient\n";
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
          std::cout << i << ',' << p.coefficients()[i].to_string() << '\n';
        }
        break;
    }
    return 0;
  }
  const Rational b = bernoulli_number(un);
  switch (o.format) {
    case Format::text:
      std::cout << b.to_string() << '\n';
      break;
    case Format::json:
      std::cout << json{{"n", n}, {"value", b.to_string()}}.dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << "n,value\n" << n << ',' << b.to_string() << '\n';
      break;
  }
  return 0;
}

int cmd_integral(const Options& o, const std::string& text) {
  const IntegrandSpec spec = parse_integrand(text);
  const QuadResult r = alpha_product_integral(spec, quad_settings(o));
  print_value(o, "int_0^1 " + text, r.value);
  return 0;
}

int cmd_closed_form(const Options& o, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("closed-form: missing kind");
  const std::string& kind = args[0];
  std::vector<int> n;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const auto v = as_integer(complex_arg(args[i]));
    if (!v) throw UsageError("closed-form: integer arguments required");
    n.push_back(*v);
  }
  const auto need = [&](std::size_t count) {
    if (n.size() != count) throw UsageError("closed-form " + kind + ": expected " + std::to_string(count) + " integers");
  };
  std::string label = kind;
  for (int v : n) label += " " + std::to_string(v);
  try {
    if (kind == "diag-even") {
      need(1);
      print_closed(o, label, diagonal_even_closed(n[0]));
    } else if (kind == "diag-odd") {
      need(1);
      print_closed(o, label, diagonal_odd_closed(n[0]));
    } else if (kind == "dzeta") {
      need(2);
      print_closed(o, label, double_zeta_odd_closed(n[0], n[1]));
    } else if (kind == "combo") {
      need(3);
      print_closed(o, label, alternating_combo_odd(n[0], n[1], n[2]));
    } else {
      throw UsageError("closed-form: unknown kind '" + kind + "' (diag-even, diag-odd, dzeta, combo)");
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_reduce(const Options& o, int a, int b, int c) {
  if (a < 1 || b < 1 || c < 0) throw UsageError("reduce: requires a, b >= 1 and c >= 0");
  const auto terms = hwz_reduce(a, b, c);
  switch (o.format) {
    case Format::text:
      for (const auto& t : terms) {
        std::cout << t.coeff.to_string() << " * T(" << t.args[0] << "," << t.args[1] << "," << t.args[2] << ")\n";
      }
      break;
    case Format::json: {
      json j = json::array();
      for (const auto& t : terms) j.push_back({{"coeff", t.coeff.to_string()}, {"args", t.args}});
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "coeff,i,j,k\n";
      for (const auto& t : terms) {
        std::cout << t.coeff.to_string() << ',' << t.args[0] << ',' << t.args[1] << ',' << t.args[2] << '\n';
      }
      break;
  }
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), suite) == ids.end()) throw UsageError("verify: unknown suite '" + suite + "'");
  VerifySettings settings;
  settings.seed = o.seed;
  settings.tol = o.tol;
  if (o.cutoff) settings.summation.cutoff = *o.cutoff;
  if (o.tail_terms) settings.summation.tail_terms = *o.tail_terms;
  if (o.quad_order) settings.quad.gauss_order = *o.quad_order;
  if (o.max_depth) settings.quad.max_depth = *o.max_depth;
  const VerificationReport report = run_suite(suite, settings);
  switch (o.format) {
    case Format::text:
      std::cout << "settings " << report.settings.dump() << '\n' << to_text(report);
      break;
    case Format::json:
      std::cout << to_json(report).dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << to_csv(report);
      break;
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tornheim double zeta values: numeric evaluation, closed forms and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  double tol = 0.0;
  app.add_option("--tol", tol, "Target tolerance; for verify, replaces every case tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled verification points");
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  int quad_order = 0;
  int max_depth = 0;
  int cutoff = 0;
  int tail_terms = 0;
  app.add_option("--quad-order", quad_order, "Gauss-Legendre order per panel");
  app.add_option("--max-depth", max_depth, "Maximum bisection depth per panel");
  app.add_option("--cutoff", cutoff, "Initial summation cutoff");
  app.add_option("--tail-terms", tail_terms, "Euler-Maclaurin correction terms");

  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "Numeric T(s1, s2, s3); exact form too at integer arguments");
  eval->add_option("args", eval_args, "s1 s2 s3")->expected(3)->required();

  std::string zeta_s;
  double alpha = 1.0;
  bool deriv = false;
  auto* zeta = app.add_subcommand("zeta", "Hurwitz or Riemann zeta value");
  zeta->add_option("s", zeta_s)->required();
  auto* alpha_opt = zeta->add_option("--alpha", alpha, "Hurwitz parameter (default: Riemann zeta)");
  zeta->add_flag("--deriv", deriv, "First derivative in s");

  int bern_n = 0;
  bool bern_poly = false;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n or polynomial B_n(x)");
  bern->add_option("n", bern_n)->required();
  bern->add_flag("--poly", bern_poly, "Print the polynomial");

  std::string integrand;
  auto* integral = app.add_subcommand("integral", "Numeric int_0^1 of a product, e.g. \"z(0)*z(0)*dz(0)\" or z(-1,refl)");
  integral->add_option("spec", integrand)->required();

  std::vector<std::string> cf_args;
  auto* cf = app.add_subcommand("closed-form", "Exact value: diag-even n | diag-odd n | dzeta n1 n2 | combo n1 n2 n3");
  cf->add_option("args", cf_args)->required()->expected(2, 4);

  std::vector<int> reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Coefficients of T(a,b,c) in terms of T(i,0,N-i)");
  reduce->add_option("args", reduce_args, "a b c")->expected(3)->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run identity checks and print a report");
  verify->add_option("--suite", suite, "Suite id or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (tol > 0.0) o.tol = tol;
  o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (app.count("--quad-order")) o.quad_order = quad_order;
  if (app.count("--max-depth")) o.max_depth = max_depth;
  if (app.count("--cutoff")) o.cutoff = cutoff;
  if (app.count("--tail-terms")) o.tail_terms = tail_terms;

  try {
    if (*eval) return cmd_eval(o, eval_args);
    if (*zeta) return cmd_zeta(o, zeta_s, alpha_opt->count() ? std::optional<double>(alpha) : std::nullopt, deriv);
    if (*bern) return cmd_bernoulli(o, bern_n, bern_poly);
    if (*integral) return cmd_integral(o, integrand);
    if (*cf) return cmd_closed_form(o, cf_args);
    if (*reduce) return cmd_reduce(o, reduce_args[0], reduce_args[1], reduce_args[2]);
    if (*verify) return cmd_verify(o, suite);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
