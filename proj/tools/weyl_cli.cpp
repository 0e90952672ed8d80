// Command-line surface for the Weyl-algebra library: normal forms,
// commutators, derivatives, Hamiltonian structure, Noether symmetries,
// matrix evaluation, and the named verification suites.
//
// Exit codes: 0 success / property true, 1 property false, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weyl/weyl.hpp"

namespace {

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

// '-' designates stdin (read once and cached).
std::string resolve_text(const std::string& arg) {
  static std::optional<std::string> stdin_cache;
  if (arg != "-") return arg;
  if (!stdin_cache) stdin_cache = read_stdin();
  return *stdin_cache;
}

weyl::FreePoly parse_arg(const std::string& arg, int dof) {
  return weyl::parse_expression(resolve_text(arg), dof);
}

weyl::ScalarField parse_scalar(const std::string& arg, int dof) {
  return weyl::normal_form(parse_arg(arg, dof));
}

std::vector<weyl::WeylElement> parse_components(const std::vector<std::string>& args,
                                                std::size_t offset, int dof) {
  std::vector<weyl::WeylElement> comps;
  for (std::size_t n = 0; n < 2 * static_cast<std::size_t>(dof); ++n)
    comps.push_back(parse_scalar(args.at(offset + n), dof));
  return comps;
}

weyl::Json components_json(std::span<const weyl::WeylElement> comps) {
  weyl::Json arr = weyl::Json::array();
  for (const weyl::WeylElement& c : comps) arr.push_back(weyl::to_json(c));
  return arr;
}

struct Output {
  bool json = false;

  void element(const weyl::WeylElement& x) const {
    if (json)
      std::cout << weyl::Json{{"result", weyl::to_json(x)}}.dump() << "\n";
    else
      std::cout << weyl::print_canonical(x) << "\n";
  }
  void free_poly(const weyl::FreePoly& p) const {
    if (json)
      std::cout << weyl::Json{{"result", weyl::to_json(p)}}.dump() << "\n";
    else
      std::cout << weyl::print_canonical(p) << "\n";
  }
  void components(std::span<const weyl::WeylElement> comps) const {
    if (json)
      std::cout << weyl::Json{{"components", components_json(comps)}}.dump() << "\n";
    else
      std::cout << weyl::print_components(comps) << "\n";
  }
  void components(const weyl::VectorField& field) const { components(field.components()); }
};

int run(int argc, char** argv) {
  CLI::App app{"Exact computation in the Weyl algebra of canonical pairs"};
  app.require_subcommand(1);

  int dof = 1;
  std::string format = "text";
  std::uint64_t seed = 0;
  int order = 2;
  int attempts = 20;
  int max_bound = -1;
  std::string matrices_path;
  bool seed_given = false, max_given = false, cases_given = false, attempts_given = false;
  int cases = 0;

  const auto add_common = [&](CLI::App* sub, bool wants_dof = true) {
    if (wants_dof) sub->add_option("--dof", dof, "degrees of freedom (default 1)");
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::vector<std::string> exprs;
  const auto add_exprs = [&](CLI::App* sub, int count, const char* name) {
    sub->add_option(name, exprs, "expression(s); '-' reads stdin")
        ->required()
        ->expected(count);
  };
  const auto add_exprs_variadic = [&](CLI::App* sub, const char* name) {
    sub->add_option(name, exprs, "expressions; '-' reads stdin")->required()->expected(-1);
  };

  CLI::App* normalize = app.add_subcommand("normalize", "normal form of an expression");
  add_common(normalize);
  add_exprs(normalize, 1, "expr");

  CLI::App* eq = app.add_subcommand("eq", "equality in the quotient algebra");
  add_common(eq);
  add_exprs(eq, 2, "exprs");

  CLI::App* comm = app.add_subcommand("commutator", "[a, b] in the quotient algebra");
  add_common(comm);
  add_exprs(comm, 2, "exprs");

  CLI::App* deriv = app.add_subcommand(
      "derivative", "free directional derivative: expr then 2f direction expressions");
  add_common(deriv);
  add_exprs_variadic(deriv, "exprs");

  CLI::App* gradc = app.add_subcommand("grad", "quotient partials (dH/dQ_k, dH/dP_k)");
  add_common(gradc);
  add_exprs(gradc, 1, "expr");

  CLI::App* theta = app.add_subcommand("theta", "the Hamiltonian field Theta[dH]");
  add_common(theta);
  add_exprs(theta, 1, "expr");

  CLI::App* heis = app.add_subcommand("heisenberg", "Heisenberg generator of H");
  add_common(heis);
  add_exprs(heis, 1, "expr");

  CLI::App* poisson = app.add_subcommand("poisson", "Poisson-like bracket dH[Theta dF] of (F, H)");
  add_common(poisson);
  add_exprs(poisson, 2, "exprs");

  CLI::App* isvf = app.add_subcommand("is-vector-field",
                                      "membership of 2f components in the vector fields");
  add_common(isvf);
  add_exprs_variadic(isvf, "components");

  CLI::App* liebr = app.add_subcommand("lie-bracket",
                                       "bracket of two vector fields (2f + 2f components)");
  add_common(liebr);
  add_exprs_variadic(liebr, "components");

  CLI::App* conserved = app.add_subcommand("conserved",
                                           "is I conserved along the Heisenberg flow of H");
  add_common(conserved);
  add_exprs(conserved, 2, "exprs");

  CLI::App* noether = app.add_subcommand("noether",
                                         "symmetry Theta[dI] from a conserved quantity: H I");
  add_common(noether);
  add_exprs(noether, 2, "exprs");

  CLI::App* noeth_check = app.add_subcommand("noetherian-check",
                                             "both sides of the Noetherian identity for (F, H)");
  add_common(noeth_check);
  add_exprs(noeth_check, 2, "exprs");

  CLI::App* flow = app.add_subcommand("flow-taylor", "formal Taylor flow of H");
  add_common(flow);
  flow->add_option("--order", order, "truncation order (default 2)");
  add_exprs(flow, 1, "expr");

  CLI::App* evalm = app.add_subcommand("eval-matrix", "evaluate at a matrix assignment");
  add_common(evalm);
  evalm->add_option("--matrices", matrices_path, "assignment JSON file ('-' for stdin)")
      ->required();
  add_exprs(evalm, 1, "expr");

  CLI::App* sep = app.add_subcommand("separate", "search a matrix witness distinguishing p, q");
  add_common(sep);
  sep->add_option("--seed", seed, "random seed");
  sep->add_option("--attempts", attempts, "attempt budget (default 20)");
  add_exprs(sep, 2, "exprs");

  CLI::App* hall = app.add_subcommand("hall-demo",
                                      "Hall identity on 2x2 matrices and its 3x3 failure");
  add_common(hall, false);
  hall->add_option("--seed", seed, "random seed");
  hall->add_option("--attempts", attempts, "3x3 witness attempts");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--max", max_bound, "sweep bound / degree bound / order");
  verify->add_option("--cases", cases, "number of random cases");
  verify->add_option("--attempts", attempts, "attempt budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  seed_given = sep->count("--seed") || hall->count("--seed") || verify->count("--seed");
  max_given = verify->count("--max");
  cases_given = verify->count("--cases");
  attempts_given = verify->count("--attempts");

  const Output out{format == "json"};

  if (normalize->parsed()) {
    out.element(parse_scalar(exprs[0], dof));
    return 0;
  }
  if (eq->parsed()) {
    const bool equal = parse_scalar(exprs[0], dof) == parse_scalar(exprs[1], dof);
    if (out.json)
      std::cout << weyl::Json{{"equal", equal}}.dump() << "\n";
    else
      std::cout << (equal ? "true" : "false") << "\n";
    return equal ? 0 : 1;
  }
  if (comm->parsed()) {
    out.element(weyl::commutator(parse_scalar(exprs[0], dof), parse_scalar(exprs[1], dof)));
    return 0;
  }
  if (deriv->parsed()) {
    if (exprs.size() != 1 + 2 * static_cast<std::size_t>(dof))
      throw CLI::ValidationError("derivative needs the expression plus 2*dof directions");
    const weyl::FreePoly p = parse_arg(exprs[0], dof);
    std::vector<weyl::FreePoly> dirs;
    for (int n = 0; n < 2 * dof; ++n) dirs.push_back(parse_arg(exprs[1 + n], dof));
    out.free_poly(weyl::derivative(p, dirs));
    return 0;
  }
  if (gradc->parsed()) {
    out.components(weyl::grad_components(parse_scalar(exprs[0], dof)));
    return 0;
  }
  if (theta->parsed()) {
    out.components(weyl::theta_apply(weyl::grad(parse_scalar(exprs[0], dof))));
    return 0;
  }
  if (heis->parsed()) {
    out.components(weyl::heisenberg_generator(parse_scalar(exprs[0], dof)));
    return 0;
  }
  if (poisson->parsed()) {
    out.element(weyl::poisson_bracket(parse_scalar(exprs[0], dof), parse_scalar(exprs[1], dof)));
    return 0;
  }
  if (isvf->parsed()) {
    if (exprs.size() != 2 * static_cast<std::size_t>(dof))
      throw CLI::ValidationError("is-vector-field needs exactly 2*dof components");
    const auto comps = parse_components(exprs, 0, dof);
    const weyl::MembershipReport report = weyl::check_vector_field(comps);
    if (out.json) {
      weyl::Json violations = weyl::Json::array();
      for (const auto& v : report.violations)
        violations.push_back({{"relation", weyl::to_string(v.relation)},
                              {"k", v.k},
                              {"l", v.l},
                              {"residual", weyl::to_json(v.residual)}});
      std::cout << weyl::Json{{"ok", report.ok()}, {"violations", violations}}.dump() << "\n";
    } else {
      std::cout << (report.ok() ? "true" : "false") << "\n";
      for (const auto& v : report.violations)
        std::cout << weyl::to_string(v.relation) << " k=" << v.k << " l=" << v.l
                  << " residual: " << weyl::print_canonical(v.residual) << "\n";
    }
    return report.ok() ? 0 : 1;
  }
  if (liebr->parsed()) {
    if (exprs.size() != 4 * static_cast<std::size_t>(dof))
      throw CLI::ValidationError("lie-bracket needs 2*dof components for each field");
    const weyl::VectorField K(parse_components(exprs, 0, dof));
    const weyl::VectorField G(parse_components(exprs, 2 * static_cast<std::size_t>(dof), dof));
    out.components(weyl::lie_bracket(K, G));
    return 0;
  }
  if (conserved->parsed()) {
    const weyl::ScalarField I = parse_scalar(exprs[0], dof);
    const weyl::VectorField K = weyl::heisenberg_generator(parse_scalar(exprs[1], dof));
    const weyl::ScalarField residual = weyl::lie_derivative(K, I);
    const bool ok = residual.is_zero();
    if (out.json)
      std::cout << weyl::Json{{"conserved", ok}, {"residual", weyl::to_json(residual)}}.dump()
                << "\n";
    else if (ok)
      std::cout << "true\n";
    else
      std::cout << "false\nresidual: " << weyl::print_canonical(residual) << "\n";
    return ok ? 0 : 1;
  }
  if (noether->parsed()) {
    const weyl::ScalarField H = parse_scalar(exprs[0], dof);
    const weyl::ScalarField I = parse_scalar(exprs[1], dof);
    try {
      const weyl::VectorField G = weyl::noether_symmetry(H, I);
      out.components(G.components());
      return 0;
    } catch (const weyl::NotConserved& e) {
      if (out.json)
        std::cout << weyl::Json{{"conserved", false}, {"residual", weyl::to_json(e.residual)}}
                         .dump()
                  << "\n";
      else
        std::cout << "not conserved, residual: " << weyl::print_canonical(e.residual) << "\n";
      return 1;
    }
  }
  if (noeth_check->parsed()) {
    const auto result = weyl::noetherian_identity_check(parse_scalar(exprs[0], dof),
                                                        parse_scalar(exprs[1], dof));
    if (out.json)
      std::cout << weyl::Json{{"equal", result.equal},
                              {"lhs", components_json(result.lhs)},
                              {"rhs", components_json(result.rhs)},
                              {"residual", components_json(result.residual)}}
                       .dump()
                << "\n";
    else {
      std::cout << (result.equal ? "true" : "false") << "\n";
      std::cout << "lhs: " << weyl::print_components(result.lhs) << "\n";
      std::cout << "rhs: " << weyl::print_components(result.rhs) << "\n";
    }
    return result.equal ? 0 : 1;
  }
  if (flow->parsed()) {
    const weyl::FlowSeries series = weyl::flow_taylor(parse_scalar(exprs[0], dof), order);
    if (out.json) {
      weyl::Json coeffs = weyl::Json::array();
      for (const auto& c : series.coeffs) coeffs.push_back(components_json(c));
      std::cout << weyl::Json{{"order", series.order()}, {"coefficients", coeffs}}.dump()
                << "\n";
    } else {
      for (int j = 1; j <= series.order(); ++j)
        std::cout << "c" << j << " = "
                  << weyl::print_components(series.coeffs[static_cast<std::size_t>(j) - 1])
                  << "\n";
    }
    return 0;
  }
  if (evalm->parsed()) {
    weyl::Json aj;
    if (matrices_path == "-")
      aj = weyl::Json::parse(read_stdin());
    else {
      std::ifstream in(matrices_path);
      if (!in) throw CLI::ValidationError("cannot open " + matrices_path);
      aj = weyl::Json::parse(in);
    }
    const weyl::Assignment a = weyl::assignment_from_json(aj);
    const weyl::ExactMatrix m = weyl::eval_free(parse_arg(exprs[0], dof), a);
    if (out.json)
      std::cout << weyl::Json{{"result", weyl::to_json(m)}}.dump() << "\n";
    else {
      for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
          const weyl::GaussianRational& e = m.at(i, j);
          if (j) std::cout << " ";
          std::cout << weyl::to_string(e.re);
          if (e.im != 0) std::cout << (e.im > 0 ? "+" : "") << weyl::to_string(e.im) << "i";
        }
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (sep->parsed()) {
    const weyl::FreePoly p = parse_arg(exprs[0], dof), q = parse_arg(exprs[1], dof);
    const auto witness = weyl::separate(p, q, seed, attempts);
    if (out.json) {
      weyl::Json j{{"found", witness.has_value()},
                   {"dim", weyl::separation_dimension(p, q)}};
      if (witness) j["witness"] = weyl::to_json(*witness);
      std::cout << j.dump() << "\n";
    } else if (witness) {
      std::cout << "separated at dimension " << witness->dim << "\n"
                << weyl::to_json(*witness).dump() << "\n";
    } else {
      std::cout << "no witness found\n";
    }
    return witness ? 0 : 1;
  }
  if (hall->parsed()) {
    const auto [left, right] = weyl::hall_identity_pair();
    const weyl::VerifyResult r = weyl::verify_hall(seed_given ? seed : 106, 100, attempts);
    if (out.json)
      std::cout << weyl::Json{{"left", weyl::print_canonical(left)},
                              {"right", weyl::print_canonical(right)},
                              {"pass", r.pass},
                              {"detail", r.detail}}
                       .dump()
                << "\n";
    else
      std::cout << "left  = " << weyl::print_canonical(left) << "\n"
                << "right = " << weyl::print_canonical(right) << "\n"
                << (r.pass ? "PASS " : "FAIL ") << r.detail << "\n";
    return r.pass ? 0 : 1;
  }
  if (verify->parsed()) {
    weyl::VerifyRequest request{suite, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (seed_given) request.seed = seed;
    if (max_given) request.max = max_bound;
    if (cases_given) request.cases = cases;
    if (attempts_given) request.attempts = attempts;
    const auto results = weyl::run_verify(request);
    bool all_pass = true;
    weyl::Json suites = weyl::Json::array();
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      if (out.json)
        suites.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      else
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
    }
    if (out.json) std::cout << weyl::Json{{"suites", suites}}.dump() << "\n";
    return all_pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const weyl::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const weyl::NotAVectorField& e) {
    std::cerr << e.what() << "\n";
    for (const auto& v : e.report.violations)
      std::cerr << weyl::to_string(v.relation) << " k=" << v.k << " l=" << v.l
                << " residual: " << weyl::print_canonical(v.residual) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
