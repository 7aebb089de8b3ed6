// amt: command-line front end for the trinomial classifier and its oracles.
// Polynomials are given as ascending coefficient lists, either as separate
// arguments or comma separated ("2,0,4,0,1" is x^4 + 4x^2 + 2).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "amt/classifier.hpp"
#include "amt/galois.hpp"
#include "amt/harness.hpp"
#include "amt/monogenicity.hpp"
#include "amt/zfactor.hpp"

using namespace amt;
using nlohmann::json;

namespace {

BigInt parse_int(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

IntPolynomial parse_poly(const std::vector<std::string>& args) {
  std::vector<BigInt> c;
  for (const auto& arg : args) {
    std::stringstream ss(arg);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) c.push_back(parse_int(tok));
  }
  IntPolynomial f(std::move(c));
  if (f.is_zero()) throw std::invalid_argument("polynomial is zero");
  return f;
}

json group_json(const GroupStructure& g) { return g.invariant_factors(); }

json classification_json(std::uint64_t n, const BigInt& a, const BigInt& b, const Classification& c) {
  json j = {{"n", n}, {"a", a.get_str()}, {"b", b.get_str()}, {"verdict", c.member ? "member" : "rejected"}};
  if (c.member) {
    j["item"] = c.item;
    j["group"] = group_json(c.group);
    j["r"] = c.r;
    j["s"] = c.s;
  } else {
    j["reason"] = to_string(c.reason);
  }
  j["detail"] = c.detail;
  return j;
}

json dedekind_json(const DedekindVerdict& v) {
  json factors = json::array();
  for (const auto& mf : v.reduction.factors) factors.push_back({{"factor", mf.factor.to_string()}, {"e", mf.multiplicity}});
  return {{"p", v.prime},
          {"divides_index", v.divides_index},
          {"reduction", factors},
          {"t_bar", v.t_bar.to_string()},
          {"gcd", v.gcd.to_string()}};
}

json verdict_json(const AbelianVerdict& v) {
  json j = {{"status", to_string(v.status)}, {"certificate", to_string(v.certificate)}, {"detail", v.detail}};
  if (v.witness_prime) j["witness"] = *v.witness_prime;
  if (!v.roots.empty()) {
    json roots = json::array();
    for (const auto& r : v.roots) roots.push_back(r.to_string());
    j["roots"] = roots;
  }
  if (v.noncommuting) j["pair"] = {v.noncommuting->first, v.noncommuting->second};
  if (v.group) j["group"] = group_json(*v.group);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian monogenic trinomials x^(2n) + a x^n + b"};
  app.require_subcommand(1);

  std::uint64_t n = 1;
  std::string a_str, b_str;
  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("n", n, "exponent n >= 1")->required();
    sub->add_option("a", a_str, "middle coefficient")->required();
    sub->add_option("b", b_str, "constant coefficient")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify (n, a, b) by the family criteria");
  add_triple(classify_cmd);

  SearchConfig config;
  auto* verify_cmd = app.add_subcommand("verify", "check one triple against the oracles");
  add_triple(verify_cmd);
  verify_cmd->add_option("--oracle-cap", config.oracle_degree_cap, "largest degree split exactly")->capture_default_str();
  verify_cmd->add_option("--witness-budget", config.witness_prime_budget, "good primes scanned for a witness")
      ->capture_default_str();
  verify_cmd->add_option("--seed", config.seed)->capture_default_str();

  auto* search_cmd = app.add_subcommand("search", "scan a range of triples and compare classifier and oracles");
  std::vector<std::uint64_t> n_list;
  std::uint64_t n_max = 0;
  std::string out_path, format = "json-lines";
  auto* n_opt = search_cmd->add_option("--n", n_list, "values of n (repeatable or comma separated)")->delimiter(',');
  auto* nmax_opt = search_cmd->add_option("--n-max", n_max, "scan n = 1..N");
  n_opt->excludes(nmax_opt);
  search_cmd->add_option("--coeff-bound", config.coeff_bound, "scan 0 < |a|,|b| <= B")->capture_default_str();
  search_cmd->add_option("--oracle-cap", config.oracle_degree_cap)->capture_default_str();
  search_cmd->add_option("--witness-budget", config.witness_prime_budget)->capture_default_str();
  search_cmd->add_option("--seed", config.seed)->capture_default_str();
  search_cmd->add_option("--jobs", config.jobs)->capture_default_str();
  search_cmd->add_option("--out", out_path, "report file (default stdout)");
  search_cmd->add_option("--format", format)->check(CLI::IsMember({"json-lines", "csv"}))->capture_default_str();
  search_cmd->add_flag("--timings", config.timings, "record per-case milliseconds (reports stop being replayable)");

  auto* disc_cmd = app.add_subcommand("discriminant", "discriminant of x^(2n) + a x^n + b");
  add_triple(disc_cmd);

  std::vector<std::string> poly_args;
  auto* mono_cmd = app.add_subcommand("monogenic", "index test for a monic irreducible polynomial");
  mono_cmd->add_option("coeffs", poly_args, "ascending coefficients")->required();
  auto* galois_cmd = app.add_subcommand("galois", "abelian Galois group test");
  galois_cmd->add_option("coeffs", poly_args, "ascending coefficients")->required();
  OracleOptions oracle;
  galois_cmd->add_option("--oracle-cap", oracle.degree_cap)->capture_default_str();
  galois_cmd->add_option("--witness-budget", oracle.witness_budget)->capture_default_str();
  galois_cmd->add_option("--seed", oracle.seed)->capture_default_str();

  std::uint64_t cyclo_index = 1;
  auto* cyclo_cmd = app.add_subcommand("cyclotomic", "cyclotomic polynomial Phi_N");
  cyclo_cmd->add_option("N", cyclo_index)->required()->check(CLI::PositiveNumber);

  auto* factor_cmd = app.add_subcommand("factor", "factor an integer polynomial");
  factor_cmd->add_option("coeffs", poly_args, "ascending coefficients")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) {
      const BigInt a = parse_int(a_str), b = parse_int(b_str);
      std::cout << classification_json(n, a, b, classify(n, a, b)).dump() << '\n';
    } else if (verify_cmd->parsed()) {
      const CaseReport rep = verify_case(n, parse_int(a_str), parse_int(b_str), config);
      std::cout << to_json(rep).dump() << '\n';
      return rep.agreement == Agreement::disagree ? 1 : 0;
    } else if (search_cmd->parsed()) {
      if (nmax_opt->count()) {
        for (std::uint64_t i = 1; i <= n_max; ++i) config.n_values.push_back(i);
      } else {
        config.n_values = n_list;
      }
      config.format = format == "csv" ? ReportFormat::csv : ReportFormat::json_lines;
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      if (config.format == ReportFormat::csv) out << csv_header() << '\n';
      const SearchSummary s = run_search(config, [&](const CaseReport& r) { write_report(out, r, config.format); });
      out.flush();
      if (!out) throw std::runtime_error("write failed");
      std::cerr << "cases " << s.total() << ": agree " << s.agree << ", disagree " << s.disagree << ", unconfirmed "
                << s.unconfirmed << '\n';
      return s.disagree ? 1 : 0;
    } else if (disc_cmd->parsed()) {
      const Trinomial t(n, parse_int(a_str), parse_int(b_str));
      const DiscriminantReport rep = trinomial_discriminant(t);
      json j = {{"value", rep.value.get_str()}, {"computed_by", to_string(rep.computed_by)}};
      j["factored"] = rep.magnitude_factored ? json(rep.magnitude_factored->to_string()) : json(nullptr);
      std::cout << j.dump() << '\n';
    } else if (mono_cmd->parsed()) {
      const MonogenicityResult res = is_monogenic(parse_poly(poly_args));
      json cert = json::array();
      for (const auto& v : res.certificate) cert.push_back(dedekind_json(v));
      std::cout << json{{"monogenic", res.monogenic}, {"certificate", cert}}.dump() << '\n';
    } else if (galois_cmd->parsed()) {
      std::cout << verdict_json(abelian_oracle(parse_poly(poly_args), oracle)).dump() << '\n';
    } else if (cyclo_cmd->parsed()) {
      std::cout << cyclotomic(cyclo_index).to_string() << '\n';
    } else if (factor_cmd->parsed()) {
      const IntFactorization fac = factor_over_Z(parse_poly(poly_args));
      json factors = json::array();
      for (const auto& f : fac.factors) factors.push_back({{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}});
      std::cout << json{{"content", fac.content.get_str()}, {"factors", factors}}.dump() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "amt: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
