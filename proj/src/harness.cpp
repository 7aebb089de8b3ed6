#include "amt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace amt {

namespace {

nlohmann::json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json group_json(const GroupStructure& g) { return g.invariant_factors(); }

std::string group_csv(const GroupStructure& g) {
  std::string s;
  for (auto d : g.invariant_factors()) s += (s.empty() ? "" : "x") + std::to_string(d);
  return s;
}

nlohmann::json dedekind_json(const DedekindVerdict& v) {
  return {{"p", v.prime}, {"divides_index", v.divides_index}, {"t_bar", v.t_bar.to_string()}, {"gcd", v.gcd.to_string()}};
}

nlohmann::json certificate_json(const AbelianVerdict& v) {
  nlohmann::json c = {{"kind", to_string(v.certificate)}};
  switch (v.certificate) {
    case CertificateKind::nonnormality_witness:
      c["witness"] = *v.witness_prime;
      break;
    case CertificateKind::root_count:
    case CertificateKind::noncommuting_pair:
    case CertificateKind::automorphism_table: {
      nlohmann::json roots = nlohmann::json::array();
      for (const auto& r : v.roots) roots.push_back(r.to_string());
      c["roots"] = roots;
      if (v.noncommuting) c["pair"] = {v.noncommuting->first, v.noncommuting->second};
      if (v.group) c["group"] = group_json(*v.group);
      break;
    }
    case CertificateKind::none:
      c["detail"] = v.detail;
      break;
  }
  return c;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void SearchConfig::validate() const {
  if (n_values.empty()) throw std::domain_error("search: no values of n");
  for (auto n : n_values)
    if (n < 1) throw std::domain_error("search: n must be at least 1");
  if (coeff_bound < 1) throw std::domain_error("search: coefficient bound must be at least 1");
  if (oracle_degree_cap < 2) throw std::domain_error("search: oracle cap must be at least 2");
  if (witness_prime_budget < 0) throw std::domain_error("search: witness budget must be nonnegative");
  if (jobs < 1) throw std::domain_error("search: jobs must be at least 1");
}

const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::unconfirmed: return "unconfirmed";
  }
  return "?";
}

CaseReport verify_case(std::uint64_t n, const BigInt& a, const BigInt& b, const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Trinomial t(n, a, b);
  CaseReport rep;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.W = t.W();
  rep.classifier = classify(n, a, b);

  ZFactorOptions fo;
  fo.seed = config.seed;
  const IntPolynomial f = t.polynomial();
  rep.irreducible = is_irreducible_over_Q(f, fo);

  std::optional<bool> oracle_side;
  if (!rep.irreducible) {
    oracle_side = false;
  } else {
    OracleOptions oo;
    oo.degree_cap = config.oracle_degree_cap;
    oo.witness_budget = config.witness_prime_budget;
    oo.seed = config.seed;
    oo.factor_options = fo;
    rep.oracle_abelian = abelian_oracle(f, oo);

    MonogenicityOptions mo;
    mo.check_irreducible = false;
    mo.factor_options = fo;
    rep.oracle_monogenic = is_monogenic(t, mo);

    switch (rep.oracle_abelian->status) {
      case AbelianStatus::nonabelian: oracle_side = false; break;
      case AbelianStatus::abelian: oracle_side = rep.oracle_monogenic->monogenic; break;
      case AbelianStatus::unknown:
        // A non-monogenic trinomial is decided without the Galois group.
        if (!rep.oracle_monogenic->monogenic) oracle_side = false;
        else rep.note = rep.oracle_abelian->detail;
        break;
    }
  }

  if (oracle_side) rep.agreement = (*oracle_side == rep.classifier.member) ? Agreement::agree : Agreement::disagree;
  if (config.timings)
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SearchSummary run_search(const SearchConfig& config, const std::function<void(const CaseReport&)>& sink) {
  config.validate();
  std::vector<std::uint64_t> ns = config.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  const long B = static_cast<long>(config.coeff_bound);
  std::vector<std::tuple<std::uint64_t, long, long>> triples;
  for (auto n : ns)
    for (long a = -B; a <= B; ++a)
      for (long b = -B; b <= B; ++b)
        if (a != 0 && b != 0) triples.emplace_back(n, a, b);

  SearchSummary summary;
  const std::size_t block = std::max<std::size_t>(64, 16 * config.jobs);
  for (std::size_t lo = 0; lo < triples.size(); lo += block) {
    const std::size_t hi = std::min(triples.size(), lo + block);
    std::vector<CaseReport> reports(hi - lo);
    std::vector<std::exception_ptr> errors(hi - lo);
    std::atomic<std::size_t> next{lo};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < hi;) {
        const auto& [n, a, b] = triples[i];
        try {
          reports[i - lo] = verify_case(n, BigInt(a), BigInt(b), config);
        } catch (...) {
          errors[i - lo] = std::current_exception();
        }
      }
    };
    const unsigned workers = std::min<unsigned>(config.jobs, static_cast<unsigned>(hi - lo));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      switch (reports[i].agreement) {
        case Agreement::agree: ++summary.agree; break;
        case Agreement::disagree: ++summary.disagree; break;
        case Agreement::unconfirmed: ++summary.unconfirmed; break;
      }
      sink(reports[i]);
    }
  }
  return summary;
}

nlohmann::json to_json(const CaseReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["a"] = big(r.a);
  j["b"] = big(r.b);
  j["W"] = big(r.W);
  j["irreducible"] = r.irreducible;

  const Classification& c = r.classifier;
  j["classifier"] = {{"verdict", c.member ? "member" : "rejected"},
                     {"item", c.member ? nlohmann::json(c.item) : nlohmann::json(nullptr)},
                     {"group", c.member ? group_json(c.group) : nlohmann::json::array()},
                     {"reason", c.member ? nlohmann::json(nullptr) : nlohmann::json(to_string(c.reason))},
                     {"detail", c.detail}};

  nlohmann::json o = {{"abelian", nullptr}, {"certificate", nullptr}, {"monogenic", nullptr}};
  if (r.oracle_abelian) {
    o["abelian"] = to_string(r.oracle_abelian->status);
    o["certificate"] = certificate_json(*r.oracle_abelian);
  }
  if (r.oracle_monogenic) {
    o["monogenic"] = r.oracle_monogenic->monogenic;
    nlohmann::json d = nlohmann::json::array();
    for (const auto& v : r.oracle_monogenic->certificate) d.push_back(dedekind_json(v));
    o["dedekind"] = d;
  }
  j["oracle"] = o;
  j["agreement"] = to_string(r.agreement);
  j["ms"] = r.ms ? nlohmann::json(*r.ms) : nlohmann::json(nullptr);
  return j;
}

std::string csv_header() {
  return "n,a,b,W,irreducible,verdict,item,group,reason,oracle_abelian,oracle_monogenic,agreement,ms";
}

std::string to_csv(const CaseReport& r) {
  std::ostringstream os;
  const Classification& c = r.classifier;
  os << r.n << ',' << r.a.get_str() << ',' << r.b.get_str() << ',' << r.W.get_str() << ','
     << (r.irreducible ? "true" : "false") << ',' << (c.member ? "member" : "rejected") << ','
     << (c.member ? std::to_string(c.item) : "") << ',' << (c.member ? group_csv(c.group) : "") << ','
     << (c.member ? "" : csv_escape(to_string(c.reason))) << ','
     << (r.oracle_abelian ? to_string(r.oracle_abelian->status) : "") << ','
     << (r.oracle_monogenic ? (r.oracle_monogenic->monogenic ? "true" : "false") : "") << ','
     << to_string(r.agreement) << ',';
  if (r.ms) os << *r.ms;
  return os.str();
}

void write_report(std::ostream& out, const CaseReport& r, ReportFormat format) {
  if (format == ReportFormat::json_lines)
    out << to_json(r).dump() << '\n';
  else
    out << to_csv(r) << '\n';
}

}  // namespace amt
