// specht: command line front end for the Specht ideal library.
// Exit codes: 0 ok, 1 usage error, 2 theorem violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "specht/errors.hpp"
#include "specht/fan.hpp"
#include "specht/oracle.hpp"
#include "specht/polytope.hpp"
#include "specht/specht_ideal.hpp"
#include "specht/verify.hpp"

using namespace specht;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct Args {
  std::string lambda;
  std::string sigma;
  int n_max = 0;
  std::uint64_t seed = 20210101;
  std::string format;
  std::string output;
  std::vector<std::string> skip;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_or(const Args& a, const char* fallback) { return a.format.empty() ? fallback : a.format; }

void emit(const Args& a, const std::string& text) {
  if (a.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(a.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + a.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump() + "\n"; }

Partition need_lambda(const Args& a) {
  if (a.lambda.empty()) throw UsageError("--lambda is required");
  return Partition::parse(a.lambda);
}

VariableOrder need_sigma(const Args& a, int n) {
  if (a.sigma.empty()) throw UsageError("--sigma is required");
  auto s = VariableOrder::parse(a.sigma);
  if (s.size() != n)
    throw UsageError("sigma has length " + std::to_string(s.size()) + " but lambda is a partition of " +
                     std::to_string(n));
  return s;
}

std::string join_monomials(const MonomialIdeal& I) {
  std::string s;
  for (const auto& m : I.generators()) s += (s.empty() ? "" : " ") + m.to_string();
  return s;
}

// count -----------------------------------------------------------------

struct CountRow {
  Partition lambda;
  int k;
  Integer theorem;
  std::optional<std::size_t> brute;
  bool agree() const { return !brute || Integer(static_cast<unsigned long>(*brute)) == theorem; }
};

CountRow count_one(const Partition& lambda, unsigned jobs) {
  CountRow r{lambda, min_gap_k(lambda), theorem_count(lambda), std::nullopt};
  try {
    r.brute = enumerate_fan(lambda, {FanOptions{}.max_n, jobs}).distinct_count();
  } catch (const CapacityError& e) {
    std::cerr << "warning: " << e.what() << "; brute-force count skipped\n";
  }
  return r;
}

int cmd_count(const Args& a) {
  std::vector<Partition> todo;
  if (!a.lambda.empty()) {
    todo.push_back(need_lambda(a));
    if (todo.back().length() < 2) throw UsageError("lambda needs at least two positive parts");
  } else if (a.n_max >= 2) {
    for (int n = 2; n <= a.n_max; ++n)
      for (auto& p : nontrivial_partitions(n)) todo.push_back(p);
  } else {
    throw UsageError("count needs --lambda or --n-max >= 2");
  }

  std::vector<CountRow> rows;
  bool ok = true;
  for (const auto& p : todo) {
    rows.push_back(count_one(p, a.jobs));
    ok = ok && rows.back().agree();
  }

  if (format_or(a, "csv") == "csv") {
    std::ostringstream out;
    out << "n,lambda,k,theorem_count,brute_force_count,agree\n";
    for (const auto& r : rows)
      out << r.lambda.n() << ',' << csv_field(r.lambda.to_string()) << ',' << r.k << ',' << r.theorem.get_str() << ','
          << (r.brute ? std::to_string(*r.brute) : "") << ',' << (r.brute ? (r.agree() ? "true" : "false") : "")
          << '\n';
    emit(a, out.str());
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.lambda.n()},
                     {"lambda", r.lambda.to_string()},
                     {"k", r.k},
                     {"theorem_count", r.theorem.get_str()},
                     {"brute_force_count", r.brute ? nlohmann::json(*r.brute) : nlohmann::json(nullptr)},
                     {"agree", r.brute ? nlohmann::json(r.agree()) : nlohmann::json(nullptr)}});
    emit(a, dump(arr));
  }
  return ok ? kOk : kViolation;
}

// initial-ideal ---------------------------------------------------------

int cmd_initial_ideal(const Args& a) {
  const auto lambda = need_lambda(a);
  const auto sigma = need_sigma(a, lambda.n());
  const auto I = initial_ideal(lambda, sigma);
  if (format_or(a, "json") == "json") {
    emit(a, I.to_json().dump() + "\n");
  } else {
    std::ostringstream out;
    out << "index,monomial,exponents\n";
    int i = 0;
    for (const auto& m : I.generators()) {
      std::string exps;
      for (int e : m.exponents()) exps += (exps.empty() ? "" : " ") + std::to_string(e);
      out << i++ << ',' << m.to_string() << ',' << exps << '\n';
    }
    emit(a, out.str());
  }
  return kOk;
}

// fan -------------------------------------------------------------------

int cmd_fan(const Args& a) {
  const auto lambda = need_lambda(a);
  if (lambda.length() < 2) throw UsageError("lambda needs at least two positive parts");
  FanSummary fan;
  try {
    fan = enumerate_fan(lambda, {FanOptions{}.max_n, a.jobs});
  } catch (const CapacityError& e) {
    throw UsageError(e.what());
  }
  const bool agree = Integer(static_cast<unsigned long>(fan.distinct_count())) == theorem_count(lambda);
  if (format_or(a, "json") == "json") {
    auto j = fan.to_json();
    j["theorem_count"] = theorem_count(lambda).get_str();
    j["agree"] = agree;
    emit(a, dump(j));
  } else {
    std::ostringstream out;
    out << "representative,size,min_gens\n";
    for (const auto& [I, orders] : fan.classes)
      out << csv_field(orders.front().to_string()) << ',' << orders.size() << ',' << csv_field(join_monomials(I))
          << '\n';
    emit(a, out.str());
  }
  if (!agree) std::cerr << "theorem violation: " << fan.distinct_count() << " classes, expected "
                        << theorem_count(lambda).get_str() << "\n";
  return agree ? kOk : kViolation;
}

// polytope --------------------------------------------------------------

int cmd_polytope(const Args& a) {
  const auto lambda = need_lambda(a);
  if (lambda.length() < 2) throw UsageError("lambda needs at least two positive parts");
  const int n = lambda.n(), k = min_gap_k(lambda);
  const auto vertices = pnk_vertices(n, k);
  std::map<Point, MonomialIdeal> ideals;
  if (n <= FanOptions{}.max_n) {
    ideals = vertex_ideal_bijection(lambda, {FanOptions{}.max_n, a.jobs});
  } else {
    std::cerr << "warning: n = " << n << " is past the fan limit; vertex/ideal bijection not checked\n";
  }
  if (format_or(a, "json") == "json") {
    emit(a, dump(vertices.to_json(k)));
  } else {
    std::ostringstream out;
    out << "vertex,cone_order,min_gens\n";
    for (const auto& v : vertices.points()) {
      std::string coords;
      for (int c : v) coords += (coords.empty() ? "" : " ") + std::to_string(c);
      auto it = ideals.find(v);
      out << csv_field(coords) << ',' << csv_field(order_of_vertex(v, k).to_string()) << ','
          << csv_field(it == ideals.end() ? "" : join_monomials(it->second)) << '\n';
    }
    emit(a, out.str());
  }
  return kOk;
}

// oracle ----------------------------------------------------------------

int cmd_oracle(const Args& a) {
  const auto lambda = need_lambda(a);
  if (lambda.length() < 2) throw UsageError("lambda needs at least two positive parts");
  const int n = lambda.n();
  const auto sigma = a.sigma.empty() ? VariableOrder::identity(n) : need_sigma(a, n);
  if (n > oracle::OracleOptions{}.max_n)
    throw UsageError("the Buchberger oracle is limited to n <= " + std::to_string(oracle::OracleOptions{}.max_n));

  auto polys = [](const SpechtSystem& s) {
    std::vector<Polynomial> out;
    for (const auto& g : s.generators) out.push_back(g.polynomial);
    return out;
  };
  const auto lex = oracle::certify_groebner(oracle::MarkedBasis(polys(lex_groebner_generators(lambda, sigma)), sigma));
  const auto uni =
      oracle::certify_groebner(oracle::MarkedBasis(polys(universal_groebner_generators(lambda, sigma)), sigma));
  const auto elim = oracle::elimination_polynomial_check(lambda, sigma);

  std::vector<nlohmann::json> reports{oracle::certificate_json("groebner_lex", lambda, sigma, lex),
                                      oracle::certificate_json("groebner_universal", lambda, sigma, uni),
                                      oracle::elimination_json(lambda, sigma, elim)};
  if (format_or(a, "json") == "json") {
    emit(a, dump(reports));
  } else {
    std::ostringstream out;
    out << "check,lambda,sigma,pairs_total,pairs_skipped_coprime,pairs_reduced,failures\n";
    for (const auto& r : reports)
      out << r["check"].get<std::string>() << ',' << csv_field(r["lambda"].get<std::string>()) << ','
          << csv_field(r["sigma"].get<std::string>()) << ',' << r["pairs_total"] << ',' << r["pairs_skipped_coprime"]
          << ',' << r["pairs_reduced"] << ',' << r["failures"].size() << '\n';
    emit(a, out.str());
  }
  const bool ok = lex.ok() && uni.ok() && (elim.skipped || elim.ok());
  return ok ? kOk : kViolation;
}

// verify ----------------------------------------------------------------

int cmd_verify(const Args& a) {
  if (a.n_max < 2) throw UsageError("verify needs --n-max >= 2");
  VerifyConfig cfg;
  cfg.n_max = a.n_max;
  cfg.seed = a.seed;
  cfg.jobs = a.jobs;
  for (const auto& s : a.skip) {
    if (s == "fan") cfg.skip_fan = true;
    if (s == "polytope") cfg.skip_polytope = true;
    if (s == "oracle") cfg.skip_oracle = true;
  }
  const auto report = run_verify(cfg);
  emit(a, format_or(a, "csv") == "csv" ? report.to_csv() : dump(report.to_json()));
  std::cerr << report.summary_table();
  return report.all_pass() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Initial ideals, Groebner fans and state polytopes of Specht ideals"};
  app.require_subcommand(1);
  Args args;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", args.output, "write to PATH instead of standard output");
    sub->add_option("--jobs", args.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "closed-form count against brute force");
  count->add_option("--lambda", args.lambda, "partition, e.g. 3,1");
  count->add_option("--n-max", args.n_max, "tabulate every partition of 2..N");
  common(count);

  auto* ideal = app.add_subcommand("initial-ideal", "lex initial ideal for one order");
  ideal->add_option("--lambda", args.lambda, "partition")->required();
  ideal->add_option("--sigma", args.sigma, "variable order, one-line notation")->required();
  common(ideal);

  auto* fan = app.add_subcommand("fan", "all initial ideals over every variable order");
  fan->add_option("--lambda", args.lambda, "partition")->required();
  common(fan);

  auto* poly = app.add_subcommand("polytope", "vertices of the state polytope");
  poly->add_option("--lambda", args.lambda, "partition")->required();
  common(poly);

  auto* orc = app.add_subcommand("oracle", "Buchberger certificates and the elimination check");
  orc->add_option("--lambda", args.lambda, "partition")->required();
  orc->add_option("--sigma", args.sigma, "variable order (default identity)");
  common(orc);

  auto* ver = app.add_subcommand("verify", "run every check up to --n-max");
  ver->add_option("--n-max", args.n_max, "largest n")->required();
  ver->add_option("--seed", args.seed, "sampling seed");
  ver->add_option("--skip", args.skip, "skip a check family")
      ->check(CLI::IsMember({"oracle", "polytope", "fan"}))
      ->take_all();
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(args);
    if (*ideal) return cmd_initial_ideal(args);
    if (*fan) return cmd_fan(args);
    if (*poly) return cmd_polytope(args);
    if (*orc) return cmd_oracle(args);
    if (*ver) return cmd_verify(args);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kViolation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
