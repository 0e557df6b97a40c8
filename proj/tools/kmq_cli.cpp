// kmq: command-line front end.
//
// Exit status: 0 success, 1 bad input, 2 a mathematical invariant failed.

#include "kmq/brylinski.hpp"
#include "kmq/errors.hpp"
#include "kmq/io.hpp"
#include "kmq/qanalog.hpp"
#include "kmq/semiinfinite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using kmq::io::json;

struct Options {
  std::string gcm_path;
  std::string lambda;
  std::vector<std::string> mus;
  std::string beta;
  std::string box;
  std::string grid;
  std::string algebra = "A1";
  int depth = 0;
  int level = 3;
  std::string format;  // empty: the command's default
  std::string cache;
};

// Re-raises input errors with the name of the offending field in front.
template <class F>
auto field(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const kmq::InputError& e) {
    throw kmq::InputError(name + ": " + e.what());
  }
}

kmq::GCM load_gcm(const Options& o) {
  if (o.gcm_path.empty()) throw kmq::InputError("--gcm: a GCM file is required for this command");
  return field("--gcm", [&] { return kmq::io::load_gcm(o.gcm_path); });
}

std::optional<kmq::io::RootTableCache> cache_for(const Options& o) {
  if (o.cache.empty()) return std::nullopt;
  return kmq::io::RootTableCache(o.cache, &std::cerr);
}

kmq::PositiveRootTable table_for(const Options& o, const kmq::GCM& a, const kmq::RootVector& box) {
  if (auto cache = cache_for(o)) return cache->get(a, box);
  return kmq::positive_roots_with_mult(a, box);
}

kmq::RootVector positive_root_arg(const std::string& name, const std::string& text, const kmq::GCM& a) {
  return field(name, [&] {
    kmq::RootVector r = kmq::io::parse_root(text, a);
    if (!r.is_nonnegative()) throw kmq::InputError(r.str() + " is not in Q+");
    return r;
  });
}

void emit(const Options& o, const json& j, const std::string& tsv, const char* fallback = "json") {
  if ((o.format.empty() ? fallback : o.format) == std::string("tsv")) {
    std::cout << tsv;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------- commands

int run_mult(const Options& o) {
  const kmq::GCM a = load_gcm(o);
  json j{{"gcm_hash", a.hash_hex()}};
  std::ostringstream tsv;
  tsv << "root\tmult\n";
  if (!o.beta.empty()) {
    const auto beta = positive_root_arg("--beta", o.beta, a);
    if (beta.is_zero()) throw kmq::InputError("--beta: the zero vector is not a root");
    const kmq::BigInt m = cache_for(o) ? table_for(o, a, beta).mult(beta) : kmq::peterson_mult(a, beta);
    j["beta"] = kmq::io::to_json(beta);
    j["mult"] = kmq::to_string(m);
    tsv << beta.str() << "\t" << m << "\n";
  } else if (!o.box.empty()) {
    const auto box = positive_root_arg("--box", o.box, a);
    const auto table = table_for(o, a, box);
    json entries = json::array();
    for (const auto& [root, m] : table.by_height()) {
      entries.push_back(json{{"root", kmq::io::to_json(root)}, {"mult", kmq::to_string(m)}});
      tsv << root.str() << "\t" << m << "\n";
    }
    j["box"] = kmq::io::to_json(box);
    j["entries"] = entries;
  } else {
    throw kmq::InputError("--beta: either --beta or --box is required");
  }
  emit(o, j, tsv.str());
  return 0;
}

int run_kostant(const Options& o) {
  const kmq::GCM a = load_gcm(o);
  if (o.beta.empty()) throw kmq::InputError("--beta: required");
  const auto beta = positive_root_arg("--beta", o.beta, a);
  const auto k = kmq::kostant_partition(beta, table_for(o, a, beta));
  emit(o, json{{"beta", kmq::io::to_json(beta)}, {"K", kmq::io::to_json(k)}},
       "beta\tK\n" + beta.str() + "\t" + k.str() + "\n");
  return 0;
}

json contributions_json(const std::vector<kmq::WeylContribution>& cs) {
  json out = json::array();
  for (const auto& c : cs) {
    out.push_back(json{{"word", c.word}, {"sign", c.sign}, {"beta", kmq::io::to_json(c.beta)}});
  }
  return out;
}

int run_qweight(const Options& o) {
  const kmq::GCM a = load_gcm(o);
  if (o.lambda.empty()) throw kmq::InputError("--lambda: required");
  if (o.mus.empty()) throw kmq::InputError("--mu: required");
  const auto lambda = field("--lambda", [&] { return kmq::io::parse_weight(o.lambda, a); });
  json results = json::array();
  std::ostringstream tsv;
  tsv << "lambda\tmu\tm\n";
  for (const auto& text : o.mus) {
    const auto mu = field("--mu", [&] { return kmq::io::parse_weight(text, a); });
    const auto diff = kmq::root_difference(lambda, mu, a);
    if (!diff || !diff->is_nonnegative()) {
      throw kmq::InputError("--mu: " + mu.str() + " is not below " + lambda.str() + " (lambda - mu not in Q+)");
    }
    const auto table = table_for(o, a, *diff);
    const auto contributions = field("--lambda", [&] { return kmq::contributing_weyl_elements(lambda, mu, a); });
    const auto m = kmq::q_multiplicity(lambda, mu, a, &table);
    results.push_back(json{{"lambda", kmq::io::to_json(lambda)},
                           {"mu", kmq::io::to_json(mu)},
                           {"m", kmq::io::to_json(m)},
                           {"contributions", contributions_json(contributions)}});
    tsv << lambda.str() << "\t" << mu.str() << "\t" << m.str() << "\n";
  }
  emit(o, results.size() == 1 ? results[0] : results, tsv.str());
  return 0;
}

json report_json(const kmq::BrylinskiReport& r) {
  return json{{"lambda", kmq::io::to_json(r.lambda)},
              {"mu", kmq::io::to_json(r.mu)},
              {"dim", r.dim},
              {"freudenthal_dim", kmq::to_string(r.freudenthal)},
              {"e_poincare", kmq::io::to_json(r.e_poincare)},
              {"s_poincare", kmq::io::to_json(r.s_poincare)},
              {"m", kmq::io::to_json(r.m)},
              {"theorem_applies", r.theorem_applies},
              {"theorem_holds", r.theorem_holds},
              {"checks",
               {{"oracle_agrees", r.oracle_agrees},
                {"s_inside_e", r.s_inside_e},
                {"exhaustive", r.exhaustive},
                {"gram_symmetric", r.gram_symmetric},
                {"gram_psd", r.gram_psd}}}};
}

const char* kReportHeader =
    "lambda\tmu\tdim\tm\ts_poincare\te_poincare\ttheorem_applies\ttheorem_holds\tchecks_ok\n";

std::string report_tsv(const kmq::BrylinskiReport& r) {
  std::ostringstream out;
  out << r.lambda.str() << "\t" << r.mu.str() << "\t" << r.dim << "\t" << r.m.str() << "\t"
      << r.s_poincare.str() << "\t" << r.e_poincare.str() << "\t" << r.theorem_applies << "\t"
      << r.theorem_holds << "\t" << r.ok() << "\n";
  return out.str();
}

kmq::GCM a1_gcm(const Options& o) {
  const kmq::GCM a = kmq::cartan::affine_a(1);
  if (!o.gcm_path.empty() && load_gcm(o).matrix != a.matrix) {
    throw kmq::InputError("--gcm: brylinski supports only the A1^(1) matrix [[2,-2],[-2,2]]");
  }
  return a;
}

int run_brylinski(const Options& o) {
  const kmq::GCM a = a1_gcm(o);
  if (o.lambda.empty()) throw kmq::InputError("--lambda: required");
  if (o.mus.empty()) throw kmq::InputError("--mu: required");
  const auto lambda = field("--lambda", [&] { return kmq::io::parse_weight(o.lambda, a); });
  if (!lambda.is_dominant() || !lambda.is_integral()) throw kmq::NotDominant("--lambda: must be dominant integral");
  kmq::HighestWeightModule module(kmq::AffineAlgebra(1), lambda);
  json results = json::array();
  std::string tsv = kReportHeader;
  for (const auto& text : o.mus) {
    const auto mu = field("--mu", [&] { return kmq::io::parse_weight(text, a); });
    const auto r = field("--mu", [&] { return kmq::brylinski_report(module, mu); });
    results.push_back(report_json(r));
    tsv += report_tsv(r);
  }
  emit(o, results.size() == 1 ? results[0] : results, tsv);
  return 0;
}

kmq::Grid parse_grid(const Options& o) {
  kmq::Grid g{o.level, o.depth > 0 ? o.depth : 3};
  if (o.grid.empty()) return g;
  std::string caps = std::regex_replace(o.grid, std::regex("\xE2\x89\xA4"), "<=");
  const std::regex term(R"(^\s*(level|depth)\s*<=\s*(\d+)\s*$)");
  std::stringstream parts(caps);
  std::string part;
  while (std::getline(parts, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, term)) {
      throw kmq::InputError("--grid: expected terms like level<=3,depth<=3, got '" + part + "'");
    }
    (m[1] == "level" ? g.max_level : g.max_depth) = std::stoi(m[2]);
  }
  return g;
}

int run_verify(const Options& o) {
  const kmq::Grid g = parse_grid(o);
  if (g.max_level < 0 || g.max_depth < 0 || g.max_level > 12 || g.max_depth > 8) {
    throw kmq::InputError("--grid: caps must lie in level<=12, depth<=8");
  }
  const auto reports = kmq::verify_grid(g);
  json rows = json::array();
  std::string tsv = kReportHeader;
  int applied = 0;
  bool all = true;
  for (const auto& r : reports) {
    rows.push_back(report_json(r));
    tsv += report_tsv(r);
    applied += r.theorem_applies ? 1 : 0;
    all = all && r.ok();
  }
  const json j{{"grid", {{"level", g.max_level}, {"depth", g.max_depth}}},
               {"pairs", rows},
               {"summary", {{"pairs", reports.size()}, {"theorem_checked", applied}, {"all_hold", all}}}};
  emit(o, j, tsv);
  return all ? 0 : 2;
}

int run_kahler(const Options& o) {
  int rank = 0;
  if (!o.gcm_path.empty()) {
    const kmq::GCM a = load_gcm(o);
    rank = static_cast<int>(a.rank()) - 1;
    if (rank < 1 || kmq::cartan::affine_a(rank).matrix != a.matrix) {
      throw kmq::InputError("--gcm: kahler-check needs an untwisted type A affine matrix");
    }
  } else if (o.algebra.size() == 2 && o.algebra[0] == 'A' && o.algebra[1] >= '1' && o.algebra[1] <= '9') {
    rank = o.algebra[1] - '0';
  } else {
    throw kmq::InputError("--algebra: expected A1 ... A9, got '" + o.algebra + "'");
  }
  if (o.depth < 1) throw kmq::InputError("--depth: must be at least 1");
  const kmq::AffineAlgebra g(rank);
  const auto report = kmq::kahler_check(g, o.depth);

  std::ostringstream tsv;
  tsv << "degree\troot\tx\ty\tlhs\trhs\tresult\n";
  json rows = json::array();
  for (const auto& r : report.rows) {
    tsv << r.degree << "\t" << r.root.str() << "\t" << r.x << "\t" << r.y << "\t" << kmq::to_string(r.lhs)
        << "\t" << kmq::to_string(r.rhs) << "\t" << (r.holds() ? "pass" : "FAIL") << "\n";
    rows.push_back(json{{"degree", r.degree},
                        {"root", kmq::io::to_json(r.root)},
                        {"x", r.x},
                        {"y", r.y},
                        {"lhs", kmq::to_string(r.lhs)},
                        {"rhs", kmq::to_string(r.rhs)},
                        {"holds", r.holds()}});
  }
  emit(o, json{{"algebra", "A" + std::to_string(rank) + "^(1)"}, {"depth", o.depth}, {"rows", rows},
               {"all_hold", report.all_hold()}},
       tsv.str(), "tsv");
  return report.all_hold() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"q-analogs of weight multiplicities for Kac-Moody algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--gcm", o.gcm_path, "GCM JSON file");
  app.add_option("--format", o.format, "output format (json, or tsv for kahler-check)")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cache", o.cache, "directory for persisted root tables");

  auto* mult = app.add_subcommand("mult", "root multiplicity of --beta, or all roots inside --box");
  mult->add_option("--beta", o.beta, "root, e.g. [1,1]");
  mult->add_option("--box", o.box, "componentwise bound, e.g. [3,3]");

  auto* kostant = app.add_subcommand("kostant", "Kostant partition function K(beta; q)");
  kostant->add_option("--beta", o.beta, "element of Q+, e.g. [1,1]");

  auto* qweight = app.add_subcommand("qweight", "q-analog m^lambda_mu(q)");
  qweight->add_option("--lambda", o.lambda, "highest weight");
  qweight->add_option("--mu", o.mus, "weight(s) below lambda");

  auto* bryl = app.add_subcommand("brylinski", "Brylinski filtrations of L(lambda)_mu on A1^(1)");
  bryl->add_option("--lambda", o.lambda, "dominant integral highest weight");
  bryl->add_option("--mu", o.mus, "weight(s) below lambda");

  auto* verify = app.add_subcommand("verify", "check sP = m and the filtration invariants on a grid");
  verify->add_option("--grid", o.grid, "caps, e.g. \"level<=3,depth<=3\"");
  verify->add_option("--level", o.level, "largest level of lambda");
  verify->add_option("--depth", o.depth, "largest delta-coefficient of lambda - mu");

  auto* kahler = app.add_subcommand("kahler-check", "cocycle versus contravariant form on root spaces");
  kahler->add_option("--algebra", o.algebra, "A1 or A2 (untwisted affine)");
  kahler->add_option("--depth", o.depth, "largest principal degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*mult) return run_mult(o);
    if (*kostant) return run_kostant(o);
    if (*qweight) return run_qweight(o);
    if (*bryl) return run_brylinski(o);
    if (*verify) return run_verify(o);
    if (*kahler) return run_kahler(o);
  } catch (const kmq::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const kmq::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
