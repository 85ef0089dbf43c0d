// dtatool: command-line front end for detecting-array generation,
// verification, composition and fault localization.
//
// Exit codes: 0 success, 1 error (or a failed verification), 2 search budget
// exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dta/catalog.hpp"
#include "dta/construct.hpp"
#include "dta/export.hpp"
#include "dta/format.hpp"
#include "dta/locate.hpp"
#include "dta/search.hpp"
#include "dta/verify.hpp"

using json = nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::string exec = "parallel";
};

dta::Exec exec_of(const Globals& g) {
  return g.exec == "serial" ? dta::Exec::serial : dta::Exec::parallel;
}

json to_json(const dta::Interaction& t) {
  json pins = json::array();
  for (const auto& p : t.pins())
    pins.push_back({{"col", p.column + 1}, {"level", p.level}});
  return pins;
}

json to_json(const dta::VerifyReport& r) {
  json j = {{"property", r.property}, {"holds", r.holds}};
  if (!r.conclusive) j["conclusive"] = false;
  if (!r.detail.empty()) j["detail"] = r.detail;
  for (const auto& [k, v] : r.stats) j["stats"][k] = v;
  if (r.witness) {
    json w = {{"note", r.witness->note}};
    w["interactions"] = json::array();
    for (const auto& t : r.witness->interactions)
      w["interactions"].push_back(to_json(t));
    w["rows"] = json::array();
    for (auto row : r.witness->rows) w["rows"].push_back(row + 1);
    j["witness"] = w;
  }
  return j;
}

void print_report(const dta::VerifyReport& r) {
  std::cout << r.property << ": "
            << (!r.conclusive ? "unknown" : r.holds ? "yes" : "no");
  if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
  std::cout << '\n';
  for (const auto& [k, v] : r.stats) std::cout << "  " << k << " = " << v << '\n';
  if (r.witness) std::cout << "  witness: " << r.witness->note << '\n';
}

void emit(const dta::ArrayDocument& doc, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << dta::serialize(doc);
  else
    dta::write_document(out, doc);
}

dta::ArrayDocument load(const std::string& path) {
  if (path.rfind("catalog:", 0) == 0) {
    auto entry = dta::catalog_get(path.substr(8));
    if (!entry.document)
      throw dta::DomainError("catalog entry '" + entry.id + "' is not an array");
    return *entry.document;
  }
  return dta::read_document(path);
}

dta::ArrayDocument make_doc(dta::MixedArray a, std::size_t t, std::size_t d,
                            std::optional<std::uint64_t> lambda = {}) {
  dta::ArrayDocument doc;
  doc.array = std::move(a);
  doc.t = t;
  doc.d = d;
  doc.lambda = lambda;
  return doc;
}

dta::OutcomeVector read_outcomes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<bool> failed;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    if (line == "P" || line == "p") failed.push_back(false);
    else if (line == "F" || line == "f") failed.push_back(true);
    else
      throw dta::ParseError(n, path + ": expected P or F, got '" + line + "'");
  }
  return dta::OutcomeVector(std::move(failed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-level detecting arrays: bounds, verification, search, "
               "composition and fault localization"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "RNG seed (search)");
  app.add_option("--exec", g.exec, "Kernel variant")
      ->check(CLI::IsMember({"serial", "parallel"}));

  int rc = 0;

  // bound
  auto* bound = app.add_subcommand("bound", "Lower bound on N for a (d,t)-DTA");
  std::string bound_types;
  std::size_t bound_d = 1, bound_t = 2;
  bound->add_option("--type", bound_types, "Alphabet sizes, e.g. 2,3,3,3 or 2^1,3^3")
      ->required();
  bound->add_option("--d", bound_d, "Number of faults");
  bound->add_option("--t", bound_t, "Interaction strength");
  bound->callback([&] {
    auto types = dta::parse_types(bound_types);
    auto n = dta::lower_bound(bound_d, bound_t, types);
    auto screen = dta::check_search_constraints(types, bound_d, bound_t);
    if (g.json) {
      std::cout << json{{"types", types.sizes()},
                        {"d", bound_d},
                        {"t", bound_t},
                        {"lower_bound", n},
                        {"constraints", to_json(screen)}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << n << '\n';
      print_report(screen);
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check an array's properties");
  std::string verify_file;
  std::optional<std::size_t> verify_d, verify_t;
  bool verify_brute = false;
  verify->add_option("file", verify_file, "Array file (or catalog:<id>)")
      ->required();
  verify->add_option("--d", verify_d, "Number of faults (default: file metadata)");
  verify->add_option("--t", verify_t, "Strength (default: file metadata)");
  verify->add_flag("--brute", verify_brute,
                   "Also run the definitional brute-force check "
                   "(capped by $DTA_MAX_ENUM)");
  verify->callback([&] {
    auto doc = load(verify_file);
    auto d = verify_d.value_or(doc.d);
    auto t = verify_t.value_or(doc.t);
    auto limits = dta::VerifyLimits::from_env();
    auto exec = exec_of(g);
    std::vector<dta::VerifyReport> reports;
    dta::VerifyReport summary;
    summary.property = "array";
    summary.holds = true;
    summary.stats["N"] = static_cast<std::int64_t>(doc.array.rows());
    summary.stats["k"] = static_cast<std::int64_t>(doc.array.cols());
    summary.stats["coverage_index"] = static_cast<std::int64_t>(
        dta::coverage_index(doc.array, t, limits, exec));
    reports.push_back(summary);
    if (t + 1 <= doc.array.cols())
      reports.push_back(dta::is_super_simple(doc.array, t, limits, exec));
    auto det = dta::is_detecting(doc.array, d, t, limits, exec);
    reports.push_back(det);
    bool ok = det.holds;
    if (verify_brute) {
      auto brute = dta::is_detecting_brute(doc.array, d, t, limits, exec);
      if (brute.holds != det.holds)
        throw std::logic_error("structural and brute-force checks disagree");
      reports.push_back(brute);
    }
    if (g.json) {
      json out = json::array();
      for (const auto& r : reports) out.push_back(to_json(r));
      std::cout << out.dump(2) << '\n';
    } else {
      for (const auto& r : reports) print_report(r);
    }
    rc = ok ? 0 : 1;
  });

  // search
  auto* search = app.add_subcommand("search", "Simulated annealing for (1,2)-DTAs");
  std::string search_types, search_out;
  std::size_t search_d = 1, search_t = 2;
  dta::SearchConfig cfg;
  std::optional<std::size_t> search_n;
  search->add_option("--type", search_types, "Alphabet sizes")->required();
  search->add_option("--d", search_d, "Number of faults (only 1 supported)");
  search->add_option("--t", search_t, "Strength (only 2 supported)");
  search->add_option("--n", search_n, "Rows (default: lower bound)");
  search->add_option("--max-iters", cfg.max_iters, "Moves per chain");
  search->add_option("--restarts", cfg.restarts, "Independent chains");
  search->add_option("--p", cfg.accept_prob, "Acceptance probability for non-improving moves");
  search->add_flag("--force", cfg.force, "Search even if a known necessary condition fails");
  search->add_flag("--parallel", cfg.parallel_chains, "Run chains concurrently");
  search->add_option("-o,--output", search_out, "Output file (default stdout)");
  search->callback([&] {
    if (search_d != 1 || search_t != 2)
      throw dta::DomainError("search supports only d = 1, t = 2; use compose "
                             "for other parameters");
    cfg.types = dta::parse_types(search_types);
    cfg.rows = search_n;
    cfg.seed = g.seed;
    auto rep = dta::sa_search(cfg);
    bool found = rep.outcome == dta::SearchOutcome::found;
    if (g.json) {
      json chains = json::array();
      for (const auto& c : rep.chains)
        chains.push_back({{"seed", c.seed},
                          {"initial_delta", c.initial_delta},
                          {"best_delta", c.best_delta},
                          {"final_delta", c.final_delta},
                          {"iterations", c.iterations},
                          {"accepted", c.accepted},
                          {"found", c.found}});
      json out = {{"outcome", found ? "found" : "exhausted"},
                  {"chains", chains},
                  {"seconds", rep.seconds}};
      if (found) out["array"] = dta::serialize(make_doc(*rep.array, 2, 1));
      std::cout << out.dump(2) << '\n';
      if (found && !search_out.empty()) emit(make_doc(*rep.array, 2, 1), search_out);
      rc = found ? 0 : 2;
      return;
    }
    if (found) {
      emit(make_doc(*rep.array, 2, 1), search_out);
      std::cerr << "found after " << rep.chains.back().iterations
                << " moves in chain " << *rep.winning_chain << '\n';
    } else {
      std::cerr << "budget exhausted after " << rep.chains.size()
                << " chain(s); best objective "
                << std::min_element(rep.chains.begin(), rep.chains.end(),
                                    [](auto& a, auto& b) {
                                      return a.best_delta < b.best_delta;
                                    })
                       ->best_delta
                << " (this is not a nonexistence result)\n";
      rc = 2;
    }
  });

  // compose
  auto* compose = app.add_subcommand("compose", "Combinatorial constructions");
  compose->require_subcommand(1);
  std::string comp_out;

  auto* kron = compose->add_subcommand("kron", "Kronecker product A (x) B");
  std::string kron_a, kron_b;
  kron->add_option("a", kron_a)->required();
  kron->add_option("b", kron_b)->required();
  kron->add_option("-o,--output", comp_out, "Output file (default stdout)");
  kron->callback([&] {
    auto a = load(kron_a), b = load(kron_b);
    auto out = dta::kronecker(a.array, b.array);
    emit(make_doc(std::move(out), a.t, (a.d + 1) * (b.d + 1) - 1), comp_out);
  });

  auto* sumcol = compose->add_subcommand("sumcol", "Optimum index-1 MCA with k = t+1");
  std::size_t sum_t = 2;
  std::string sum_types;
  sumcol->add_option("--t", sum_t)->required();
  sumcol->add_option("--type", sum_types)->required();
  sumcol->add_option("-o,--output", comp_out, "Output file (default stdout)");
  sumcol->callback([&] {
    auto out = dta::mca_optimum(sum_t, dta::parse_types(sum_types));
    emit(make_doc(std::move(out), sum_t, 0, 1), comp_out);
  });

  auto* insert = compose->add_subcommand("insert", "Grow one column by inserting constant blocks");
  std::string ins_a, ins_b;
  std::size_t ins_col = 1;
  int ins_e = 1;
  insert->add_option("a", ins_a, "Strength-t MCA")->required();
  insert->add_option("b", ins_b, "Strength-(t-1) MCA on the other columns")->required();
  insert->add_option("--col", ins_col, "1-based column to grow")->required();
  insert->add_option("--e", ins_e, "Number of new levels");
  insert->add_option("-o,--output", comp_out, "Output file (default stdout)");
  insert->callback([&] {
    auto a = load(ins_a), b = load(ins_b);
    if (ins_col < 1) throw dta::DomainError("--col is 1-based");
    auto out = dta::insert_expand(a.array, b.array, ins_col - 1, ins_e, a.t);
    emit(make_doc(std::move(out), a.t, 0), comp_out);
  });

  auto* replicate = compose->add_subcommand("replicate", "Cyclic replication of an index-1 optimum MCA");
  std::string rep_a;
  std::size_t rep_d = 2;
  replicate->add_option("a", rep_a)->required();
  replicate->add_option("--d", rep_d, "Number of copies")->required();
  replicate->add_option("-o,--output", comp_out, "Output file (default stdout)");
  replicate->callback([&] {
    auto a = load(rep_a);
    auto out = dta::replicate_cyclic(a.array, rep_d);
    auto k = out.cols();
    emit(make_doc(std::move(out), k - 1, rep_d - 1, rep_d), comp_out);
  });

  auto* oa = compose->add_subcommand("oa", "Index-1 orthogonal array");
  std::size_t oa_t = 2;
  int oa_q = 3;
  bool oa_sum = false;
  oa->add_option("--t", oa_t)->required();
  oa->add_option("--q", oa_q, "Alphabet size (prime for the Bush construction)")->required();
  oa->add_flag("--sum", oa_sum, "Use the sum-column OA(t, t+1, q)");
  oa->add_option("-o,--output", comp_out, "Output file (default stdout)");
  oa->callback([&] {
    auto out = oa_sum ? dta::oa_sum(oa_t, oa_q) : dta::oa_bush(oa_t, oa_q);
    emit(make_doc(std::move(out), oa_t, 0, 1), comp_out);
  });

  auto* derive = compose->add_subcommand("derive-ss", "Super-simple OA_lambda from an index-1 OA");
  std::string der_a;
  int der_lambda = 2;
  derive->add_option("a", der_a)->required();
  derive->add_option("--lambda", der_lambda)->required();
  derive->add_option("-o,--output", comp_out, "Output file (default stdout)");
  derive->callback([&] {
    auto a = load(der_a);
    auto out = dta::derive_super_simple(a.array, der_lambda);
    auto rows = out.rows();
    std::size_t t = 0;
    for (std::uint64_t p = static_cast<std::uint64_t>(der_lambda); p < rows;
         p *= static_cast<std::uint64_t>(out.types()[0]))
      ++t;
    emit(make_doc(std::move(out), t, static_cast<std::size_t>(der_lambda - 1),
                  static_cast<std::uint64_t>(der_lambda)),
         comp_out);
  });

  // locate
  auto* locate = app.add_subcommand("locate", "Identify faulty interactions from outcomes");
  std::string loc_array, loc_outcomes;
  std::optional<std::size_t> loc_d, loc_t;
  bool loc_no_verify = false;
  locate->add_option("array", loc_array)->required();
  locate->add_option("outcomes", loc_outcomes, "N lines of P or F")->required();
  locate->add_option("--d", loc_d);
  locate->add_option("--t", loc_t);
  locate->add_flag("--no-verify", loc_no_verify,
                   "Skip the DTA check (results are then not guaranteed)");
  locate->callback([&] {
    auto doc = load(loc_array);
    auto d = loc_d.value_or(doc.d), t = loc_t.value_or(doc.t);
    if (!loc_no_verify) {
      auto rep = dta::is_detecting(doc.array, d, t, dta::VerifyLimits::from_env(),
                                   exec_of(g));
      if (!rep.holds)
        throw dta::DomainError("array is not a (" + std::to_string(d) + "," +
                               std::to_string(t) + ")-DTA: " +
                               rep.witness->note);
    }
    auto y = read_outcomes(loc_outcomes);
    auto result = dta::locate_faults(doc.array, d, t, y, exec_of(g));
    if (g.json) {
      json out;
      if (auto* id = std::get_if<dta::Identified>(&result)) {
        out["result"] = "identified";
        out["faults"] = json::array();
        for (const auto& f : id->faults)
          out["faults"].push_back({{"pins", to_json(f)},
                                   {"names", dta::name_interaction(doc.names, f)}});
      } else if (auto* many = std::get_if<dta::TooManyFaults>(&result)) {
        out["result"] = "too-many-faults";
        out["candidates"] = many->candidates;
      } else {
        out["result"] = "inconsistent";
        out["unexplained_rows"] = json::array();
        for (auto r : std::get<dta::Inconsistent>(result).unexplained)
          out["unexplained_rows"].push_back(r + 1);
      }
      std::cout << out.dump(2) << '\n';
    } else if (auto* id = std::get_if<dta::Identified>(&result)) {
      if (id->faults.empty()) std::cout << "no faults\n";
      for (const auto& f : id->faults)
        std::cout << "fault: " << dta::name_interaction(doc.names, f) << '\n';
    } else {
      std::cout << dta::describe(result) << '\n';
    }
  });

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Built-in arrays");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List entries");
  cat_list->callback([&] {
    for (const auto& id : dta::catalog_ids()) {
      auto e = dta::catalog_get(id);
      std::cout << id << "\t" << e.description << '\n';
    }
  });
  auto* cat_show = catalog->add_subcommand("show", "Print an entry");
  std::string show_id, show_out;
  cat_show->add_option("id", show_id)->required();
  cat_show->add_option("-o,--output", show_out);
  cat_show->callback([&] {
    auto e = dta::catalog_get(show_id);
    if (e.document) {
      emit(*e.document, show_out);
      return;
    }
    if (g.json) {
      json rows = json::array();
      for (const auto& r : e.targets)
        rows.push_back({{"N", r.rows},
                        {"levels", r.pattern()},
                        {"max_a", r.max_a},
                        {"types", r.types_for(r.max_a).sizes()}});
      std::cout << rows.dump(2) << '\n';
    } else {
      for (const auto& r : e.targets)
        std::cout << "N=" << r.rows << "\t" << r.pattern() << "\ta<=" << r.max_a
                  << "\ttypes=" << r.types_for(r.max_a).to_string() << '\n';
    }
  });
  auto* cat_check = catalog->add_subcommand("check", "Re-verify every entry");
  cat_check->callback([&] {
    for (const auto& id : dta::catalog_ids()) {
      auto rep = dta::verify_catalog_entry(dta::catalog_get(id), exec_of(g));
      std::cout << (rep.holds ? "ok   " : "FAIL ") << id << ": " << rep.property
                << '\n';
      if (!rep.holds) {
        std::cout << "  " << rep.witness->note << '\n';
        rc = 1;
      }
    }
  });

  // export
  auto* exp = app.add_subcommand("export", "Render an array as a CSV test plan");
  std::string exp_file, exp_out;
  bool exp_numeric = false;
  exp->add_option("file", exp_file, "Array file (or catalog:<id>)")->required();
  exp->add_flag("--numeric", exp_numeric, "Raw level indices instead of names");
  exp->add_option("-o,--output", exp_out);
  exp->callback([&] {
    auto text = dta::export_suite(load(exp_file), exp_numeric);
    if (exp_out.empty() || exp_out == "-") {
      std::cout << text;
    } else {
      std::ofstream out(exp_out, std::ios::binary);
      out << text;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
