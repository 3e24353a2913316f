// eagv_cli: command-line front end for the entanglement-assisted GV bound
// workbench. See README.md for the subcommands and output schemas.

#include "eagv.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace eagv;

enum class Format { table, json, csv };

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_invalid = 2;

std::string fmt_double(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string vec_text(std::span<const Element> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string symplectic_text(const SymplecticVector& v) { return "(" + vec_text(v.x()) + "|" + vec_text(v.z()) + ")"; }

MatrixFile load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot open " + path);
  return read_matrix(in);
}

int emit_bound(Format fmt, const BoundResult& r) {
  switch (fmt) {
    case Format::json: std::cout << to_json(r).dump() << '\n'; break;
    case Format::csv:
      std::cout << "satisfied,lhs_num,lhs_den\n"
                << (r.satisfied ? "true" : "false") << ',' << r.lhs.numerator << ',' << r.lhs.denominator << '\n';
      break;
    case Format::table:
      std::cout << "satisfied: " << (r.satisfied ? "yes" : "no") << '\n'
                << "lhs:       " << r.lhs.numerator << " / " << r.lhs.denominator << '\n';
      break;
  }
  return exit_ok;
}

int emit_frontier(Format fmt, const ParetoFrontier& f) {
  switch (fmt) {
    case Format::json: std::cout << to_json(f.pairs).dump() << '\n'; break;
    case Format::csv:
      std::cout << "d1,d2\n";
      for (const auto& p : f.pairs) std::cout << p.d1 << ',' << p.d2 << '\n';
      break;
    case Format::table:
      std::cout << source_name(f.source) << " frontier (d_z, d_x): " << pairs_text(f.pairs) << '\n';
      break;
  }
  return exit_ok;
}

int emit_table1(Format fmt, const Table1Report& report) {
  switch (fmt) {
    case Format::json: std::cout << to_json(report).dump() << '\n'; break;
    case Format::csv: write_table1_csv(std::cout, report); break;
    case Format::table:
      for (const auto& r : report.rows) {
        std::cout << "q=" << r.row.q << " n=" << r.row.n << " k1=" << r.row.k1 << " k2=" << r.row.k2
                  << " c=" << r.row.c << "  " << (r.match() ? "match" : "MISMATCH")
                  << (r.improves ? "  improves" : "  does-not-improve") << '\n'
                  << "  P_old " << pairs_text(r.actual_old.pairs);
        if (!r.match_old) std::cout << "   expected " << pairs_text(r.row.expected_old);
        std::cout << "\n  P_new " << pairs_text(r.actual_new.pairs);
        if (!r.match_new) std::cout << "   expected " << pairs_text(r.row.expected_new);
        std::cout << '\n';
      }
      std::cout << (report.all_match() ? "all rows match\n" : "some rows do not match\n");
      break;
  }
  return report.all_match() ? exit_ok : exit_fail;
}

int emit_analysis(Format fmt, const CodeSpace& cs) {
  const std::int64_t k = static_cast<std::int64_t>(cs.n()) - static_cast<std::int64_t>(cs.ell()) +
                         static_cast<std::int64_t>(cs.c());
  const std::string skeleton = "[[" + std::to_string(cs.n()) + ", " + std::to_string(k) + "; " +
                               std::to_string(cs.c()) + "]]_" + std::to_string(cs.field().q());
  switch (fmt) {
    case Format::json:
      std::cout << json{{"q", cs.field().q()}, {"n", cs.n()},          {"l", cs.ell()},
                        {"c", cs.c()},         {"dim_intersection", cs.dim_intersection()},
                        {"dim_dual", cs.dim_dual()}, {"k", k},          {"params", skeleton}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << "q,n,l,c,dim_intersection,dim_dual,k,params\n"
                << cs.field().q() << ',' << cs.n() << ',' << cs.ell() << ',' << cs.c() << ',' << cs.dim_intersection()
                << ',' << cs.dim_dual() << ',' << k << ',' << csv_field(skeleton) << '\n';
      break;
    case Format::table:
      std::cout << "q                  " << cs.field().q() << '\n'
                << "n                  " << cs.n() << '\n'
                << "l = dim C          " << cs.ell() << '\n'
                << "c                  " << cs.c() << '\n'
                << "dim(C ∩ C^⊥s)      " << cs.dim_intersection() << '\n'
                << "dim C^⊥s           " << cs.dim_dual() << '\n'
                << "parameters         " << skeleton << '\n';
      break;
  }
  return exit_ok;
}

int emit_detection(Format fmt, const DetectionResult& r) {
  const std::string cex = r.counterexample ? symplectic_text(*r.counterexample) : "";
  switch (fmt) {
    case Format::json: {
      json j{{"ok", r.ok}, {"candidates", r.candidates}};
      if (r.counterexample)
        j["counterexample"] = {{"x", std::vector<Element>(r.counterexample->x().begin(), r.counterexample->x().end())},
                               {"z", std::vector<Element>(r.counterexample->z().begin(), r.counterexample->z().end())}};
      else
        j["counterexample"] = nullptr;
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "ok,candidates,counterexample\n"
                << (r.ok ? "true" : "false") << ',' << r.candidates << ',' << csv_field(cex) << '\n';
      break;
    case Format::table:
      std::cout << "detection: " << (r.ok ? "certified" : "fails") << " (" << r.candidates << " error vectors checked)\n";
      if (r.counterexample) std::cout << "counterexample: " << cex << '\n';
      break;
  }
  return r.ok ? exit_ok : exit_fail;
}

int emit_search(Format fmt, const WitnessReport& r) {
  switch (fmt) {
    case Format::json: std::cout << to_json(r).dump() << '\n'; break;
    case Format::csv:
      std::cout << std::boolalpha << "found,trials_used,bound_satisfied,completed,contradiction,rejected_wrong_c,rejected_detection\n"
                << r.found << ',' << r.trials_used << ',' << r.bound_satisfied << ',' << r.completed << ','
                << r.contradiction << ',' << r.stats.rejected_wrong_c << ',' << r.stats.rejected_detection << '\n';
      break;
    case Format::table:
      std::cout << "bound satisfied:    " << (r.bound_satisfied ? "yes" : "no") << '\n'
                << "witness found:      " << (r.found ? "yes" : "no") << '\n'
                << "trials used:        " << r.trials_used << '\n'
                << "rejected (wrong c): " << r.stats.rejected_wrong_c << '\n'
                << "rejected (detect):  " << r.stats.rejected_detection << '\n';
      if (r.contradiction) std::cout << "CONTRADICTION: bound holds but no code exists\n";
      if (r.witness) {
        std::cout << "witness rows:\n";
        for (std::size_t i = 0; i < r.witness->rows(); ++i) std::cout << "  " << vec_text(r.witness->row(i)) << '\n';
      }
      break;
  }
  if (r.contradiction) std::cerr << "error: exhaustive search contradicts the bound\n";
  return r.found ? exit_ok : exit_fail;
}

int emit_asymptotic(Format fmt, const AsymptoticVerdict& v) {
  switch (fmt) {
    case Format::json:
      std::cout << json{{"satisfied", v.satisfied}, {"boundary", v.boundary}, {"lhs", fmt_double(v.lhs)},
                        {"rate", fmt_double(v.rate)}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << "satisfied,boundary,lhs,rate\n"
                << (v.satisfied ? "true" : "false") << ',' << (v.boundary ? "true" : "false") << ','
                << fmt_double(v.lhs) << ',' << fmt_double(v.rate) << '\n';
      break;
    case Format::table:
      std::cout << "satisfied: " << (v.satisfied ? "yes" : "no") << (v.boundary ? " (boundary)" : "") << '\n'
                << "lhs:       " << fmt_double(v.lhs, 12) << '\n'
                << "rate:      " << fmt_double(v.rate, 12) << '\n';
      break;
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gilbert-Varshamov bounds for entanglement-assisted asymmetric quantum codes"};
  app.require_subcommand(1);
  app.fallthrough();

  Format fmt = Format::table;
  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats))->capture_default_str();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Master seed")->envname("GV_SEED")->capture_default_str();

  BoundParamsNew pn;
  BoundParamsOld po;
  auto add_new = [&](CLI::App* cmd, bool with_d) {
    cmd->add_option("--q", pn.q)->required();
    cmd->add_option("--n", pn.n)->required();
    cmd->add_option("--l", pn.ell)->required();
    cmd->add_option("--c", pn.c)->required();
    if (with_d) {
      cmd->add_option("--dx", pn.d_x)->required();
      cmd->add_option("--dz", pn.d_z)->required();
    }
  };
  auto add_old = [&](CLI::App* cmd, bool with_d) {
    cmd->add_option("--q", po.q)->required();
    cmd->add_option("--n", po.n)->required();
    cmd->add_option("--k1", po.k1)->required();
    cmd->add_option("--k2", po.k2)->required();
    cmd->add_option("--c", po.c)->required();
    if (with_d) {
      cmd->add_option("--dz", po.d_z)->required();
      cmd->add_option("--dx", po.d_x)->required();
    }
  };

  auto* bound = app.add_subcommand("bound", "Evaluate a GV inequality exactly");
  bound->require_subcommand(1);
  auto* bound_new = bound->add_subcommand("new", "Symplectic bound");
  add_new(bound_new, true);
  auto* bound_old = bound->add_subcommand("old", "Direct-product bound");
  add_old(bound_old, true);

  auto* pareto = app.add_subcommand("pareto", "Pareto frontier of achievable (d_z, d_x)");
  pareto->require_subcommand(1);
  auto* pareto_new_cmd = pareto->add_subcommand("new", "Symplectic bound");
  add_new(pareto_new_cmd, false);
  auto* pareto_old_cmd = pareto->add_subcommand("old", "Direct-product bound");
  add_old(pareto_old_cmd, false);

  auto* table1 = app.add_subcommand("table1", "Recompute the published comparison table");
  std::size_t row = 0;
  table1->add_option("--row", row, "Only this 1-based row");

  auto* code = app.add_subcommand("code", "Analyze a generator matrix file");
  code->require_subcommand(1);
  std::string path;
  std::uint64_t dx = 1, dz = 1, budget = default_detection_budget;
  auto* analyze = code->add_subcommand("analyze", "Dimensions and entanglement degree");
  analyze->add_option("--file", path)->required();
  auto* detect = code->add_subcommand("detect", "Exhaustive detection check");
  detect->add_option("--file", path)->required();
  detect->add_option("--dx", dx)->required();
  detect->add_option("--dz", dz)->required();
  detect->add_option("--budget", budget)->capture_default_str();

  auto* search = app.add_subcommand("search", "Find a witness code at small parameters");
  add_new(search, true);
  std::string mode = "random", out_path;
  std::uint64_t trials = 10'000;
  search->add_option("--mode", mode)->check(CLI::IsMember({"random", "exhaustive"}))->capture_default_str();
  search->add_option("--trials", trials)->capture_default_str();
  search->add_option("--budget", budget)->capture_default_str();
  search->add_option("--out", out_path, "Write the witness matrix here");

  auto* asym = app.add_subcommand("asymptotic", "Asymptotic entropy form of the bound");
  asym->require_subcommand(1);
  AsymptoticParams ap;
  auto* asym_check = asym->add_subcommand("check", "Evaluate the entropy inequality");
  asym_check->add_option("--q", ap.q)->required();
  asym_check->add_option("--L", ap.L)->required();
  asym_check->add_option("--lambda", ap.lambda)->required();
  asym_check->add_option("--dx", ap.delta_x)->required();
  asym_check->add_option("--dz", ap.delta_z)->required();
  auto* asym_curve = asym->add_subcommand("curve", "Export the (delta_x, max delta_z) curve as CSV");
  std::size_t points = 512;
  asym_curve->add_option("--q", ap.q)->required();
  asym_curve->add_option("--L", ap.L)->required();
  asym_curve->add_option("--points", points)->capture_default_str();
  asym_curve->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }

  try {
    if (*bound_new) return emit_bound(fmt, check_new(pn));
    if (*bound_old) return emit_bound(fmt, check_old(po));
    if (*pareto_new_cmd) return emit_frontier(fmt, pareto_new(pn.q, pn.n, pn.ell, pn.c));
    if (*pareto_old_cmd) return emit_frontier(fmt, pareto_old(po.q, po.n, po.k1, po.k2, po.c));
    if (*table1) return emit_table1(fmt, reproduce_table1(row));
    if (*analyze) {
      const auto file = load_matrix(path);
      return emit_analysis(fmt, analyze_code(file.field, file.n, file.h));
    }
    if (*detect) {
      const auto file = load_matrix(path);
      return emit_detection(fmt, detection_check(analyze_code(file.field, file.n, file.h), dx, dz, budget));
    }
    if (*search) {
      SearchConfig cfg{pn, mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::random, trials, seed, budget};
      const auto report = search_witness(cfg);
      if (report.found && !out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw InvalidParameters("cannot write " + out_path);
        write_matrix(out, Field::make(pn.q), pn.n, *report.witness);
      }
      return emit_search(fmt, report);
    }
    if (*asym_check) return emit_asymptotic(fmt, check_asymptotic(ap));
    if (*asym_curve) {
      const auto curve = asymptotic_curve(ap.q, ap.L, points);
      std::ofstream out(out_path);
      if (!out) throw InvalidParameters("cannot write " + out_path);
      out << "delta_x,delta_z_max\n";
      for (const auto& p : curve) out << fmt_double(p.delta_x, 12) << ',' << fmt_double(p.delta_z_max, 12) << '\n';
      if (fmt == Format::json)
        std::cout << json{{"points", curve.size()}, {"out", out_path}}.dump() << '\n';
      else
        std::cout << "wrote " << curve.size() << " points to " << out_path << '\n';
      return exit_ok;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
