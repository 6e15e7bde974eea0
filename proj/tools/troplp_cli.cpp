// Command line front end: solves mean payoff games and tropical linear
// programs exactly, runs the value-iteration oracle, and exposes the
// permanent / genericity primitives on matrix files.
//
// Exit codes: 0 success (an infeasible program is still a result),
// 1 pipeline/oracle disagreement in `compare`, 2 input errors, 3 internal
// invariant violations.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "troplp/errors.hpp"
#include "troplp/io.hpp"
#include "troplp/mpg.hpp"
#include "troplp/simplex.hpp"

namespace {

using namespace troplp;

struct Options {
  std::string command;
  std::string input;
  std::string rule = "bland";
  std::string format = "json";
  bool trace = false;
  int max_exhaustive = 5;
  int threads = 1;
  unsigned seed = 1;
  int gen_rows = 3;
  int gen_cols = 3;
  double gen_density = 0.3;
  long gen_max_abs = 4;
};

void print_trace(const std::string& label, const SimplexResult& run) {
  for (std::size_t k = 0; k < run.trace.size(); ++k) {
    const TraceStep& s = run.trace[k];
    std::ostringstream line;
    line << label << " iter=" << k << " basis={";
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      line << (i ? "," : "") << s.basis[i];
    line << "} signs={";
    for (std::size_t i = 0; i < s.reduced_signs.size(); ++i)
      line << (i ? "," : "") << s.reduced_signs[i].first << ":"
           << (s.reduced_signs[i].second > 0 ? "+" : s.reduced_signs[i].second < 0 ? "-" : "0");
    line << "} obj=" << s.objective.str();
    if (s.leaving) line << " leaving=" << *s.leaving;
    if (s.entering) line << " entering=" << *s.entering;
    std::cerr << line.str() << "\n";
  }
}

void print_perturbed(const std::string& label, const PerturbedProgram& p) {
  std::cerr << label << " perturbed program: " << p.lp.num_rows() << " rows, "
            << p.lp.num_vars() << " vars, arity " << p.lp.arity << ", u0=" << p.u0.str() << "\n";
  for (int i = 0; i < p.lp.num_rows(); ++i) {
    const SignedRow& row = p.lp.rows[static_cast<std::size_t>(i)];
    std::cerr << label << " row " << i << ":";
    for (const auto& c : row.coeffs) std::cerr << " " << c.str();
    std::cerr << " | " << row.constant.str() << "\n";
  }
}

Json tropical_vector_json(const std::vector<Tropical>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

void emit(const Options& opt, const Json& result, const std::string& text) {
  if (opt.format == "json")
    std::cout << result.dump() << "\n";
  else
    std::cout << text;
}

int run_solve_game(const Options& opt) {
  MeanPayoffGame game = game_from_json(load_json_file(opt.input));
  const int n = game.num_col_states();
  std::vector<bool> winning(static_cast<std::size_t>(n), false);
  std::vector<std::optional<std::vector<Tropical>>> certificates(static_cast<std::size_t>(n));
  if (opt.trace) {
    for (int j = 0; j < n; ++j) {
      auto rule = make_pivot_rule(opt.rule);
      SolveResult s = solve_general(to_feasibility(game, j), *rule);
      std::string label = "state=" + std::to_string(j + 1);
      print_perturbed(label, s.program);
      print_trace(label + " phase1", s.phase1);
      if (s.phase2) print_trace(label + " phase2", *s.phase2);
      winning[static_cast<std::size_t>(j)] = s.feasible;
      if (s.feasible) certificates[static_cast<std::size_t>(j)] = s.point;
    }
  } else {
    WinningAnalysis w = winning_states(game, opt.rule, opt.threads);
    winning = w.winning;
    certificates = w.certificates;
  }

  Json win = Json::array();
  Json certs = Json::object();
  std::ostringstream text;
  text << "winning states:";
  for (int j = 0; j < n; ++j)
    if (winning[static_cast<std::size_t>(j)]) {
      win.push_back(j + 1);
      certs[std::to_string(j + 1)] = tropical_vector_json(*certificates[static_cast<std::size_t>(j)]);
      text << " " << (j + 1);
    }
  text << "\n";
  emit(opt, Json{{"winning", win}, {"certificates", certs}}, text.str());
  return 0;
}

int run_solve_lp(const Options& opt) {
  TropicalLP lp = lp_from_json(load_json_file(opt.input));
  if (lp.arity != 1) throw ValidationError("solve-lp expects an arity-1 program");
  auto rule = make_pivot_rule(opt.rule);
  SolveResult s = solve_general(lp, *rule);
  if (opt.trace) {
    print_perturbed("lp", s.program);
    print_trace("phase1", s.phase1);
    if (s.phase2) print_trace("phase2", *s.phase2);
  }
  bool pure_feasibility = std::all_of(lp.objective.begin(), lp.objective.end(),
                                      [](const Tropical& c) { return c.is_bottom(); });
  std::string status = !s.feasible ? "infeasible" : pure_feasibility ? "feasible" : "optimal";
  Json out{{"status", status}};
  std::ostringstream text;
  text << status << "\n";
  if (s.feasible) {
    out["point"] = tropical_vector_json(s.point);
    out["value"] = to_json(s.value);
    text << "point:";
    for (const auto& x : s.point) text << " " << x.str();
    text << "\nvalue: " << s.value.str() << "\n";
  }
  emit(opt, out, text.str());
  return 0;
}

Json game_values_json(const GameValues& v) {
  Json chi = Json::array();
  for (const auto& c : v.chi) chi.push_back(c.str());
  Json win = Json::array();
  for (int j : v.winning_states()) win.push_back(j + 1);
  return Json{{"chi", chi}, {"winning", win}};
}

int run_oracle(const Options& opt) {
  MeanPayoffGame game = game_from_json(load_json_file(opt.input));
  GameValues v = value_iteration_oracle(game);
  std::ostringstream text;
  text << "chi:";
  for (const auto& c : v.chi) text << " " << c.str();
  text << "\nwinning states:";
  for (int j : v.winning_states()) text << " " << (j + 1);
  text << "\n";
  emit(opt, game_values_json(v), text.str());
  return 0;
}

int run_compare(const Options& opt) {
  MeanPayoffGame game = game_from_json(load_json_file(opt.input));
  GameValues oracle = value_iteration_oracle(game);
  WinningAnalysis pipeline = winning_states(game, opt.rule, opt.threads);
  Json states = Json::array();
  Json disagreements = Json::array();
  std::ostringstream text;
  text << "state  pipeline  oracle\n";
  for (int j = 0; j < game.num_col_states(); ++j) {
    bool p = pipeline.winning[static_cast<std::size_t>(j)];
    bool o = oracle.winning[static_cast<std::size_t>(j)];
    states.push_back(Json{{"state", j + 1}, {"pipeline", p}, {"oracle", o}, {"agree", p == o}});
    if (p != o) disagreements.push_back(j + 1);
    text << (j + 1) << "      " << (p ? "win " : "lose") << "      " << (o ? "win" : "lose")
         << (p == o ? "" : "   << disagree") << "\n";
  }
  bool all_agree = disagreements.empty();
  emit(opt, Json{{"states", states}, {"all_agree", all_agree}, {"disagreements", disagreements}},
       text.str());
  return all_agree ? 0 : 1;
}

int run_permanent(const Options& opt) {
  SignedMatrix m = matrix_from_json(load_json_file(opt.input));
  if (m.rows() != m.cols()) throw ValidationError("permanent needs a square matrix");
  PermanentResult p = tropical_permanent(m);
  Json perm(nullptr);
  if (p.optimal_permutation) {
    perm = Json::array();
    for (int c : *p.optimal_permutation) perm.push_back(c + 1);
  }
  std::ostringstream text;
  text << "value: " << p.value.str() << "\nsign: " << p.sign << "\nunique: " << (p.unique ? "yes" : "no")
       << "\n";
  emit(opt,
       Json{{"value", to_json(p.value)},
            {"sign", p.sign},
            {"unique", p.unique},
            {"degenerate", p.degenerate()},
            {"permutation", perm}},
       text.str());
  return 0;
}

int run_check_generic(const Options& opt) {
  SignedMatrix m = matrix_from_json(load_json_file(opt.input));
  GenericityLimits limits;
  limits.max_minor = opt.max_exhaustive;
  auto witness = find_degenerate_submatrix(m, limits);
  Json out{{"generic", !witness.has_value()}};
  std::ostringstream text;
  if (witness) {
    Json rows = Json::array(), cols = Json::array();
    for (int r : witness->first) rows.push_back(r + 1);
    for (int c : witness->second) cols.push_back(c + 1);
    out["witness"] = Json{{"rows", rows}, {"cols", cols}};
    text << "not generic; degenerate minor at rows/cols above\n";
  } else {
    text << "generic\n";
  }
  emit(opt, out, text.str());
  return 0;
}

int run_gen_game(const Options& opt) {
  MeanPayoffGame g =
      random_game(opt.seed, opt.gen_rows, opt.gen_cols, opt.gen_density, opt.gen_max_abs);
  std::cout << to_json(g).dump() << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact solver for tropical linear programs and mean payoff games"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool takes_input) {
    if (takes_input) cmd->add_option("input", opt.input, "input JSON file")->required();
    cmd->add_option("--rule", opt.rule, "pivoting rule (default: bland)");
    cmd->add_flag("--trace", opt.trace, "print per-iteration traces to stderr");
    cmd->add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", opt.threads, "parallel per-state solves");
    cmd->add_option("--max-exhaustive", opt.max_exhaustive,
                    "largest minor side enumerated by check-generic");
  };
  add_common(app.add_subcommand("solve-game", "winning states of a mean payoff game"), true);
  add_common(app.add_subcommand("solve-lp", "solve a tropical linear program"), true);
  add_common(app.add_subcommand("oracle", "value iteration on a game"), true);
  add_common(app.add_subcommand("compare", "pipeline vs oracle on every state"), true);
  add_common(app.add_subcommand("permanent", "tropical permanent of a matrix file"), true);
  add_common(app.add_subcommand("check-generic", "exhaustive genericity check"), true);
  CLI::App* gen = app.add_subcommand("gen-game", "emit a random valid game");
  gen->add_option("--seed", opt.seed, "random seed");
  gen->add_option("--rows", opt.gen_rows, "number of Min states");
  gen->add_option("--cols", opt.gen_cols, "number of Max states");
  gen->add_option("--density", opt.gen_density, "bottom-entry density");
  gen->add_option("--max-abs", opt.gen_max_abs, "payment magnitude bound");

  CLI11_PARSE(app, argc, argv);
  opt.command = app.get_subcommands().front()->get_name();

  try {
    // reject unknown rules before any computation
    if (opt.command != "gen-game") (void)make_pivot_rule(opt.rule);
    if (opt.command == "solve-game") return run_solve_game(opt);
    if (opt.command == "solve-lp") return run_solve_lp(opt);
    if (opt.command == "oracle") return run_oracle(opt);
    if (opt.command == "compare") return run_compare(opt);
    if (opt.command == "permanent") return run_permanent(opt);
    if (opt.command == "check-generic") return run_check_generic(opt);
    if (opt.command == "gen-game") return run_gen_game(opt);
    std::cerr << "unknown command\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
