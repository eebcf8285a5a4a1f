// fuzzsim: decide whether simulations/bisimulations of the six types exist
// between two fuzzy automata and compute the greatest one when it does.
//
// Exit codes: 0 greatest relation found / all conditions hold,
//             1 no relation of the requested type,
//             2 iteration cap reached,
//            64 usage, parse or validation error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzsim/io.hpp"

namespace {

constexpr int kExitGreatest = 0;
constexpr int kExitNone = 1;
constexpr int kExitCap = 2;
constexpr int kExitUsage = 64;

using namespace fuzzsim;

FuzzyAutomaton load_validated(const std::string& path) {
  FuzzyAutomaton a = load_automaton(path);
  std::vector<std::string> diags = validate(a);
  if (!diags.empty()) {
    std::ostringstream msg;
    msg << path << ":";
    for (const std::string& d : diags) msg << "\n  " << d;
    throw Error(msg.str());
  }
  return a;
}

void apply_tolerance(FuzzyAutomaton& a, double tol) {
  a.lattice = a.lattice.with_tolerance(tol);
  auto retag = [&](FuzzyMatrix& m) {
    FuzzyMatrix next(a.lattice, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) next.set(r, c, m(r, c));
    m = std::move(next);
  };
  retag(a.sigma);
  retag(a.tau);
  for (auto& [x, m] : a.delta) retag(m);
}

std::size_t default_cap() {
  const char* env = std::getenv("FUZZSIM_CAP");
  if (env == nullptr || *env == '\0') return 1000;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) throw Error("FUZZSIM_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> tokenize_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> letters;
  std::string token;
  while (in >> token) letters.push_back(token);
  return letters;
}

int run_compute(const std::string& a_path, const std::string& b_path, const std::string& type,
                bool crisp, std::optional<std::size_t> cap, std::optional<double> tolerance) {
  SimType w = sim_type_from_tag(type);
  FuzzyAutomaton a = load_validated(a_path);
  FuzzyAutomaton b = load_validated(b_path);
  if (!a.lattice.same_algebra(b.lattice))
    throw Error("the automata are defined over different lattices");
  if (tolerance) {
    apply_tolerance(a, *tolerance);
    apply_tolerance(b, *tolerance);
  }

  Outcome out = crisp ? greatest_crisp_simulation(w, a, b)
                      : greatest_simulation(w, a, b, cap.value_or(default_cap()));
  std::cout << outcome_to_json(out, w).dump(2) << "\n";
  switch (out.status) {
    case Status::Greatest: return kExitGreatest;
    case Status::NoSimulation: return kExitNone;
    case Status::CapReached: return kExitCap;
  }
  return kExitUsage;
}

int run_check(const std::string& a_path, const std::string& b_path, const std::string& rel_path,
              const std::string& type) {
  SimType w = sim_type_from_tag(type);
  FuzzyAutomaton a = load_validated(a_path);
  FuzzyAutomaton b = load_validated(b_path);
  if (!a.lattice.same_algebra(b.lattice))
    throw Error("the automata are defined over different lattices");
  FuzzyMatrix rel = load_relation(rel_path, a.lattice);
  if (rel.rows() != a.state_count() || rel.cols() != b.state_count())
    throw Error("relation must be " + std::to_string(a.state_count()) + "x" +
                std::to_string(b.state_count()));

  ConditionReport rep = check_conditions(w, a, b, rel);
  std::cout << condition_report_to_json(rep, w).dump(2) << "\n";
  return rep.all() ? kExitGreatest : kExitNone;
}

int run_degree(const std::string& a_path, const std::string& word_text) {
  FuzzyAutomaton a = load_validated(a_path);
  Value degree = language_degree(a, tokenize_word(word_text));
  nlohmann::json j = degree.holds_index() ? nlohmann::json(degree.as_index())
                                          : nlohmann::json(degree.as_real());
  std::cout << j.dump() << "\n";
  return kExitGreatest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greatest simulations and bisimulations between fuzzy automata"};
  app.require_subcommand(1);

  std::string a_path, b_path, rel_path, type, word;
  bool crisp = false;
  std::optional<std::size_t> cap;
  std::optional<double> tolerance;

  CLI::App* compute = app.add_subcommand("compute", "compute the greatest relation of a type");
  compute->add_option("a", a_path, "first automaton file")->required();
  compute->add_option("b", b_path, "second automaton file")->required();
  compute->add_option("--type", type, "relation type: fs|bs|fb|bb|fbb|bfb")->required();
  compute->add_flag("--crisp", crisp, "compute the greatest crisp relation instead");
  compute->add_option("--cap", cap, "iteration cap (default 1000, or FUZZSIM_CAP)");
  compute->add_option("--tolerance", tolerance,
                      "comparison tolerance override (real-valued lattices only)");

  CLI::App* check = app.add_subcommand("check", "check a relation against the conditions");
  check->add_option("a", a_path, "first automaton file")->required();
  check->add_option("b", b_path, "second automaton file")->required();
  check->add_option("relation", rel_path, "relation file (bare matrix or compute output)")
      ->required();
  check->add_option("--type", type, "relation type: fs|bs|fb|bb|fbb|bfb")->required();

  CLI::App* degree = app.add_subcommand("degree", "recognition degree of a word");
  degree->add_option("a", a_path, "automaton file")->required();
  degree->add_option("word", word, "space-separated letters; \"\" for the empty word");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (cap && *cap < 1) throw Error("cap must be >= 1");
      return run_compute(a_path, b_path, type, crisp, cap, tolerance);
    }
    if (check->parsed()) return run_check(a_path, b_path, rel_path, type);
    return run_degree(a_path, word);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
