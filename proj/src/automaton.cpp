#include "fuzzsim/automaton.hpp"

#include <set>

namespace fuzzsim {

const FuzzyMatrix& FuzzyAutomaton::transition(const std::string& letter) const {
  auto it = delta.find(letter);
  if (it == delta.end()) throw Error("unknown letter '" + letter + "'");
  return it->second;
}

std::vector<std::string> validate(const FuzzyAutomaton& a) {
  std::vector<std::string> diags;
  const std::size_t n = a.state_count();
  if (n == 0) diags.push_back("automaton has no states");

  std::set<std::string> names(a.state_names.begin(), a.state_names.end());
  if (names.size() != a.state_names.size()) diags.push_back("state names are not unique");

  std::set<std::string> letters(a.alphabet.begin(), a.alphabet.end());
  if (letters.size() != a.alphabet.size()) diags.push_back("alphabet letters are not unique");

  for (const std::string& x : a.alphabet)
    if (!a.delta.count(x)) diags.push_back("letter " + x + " has no transition matrix");
  for (const auto& [x, m] : a.delta) {
    if (!letters.count(x)) diags.push_back("transition matrix for unknown letter " + x);
    if (m.rows() != n || m.cols() != n)
      diags.push_back("transition matrix for " + x + " is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                      std::to_string(n));
    if (!m.lattice().same_algebra(a.lattice))
      diags.push_back("transition matrix for " + x + " uses a different lattice");
  }

  if (a.sigma.rows() != 1 || a.sigma.cols() != n)
    diags.push_back("initial fuzzy set must be 1x" + std::to_string(n));
  if (a.tau.rows() != n || a.tau.cols() != 1)
    diags.push_back("terminal fuzzy set must be " + std::to_string(n) + "x1");
  if (!a.sigma.lattice().same_algebra(a.lattice))
    diags.push_back("initial fuzzy set uses a different lattice");
  if (!a.tau.lattice().same_algebra(a.lattice))
    diags.push_back("terminal fuzzy set uses a different lattice");

  auto check_values = [&](const FuzzyMatrix& m, const std::string& what) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!a.lattice.valid(m(r, c))) {
          diags.push_back(what + " contains a value outside the lattice");
          return;
        }
  };
  for (const auto& [x, m] : a.delta) check_values(m, "transition matrix for " + x);
  check_values(a.sigma, "initial fuzzy set");
  check_values(a.tau, "terminal fuzzy set");

  return diags;
}

FuzzyAutomaton reverse(const FuzzyAutomaton& a) {
  FuzzyAutomaton rev{a.state_names, a.alphabet, {}, converse(a.tau), converse(a.sigma),
                     a.lattice};
  for (const auto& [x, m] : a.delta) rev.delta.emplace(x, converse(m));
  return rev;
}

FuzzyMatrix delta_word(const FuzzyAutomaton& a, const std::vector<std::string>& word) {
  FuzzyMatrix rel = FuzzyMatrix::identity(a.lattice, a.state_count());
  for (const std::string& x : word) rel = compose(rel, a.transition(x));
  return rel;
}

Value language_degree(const FuzzyAutomaton& a, const std::vector<std::string>& word) {
  FuzzyMatrix result = compose(compose(a.sigma, delta_word(a, word)), a.tau);
  return result(0, 0);
}

}  // namespace fuzzsim
