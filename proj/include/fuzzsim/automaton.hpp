#ifndef FUZZSIM_AUTOMATON_HPP
#define FUZZSIM_AUTOMATON_HPP

#include <map>
#include <string>
#include <vector>

#include "fuzzsim/matrix.hpp"

namespace fuzzsim {

/// Fuzzy finite automaton: per-letter fuzzy transition relations delta_x
/// (|A| x |A|), a fuzzy set of initial states sigma (1 x |A|) and a fuzzy
/// set of terminal states tau (|A| x 1), all over one lattice.
struct FuzzyAutomaton {
  std::vector<std::string> state_names;
  std::vector<std::string> alphabet;
  std::map<std::string, FuzzyMatrix> delta;
  FuzzyMatrix sigma;
  FuzzyMatrix tau;
  Lattice lattice;

  std::size_t state_count() const { return state_names.size(); }
  const FuzzyMatrix& transition(const std::string& letter) const;
};

/// Checks every structural invariant and lists all violations; an empty
/// result means the automaton is well formed.
std::vector<std::string> validate(const FuzzyAutomaton& a);

/// Reverse automaton: transposed transitions, sigma and tau swapped.
FuzzyAutomaton reverse(const FuzzyAutomaton& a);

/// Transition relation of a word: delta_eps = identity,
/// delta_{ux} = delta_u o delta_x.
FuzzyMatrix delta_word(const FuzzyAutomaton& a, const std::vector<std::string>& word);

/// Recognition degree L(A)(u) = sigma o delta_u o tau.
Value language_degree(const FuzzyAutomaton& a, const std::vector<std::string>& word);

}  // namespace fuzzsim

#endif
