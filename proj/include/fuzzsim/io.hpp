#ifndef FUZZSIM_IO_HPP
#define FUZZSIM_IO_HPP

#include <string>

#include <json.hpp>

#include "fuzzsim/simbisim.hpp"

namespace fuzzsim {

// Automaton files are JSON documents:
//   {
//     "lattice":     {"type": "godel"},            // or lukasiewicz, product,
//                                                  // boolean, chain (+ "n")
//     "states":      ["a1", "a2"],
//     "alphabet":    ["x"],
//     "initial":     [1, 0.5],
//     "final":       [1, 1],
//     "transitions": {"x": [[1, 0.3], [0.5, 1]]}
//   }
// Chain values are integer indices 0..n; all other lattices take numbers in
// [0,1] (the Boolean lattice admits only 0 and 1).

nlohmann::json lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const FuzzyMatrix& m);
FuzzyMatrix matrix_from_json(const nlohmann::json& j, const Lattice& lat);

nlohmann::json automaton_to_json(const FuzzyAutomaton& a);
FuzzyAutomaton automaton_from_json(const nlohmann::json& j);

/// Reads and parses an automaton file. Structural and value errors raise
/// ParseError; invariant violations are reported by validate().
FuzzyAutomaton load_automaton(const std::string& path);

/// Reads a relation file: either a bare matrix (array of arrays) or an
/// object carrying a "relation" key, so `compute` output can be fed back in.
FuzzyMatrix load_relation(const std::string& path, const Lattice& lat);

std::string status_to_string(Status s);

/// Result document: {"status", "type", "iterations", "relation",
/// "condition_w1", "warnings"}.
nlohmann::json outcome_to_json(const Outcome& out, SimType w);

nlohmann::json condition_report_to_json(const ConditionReport& rep, SimType w);

}  // namespace fuzzsim

#endif
