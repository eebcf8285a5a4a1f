#ifndef FUZZSIM_TESTS_SUPPORT_HPP
#define FUZZSIM_TESTS_SUPPORT_HPP

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fuzzsim/automaton.hpp"
#include "fuzzsim/simbisim.hpp"

namespace fuzzsim::testing {

inline FuzzyMatrix mat(const Lattice& lat, const std::vector<std::vector<double>>& rows) {
  FuzzyMatrix m(lat, rows.size(), rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, lat.scalar(rows[r][c]));
  return m;
}

inline FuzzyMatrix chain_mat(const Lattice& lat, const std::vector<std::vector<int>>& rows) {
  FuzzyMatrix m(lat, rows.size(), rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, lat.element(rows[r][c]));
  return m;
}

inline FuzzyMatrix row(const Lattice& lat, const std::vector<double>& v) { return mat(lat, {v}); }

inline FuzzyMatrix col(const Lattice& lat, const std::vector<double>& v) {
  std::vector<std::vector<double>> rows;
  for (double x : v) rows.push_back({x});
  return mat(lat, rows);
}

// The two Goedel automata used throughout the worked examples: 3 states vs
// 2 states over alphabet {x, y}. sigma defaults to all-ones and is varied
// per example.
inline FuzzyAutomaton example_a(const std::vector<double>& sigma = {1, 1, 1}) {
  Lattice lat = Lattice::godel();
  FuzzyAutomaton a{{"a1", "a2", "a3"},
                   {"x", "y"},
                   {},
                   row(lat, sigma),
                   col(lat, {1, 1, 1}),
                   lat};
  a.delta.emplace("x", mat(lat, {{1, 0.3, 0.4}, {0.5, 1, 0.3}, {0.4, 0.6, 0.7}}));
  a.delta.emplace("y", mat(lat, {{0.5, 0.6, 0.2}, {0.3, 0.3, 0.4}, {0.7, 0.7, 1}}));
  return a;
}

inline FuzzyAutomaton example_b(const std::vector<double>& sigma = {1, 1}) {
  Lattice lat = Lattice::godel();
  FuzzyAutomaton b{{"b1", "b2"}, {"x", "y"}, {}, row(lat, sigma), col(lat, {1, 1}), lat};
  b.delta.emplace("x", mat(lat, {{1, 0.6}, {0.6, 0.7}}));
  b.delta.emplace("y", mat(lat, {{0.6, 0.6}, {0.7, 1}}));
  return b;
}

// The product-structure pair whose forward-bisimulation iteration is the
// infinite sequence with entries 1/2^(k-1).
inline FuzzyAutomaton product_a(const std::vector<double>& sigma = {1, 1, 1},
                                const std::vector<double>& tau = {1, 1, 1}) {
  Lattice lat = Lattice::product();
  FuzzyAutomaton a{{"a1", "a2", "a3"}, {"x"}, {}, row(lat, sigma), col(lat, tau), lat};
  a.delta.emplace("x", mat(lat, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0.5}}));
  return a;
}

inline FuzzyAutomaton product_b(const std::vector<double>& sigma = {1, 1},
                                const std::vector<double>& tau = {1, 1}) {
  Lattice lat = Lattice::product();
  FuzzyAutomaton b{{"b1", "b2"}, {"x"}, {}, row(lat, sigma), col(lat, tau), lat};
  b.delta.emplace("x", mat(lat, {{1, 0}, {0, 0.5}}));
  return b;
}

// Random automaton over a fixed value pool; used for property tests where
// exact equality must be meaningful (pool values are copied, never mixed).
inline FuzzyAutomaton random_automaton(std::mt19937& rng, const Lattice& lat,
                                       std::size_t states, std::size_t letters,
                                       const std::vector<double>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto rand_matrix = [&](std::size_t r, std::size_t c) {
    FuzzyMatrix m(lat, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, lat.scalar(pool[pick(rng)]));
    return m;
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < letters; ++i) alphabet.push_back(std::string(1, char('x' + i)));
  FuzzyAutomaton a{std::move(names), alphabet, {}, rand_matrix(1, states),
                   rand_matrix(states, 1), lat};
  for (const std::string& x : alphabet) a.delta.emplace(x, rand_matrix(states, states));
  return a;
}

struct ProcessResult {
  int exit_code;
  std::string output;
};

// Runs a shell command, capturing stdout (caller may redirect stderr).
inline ProcessResult run_process(const std::string& command) {
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
  int status = ::pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

inline std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value ? value : fallback;
}

}  // namespace fuzzsim::testing

#endif
