#include <doctest.h>

#include <random>

#include "fuzzsim/automaton.hpp"
#include "support.hpp"

using namespace fuzzsim;
using fuzzsim::testing::col;
using fuzzsim::testing::example_a;
using fuzzsim::testing::example_b;
using fuzzsim::testing::mat;
using fuzzsim::testing::random_automaton;
using fuzzsim::testing::row;

namespace {

// Independent oracle: the transition degree as the join over all state
// paths of the product of the per-step degrees.
Value path_degree(const FuzzyAutomaton& a, const std::vector<std::string>& word,
                  std::size_t from, std::size_t to) {
  const Lattice& lat = a.lattice;
  if (word.empty()) return from == to ? lat.top() : lat.bottom();
  std::vector<std::string> rest(word.begin() + 1, word.end());
  const FuzzyMatrix& d = a.transition(word.front());
  Value acc = lat.bottom();
  for (std::size_t mid = 0; mid < a.state_count(); ++mid)
    acc = lat.join(acc, lat.otimes(d(from, mid), path_degree(a, rest, mid, to)));
  return acc;
}

Value language_degree_oracle(const FuzzyAutomaton& a, const std::vector<std::string>& word) {
  const Lattice& lat = a.lattice;
  Value acc = lat.bottom();
  for (std::size_t from = 0; from < a.state_count(); ++from)
    for (std::size_t to = 0; to < a.state_count(); ++to)
      acc = lat.join(acc, lat.otimes(lat.otimes(a.sigma(0, from),
                                                path_degree(a, word, from, to)),
                                     a.tau(to, 0)));
  return acc;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(example_a()).empty());
  CHECK(validate(example_b()).empty());

  FuzzyAutomaton missing = example_a();
  missing.delta.erase("y");
  std::vector<std::string> diags = validate(missing);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0] == "letter y has no transition matrix");

  FuzzyAutomaton bad_shape = example_a();
  bad_shape.delta.erase("x");
  bad_shape.delta.emplace("x", mat(Lattice::godel(), {{1, 0, 0}, {0, 1, 0}}));
  diags = validate(bad_shape);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].find("2x3") != std::string::npos);

  FuzzyAutomaton dup = example_a();
  dup.state_names[1] = "a1";
  CHECK_FALSE(validate(dup).empty());

  FuzzyAutomaton extra = example_a();
  extra.delta.emplace("z", FuzzyMatrix::identity(Lattice::godel(), 3));
  CHECK_FALSE(validate(extra).empty());

  FuzzyAutomaton bad_sigma = example_a();
  bad_sigma.sigma = row(Lattice::godel(), {1, 1});
  CHECK_FALSE(validate(bad_sigma).empty());
}

TEST_CASE("reverse") {
  FuzzyAutomaton a = example_a({0.2, 1, 0.4});
  FuzzyAutomaton rev = reverse(a);

  CHECK(equal_rel(rev.transition("x"), converse(a.transition("x"))));
  CHECK(equal_rel(rev.transition("y"), converse(a.transition("y"))));
  CHECK(equal_rel(rev.sigma, converse(a.tau)));
  CHECK(equal_rel(rev.tau, converse(a.sigma)));
  CHECK(validate(rev).empty());

  FuzzyAutomaton twice = reverse(rev);
  CHECK(equal_rel(twice.sigma, a.sigma));
  CHECK(equal_rel(twice.tau, a.tau));
  CHECK(equal_rel(twice.transition("x"), a.transition("x")));

  // symmetric transitions with sigma = tau^t: a fixed point of reversal
  Lattice g = Lattice::godel();
  FuzzyAutomaton sym{{"s1", "s2"}, {"x"}, {}, row(g, {0.3, 1}), col(g, {0.3, 1}), g};
  sym.delta.emplace("x", mat(g, {{1, 0.5}, {0.5, 0.2}}));
  FuzzyAutomaton sym_rev = reverse(sym);
  CHECK(equal_rel(sym_rev.sigma, sym.sigma));
  CHECK(equal_rel(sym_rev.tau, sym.tau));
  CHECK(equal_rel(sym_rev.transition("x"), sym.transition("x")));
}

TEST_CASE("delta_word") {
  FuzzyAutomaton a = example_a();
  Lattice g = a.lattice;

  CHECK(equal_rel(delta_word(a, {}), FuzzyMatrix::identity(g, 3)));
  CHECK(equal_rel(delta_word(a, {"x"}), a.transition("x")));
  CHECK(equal_rel(delta_word(a, {"x", "y"}),
                  mat(g, {{0.5, 0.6, 0.4}, {0.5, 0.5, 0.4}, {0.7, 0.7, 0.7}})));

  CHECK_THROWS_AS(delta_word(a, {"z"}), Error);

  // delta_{uv} = delta_u o delta_v on random short words
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> letter(0, 1);
  auto random_word = [&]() {
    std::vector<std::string> w;
    for (int i = len(rng); i > 0; --i) w.push_back(letter(rng) ? "y" : "x");
    return w;
  };
  for (int i = 0; i < 50; ++i) {
    std::vector<std::string> u = random_word(), v = random_word();
    std::vector<std::string> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(equal_rel(delta_word(a, uv), compose(delta_word(a, u), delta_word(a, v))));
  }

  // agrees with the explicit path expansion
  for (const std::vector<std::string>& w :
       {std::vector<std::string>{}, {"x"}, {"y", "x"}, {"x", "y", "y"}}) {
    FuzzyMatrix rel = delta_word(a, w);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(rel(i, j) == path_degree(a, w, i, j));
  }
}

TEST_CASE("language_degree") {
  FuzzyAutomaton a = example_a();
  CHECK(language_degree(a, {}).as_real() == 1.0);
  CHECK(language_degree(a, {"x", "y"}).as_real() == 0.7);

  FuzzyAutomaton dead = example_a();
  dead.tau = col(a.lattice, {0, 0, 0});
  for (const std::vector<std::string>& w :
       {std::vector<std::string>{}, {"x"}, {"y", "y", "x"}})
    CHECK(dead.lattice.is_bottom(language_degree(dead, w)));

  // brute-force path enumeration agrees on words of length <= 3
  std::mt19937 rng(37);
  FuzzyAutomaton r = random_automaton(rng, Lattice::godel(), 3, 2,
                                      {0, 0.2, 0.4, 0.6, 0.8, 1});
  for (const std::vector<std::string>& w :
       {std::vector<std::string>{}, {"x"}, {"y"}, {"x", "y"}, {"y", "y", "x"}}) {
    CHECK(language_degree(a, w) == language_degree_oracle(a, w));
    CHECK(language_degree(r, w) == language_degree_oracle(r, w));
  }

  // the reverse automaton recognizes the mirrored word to the same degree
  for (const std::vector<std::string>& w :
       {std::vector<std::string>{}, {"x"}, {"x", "y"}, {"y", "y", "x"}}) {
    std::vector<std::string> back(w.rbegin(), w.rend());
    CHECK(language_degree(reverse(r), back) == language_degree(r, w));
    CHECK(language_degree(reverse(a), back) == language_degree(a, w));
  }
}
