#include "fuzzsim/io.hpp"

#include <fstream>

namespace fuzzsim {

namespace {

using nlohmann::json;

const json& expect(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

Value value_from_json(const json& j, const Lattice& lat) {
  if (lat.kind() == LatticeKind::Chain) {
    if (!j.is_number_integer())
      throw ParseError("chain lattice values must be integer indices");
    long long k = j.get<long long>();
    if (k < 0 || k > lat.chain_size())
      throw ParseError("chain index " + std::to_string(k) + " outside 0.." +
                       std::to_string(lat.chain_size()));
    return lat.element(static_cast<int>(k));
  }
  if (!j.is_number()) throw ParseError("lattice values must be numbers");
  double x = j.get<double>();
  try {
    return lat.scalar(x);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json value_to_json(const Value& v) {
  if (v.holds_index()) return v.as_index();
  return v.as_real();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const json& item : j) {
    if (!item.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Flat arrays for the initial/final fuzzy sets.
FuzzyMatrix vector_from_json(const json& j, const Lattice& lat, bool row, const char* what) {
  if (!j.is_array() || j.empty())
    throw ParseError(std::string(what) + " must be a non-empty array of values");
  std::size_t n = j.size();
  FuzzyMatrix m(lat, row ? 1 : n, row ? n : 1);
  for (std::size_t i = 0; i < n; ++i) {
    Value v = value_from_json(j[i], lat);
    m.set(row ? 0 : i, row ? i : 0, v);
  }
  return m;
}

json file_to_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

}  // namespace

json lattice_to_json(const Lattice& lat) {
  json j{{"type", to_string(lat.kind())}};
  if (lat.kind() == LatticeKind::Chain) j["n"] = lat.chain_size();
  return j;
}

Lattice lattice_from_json(const json& j) {
  const json& type = expect(j, "type");
  if (!type.is_string()) throw ParseError("lattice type must be a string");
  std::string name = type.get<std::string>();
  if (name == "chain") {
    const json& n = expect(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 1000000)
      throw ParseError("chain lattice needs an integer \"n\" in 1..1000000");
    return Lattice::chain(static_cast<int>(n.get<long long>()));
  }
  if (j.contains("n")) throw ParseError("\"n\" is only meaningful for chain lattices");
  if (name == "boolean") return Lattice::boolean();
  if (name == "godel") return Lattice::godel();
  if (name == "lukasiewicz") return Lattice::lukasiewicz();
  if (name == "product") return Lattice::product();
  throw ParseError("unknown lattice type \"" + name + "\"");
}

json matrix_to_json(const FuzzyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(value_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FuzzyMatrix matrix_from_json(const json& j, const Lattice& lat) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ParseError("matrix must be a non-empty array of non-empty rows");
  std::size_t rows = j.size(), cols = j[0].size();
  FuzzyMatrix m(lat, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("matrix rows have inconsistent lengths");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, value_from_json(j[r][c], lat));
  }
  return m;
}

json automaton_to_json(const FuzzyAutomaton& a) {
  json transitions = json::object();
  for (const auto& [x, m] : a.delta) transitions[x] = matrix_to_json(m);
  json initial = json::array();
  for (std::size_t i = 0; i < a.sigma.cols(); ++i) initial.push_back(value_to_json(a.sigma(0, i)));
  json final_ = json::array();
  for (std::size_t i = 0; i < a.tau.rows(); ++i) final_.push_back(value_to_json(a.tau(i, 0)));
  return json{{"lattice", lattice_to_json(a.lattice)}, {"states", a.state_names},
              {"alphabet", a.alphabet},                {"initial", initial},
              {"final", final_},                       {"transitions", transitions}};
}

FuzzyAutomaton automaton_from_json(const json& j) {
  Lattice lat = lattice_from_json(expect(j, "lattice"));
  std::vector<std::string> states = string_list(expect(j, "states"), "\"states\"");
  std::vector<std::string> alphabet = string_list(expect(j, "alphabet"), "\"alphabet\"");
  FuzzyMatrix sigma = vector_from_json(expect(j, "initial"), lat, true, "\"initial\"");
  FuzzyMatrix tau = vector_from_json(expect(j, "final"), lat, false, "\"final\"");

  const json& trans = expect(j, "transitions");
  if (!trans.is_object()) throw ParseError("\"transitions\" must be an object");
  std::map<std::string, FuzzyMatrix> delta;
  for (auto it = trans.begin(); it != trans.end(); ++it)
    delta.emplace(it.key(), matrix_from_json(it.value(), lat));

  return FuzzyAutomaton{std::move(states), std::move(alphabet), std::move(delta),
                        std::move(sigma),  std::move(tau),      lat};
}

FuzzyAutomaton load_automaton(const std::string& path) {
  return automaton_from_json(file_to_json(path));
}

FuzzyMatrix load_relation(const std::string& path, const Lattice& lat) {
  json j = file_to_json(path);
  if (j.is_object() && j.contains("relation")) return matrix_from_json(j["relation"], lat);
  return matrix_from_json(j, lat);
}

std::string status_to_string(Status s) {
  switch (s) {
    case Status::Greatest: return "greatest";
    case Status::NoSimulation: return "none";
    case Status::CapReached: return "cap_reached";
  }
  return "?";
}

json outcome_to_json(const Outcome& out, SimType w) {
  return json{{"status", status_to_string(out.status)},
              {"type", to_tag(w)},
              {"iterations", out.iterations},
              {"relation", matrix_to_json(out.relation)},
              {"condition_w1", out.condition_w1},
              {"warnings", out.warnings}};
}

json condition_report_to_json(const ConditionReport& rep, SimType w) {
  return json{{"type", to_tag(w)},
              {"conditions", json{{"w1", rep.initial}, {"w2", rep.transition}, {"w3", rep.terminal}}},
              {"equivalent_form", json{{"post_fixed_point", rep.post_fixed_point},
                                       {"below_psi", rep.below_psi},
                                       {"agrees", rep.equivalence_agrees}}},
              {"all_hold", rep.all()}};
}

}  // namespace fuzzsim
