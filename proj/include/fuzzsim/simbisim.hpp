#ifndef FUZZSIM_SIMBISIM_HPP
#define FUZZSIM_SIMBISIM_HPP

#include <string>
#include <vector>

#include "fuzzsim/automaton.hpp"

namespace fuzzsim {

/// The six kinds of state relations between two fuzzy automata: forward and
/// backward simulations, and the four bisimulations built from them.
enum class SimType {
  ForwardSim,          // fs
  BackwardSim,         // bs
  ForwardBisim,        // fb:  phi and phi^-1 forward simulations
  BackwardBisim,       // bb:  phi and phi^-1 backward simulations
  ForwardBackwardBisim,  // fbb: phi forward, phi^-1 backward
  BackwardForwardBisim   // bfb: phi backward, phi^-1 forward
};

constexpr SimType kAllSimTypes[] = {SimType::ForwardSim,          SimType::BackwardSim,
                                    SimType::ForwardBisim,        SimType::BackwardBisim,
                                    SimType::ForwardBackwardBisim, SimType::BackwardForwardBisim};

std::string to_tag(SimType w);
SimType sim_type_from_tag(const std::string& tag);

enum class Status { Greatest, NoSimulation, CapReached };

/// Result of a greatest-relation computation.
///
/// Greatest:     `relation` satisfies (w-1), (w-2), (w-3) and dominates every
///               relation that does.
/// NoSimulation: `relation` is the greatest solution of (w-2)+(w-3) and
///               fails (w-1); no simulation/bisimulation of this type exists.
/// CapReached:   the iteration did not stabilize within the cap; `relation`
///               is the last iterate (an upper bound on the answer, which is
///               the infimum of the full descending sequence).
struct Outcome {
  Status status;
  FuzzyMatrix relation;
  std::size_t iterations = 1;
  bool condition_w1 = false;
  std::vector<std::string> warnings;
};

/// Truth values of the three defining conditions of a type-w relation,
/// plus the equivalent post-fixed-point form of conditions 2 and 3.
struct ConditionReport {
  bool initial = false;     // (w-1)
  bool transition = false;  // (w-2)
  bool terminal = false;    // (w-3)

  bool post_fixed_point = false;   // phi <= phi^w(phi)
  bool below_psi = false;          // phi <= psi^w
  bool equivalence_agrees = false; // (w-2 and w-3) == (both of the above)

  bool all() const { return initial && transition && terminal; }
};

/// Initial relation psi^w of the iteration, built from the arrow relations
/// of the initial/terminal fuzzy sets (e.g. psi^fs = tau^A -> tau^B).
FuzzyMatrix psi_init(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b);

/// One application of the isotone operator phi^w, e.g.
/// phi^fs(alpha) = meet_x [(delta_x^B o alpha^-1) \ delta_x^A]^-1.
/// Composite types are the stated meets of the two base operators.
/// An empty alphabet yields the all-ones relation (empty meet).
FuzzyMatrix phi_step(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                     const FuzzyMatrix& alpha);

/// Evaluates (w-1), (w-2), (w-3) literally as relation inequalities, and the
/// equivalent form phi <= phi^w(phi), phi <= psi^w.
ConditionReport check_conditions(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                                 const FuzzyMatrix& phi);

/// Greatest type-w simulation/bisimulation via the descending iteration
/// phi_1 = psi^w, phi_{k+1} = phi_k meet phi^w(phi_k). Stabilization is
/// lattice equality under the instance tolerance; (w-1) is checked only on
/// the final iterate.
Outcome greatest_simulation(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                            std::size_t cap = 1000);

/// Crisp counterpart of phi_step: equals crisp_part(phi_step(w,a,b,rho)) but
/// is computed from the direct characterizations, e.g. for fs
/// (a,b) kept iff for all x, a': delta_x^A(a,a') <= (delta_x^B o rho^-1)(b,a').
FuzzyMatrix phi_crisp_step(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                           const FuzzyMatrix& rho);

/// Greatest crisp type-w relation. Always terminates: the iterate sequence
/// is a descending chain of crisp relations, so it stabilizes after at most
/// |A|*|B|+1 steps. Never returns CapReached.
Outcome greatest_crisp_simulation(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b);

/// Verification oracle: enumerates all 2^(|A||B|) crisp relations, joins
/// those satisfying (w-2)+(w-3) and decides by (w-1) on the join. Guarded to
/// |A|*|B| <= 20.
Outcome brute_force_oracle(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b);

}  // namespace fuzzsim

#endif
