#include "fuzzsim/simbisim.hpp"

namespace fuzzsim {

namespace {

// Every composite type is a meet of the two base operators: the primary one
// applied to phi between A and B, and (for bisimulations) a secondary one
// applied to phi^-1 between B and A, conversed back. The same decomposition
// holds for the psi relations, the phi^w operators and the conditions
// (w-1)..(w-3) themselves.
enum class Base { Fs, Bs };

struct Scheme {
  Base primary;
  bool has_secondary;
  Base secondary;
};

Scheme scheme_of(SimType w) {
  switch (w) {
    case SimType::ForwardSim: return {Base::Fs, false, Base::Fs};
    case SimType::BackwardSim: return {Base::Bs, false, Base::Bs};
    case SimType::ForwardBisim: return {Base::Fs, true, Base::Fs};
    case SimType::BackwardBisim: return {Base::Bs, true, Base::Bs};
    case SimType::ForwardBackwardBisim: return {Base::Fs, true, Base::Bs};
    case SimType::BackwardForwardBisim: return {Base::Bs, true, Base::Fs};
  }
  throw Error("unreachable");
}

void require_compatible(const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
  if (!a.lattice.same_algebra(b.lattice))
    throw Error("automata are defined over different lattices");
}

void require_relation_shape(const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                            const FuzzyMatrix& phi) {
  require_compatible(a, b);
  if (!phi.lattice().same_algebra(a.lattice)) throw Error("relation lattice mismatch");
  if (phi.rows() != a.state_count() || phi.cols() != b.state_count())
    throw Error("relation must be " + std::to_string(a.state_count()) + "x" +
                std::to_string(b.state_count()));
}

FuzzyMatrix row_of(const FuzzyMatrix& column) { return converse(column); }

// psi^fs = tau^A -> tau^B, psi^bs = sigma^A -> sigma^B.
FuzzyMatrix psi_base(Base base, const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
  if (base == Base::Fs) return arrow_right(row_of(a.tau), row_of(b.tau));
  return arrow_right(a.sigma, b.sigma);
}

// phi^fs(alpha) = meet_x [(delta_x^B o alpha^-1) \ delta_x^A]^-1
// phi^bs(alpha) = meet_x (alpha o delta_x^B) / delta_x^A
FuzzyMatrix phi_base(Base base, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                     const FuzzyMatrix& alpha) {
  FuzzyMatrix acc = FuzzyMatrix::ones(alpha.lattice(), alpha.rows(), alpha.cols());
  for (const std::string& x : a.alphabet) {
    const FuzzyMatrix& da = a.transition(x);
    const FuzzyMatrix& db = b.transition(x);
    FuzzyMatrix term = base == Base::Fs
                           ? converse(left_residual(compose(db, converse(alpha)), da))
                           : right_residual(compose(alpha, db), da);
    acc = pointwise_meet(acc, term);
  }
  return acc;
}

// Literal conditions (fs-1)..(fs-3) / (bs-1)..(bs-3) of one base type.
bool cond1_base(Base base, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                const FuzzyMatrix& phi) {
  if (base == Base::Fs) return leq_rel(a.sigma, compose(b.sigma, converse(phi)));
  return leq_rel(a.tau, compose(phi, b.tau));
}

bool cond2_base(Base base, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                const FuzzyMatrix& phi) {
  for (const std::string& x : a.alphabet) {
    const FuzzyMatrix& da = a.transition(x);
    const FuzzyMatrix& db = b.transition(x);
    bool ok = base == Base::Fs
                  ? leq_rel(compose(converse(phi), da), compose(db, converse(phi)))
                  : leq_rel(compose(da, phi), compose(phi, db));
    if (!ok) return false;
  }
  return true;
}

bool cond3_base(Base base, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                const FuzzyMatrix& phi) {
  if (base == Base::Fs) return leq_rel(compose(converse(phi), a.tau), b.tau);
  return leq_rel(compose(a.sigma, phi), b.sigma);
}

template <typename Check>
bool cond_composite(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                    const FuzzyMatrix& phi, Check check) {
  const Scheme s = scheme_of(w);
  if (!check(s.primary, a, b, phi)) return false;
  if (s.has_secondary && !check(s.secondary, b, a, converse(phi))) return false;
  return true;
}

bool condition_w1(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                  const FuzzyMatrix& phi) {
  return cond_composite(w, a, b, phi, cond1_base);
}

Outcome finish_outcome(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                       FuzzyMatrix relation, std::size_t iterations) {
  Outcome out{Status::Greatest, std::move(relation), iterations, false, {}};
  out.condition_w1 = condition_w1(w, a, b, out.relation);
  if (out.condition_w1) {
    out.status = Status::Greatest;
    if (all_bottom(out.relation))
      out.warnings.push_back(
          "the greatest relation is empty; it satisfies the defining conditions only "
          "because an initial or terminal fuzzy set is empty");
  } else {
    out.status = Status::NoSimulation;
  }
  return out;
}

}  // namespace

std::string to_tag(SimType w) {
  switch (w) {
    case SimType::ForwardSim: return "fs";
    case SimType::BackwardSim: return "bs";
    case SimType::ForwardBisim: return "fb";
    case SimType::BackwardBisim: return "bb";
    case SimType::ForwardBackwardBisim: return "fbb";
    case SimType::BackwardForwardBisim: return "bfb";
  }
  throw Error("unreachable");
}

SimType sim_type_from_tag(const std::string& tag) {
  for (SimType w : kAllSimTypes)
    if (to_tag(w) == tag) return w;
  throw Error("unknown simulation type '" + tag + "' (expected fs|bs|fb|bb|fbb|bfb)");
}

FuzzyMatrix psi_init(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
  require_compatible(a, b);
  const Scheme s = scheme_of(w);
  FuzzyMatrix psi = psi_base(s.primary, a, b);
  if (s.has_secondary) psi = pointwise_meet(psi, converse(psi_base(s.secondary, b, a)));
  return psi;
}

FuzzyMatrix phi_step(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                     const FuzzyMatrix& alpha) {
  require_relation_shape(a, b, alpha);
  const Scheme s = scheme_of(w);
  FuzzyMatrix result = phi_base(s.primary, a, b, alpha);
  if (s.has_secondary)
    result = pointwise_meet(result, converse(phi_base(s.secondary, b, a, converse(alpha))));
  return result;
}

ConditionReport check_conditions(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                                 const FuzzyMatrix& phi) {
  require_relation_shape(a, b, phi);
  ConditionReport rep;
  rep.initial = cond_composite(w, a, b, phi, cond1_base);
  rep.transition = cond_composite(w, a, b, phi, cond2_base);
  rep.terminal = cond_composite(w, a, b, phi, cond3_base);
  rep.post_fixed_point = leq_rel(phi, phi_step(w, a, b, phi));
  rep.below_psi = leq_rel(phi, psi_init(w, a, b));
  rep.equivalence_agrees =
      (rep.transition && rep.terminal) == (rep.post_fixed_point && rep.below_psi);
  return rep;
}

Outcome greatest_simulation(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                            std::size_t cap) {
  require_compatible(a, b);
  if (cap < 1) throw Error("iteration cap must be >= 1");

  FuzzyMatrix cur = psi_init(w, a, b);
  std::size_t k = 1;
  while (k < cap) {
    FuzzyMatrix next = pointwise_meet(cur, phi_step(w, a, b, cur));
    if (equal_rel(next, cur)) return finish_outcome(w, a, b, std::move(next), k);
    cur = std::move(next);
    ++k;
  }

  Outcome out{Status::CapReached, std::move(cur), k, false, {}};
  out.condition_w1 = condition_w1(w, a, b, out.relation);
  out.warnings.push_back(
      "iteration cap reached before stabilization; the reported relation is the iterate "
      "phi_" + std::to_string(k) +
      ", an upper bound on the infimum of the sequence. The underlying lattice is a "
      "BL-chain, so the infimum of the full sequence is the greatest relation satisfying "
      "conditions (w-2) and (w-3).");
  return out;
}

FuzzyMatrix phi_crisp_step(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                           const FuzzyMatrix& rho) {
  require_relation_shape(a, b, rho);
  if (!is_crisp(rho)) throw Error("phi_crisp_step requires a crisp relation");
  const Lattice& lat = rho.lattice();

  // Direct characterization of one base type; comparisons use the exact
  // lattice order, matching the exact 1-test of crisp_part.
  auto base_step = [&lat](Base base, const FuzzyAutomaton& fa, const FuzzyAutomaton& fb,
                          const FuzzyMatrix& r) {
    const std::size_t n = fa.state_count(), m = fb.state_count();
    FuzzyMatrix out = FuzzyMatrix::ones(lat, n, m);
    for (const std::string& x : fa.alphabet) {
      const FuzzyMatrix& da = fa.transition(x);
      const FuzzyMatrix& db = fb.transition(x);
      // fs: reach(b,a') = (delta_x^B o r^-1)(b,a'); keep (a,b) iff
      //     delta_x^A(a,a') <= reach(b,a') for every a'.
      // bs: reach(a',b) = (r o delta_x^B)(a',b); keep (a,b) iff
      //     delta_x^A(a',a) <= reach(a',b) for every a'.
      FuzzyMatrix reach = base == Base::Fs ? compose(db, converse(r)) : compose(r, db);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (lat.is_bottom(out(i, j))) continue;
          bool keep = true;
          for (std::size_t ap = 0; ap < n && keep; ++ap) {
            const Value& lhs = base == Base::Fs ? da(i, ap) : da(ap, i);
            const Value& rhs = base == Base::Fs ? reach(j, ap) : reach(ap, j);
            keep = lat.leq_exact(lhs, rhs);
          }
          if (!keep) out.set(i, j, lat.bottom());
        }
      }
    }
    return out;
  };

  const Scheme s = scheme_of(w);
  FuzzyMatrix result = base_step(s.primary, a, b, rho);
  if (s.has_secondary)
    result = pointwise_meet(result, converse(base_step(s.secondary, b, a, converse(rho))));
  return result;
}

Outcome greatest_crisp_simulation(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
  require_compatible(a, b);
  const std::size_t bound = a.state_count() * b.state_count() + 1;

  FuzzyMatrix cur = crisp_part(psi_init(w, a, b));
  std::size_t k = 1;
  while (true) {
    FuzzyMatrix next = pointwise_meet(cur, phi_crisp_step(w, a, b, cur));
    if (equal_rel(next, cur)) return finish_outcome(w, a, b, std::move(next), k);
    cur = std::move(next);
    ++k;
    if (k > bound)
      throw Error("crisp iteration exceeded the descending-chain bound; this is a bug");
  }
}

Outcome brute_force_oracle(SimType w, const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
  require_compatible(a, b);
  const std::size_t n = a.state_count(), m = b.state_count();
  const std::size_t bits = n * m;
  if (bits > 20) throw Error("brute-force oracle is limited to |A|*|B| <= 20");
  const Lattice& lat = a.lattice;

  FuzzyMatrix join23 = FuzzyMatrix::zeros(lat, n, m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    FuzzyMatrix rel(lat, n, m);
    for (std::size_t bit = 0; bit < bits; ++bit)
      if (mask & (std::size_t{1} << bit)) rel.set(bit / m, bit % m, lat.top());
    if (cond_composite(w, a, b, rel, cond2_base) && cond_composite(w, a, b, rel, cond3_base))
      join23 = pointwise_join(join23, rel);
  }

  // The solutions of (w-2)+(w-3) are closed under joins, so the join must
  // itself be a solution.
  if (!cond_composite(w, a, b, join23, cond2_base) ||
      !cond_composite(w, a, b, join23, cond3_base))
    throw Error("oracle join is not a solution of (w-2)+(w-3); this is a bug");

  return finish_outcome(w, a, b, std::move(join23), 1);
}

}  // namespace fuzzsim
