#ifndef FUZZSIM_LATTICE_HPP
#define FUZZSIM_LATTICE_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "fuzzsim/error.hpp"

namespace fuzzsim {

enum class LatticeKind { Boolean, Godel, Lukasiewicz, Product, Chain };

std::string to_string(LatticeKind kind);

/// One element of a residuated lattice. Real-valued structures carry a
/// double in [0,1]; the finite chain carries the element index k of a_k.
class Value {
 public:
  Value() : repr_(0.0) {}

  static Value real(double x) { return Value(x); }
  static Value chain_index(int k) {
    Value v;
    v.repr_ = k;
    return v;
  }

  bool holds_index() const { return std::holds_alternative<int>(repr_); }
  double as_real() const;
  int as_index() const;

  // Total order on the representation; used for deduplication in closure
  // sets, not for the lattice order (see Lattice::leq).
  friend bool operator==(const Value& a, const Value& b) { return a.repr_ == b.repr_; }
  friend bool operator<(const Value& a, const Value& b) { return a.repr_ < b.repr_; }

 private:
  explicit Value(double x) : repr_(x) {}
  std::variant<double, int> repr_;
};

/// A complete residuated lattice (L, meet, join, otimes, residuum, 0, 1).
/// Five instances: the two-element Boolean algebra, the Goedel, Lukasiewicz
/// and Goguen (product) structures on [0,1], and the finite chain
/// a_0 < ... < a_n with a_k (x) a_l = a_{max(k+l-n,0)} and
/// a_k -> a_l = a_{min(n-k+l,n)}.
///
/// All operations are pure; instances are small values, freely shareable.
/// `tolerance` affects only the comparison predicates leq/equal, never the
/// algebraic operations. Goedel, Boolean and chain operations are closed
/// over their inputs, so their default tolerance is 0 (exact); Lukasiewicz
/// and product arithmetic accumulates rounding and defaults to 1e-12.
class Lattice {
 public:
  static Lattice boolean();
  static Lattice godel();
  static Lattice lukasiewicz();
  static Lattice product();
  static Lattice chain(int n);

  LatticeKind kind() const { return kind_; }
  /// Largest chain index n (chain kind only).
  int chain_size() const { return n_; }
  double tolerance() const { return tol_; }

  /// Copy with a different comparison tolerance. Rejected for Boolean and
  /// chain, whose comparisons are exact by definition.
  Lattice with_tolerance(double tol) const;

  /// True when the two objects denote the same algebra (tolerance aside).
  bool same_algebra(const Lattice& other) const {
    return kind_ == other.kind_ && n_ == other.n_;
  }

  Value bottom() const;
  Value top() const;

  /// Validating constructors: `scalar` for the real-valued structures,
  /// `element` for chain indices.
  Value scalar(double x) const;
  Value element(int k) const;
  bool valid(const Value& v) const;

  Value meet(const Value& x, const Value& y) const;
  Value join(const Value& x, const Value& y) const;
  Value otimes(const Value& x, const Value& y) const;
  Value residuum(const Value& x, const Value& y) const;
  /// (x -> y) meet (y -> x).
  Value biresiduum(const Value& x, const Value& y) const;

  /// Lattice order, tolerance-aware for the real structures: x <= y + tol.
  bool leq(const Value& x, const Value& y) const;
  /// Lattice order without tolerance.
  bool leq_exact(const Value& x, const Value& y) const;
  bool equal(const Value& x, const Value& y) const;
  /// Exact tests against 1 and 0 (the crisp part is defined exactly).
  bool is_top(const Value& v) const;
  bool is_bottom(const Value& v) const;
  bool is_crisp(const Value& v) const;

 private:
  Lattice(LatticeKind kind, int n, double tol) : kind_(kind), n_(n), tol_(tol) {}
  double num(const Value& v) const;
  int idx(const Value& v) const;

  LatticeKind kind_;
  int n_;       // chain only
  double tol_;  // comparison tolerance, real structures only
};

struct ClosureResult {
  std::vector<Value> elements;  // sorted ascending; partial when capped
  bool cap_exceeded = false;
};

/// Closure of seed plus {0,1} under {meet, join, otimes, residuum}, up to
/// `cap` elements. A capped enumeration is a normal outcome: it means the
/// termination guarantee for the greatest-relation iteration does not apply.
ClosureResult subalgebra_closure(const Lattice& lat, const std::vector<Value>& seed,
                                 std::size_t cap = 10000);

}  // namespace fuzzsim

#endif
