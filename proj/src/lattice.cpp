#include "fuzzsim/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fuzzsim {

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Boolean: return "boolean";
    case LatticeKind::Godel: return "godel";
    case LatticeKind::Lukasiewicz: return "lukasiewicz";
    case LatticeKind::Product: return "product";
    case LatticeKind::Chain: return "chain";
  }
  return "?";
}

double Value::as_real() const {
  if (const double* d = std::get_if<double>(&repr_)) return *d;
  throw Error("value is a chain index, not a real");
}

int Value::as_index() const {
  if (const int* k = std::get_if<int>(&repr_)) return *k;
  throw Error("value is a real, not a chain index");
}

Lattice Lattice::boolean() { return Lattice(LatticeKind::Boolean, 0, 0.0); }
Lattice Lattice::godel() { return Lattice(LatticeKind::Godel, 0, 0.0); }
Lattice Lattice::lukasiewicz() { return Lattice(LatticeKind::Lukasiewicz, 0, 1e-12); }
Lattice Lattice::product() { return Lattice(LatticeKind::Product, 0, 1e-12); }

Lattice Lattice::chain(int n) {
  if (n < 1) throw Error("chain lattice needs n >= 1");
  return Lattice(LatticeKind::Chain, n, 0.0);
}

Lattice Lattice::with_tolerance(double tol) const {
  if (tol < 0.0) throw Error("tolerance must be >= 0");
  if (kind_ == LatticeKind::Boolean || kind_ == LatticeKind::Chain)
    throw Error("tolerance override is not allowed for " + to_string(kind_) + " lattices");
  return Lattice(kind_, n_, tol);
}

double Lattice::num(const Value& v) const {
  if (v.holds_index()) throw Error("chain-index value used with a " + to_string(kind_) + " lattice");
  return v.as_real();
}

int Lattice::idx(const Value& v) const {
  if (!v.holds_index()) throw Error("real value used with a chain lattice");
  return v.as_index();
}

Value Lattice::bottom() const {
  return kind_ == LatticeKind::Chain ? Value::chain_index(0) : Value::real(0.0);
}

Value Lattice::top() const {
  return kind_ == LatticeKind::Chain ? Value::chain_index(n_) : Value::real(1.0);
}

Value Lattice::scalar(double x) const {
  if (kind_ == LatticeKind::Chain) throw Error("chain lattice elements are indices; use element()");
  if (!(x >= 0.0 && x <= 1.0)) throw Error("value outside [0,1]");
  if (kind_ == LatticeKind::Boolean && x != 0.0 && x != 1.0)
    throw Error("boolean lattice admits only 0 and 1");
  return Value::real(x);
}

Value Lattice::element(int k) const {
  if (kind_ != LatticeKind::Chain) throw Error("element() applies to chain lattices only");
  if (k < 0 || k > n_) throw Error("chain index out of range");
  return Value::chain_index(k);
}

bool Lattice::valid(const Value& v) const {
  if (kind_ == LatticeKind::Chain) {
    if (!v.holds_index()) return false;
    int k = v.as_index();
    return k >= 0 && k <= n_;
  }
  if (v.holds_index()) return false;
  double x = v.as_real();
  if (kind_ == LatticeKind::Boolean) return x == 0.0 || x == 1.0;
  return x >= 0.0 && x <= 1.0;
}

Value Lattice::meet(const Value& x, const Value& y) const {
  if (kind_ == LatticeKind::Chain) return Value::chain_index(std::min(idx(x), idx(y)));
  return Value::real(std::min(num(x), num(y)));
}

Value Lattice::join(const Value& x, const Value& y) const {
  if (kind_ == LatticeKind::Chain) return Value::chain_index(std::max(idx(x), idx(y)));
  return Value::real(std::max(num(x), num(y)));
}

Value Lattice::otimes(const Value& x, const Value& y) const {
  switch (kind_) {
    case LatticeKind::Boolean:
    case LatticeKind::Godel:
      return Value::real(std::min(num(x), num(y)));
    case LatticeKind::Lukasiewicz: {
      double a = num(x), b = num(y);
      // keep the monoid unit exact: max(a+1-1, 0) rounds away from a
      if (a == 1.0) return Value::real(b);
      if (b == 1.0) return Value::real(a);
      return Value::real(std::clamp(a + b - 1.0, 0.0, 1.0));
    }
    case LatticeKind::Product:
      return Value::real(num(x) * num(y));
    case LatticeKind::Chain:
      return Value::chain_index(std::max(idx(x) + idx(y) - n_, 0));
  }
  throw Error("unreachable");
}

Value Lattice::residuum(const Value& x, const Value& y) const {
  switch (kind_) {
    case LatticeKind::Boolean:
    case LatticeKind::Godel: {
      double a = num(x), b = num(y);
      return Value::real(a <= b ? 1.0 : b);
    }
    case LatticeKind::Lukasiewicz: {
      double a = num(x), b = num(y);
      return Value::real(std::clamp(1.0 - a + b, 0.0, 1.0));
    }
    case LatticeKind::Product: {
      double a = num(x), b = num(y);
      if (a <= b) return Value::real(1.0);
      return Value::real(std::min(b / a, 1.0));  // a > b >= 0, so a > 0
    }
    case LatticeKind::Chain:
      return Value::chain_index(std::min(n_ - idx(x) + idx(y), n_));
  }
  throw Error("unreachable");
}

Value Lattice::biresiduum(const Value& x, const Value& y) const {
  return meet(residuum(x, y), residuum(y, x));
}

bool Lattice::leq(const Value& x, const Value& y) const {
  if (kind_ == LatticeKind::Chain) return idx(x) <= idx(y);
  return num(x) <= num(y) + tol_;
}

bool Lattice::leq_exact(const Value& x, const Value& y) const {
  if (kind_ == LatticeKind::Chain) return idx(x) <= idx(y);
  return num(x) <= num(y);
}

bool Lattice::equal(const Value& x, const Value& y) const {
  if (kind_ == LatticeKind::Chain) return idx(x) == idx(y);
  return std::fabs(num(x) - num(y)) <= tol_;
}

bool Lattice::is_top(const Value& v) const {
  return kind_ == LatticeKind::Chain ? idx(v) == n_ : num(v) == 1.0;
}

bool Lattice::is_bottom(const Value& v) const {
  return kind_ == LatticeKind::Chain ? idx(v) == 0 : num(v) == 0.0;
}

bool Lattice::is_crisp(const Value& v) const { return is_top(v) || is_bottom(v); }

ClosureResult subalgebra_closure(const Lattice& lat, const std::vector<Value>& seed,
                                 std::size_t cap) {
  if (cap < seed.size()) throw Error("closure cap smaller than the seed set");

  std::set<Value> seen;
  std::vector<Value> elems;
  auto add = [&](const Value& v) {
    if (seen.insert(v).second) elems.push_back(v);
  };
  for (const Value& v : seed) {
    if (!lat.valid(v)) throw Error("closure seed value does not belong to the lattice");
    add(v);
  }
  add(lat.bottom());
  add(lat.top());

  bool capped = elems.size() > cap;
  // Every unordered pair {i,j} is visited exactly once; new elements extend
  // the loop bound.
  for (std::size_t i = 0; i < elems.size() && !capped; ++i) {
    for (std::size_t j = 0; j <= i && !capped; ++j) {
      const Value a = elems[i];
      const Value b = elems[j];
      const Value candidates[5] = {lat.meet(a, b), lat.join(a, b), lat.otimes(a, b),
                                   lat.residuum(a, b), lat.residuum(b, a)};
      for (const Value& c : candidates) {
        add(c);
        if (elems.size() > cap) {
          capped = true;
          break;
        }
      }
    }
  }

  std::sort(elems.begin(), elems.end());
  return ClosureResult{std::move(elems), capped};
}

}  // namespace fuzzsim
