#include "fuzzsim/matrix.hpp"

namespace fuzzsim {

namespace {

void require_same_lattice(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  if (!a.lattice().same_algebra(b.lattice()))
    throw Error("matrices belong to different lattices");
}

void require_same_shape(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_lattice(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch");
}

void require_row_vector(const FuzzyMatrix& m, const char* name) {
  if (!m.is_row_vector()) throw Error(std::string(name) + " must be a 1 x n row vector");
}

}  // namespace

FuzzyMatrix::FuzzyMatrix(Lattice lat, std::size_t rows, std::size_t cols)
    : lat_(lat), rows_(rows), cols_(cols), data_(rows * cols, lat.bottom()) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

FuzzyMatrix FuzzyMatrix::constant(const Lattice& lat, std::size_t rows, std::size_t cols,
                                  const Value& v) {
  if (!lat.valid(v)) throw Error("fill value does not belong to the lattice");
  FuzzyMatrix m(lat, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, v);
  return m;
}

FuzzyMatrix FuzzyMatrix::ones(const Lattice& lat, std::size_t rows, std::size_t cols) {
  return constant(lat, rows, cols, lat.top());
}

FuzzyMatrix FuzzyMatrix::zeros(const Lattice& lat, std::size_t rows, std::size_t cols) {
  return constant(lat, rows, cols, lat.bottom());
}

FuzzyMatrix FuzzyMatrix::identity(const Lattice& lat, std::size_t n) {
  FuzzyMatrix m = zeros(lat, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, lat.top());
  return m;
}

FuzzyMatrix compose(const FuzzyMatrix& lhs, const FuzzyMatrix& rhs) {
  require_same_lattice(lhs, rhs);
  if (lhs.cols() != rhs.rows()) throw Error("composition shape mismatch");
  const Lattice& lat = lhs.lattice();
  FuzzyMatrix out(lat, lhs.rows(), rhs.cols());
  for (std::size_t a = 0; a < lhs.rows(); ++a) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      Value acc = lat.bottom();
      for (std::size_t b = 0; b < lhs.cols(); ++b)
        acc = lat.join(acc, lat.otimes(lhs(a, b), rhs(b, c)));
      out.set(a, c, acc);
    }
  }
  return out;
}

FuzzyMatrix converse(const FuzzyMatrix& m) {
  FuzzyMatrix out(m.lattice(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m(r, c));
  return out;
}

FuzzyMatrix pointwise_meet(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b);
  FuzzyMatrix out(a.lattice(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.lattice().meet(a(r, c), b(r, c)));
  return out;
}

FuzzyMatrix pointwise_join(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b);
  FuzzyMatrix out(a.lattice(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.lattice().join(a(r, c), b(r, c)));
  return out;
}

bool leq_rel(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a.lattice().leq(a(r, c), b(r, c))) return false;
  return true;
}

bool equal_rel(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_shape(a, b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a.lattice().equal(a(r, c), b(r, c))) return false;
  return true;
}

FuzzyMatrix arrow_right(const FuzzyMatrix& eta, const FuzzyMatrix& xi) {
  require_same_lattice(eta, xi);
  require_row_vector(eta, "eta");
  require_row_vector(xi, "xi");
  const Lattice& lat = eta.lattice();
  FuzzyMatrix out(lat, eta.cols(), xi.cols());
  for (std::size_t a = 0; a < eta.cols(); ++a)
    for (std::size_t b = 0; b < xi.cols(); ++b)
      out.set(a, b, lat.residuum(eta(0, a), xi(0, b)));
  return out;
}

FuzzyMatrix arrow_left(const FuzzyMatrix& eta, const FuzzyMatrix& xi) {
  require_same_lattice(eta, xi);
  require_row_vector(eta, "eta");
  require_row_vector(xi, "xi");
  const Lattice& lat = eta.lattice();
  FuzzyMatrix out(lat, eta.cols(), xi.cols());
  for (std::size_t a = 0; a < eta.cols(); ++a)
    for (std::size_t b = 0; b < xi.cols(); ++b)
      out.set(a, b, lat.residuum(xi(0, b), eta(0, a)));
  return out;
}

FuzzyMatrix arrow_bi(const FuzzyMatrix& eta, const FuzzyMatrix& xi) {
  require_same_lattice(eta, xi);
  require_row_vector(eta, "eta");
  require_row_vector(xi, "xi");
  const Lattice& lat = eta.lattice();
  FuzzyMatrix out(lat, eta.cols(), xi.cols());
  for (std::size_t a = 0; a < eta.cols(); ++a)
    for (std::size_t b = 0; b < xi.cols(); ++b)
      out.set(a, b, lat.biresiduum(eta(0, a), xi(0, b)));
  return out;
}

FuzzyMatrix right_residual(const FuzzyMatrix& phi, const FuzzyMatrix& alpha) {
  require_same_lattice(phi, alpha);
  if (alpha.rows() != alpha.cols() || alpha.rows() != phi.rows())
    throw Error("right residual needs alpha square of size phi.rows()");
  const Lattice& lat = phi.lattice();
  FuzzyMatrix out(lat, phi.rows(), phi.cols());
  for (std::size_t a = 0; a < phi.rows(); ++a) {
    for (std::size_t b = 0; b < phi.cols(); ++b) {
      Value acc = lat.top();
      for (std::size_t ap = 0; ap < phi.rows(); ++ap)
        acc = lat.meet(acc, lat.residuum(alpha(ap, a), phi(ap, b)));
      out.set(a, b, acc);
    }
  }
  return out;
}

FuzzyMatrix left_residual(const FuzzyMatrix& phi, const FuzzyMatrix& beta) {
  require_same_lattice(phi, beta);
  if (beta.rows() != beta.cols() || beta.rows() != phi.cols())
    throw Error("left residual needs beta square of size phi.cols()");
  const Lattice& lat = phi.lattice();
  FuzzyMatrix out(lat, phi.rows(), phi.cols());
  for (std::size_t a = 0; a < phi.rows(); ++a) {
    for (std::size_t b = 0; b < phi.cols(); ++b) {
      Value acc = lat.top();
      for (std::size_t bp = 0; bp < phi.cols(); ++bp)
        acc = lat.meet(acc, lat.residuum(beta(b, bp), phi(a, bp)));
      out.set(a, b, acc);
    }
  }
  return out;
}

FuzzyMatrix crisp_part(const FuzzyMatrix& m) {
  const Lattice& lat = m.lattice();
  FuzzyMatrix out(lat, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.set(r, c, lat.is_top(m(r, c)) ? lat.top() : lat.bottom());
  return out;
}

bool is_crisp(const FuzzyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.lattice().is_crisp(m(r, c))) return false;
  return true;
}

bool all_bottom(const FuzzyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.lattice().is_bottom(m(r, c))) return false;
  return true;
}

}  // namespace fuzzsim
