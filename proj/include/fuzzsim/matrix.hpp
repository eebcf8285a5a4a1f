#ifndef FUZZSIM_MATRIX_HPP
#define FUZZSIM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fuzzsim/lattice.hpp"

namespace fuzzsim {

/// Dense fuzzy matrix over a residuated lattice. Fuzzy relations are
/// rows x cols matrices; fuzzy sets are 1 x n (row) or n x 1 (column)
/// matrices, so vector-matrix products are ordinary compositions.
///
/// Value semantics throughout; operations never mutate their arguments.
class FuzzyMatrix {
 public:
  FuzzyMatrix(Lattice lat, std::size_t rows, std::size_t cols);

  static FuzzyMatrix constant(const Lattice& lat, std::size_t rows, std::size_t cols,
                              const Value& v);
  static FuzzyMatrix ones(const Lattice& lat, std::size_t rows, std::size_t cols);
  static FuzzyMatrix zeros(const Lattice& lat, std::size_t rows, std::size_t cols);
  /// Crisp identity relation (1 on the diagonal, 0 elsewhere).
  static FuzzyMatrix identity(const Lattice& lat, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Lattice& lattice() const { return lat_; }

  const Value& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Value& v) { data_[r * cols_ + c] = v; }

  bool is_row_vector() const { return rows_ == 1; }
  bool is_column_vector() const { return cols_ == 1; }

 private:
  Lattice lat_;
  std::size_t rows_, cols_;
  std::vector<Value> data_;
};

/// Sup-otimes matrix product: (lhs o rhs)(a,c) = join_b lhs(a,b) (x) rhs(b,c).
FuzzyMatrix compose(const FuzzyMatrix& lhs, const FuzzyMatrix& rhs);

/// Transpose: converse(m)(b,a) = m(a,b).
FuzzyMatrix converse(const FuzzyMatrix& m);

FuzzyMatrix pointwise_meet(const FuzzyMatrix& a, const FuzzyMatrix& b);
FuzzyMatrix pointwise_join(const FuzzyMatrix& a, const FuzzyMatrix& b);

/// Entrywise order test a <= b (tolerance-aware on real lattices).
bool leq_rel(const FuzzyMatrix& a, const FuzzyMatrix& b);
bool equal_rel(const FuzzyMatrix& a, const FuzzyMatrix& b);

/// (eta -> xi)(a,b) = eta(a) -> xi(b), for row vectors eta (1x|A|) and
/// xi (1x|B|); the greatest solution chi of eta o chi <= xi.
FuzzyMatrix arrow_right(const FuzzyMatrix& eta, const FuzzyMatrix& xi);

/// (eta <- xi)(a,b) = xi(b) -> eta(a); equals converse(arrow_right(xi, eta));
/// the greatest solution chi of chi o xi <= eta.
FuzzyMatrix arrow_left(const FuzzyMatrix& eta, const FuzzyMatrix& xi);

/// (eta <-> xi)(a,b) = eta(a) <-> xi(b).
FuzzyMatrix arrow_bi(const FuzzyMatrix& eta, const FuzzyMatrix& xi);

/// Right residual (phi/alpha)(a,b) = meet_{a'} alpha(a',a) -> phi(a',b),
/// phi m x n, alpha m x m; the greatest chi with alpha o chi <= phi.
FuzzyMatrix right_residual(const FuzzyMatrix& phi, const FuzzyMatrix& alpha);

/// Left residual (phi\beta)(a,b) = meet_{b'} beta(b,b') -> phi(a,b'),
/// phi m x n, beta n x n; the greatest chi with chi o beta <= phi.
FuzzyMatrix left_residual(const FuzzyMatrix& phi, const FuzzyMatrix& beta);

/// Kernel: 1 where the entry equals 1 exactly, 0 elsewhere.
FuzzyMatrix crisp_part(const FuzzyMatrix& m);

bool is_crisp(const FuzzyMatrix& m);
bool all_bottom(const FuzzyMatrix& m);

}  // namespace fuzzsim

#endif
