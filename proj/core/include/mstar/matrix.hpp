#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "mstar/scalar.hpp"

namespace mstar {

using Index = std::int64_t;

/// Row-major pairing of a double index, (i,j) in {1..n}x{1..m} -> {1..nm}.
/// This single convention identifies a tensor product of matrix algebras
/// with one matrix algebra everywhere in the library.
Index pair_index(Index n, Index m, Index i, Index j);
std::pair<Index, Index> unpair_index(Index n, Index m, Index flat);

/// Triple version, (i,j,k) -> {1..nml}, consistent with nesting pair_index
/// either way: pair(nm,l, pair(n,m,i,j), k) == pair(n,ml, i, pair(m,l,j,k)).
Index triple_index(Index n, Index m, Index l, Index i, Index j, Index k);

/// Sparse square matrix over Gaussian rationals, 1-based indices.
/// Invariants: stored entries are nonzero; indices lie in 1..dim.
class SparseMatrix {
 public:
  using EntryMap = std::map<std::pair<Index, Index>, Scalar>;

  explicit SparseMatrix(Index dim);

  /// Matrix unit: single entry 1 at (i,j).
  static SparseMatrix unit(Index n, Index i, Index j);
  static SparseMatrix identity(Index n);
  static SparseMatrix zero(Index n) { return SparseMatrix(n); }

  Index dim() const { return dim_; }
  Index nnz() const { return static_cast<Index>(entries_.size()); }
  const EntryMap& entries() const { return entries_; }

  /// Entry at (i,j); zero when absent.
  Scalar at(Index i, Index j) const;
  /// Accumulate into (i,j), pruning the entry when the sum is zero.
  void add_at(Index i, Index j, const Scalar& v);
  void set_at(Index i, Index j, const Scalar& v);

  bool is_zero() const { return entries_.empty(); }
  bool is_identity() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Scalar& c, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) {
    return !(a == b);
  }

 private:
  Index dim_;
  EntryMap entries_;
};

/// Conjugate transpose.
SparseMatrix adjoint(const SparseMatrix& a);

/// Kronecker product under the row/column pairing (i,k) -> m(i-1)+k,
/// so the result of M_n (x) M_m lives in M_{nm}.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Flip of tensor legs: the linear extension of
///   E(n)_{i,j} (x) E(m)_{k,l}  ->  E(m)_{k,l} (x) E(n)_{i,j},
/// taking an element of M_n (x) M_m to one of M_m (x) M_n.
SparseMatrix flip_tensor(Index n, Index m, const SparseMatrix& x);

/// Pair of tensor slots an operator is embedded into.
enum class Legs { one_two, one_three, two_three };

/// Embed x, living on the two named legs of C^n (x) C^m (x) C^l, as an
/// operator on the full triple product with identity on the remaining leg.
SparseMatrix embed_legs(Index n, Index m, Index l, Legs legs,
                        const SparseMatrix& x);

}  // namespace mstar
