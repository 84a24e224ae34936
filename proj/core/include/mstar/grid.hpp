#pragma once

#include <cstdint>
#include <vector>

#include "mstar/matrix.hpp"

namespace mstar {

/// Tuple of 1-based indices into a product of index ranges {1..d1}x...x{1..dk}.
using GridPoint = std::vector<Index>;
using GridShape = std::vector<Index>;

/// Bijection between two index grids of equal total size.
///
/// The domain and codomain shapes usually coincide (a permutation of one
/// grid), but they may also be rearrangements of each other — the flip from
/// {1..m}x{1..n} onto {1..n}x{1..m} — or a reading of the same points under
/// a different grouping, such as the pairing {1..n}x{1..m} -> {1..nm}.
/// Internally the table maps row-major linear offsets of the domain onto
/// row-major linear offsets of the codomain; the row-major offset of a
/// 2-tuple is exactly pair_index(...) - 1, keeping every view consistent.
class GridPermutation {
 public:
  /// Validates that `table` hits every codomain offset exactly once.
  GridPermutation(GridShape domain, GridShape codomain,
                  std::vector<Index> table);

  static GridPermutation identity(GridShape shape);
  /// The flip {1..m}x{1..n} -> {1..n}x{1..m}, (a,b) -> (b,a).
  static GridPermutation flip(Index m, Index n);
  /// Regrouping of the same linear range under a different shape, e.g.
  /// (n,m) -> (nm): the identity on offsets. Row-major shapes make this
  /// the index pairing used throughout.
  static GridPermutation regroup(GridShape from, GridShape to);

  const GridShape& domain_shape() const { return domain_; }
  const GridShape& codomain_shape() const { return codomain_; }
  Index size() const { return static_cast<Index>(table_.size()); }

  GridPoint apply(const GridPoint& p) const;
  Index apply_offset(Index off) const { return table_.at(off); }

  GridPermutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const GridPermutation& a, const GridPermutation& b);
  friend bool operator!=(const GridPermutation& a, const GridPermutation& b) {
    return !(a == b);
  }

  /// Offset <-> tuple conversions for a shape.
  static Index offset_of(const GridShape& shape, const GridPoint& p);
  static GridPoint point_at(const GridShape& shape, Index off);

 private:
  GridShape domain_;
  GridShape codomain_;
  std::vector<Index> table_;  // 0-based domain offset -> codomain offset
};

/// g after f; requires f's codomain shape to equal g's domain shape.
GridPermutation compose(const GridPermutation& g, const GridPermutation& f);

/// Act with p on two chosen slots of a larger grid, identity elsewhere.
/// p must be a bijection of (shape[slot_a], shape[slot_b]) onto itself.
GridPermutation lift_to_slots(const GridPermutation& p, const GridShape& shape,
                              std::size_t slot_a, std::size_t slot_b);

/// The 0/1 matrix sending basis column (domain point t) to basis row
/// (codomain point p(t)); rows and columns are flattened through the
/// row-major pairing of the respective shapes. Always unitary.
SparseMatrix perm_to_matrix(const GridPermutation& p);

}  // namespace mstar
