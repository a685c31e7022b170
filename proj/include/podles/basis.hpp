#pragma once

#include <cstddef>
#include <vector>

#include "podles/halfint.hpp"
#include "podles/matrix.hpp"

namespace podles {

enum class Chirality : unsigned char { plus, minus };

/// Basis label of the spinor space: shell l (half-odd, l >= 1/2), weight m
/// with |m| <= l and l - m integer, and the chirality of the tower.
struct BasisIndex {
  HalfInt l;
  HalfInt m;
  Chirality chirality = Chirality::plus;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Finite truncation keeping the shells l = 1/2, 3/2, ..., shells - 1/2 of
/// both chirality towers, plus an interior margin.
///
/// Every identity checked downstream is at most quadratic in the sphere
/// generators and each generator moves l by at most one, so vectors
/// supported on l <= l_max - margin are mapped exactly as on the full
/// space. Residuals on that interior measure algebra, not truncation.
class Truncation {
 public:
  explicit Truncation(int shells, int margin = 2);

  int shells() const { return shells_; }
  int margin() const { return margin_; }
  HalfInt l_max() const { return halves(2 * shells_ - 1); }

  std::size_t block_dim() const;  // one chirality tower: n (n + 1)
  std::size_t dim() const { return 2 * block_dim(); }

  /// Deterministic ordering: plus tower first, shells ascending in l,
  /// m ascending from -l to l.
  std::vector<BasisIndex> enumerate() const;
  std::size_t position(const BasisIndex& idx) const;
  bool contains(HalfInt l, HalfInt m) const;

  HalfInt interior_l_max(int extra_margin = 0) const;
  bool is_interior(const BasisIndex& idx, int extra_margin = 0) const;

  /// 0/1 column mask of the interior at margin + extra_margin.
  /// Throws std::domain_error when the interior is empty.
  std::vector<unsigned char> interior_mask(int extra_margin = 0) const;

  /// Orthogonal projector onto the interior as an explicit matrix.
  la::Matrix interior_projector(int extra_margin = 0) const;

 private:
  int shells_;
  int margin_;
};

}  // namespace podles
