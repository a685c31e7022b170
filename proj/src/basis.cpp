#include "podles/basis.hpp"

#include <stdexcept>
#include <string>

namespace podles {

Truncation::Truncation(int shells, int margin) : shells_(shells), margin_(margin) {
  if (shells < 1) throw std::invalid_argument("truncation needs at least one shell");
  if (margin < 0) throw std::invalid_argument("interior margin must be non-negative");
}

std::size_t Truncation::block_dim() const {
  const auto n = static_cast<std::size_t>(shells_);
  return n * (n + 1);
}

std::vector<BasisIndex> Truncation::enumerate() const {
  std::vector<BasisIndex> out;
  out.reserve(dim());
  for (Chirality c : {Chirality::plus, Chirality::minus}) {
    for (int s = 0; s < shells_; ++s) {
      const HalfInt l = halves(2 * s + 1);
      for (HalfInt m = -l; m <= l; m += 1) out.push_back({l, m, c});
    }
  }
  return out;
}

bool Truncation::contains(HalfInt l, HalfInt m) const {
  if (l.is_integer() || l < halves(1) || l > l_max()) return false;
  return m >= -l && m <= l && (l - m).is_integer();
}

std::size_t Truncation::position(const BasisIndex& idx) const {
  if (!contains(idx.l, idx.m)) throw std::out_of_range("basis index outside truncation");
  const auto s = static_cast<std::size_t>((idx.l.twice() - 1) / 2);   // shell number, 0-based
  const auto offset = s * (s + 1);                                    // states below shell s
  const auto in_shell = static_cast<std::size_t>((idx.m + idx.l).twice() / 2);
  const std::size_t block = idx.chirality == Chirality::plus ? 0 : block_dim();
  return block + offset + in_shell;
}

HalfInt Truncation::interior_l_max(int extra_margin) const {
  return l_max() - HalfInt(margin_ + extra_margin);
}

bool Truncation::is_interior(const BasisIndex& idx, int extra_margin) const {
  return idx.l <= interior_l_max(extra_margin);
}

std::vector<unsigned char> Truncation::interior_mask(int extra_margin) const {
  if (interior_l_max(extra_margin) < halves(1)) {
    throw std::domain_error("interior is empty: shells = " + std::to_string(shells_) +
                            ", margin = " + std::to_string(margin_ + extra_margin));
  }
  std::vector<unsigned char> mask(dim(), 0);
  const auto basis = enumerate();
  for (std::size_t i = 0; i < basis.size(); ++i) mask[i] = is_interior(basis[i], extra_margin) ? 1 : 0;
  return mask;
}

la::Matrix Truncation::interior_projector(int extra_margin) const {
  const auto mask = interior_mask(extra_margin);
  la::Matrix p(dim(), dim());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) p(i, i) = la::Complex{1.0, 0.0};
  }
  return p;
}

}  // namespace podles
