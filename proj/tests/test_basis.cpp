#include <stdexcept>

#include <doctest.h>

#include "podles/basis.hpp"
#include "podles/matrix.hpp"

using podles::BasisIndex;
using podles::Chirality;
using podles::halves;
using podles::Truncation;
namespace la = podles::la;

TEST_CASE("single shell enumeration") {
  const Truncation t(1);
  CHECK(t.dim() == 4);
  const auto basis = t.enumerate();
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == BasisIndex{halves(1), halves(-1), Chirality::plus});
  CHECK(basis[1] == BasisIndex{halves(1), halves(1), Chirality::plus});
  CHECK(basis[2] == BasisIndex{halves(1), halves(-1), Chirality::minus});
  CHECK(basis[3] == BasisIndex{halves(1), halves(1), Chirality::minus});
}

TEST_CASE("dimension formula 2 n (n+1)") {
  CHECK(Truncation(2).dim() == 12);
  CHECK(Truncation(20).dim() == 840);
  for (int n = 1; n <= 64; ++n) {
    CHECK(Truncation(n).dim() == 2 * static_cast<std::size_t>(n) * (n + 1));
  }
}

TEST_CASE("position inverts enumeration") {
  for (int n : {1, 2, 3, 7, 16}) {
    const Truncation t(n);
    const auto basis = t.enumerate();
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(t.position(basis[i]) == i);
  }
}

TEST_CASE("contains rejects labels outside the tower") {
  const Truncation t(3);
  CHECK(t.contains(halves(1), halves(1)));
  CHECK(t.contains(halves(5), halves(-5)));
  CHECK(!t.contains(halves(7), halves(1)));     // beyond the top shell
  CHECK(!t.contains(halves(3), halves(5)));     // |m| > l
  CHECK(!t.contains(podles::HalfInt(1), podles::HalfInt(0)));  // integer spin
  CHECK(!t.contains(halves(3), podles::HalfInt(1)));           // l - m not integer
  CHECK_THROWS_AS(t.position({halves(7), halves(1), Chirality::plus}), std::out_of_range);
}

TEST_CASE("interior projector") {
  const Truncation t(4);  // margin 2: shells 1/2, 3/2 survive
  const la::Matrix p = t.interior_projector();

  std::size_t rank = 0;
  for (std::size_t i = 0; i < t.dim(); ++i) rank += p(i, i).real() > 0.5 ? 1 : 0;
  CHECK(rank == 12);

  CHECK(la::max_abs(la::subtract(la::multiply(p, p), p)) == 0.0);   // idempotent
  CHECK(la::max_abs(la::subtract(la::adjoint(p), p)) == 0.0);       // selfadjoint

  CHECK_THROWS_AS(Truncation(1).interior_projector(), std::domain_error);
  CHECK_THROWS_AS(Truncation(4).interior_projector(2), std::domain_error);
  CHECK_NOTHROW(Truncation(4).interior_projector(1));
}

TEST_CASE("interior mask matches the shell cut") {
  const Truncation t(6, 2);
  const auto basis = t.enumerate();
  const auto mask = t.interior_mask();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(static_cast<bool>(mask[i]) == (basis[i].l <= halves(7)));
  }
}

TEST_CASE("truncation validation") {
  CHECK_THROWS_AS(Truncation(0), std::invalid_argument);
  CHECK_THROWS_AS(Truncation(4, -1), std::invalid_argument);
}
