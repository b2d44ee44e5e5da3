#include <doctest.h>

#include "k3glue/wehler.hpp"

using namespace k3glue;

TEST_SUITE_BEGIN("wehler");

TEST_CASE("model gram data") {
  WehlerModel w;
  CHECK(w.lattice()->gram() == IntMat(3, 3, {0, 2, 2, 2, 0, 2, 2, 2, 0}));
  CHECK(self_intersection(w.reference_ample()) == 12);
}

TEST_CASE("involution pullbacks") {
  WehlerModel w;
  Isometry i12 = involution_pullback(w, 1, 2);
  CHECK(apply_isometry(i12, w.fiber_class(3)).coords == IntVec{2, 2, -1});
  CHECK(apply_isometry(i12, w.fiber_class(1)).coords == IntVec{1, 0, 0});
  CHECK(compose(i12, i12).matrix.is_identity());
  Isometry i13 = involution_pullback(w, 1, 3);
  CHECK(apply_isometry(i13, w.fiber_class(2)).coords == IntVec{2, -1, 2});
  CHECK_THROWS_AS(involution_pullback(w, 2, 2), InputError);
  CHECK_THROWS_AS(involution_pullback(w, 0, 2), InputError);
  CHECK_THROWS_AS(involution_pullback(w, 2, 1), InputError);
}

TEST_CASE("closed-form power matches iterated composition") {
  WehlerModel w;
  CHECK(power_closed_form(w, 0).matrix.is_identity());
  CHECK(power_closed_form(w, 1).matrix == IntMat(3, 3, {1, 2, 6, 0, -1, -2, 0, 2, 3}));
  Isometry iota = iota_pullback(w);
  Isometry acc = Isometry::identity(w.lattice());
  for (int a = 1; a <= 10; ++a) {
    acc = compose(acc, iota);
    CHECK(acc.matrix == power_closed_form(w, a).matrix);
  }
}

TEST_CASE("exponent law and inversion for the closed form") {
  WehlerModel w;
  for (int a = -20; a <= 20; ++a) {
    Isometry pa = power_closed_form(w, a);  // constructor verifies gram preservation
    CHECK((pa.matrix * power_closed_form(w, -a).matrix).is_identity());
    for (int b = -20; b <= 20; ++b) {
      CHECK(compose(pa, power_closed_form(w, b)).matrix ==
            power_closed_form(w, a + b).matrix);
    }
  }
}

TEST_CASE("generic isometry powers agree with the closed form") {
  WehlerModel w;
  Isometry iota = iota_pullback(w);
  for (int a = -10; a <= 10; ++a)
    CHECK(iota.power(a).matrix == power_closed_form(w, a).matrix);
}

TEST_CASE("order and growth classification") {
  WehlerModel w;
  OrderGrowth inv = order_and_growth(involution_pullback(w, 1, 2), 10);
  CHECK(inv.kind == OrderGrowth::Kind::finite);
  CHECK(inv.order == 2);

  OrderGrowth id = order_and_growth(Isometry::identity(w.lattice()), 10);
  CHECK(id.kind == OrderGrowth::Kind::finite);
  CHECK(id.order == 1);

  OrderGrowth iota = order_and_growth(iota_pullback(w), 12);
  CHECK(iota.kind == OrderGrowth::Kind::infinite_polynomial);
  CHECK(iota.growth_degree == 2);

  // the composite of all three involutions has exponential entry growth
  Isometry sigma = compose(iota_pullback(w), involution_pullback(w, 2, 3));
  OrderGrowth hyp = order_and_growth(sigma, 12);
  CHECK(hyp.kind == OrderGrowth::Kind::infinite_exponential);

  CHECK_THROWS_AS(order_and_growth(iota_pullback(w), 0), InputError);
}

TEST_CASE("family pullback discrepancy") {
  WehlerModel w;
  PullbackDiscrepancy disc = family_pullback_discrepancy(w);
  CHECK(disc.special_fiber.matrix.is_identity());
  CHECK(disc.difference_on_e3.coords == IntVec{2, 2, -2});
  DivisorClass e1 = w.fiber_class(1);
  CHECK((apply_isometry(disc.generic_fiber, e1) - apply_isometry(disc.special_fiber, e1))
            .is_zero());
  CHECK(self_intersection(disc.difference_on_e3) == -16);
}

TEST_SUITE_END();
