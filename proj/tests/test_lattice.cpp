#include <doctest.h>

#include <random>

#include "k3glue/oguiso.hpp"
#include "k3glue/wehler.hpp"

using namespace k3glue;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("pairing on the standard models") {
  WehlerModel w;
  CHECK(pairing(w.fiber_class(1), w.fiber_class(2)) == 2);
  CHECK(pairing(w.fiber_class(1), w.cls({0, 0, 0})) == 0);
  OguisoModel o;
  CHECK(pairing(o.v(), o.v()) == -20);
  CHECK(pairing(o.f(), o.e()) == 1);
  CHECK(pairing(o.f(), o.v()) == 0);
}

TEST_CASE("pairing rejects classes from different lattices") {
  WehlerModel w;
  OguisoModel o;
  CHECK_THROWS_AS(pairing(w.fiber_class(1), o.f()), LatticeMismatchError);
}

TEST_CASE("self intersection examples") {
  WehlerModel w;
  DivisorClass d = w.cls({1, 1, 1});
  // closed form 4(a1 a2 + a1 a3 + a2 a3) against the gram product
  CHECK(self_intersection(d) == 12);
  CHECK(self_intersection(d) == 4 * (1 + 1 + 1));
  // a=1 blow-up center class: 4(64a^2 - 8a + 48)
  CHECK(self_intersection(w.cls({19, -4, 12})) == 416);
  CHECK(416 == 4 * (64 - 8 + 48));
  OguisoModel o;
  CHECK(self_intersection(o.f()) == 0);
  CHECK(self_intersection(o.h()) == 4);
}

TEST_CASE("apply_isometry examples") {
  WehlerModel w;
  Isometry iota = iota_pullback(w);
  CHECK(apply_isometry(iota, w.fiber_class(2)).coords == IntVec{2, -1, 2});
  CHECK(apply_isometry(Isometry::identity(w.lattice()), w.cls({3, -1, 7})).coords ==
        IntVec{3, -1, 7});
  OguisoModel o;
  for (Int a = 1; a <= 10; ++a) {
    DivisorClass image = apply_isometry(o.translation_pullback(a), o.h());
    CHECK(image.coords == IntVec{30 * a * a + 20 * a + 4, 3, 3 * a + 1});
  }
}

TEST_CASE("composition follows the pullback convention") {
  WehlerModel w;
  Isometry i12 = involution_pullback(w, 1, 2);
  Isometry i13 = involution_pullback(w, 1, 3);
  // iota = iota_12 after iota_13 must give the quoted matrix
  Isometry iota = compose(i12, i13);
  CHECK(iota.matrix == IntMat(3, 3, {1, 2, 6, 0, -1, -2, 0, 2, 3}));
  CHECK(compose(iota, Isometry::identity(w.lattice())).matrix == iota.matrix);
  CHECK(compose(iota, iota).matrix == power_closed_form(w, 2).matrix);
}

TEST_CASE("isometry construction validates gram preservation") {
  WehlerModel w;
  CHECK_THROWS_AS(Isometry(w.lattice(), IntMat(3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1})), InputError);
  CHECK_THROWS_AS(Isometry(w.lattice(), IntMat(3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 2})), InputError);
}

TEST_CASE("lattice invariants are enforced") {
  CHECK_THROWS_AS(make_lattice("bad", IntMat(2, 2, {0, 1, 2, 0}), {}), InputError);
  CHECK_THROWS_AS(make_lattice("bad", IntMat(2, 3), {}), InputError);
  WehlerModel w;
  CHECK_THROWS_AS(DivisorClass(w.lattice(), IntVec{1, 2}), InputError);
}

TEST_CASE("pairing is symmetric and bilinear (randomized)") {
  WehlerModel w;
  OguisoModel o;
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(-8, 8);
  auto rand_cls = [&](const LatticePtr& lat) {
    IntVec c(lat->rank());
    for (Int& x : c) x = dist(rng);
    return DivisorClass(lat, c);
  };
  for (const LatticePtr& lat : {w.lattice(), o.lattice()}) {
    for (int trial = 0; trial < 500; ++trial) {
      DivisorClass a = rand_cls(lat), b = rand_cls(lat), c = rand_cls(lat);
      Int m = dist(rng), n = dist(rng);
      CHECK(pairing(a, b) == pairing(b, a));
      CHECK(pairing(m * a + n * b, c) == m * pairing(a, c) + n * pairing(b, c));
    }
  }
}

TEST_CASE("isometries preserve the pairing (randomized)") {
  WehlerModel w;
  OguisoModel o;
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dist(-10, 10);
  std::vector<Isometry> isos;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) isos.push_back(involution_pullback(w, i, j));
  for (int a = -4; a <= 4; ++a) isos.push_back(power_closed_form(w, a));
  std::vector<Isometry> oguiso_isos;
  for (int a = 1; a <= 4; ++a) oguiso_isos.push_back(o.translation_pullback(a));

  auto check_all = [&](const std::vector<Isometry>& family, const LatticePtr& lat) {
    for (const Isometry& m : family) {
      for (int trial = 0; trial < 100; ++trial) {
        IntVec cd(lat->rank()), ce(lat->rank());
        for (Int& x : cd) x = dist(rng);
        for (Int& x : ce) x = dist(rng);
        DivisorClass d(lat, cd), e(lat, ce);
        CHECK(pairing(apply_isometry(m, d), apply_isometry(m, e)) == pairing(d, e));
      }
    }
  };
  check_all(isos, w.lattice());
  check_all(oguiso_isos, o.lattice());
}

TEST_CASE("wehler self intersections are divisible by 4 (randomized)") {
  WehlerModel w;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    IntVec c{dist(rng), dist(rng), dist(rng)};
    CHECK(self_intersection(w.cls(c)) % 4 == 0);
  }
}

TEST_SUITE_END();
