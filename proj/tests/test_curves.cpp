#include <doctest.h>

#include <random>

#include "maxcurves/catalog.hpp"
#include "maxcurves/curves.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mc;

TEST_CASE("elliptic counts") {
  const Tower t5(5);
  const auto E = make_elliptic(t5.f1, "x^3 + x");
  CHECK(ell_count(E, t5.f1) == 4);
  CHECK(ell_count(E, t5.f2) == 32);
  CHECK(ell_trace_lift(trace_of(5, 4), 5, 2) == trace_of(25, 32));
  CHECK(is_supersingular(make_elliptic(t5.f1, "x^3 + 1"), t5.f1));
  CHECK(ell_count(build_genus4(17).E, Fp(17)) == 18);
  const Fp f(101);
  CHECK(j_invariant(make_elliptic(f, "x^3 + 1"), f) == 0);
  CHECK(j_invariant(make_elliptic(f, "x^3 + x"), f) == 1728 % 101);
  CHECK_THROWS_AS(make_elliptic(f, "x^3"), SingularModel);
  CHECK_THROWS_AS(make_elliptic(f, "x^2 + 1"), SingularModel);
}

TEST_CASE("hyperelliptic counts and genus") {
  const Fp f11(11);
  CHECK(hyp_count(build_genus5(11, 0).Ca2, f11) == 12);
  CHECK(hyp_count(build_genus4(17).G, Fp(17)) == 18);
  const Fp f(101);
  CHECK(hyperelliptic_genus(f, make_hyperelliptic(f, genus5_polynomial(f, u64{1}))) == 5);
  CHECK(hyperelliptic_genus(f, make_hyperelliptic(f, "x^6 + 3*x + 1")) == 2);
  CHECK(hyperelliptic_genus(f, make_hyperelliptic(f, "x^7 + 3*x + 1")) == 3);
  const auto H = make_hyperelliptic(f, "x^3", "1");
  CHECK(completed_rhs(f, H) == parse_poly(f, "4*x^3 + 1"));
  CHECK_THROWS_AS(make_hyperelliptic(f, "(x^2+1)^2*(x^2+3)"), SingularModel);
}

TEST_CASE("separated and plane counts") {
  const Fp f5(5);
  const auto S = make_separated(f5, parse_poly(f5, "x^2"), parse_poly(f5, "1"), parse_poly(f5, "x^2"),
                                parse_poly(f5, "1"), 1);
  CHECK(separated_count_affine(S, f5) == 4);
  const Fp f7(7);
  CHECK(plane_count(make_plane(f7, "x + y"), f7) == 8);
}

TEST_CASE("genus-10 plane count over F_{251^2}") {
  const Tower t(251, false);
  CHECK(plane_count(build_genus10(251, 3).U, t.f2) == 68022);
}

TEST_CASE("Hasse bound") {
  CHECK_NOTHROW(check_hasse(121, 110, 5));
  CHECK_THROWS_AS(check_hasse(121, 111, 5), HasseViolation);
  CHECK_THROWS_AS(make_trace(11, 30, 1), HasseViolation);
  const auto td = make_trace(11, 12, 1);
  CHECK(td.a1 == 0);
}

TEST_CASE("quadratic twist negates the trace") {
  std::mt19937_64 rng(21);
  for (u64 p : {11, 13, 101, 499}) {
    const Fp f(p);
    for (int i = 0; i < 10; ++i) {
      auto cubic = testutil::random_poly(f, 3, rng);
      EllipticModel E;
      try {
        E = make_elliptic(f, cubic);
      } catch (const SingularModel&) {
        continue;
      }
      const auto Et = make_elliptic(f, poly_scale(f, cubic, f.nonresidue()));
      CHECK(trace_of(p, ell_count(E, f)) == -trace_of(p, ell_count(Et, f)));
      // a square twist changes nothing
      const auto Es = make_elliptic(f, poly_scale(f, cubic, u64{4}));
      CHECK(ell_count(E, f) == ell_count(Es, f));
    }
  }
}

TEST_CASE("completing the square preserves counts") {
  std::mt19937_64 rng(4);
  for (u64 p : {7, 13, 29}) {
    const Tower t(p);
    for (int i = 0; i < 10; ++i) {
      HyperellipticModel H;
      try {
        H = make_hyperelliptic(t.f1, testutil::random_poly(t.f1, 5 + static_cast<int>(rng() % 2), rng),
                               testutil::random_poly(t.f1, 2, rng));
      } catch (const SingularModel&) {
        continue;
      }
      const auto C = complete_square(t.f1, H);
      CHECK(hyp_count(H, t.f1) == hyp_count(C, t.f1));
      CHECK(hyp_count(H, t.f2) == hyp_count(C, t.f2));
    }
  }
}

TEST_CASE("direct F_{p^2} count equals the lifted trace") {
  std::mt19937_64 rng(8);
  for (u64 p : testutil::primes_upto(200)) {
    const Tower t(p, false);
    auto cubic = testutil::random_poly(t.f1, 3, rng);
    EllipticModel E;
    try {
      E = make_elliptic(t.f1, cubic);
    } catch (const SingularModel&) {
      continue;
    }
    const i64 a1 = trace_of(p, ell_count(E, t.f1));
    CHECK(trace_of(p * p, ell_count(E, t.f2)) == ell_trace_lift(a1, p, 2));
    CHECK(ell_trace(E, t.f1).a2 == ell_trace_lift(a1, p, 2));
  }
}

TEST_CASE("counts agree with brute force on random models") {
  std::mt19937_64 rng(17);
  for (u64 p : {3, 5, 7, 11, 23}) {
    const Tower t(p);
    for (unsigned n : {1u, 2u}) {
      if (n == 2 && p > 23) continue;
      const oracle::Field F(static_cast<int>(p), static_cast<int>(n));
      auto count = [&](const CurveModel& m) -> i64 {
        return static_cast<i64>(n == 1 ? count_points(m, t.f1) : count_points(m, t.f2));
      };
      for (int i = 0; i < 6; ++i) {
        try {
          const CurveModel h = make_hyperelliptic(t.f1, testutil::random_poly(t.f1, 3 + static_cast<int>(rng() % 4), rng),
                                                  testutil::random_poly(t.f1, static_cast<int>(rng() % 3), rng));
          CHECK(count(h) == testutil::oracle_count(F, h));
        } catch (const SingularModel&) {
        } catch (const BadCharacteristic&) {
        }
      }
      // b^3 + 27 = 35 vanishes mod 5 and 7
      const CurveModel pl = make_plane(t.f1, "x^3 + y^3 + 1 + 2*x*y");
      if (p != 5 && p != 7) {
        CHECK(count(pl) == testutil::oracle_count(F, pl));
      } else {
        CHECK_THROWS_AS(count(pl), SingularModel);
      }
    }
  }
}

TEST_CASE("smoothness test on the genus-10 family") {
  // singular exactly when b^3 = -27
  for (u64 p : {7, 13, 19, 31}) {
    const Fp f(p);
    for (u64 b = 0; b < p; ++b) {
      const auto P = make_plane(f, "x^6 + y^6 + 1 + b*x^2*y^2", Bindings<Fp>{{"b", b}});
      CHECK_MESSAGE(plane_is_nonsingular(P) == ((b * b * b + 27) % p != 0), "p=" << p << " b=" << b);
    }
  }
  CHECK_FALSE(plane_is_nonsingular(make_plane(Fp(101), "y^2 - x^3")));
  CHECK_FALSE(plane_is_nonsingular(make_plane(Fp(101), "y^2 - x^2*(x+1)")));
  CHECK(plane_is_nonsingular(make_plane(Fp(101), "y^2 - x^3 - x - 1")));
}
