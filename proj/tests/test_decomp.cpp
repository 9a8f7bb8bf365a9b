#include <doctest.h>

#include <sstream>

#include "maxcurves/decomp.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mc;

TEST_CASE("maximality verdicts") {
  CHECK(maximality(232, 11, 5).verdict == Verdict::Maximal);
  CHECK(maximality(12, 11, 5).verdict == Verdict::Minimal);
  CHECK(maximality(122, 11, 5).verdict == Verdict::Neither);
  CHECK_THROWS_AS(maximality(233, 11, 5), HasseViolation);
  CHECK(maximality(9702, 89, 10).verdict == Verdict::Maximal);
}

TEST_CASE("genus-4 maximality rule") {
  CHECK(genus4_is_maximal(17));
  CHECK_FALSE(genus4_is_maximal(19));
  CHECK(genus4_is_maximal(71));
  CHECK_THROWS_AS(genus4_is_maximal(7), BadCharacteristic);
  // rule against the trace sum for every p below 2000
  for (u64 p : testutil::primes_upto(2000)) {
    if (p <= 7) continue;
    const Tower t(p, false);
    const auto g = build_genus4(p);
    const i64 tE = trace_of(p, ell_count(g.E, t.f1));
    const i64 tQ = trace_of(p, hyp_count(g.Q1, t.f1));
    const i64 a2 = 3 * ell_trace_lift(tE, p, 2) + ell_trace_lift(tQ, p, 2);
    CHECK(genus4_is_maximal(p) == (maximality(p * p + 1 - a2, p, 4).verdict == Verdict::Maximal));
  }
}

TEST_CASE("decomposition specs are genus consistent") {
  const auto g4 = build_genus4(17);
  const auto g5 = build_genus5(11, 0);
  const auto g10 = build_genus10(13, 2);
  for (const auto& s : {genus4_kr_spec(g4), genus4_split_spec(g4), genus5_kr_spec(g5), ca2_split_spec(g5),
                        genus5_split_spec(g5), ca3_split_spec(g5), genus10_split_spec(g10)}) {
    CHECK_MESSAGE(genus_consistent(s), s.name);
  }
  auto broken = genus4_split_spec(g4);
  broken.factors[0].second = 2;
  CHECK_FALSE(genus_consistent(broken));
}

TEST_CASE("trace identities at several levels") {
  for (u64 p : {11, 13, 17, 19, 23}) {
    const Tower t(p);
    const std::vector<unsigned> levels = {1, 2};
    if (p > 11) {
      const auto g4 = build_genus4(p);
      CHECK(verify_kr_identity(genus4_kr_spec(g4), t, levels).pass());
      CHECK(verify_kr_identity(genus4_split_spec(g4), t, levels).pass());
    }
    for (u64 a : {0, 1, 5}) {
      Genus5Family g5;
      try {
        g5 = build_genus5(p, a);
      } catch (const SingularModel&) {
        continue;
      }
      CHECK(verify_kr_identity(genus5_kr_spec(g5), t, {0, 1, 2}).pass());
      CHECK(verify_kr_identity(ca2_split_spec(g5), t, {1, 2}).pass());
      CHECK(verify_kr_identity(genus5_split_spec(g5), t, levels).pass());
      CHECK(verify_kr_identity(ca3_split_spec(g5), t, levels).pass());
    }
    CHECK(verify_kr_identity(genus10_split_spec(build_genus10(p, 2)), t, {0, 1}).pass());
  }
}

TEST_CASE("a wrong decomposition is detected") {
  const Tower t(13);
  const auto g5 = build_genus5(13, 1);
  auto s = genus5_split_spec(g5);
  s.factors[0].first = curve_ref("E1neg", 1, g5.E1neg);
  s.factors[0].second = 3;
  const auto g = build_genus5(13, 2);
  s.factors[1].first = curve_ref("Ca32'", 2, g.Ca32);
  CHECK_FALSE(verify_kr_identity(s, t, {1}).pass());
}

TEST_CASE("twist sign") {
  CHECK(twist_sign(3, 3) == 1);
  CHECK(twist_sign(3, -3) == -1);
  CHECK(twist_sign(0, 0) == 0);
  CHECK(twist_sign(2, 4) == 2);
}

TEST_CASE("genus-5 certification") {
  const Tower t(11);
  int certified = 0;
  for (const auto& k : special_k_values(11)) {
    auto c = genus5_certify(t, k);
    if (!c) continue;
    ++certified;
    CHECK(c->verdict.verdict == Verdict::Maximal);
    CHECK(c->verdict.N == 121 + 1 + 2 * 5 * 11);
    CHECK(c->tE1 == 0);
    CHECK(c->c0sign == 0);
    // the certified count is a direct count of the genus-5 curve
    CHECK(hyp_count(build_genus5(11, k.a).Ca, t.f2) == c->verdict.N);
  }
  CHECK(certified > 0);
}

TEST_CASE("genus-10 verdict and direct count") {
  const Tower t(89, false);
  const auto r = genus10_verdict(t, 58, true);
  CHECK(r.verdict.verdict == Verdict::Maximal);
  CHECK(r.verdict.N == 9702);
  REQUIRE(r.direct.has_value());
  CHECK(*r.direct == 9702);
  CHECK(r.consistent);
  const auto s = genus10_verdict(t, 57, true);
  CHECK(s.verdict.N == 8730);
  CHECK(*s.direct == 8730);
}

TEST_CASE("modular polynomial parsing") {
  const auto phi = phi3_load(std::string(MAXCURVES_DATA_DIR) + "/phi3.txt");
  CHECK(phi.level == 3);
  CHECK(phi.terms.size() == 17);
  const Fp f(11);
  CHECK(phi_eval(f, phi, 4, 0) == phi_eval(f, phi, 0, 4));
  auto bad = [](const std::string& s) {
    std::istringstream in(s);
    return phi_parse(in, 1);
  };
  CHECK_NOTHROW(bad("2 0 1\n1 1 -1\n1 0 1488\n0 0 -162000\n"));
  CHECK_THROWS_AS(bad("2 0 1\n1 1 x\n"), DataFormat);
  CHECK_THROWS_AS(bad("2 0 1\n0 2 1\n"), DataFormat);
  CHECK_THROWS_AS(bad("3 0 1\n"), DataFormat);
  CHECK_THROWS_AS(bad("1 1 1\n"), DataFormat);
  CHECK_THROWS_AS(bad("2 0\n"), DataFormat);
  CHECK_THROWS_AS(phi3_load("/nonexistent/phi3.txt"), DataFormat);
}

TEST_CASE("modular relation for special k") {
  const auto phi = phi3_load(std::string(MAXCURVES_DATA_DIR) + "/phi3.txt");
  for (u64 p : testutil::primes_upto(500)) {
    if (p < 11) continue;
    const Fp f(p);
    for (const auto& k : special_k_values(p)) {
      try {
        CHECK_MESSAGE(phi3_check(f, phi, k.k), "p=" << p << " k=" << k.k);
      } catch (const DegenerateParam&) {
      }
    }
  }
}
