#include "maxcurves/mapcheck.hpp"

#include <algorithm>
#include <type_traits>

namespace mc {

namespace {

template <class F>
RationalMap<F> make_map(std::string name, std::string branch, const CurveEq<F>& src, const CurveEq<F>& tgt,
                        std::vector<RatFn<F>> comps) {
  return {std::move(name), std::move(branch), src, tgt, std::move(comps)};
}

// Both square roots of v, or DegenerateParam when v is a non-square in F.
template <class F>
std::vector<typename F::E> both_roots(const F& f, const typename F::E& v, const std::string& what) {
  auto r = f.sqrt(v);
  if (!r) throw DegenerateParam(what + " does not exist in a field of size " + std::to_string(f.size()));
  if (f.is_zero(*r)) return {*r};
  return {*r, f.neg(*r)};
}

template <class F>
RationalMap<F> auto_map(const F& f, std::string name, const CurveEq<F>& C, std::string_view X, std::string_view Xd,
                        std::string_view Y, std::string_view Yd, const Bindings<F>& b = {}) {
  return make_map<F>(std::move(name), "", C, C, {ratfn(f, X, Xd, b), ratfn(f, Y, Yd, b)});
}

constexpr const char* kPsiA1 =
    "1/2*x^8 - 3/2*x^7 + 21/8*x^6 - 1/4*x^5*y - 13/4*x^5 + 3/8*x^4*y + 17/4*x^4 + 1/8*x^3*y - 13/4*x^3"
    " + 1/8*x^2*y + 21/8*x^2 + 3/8*x*y - 3/2*x - 1/4*y + 1/2";
constexpr const char* kPsiA2 = "x^6 - 3/2*x^5 + x^4 + 1/2*x^3*y - 1/2*x^3 - 1/2*x^2*y";
constexpr const char* kPsiA3 = "x^6 - 2*x^5 + 2*x^4 - 2*x^3 + x^2";

constexpr const char* kThetaP1 =
    "2304*x^5 + 9216*x^4 - 2880*x^3 + 1152*x^2*y - 17856*x^2 + 2880*x*y + 11520*x + 720*y - 2304";
constexpr const char* kThetaP2 =
    "248832*x^5 + 995328*x^4 + 55296*x^3*y - 311040*x^3 + 207360*x^2*y - 1928448*x^2 + 103680*x*y + 27648*y^2"
    " + 1244160*x - 55296*y - 248832";
constexpr const char* kThetaPP1 =
    "36864*x^5*y + 184320*x^4*y + 175104*x^3*y - 36864*x^2*y - 4176*y^3 - 46080*x*y + 18432*y";
constexpr const char* kThetaPP2 =
    "84934656*x^5 - 442368*x^3*y^2 + 424673280*x^4 - 2654208*x^2*y^2 + 403439616*x^3 - 5640192*x*y^2"
    " - 84934656*x^2 - 10506240*y^2 - 106168320*x + 42467328";

constexpr const char* kPhiX =
    "2^5*X^3*Y^5 - 2^4*3*X^2*Y^6 - 2^4*X*Y^7 + 2^5*Y^8 + 2^3*X^3*Y^4 - 2^3*7*X^2*Y^5 + 2^3*X*Y^6 + 2^3*5*Y^7"
    " + 2^6*X^3*Y^3 - 2^4*7*X^2*Y^4 - 2^3*3^2*X*Y^5 + 2^5*7*Y^6 + 2^3*X^3*Y^2 - 2^4*7*X^2*Y^3 - 2*19*X*Y^4"
    " + 2*97*Y^5 + 2^5*X^3*Y - 2^3*7*X^2*Y^2 - 2^3*3^2*X*Y^3 + 2*3^2*17*Y^4 - 2^4*3*X^2*Y + 2^3*X*Y^2"
    " + 2^3*7*Y^3 - 2^4*X*Y + 2^3*3*5*Y^2";
constexpr const char* kPhiZ = "2^6*(Y^7 - 3/2*Y^6 + 15/4*Y^5 + 1/4*Y^4 + 15/4*Y^3 - 3/2*Y^2 + Y)";

}  // namespace

template <class F>
std::vector<MapCase<F>> genus4_maps(const F& f, const Genus4Family& g) {
  using E = typename F::E;
  const auto C = curve_eq(f, "C", g.C);
  const auto G = curve_eq(f, "G", g.G);
  const auto C1 = curve_eq(f, "C1", g.C1);
  const auto C2 = curve_eq(f, "C2", g.C2);
  const auto Ecur = curve_eq(f, "E", g.E);
  const auto Hx = curve_eq(f, "Hx", g.Hx);
  const auto S = curve_eq(f, "sextic", g.sextic);
  const auto E1p = curve_eq(f, "E1'", g.E1p);
  const auto E2p = curve_eq(f, "E2'", g.E2p);
  const auto sextic1 = curve_eq(f, "sextic1", HyperellipticModel{g.p, g.sextic1, {}});
  const auto sextic2 = curve_eq(f, "sextic2", HyperellipticModel{g.p, g.sextic2, {}});
  const CurveEq<F> R1{"R1", bipoly_lift(f, g.R1), {}};
  const CurveEq<F> L{"L", bipoly_lift(f, g.L), {}};
  const CurveEq<F> Rs{"Rs", bipoly_lift(f, g.Rs), {}};

  std::vector<MapCase<F>> out;
  auto single = [&](std::string name, const CurveEq<F>& s, const CurveEq<F>& t, std::vector<RatFn<F>> comps) {
    out.push_back({name, {make_map<F>(name, "", s, t, std::move(comps))}});
  };
  single("psi: G -> R1", G, R1, {ratfn(f, kPsiA1, kPsiA3), ratfn(f, kPsiA2, kPsiA3)});
  single("G -> C1", G, C1, {ratfn(f, "-(x - x^2)/4"), ratfn(f, "-y/16")});
  single("G -> C2", G, C2,
         {ratfn(f, "(x - x^2)/6 - 1/24", "-(x - x^2)^2 + (x - x^2)/2 - 1/16"),
          ratfn(f, "y*(2*x - 1)/36", "-(x - x^2)^2 + (x - x^2)/2 - 1/16")});
  single("theta: C2 -> C1", C2, C1,
         {ratfn(f, "x^3/4 - x/9", "(x + 2/9)^2"),
          ratfn(f, "x^3*y/8 + x^2*y/12 + x*y/18 - y/81", "(x + 2/9)^3")});
  single("C -> R1", C, R1, {ratfn(f, "x*(1 - x)"), ratfn(f, "y")});
  single("C -> L", C, L, {ratfn(f, "x*(1 - x) + y*(1 - y)"), ratfn(f, "x*(1 - y) + y*(1 - x)", "y*(1 - y)")});
  single("C -> Rs", C, Rs, {ratfn(f, "x + y"), ratfn(f, "x*y")});
  single("Hx -> L", Hx, L,
         {ratfn(f, "-2*x^4 + x^3 - 2*x^2", "x^5 + 2*x^3 + x"),
          ratfn(f, "(2*x^5 - 3*x^4 + x^3 - 2*x^2*y - 3*x^2 - x*y - y - 1)/2", "x^5 + 2*x^3 + x")});
  single("Hx -> sextic", Hx, S, {ratfn(f, "1", "x"), ratfn(f, "x^2 + x + 2*y", "x^3")});
  single("psi1 on sextic", S, S, {ratfn(f, "1", "x"), ratfn(f, "y", "x^3")});
  single("sextic -> sextic2", S, sextic2, {ratfn(f, "x^2 + 1", "x"), ratfn(f, "y*x^3 - y", "x^3")});
  single("theta'': sextic2 -> E2'", sextic2, E2p, {ratfn(f, kThetaPP1, "y^3"), ratfn(f, kThetaPP2, "y^3")});
  single("E2' -> E", E2p, Ecur,
         {ratfn(f, "x^3/20736 - 11*x^2/48 - 213*x + 720720", "x^2 - 864*x + 186624"),
          ratfn(f, "x^3*y/2985984 - x^2*y/2304 + 137*x*y/48 - 9371*y", "x^3 - 1296*x^2 + 559872*x - 80621568")});

  const std::vector<E> xis = both_roots(f, f.neg(f.one()), "sqrt(-1)");
  MapCase<F> to_s1{"sextic -> sextic1", {}};
  MapCase<F> theta1{"theta': sextic1 -> E1'", {}};
  MapCase<F> e1e{"E1' -> E", {}};
  for (const E& xi : xis) {
    const Bindings<F> b{{"xi", xi}};
    const std::string br = "xi=" + f.str(xi);
    to_s1.branches.push_back(
        make_map<F>(to_s1.name, br, S, sextic1, {ratfn(f, "x^2 + 1", "x"), ratfn(f, "xi*(y*x^3 + y)", "x^3", b)}));
    e1e.branches.push_back(make_map<F>(
        e1e.name, br, E1p, Ecur,
        {ratfn(f, "-x^3/20736 - x^2/16 + 837*x - 1123632", "x^2 - 2592*x + 1679616"),
         ratfn(f, "xi*(-x^3*y/2985984 + x^2*y/768 - 75*x*y/16 + 8073*y)",
               "-x^3 + 3888*x^2 - 5038848*x + 2176782336", b)}));
  }
  theta1.branches.push_back(make_map<F>(theta1.name, "", sextic1, E1p, {ratfn(f, kThetaP1, "y"), ratfn(f, kThetaP2, "y")}));
  out.push_back(std::move(to_s1));
  out.push_back(std::move(theta1));
  out.push_back(std::move(e1e));
  return out;
}

template <class F>
std::vector<RelationCase<F>> genus4_relations(const F& f, const Genus4Family& g) {
  RelationCase<F> rc{"Aut(C) generators", "", curve_eq(f, "C", g.C), {}, {}};
  auto gen = [&](const std::string& n, std::string_view X, std::string_view Xd, std::string_view Y,
                 std::string_view Yd) { rc.gens.emplace(n, auto_map(f, n, rc.curve, X, Xd, Y, Yd)); };
  gen("a1", "-1", "x - 1", "y", "1");
  gen("a2", "1", "x", "y", "1");
  gen("a3", "x", "1", "-1", "y - 1");
  gen("a4", "x", "1", "1", "y");
  gen("a5", "y", "1", "x", "1");
  gen("t1", "1 - x", "1", "y", "1");
  gen("t2", "x", "1", "1 - y", "1");
  gen("s", "y", "1", "x", "1");
  gen("g", "x", "1", "1 - y", "1");
  rc.relations = {
      {"a2^2 = 1", {"a2", "a2"}, {}},
      {"a4^2 = 1", {"a4", "a4"}, {}},
      {"a5^2 = 1", {"a5", "a5"}, {}},
      {"a1^3 = 1", {"a1", "a1", "a1"}, {}},
      {"a3^3 = 1", {"a3", "a3", "a3"}, {}},
      {"a2 a1 a2 = a1^2", {"a2", "a1", "a2"}, {"a1", "a1"}},
      {"a4 a3 a4 = a3^2", {"a4", "a3", "a4"}, {"a3", "a3"}},
      {"a5 a1 a5 = a3", {"a5", "a1", "a5"}, {"a3"}},
      {"a5 a2 a5 = a4", {"a5", "a2", "a5"}, {"a4"}},
      {"a1 a3 = a3 a1", {"a1", "a3"}, {"a3", "a1"}},
      {"a2 a4 = a4 a2", {"a2", "a4"}, {"a4", "a2"}},
      {"t1^2 = 1", {"t1", "t1"}, {}},
      {"s t1 s = t2", {"s", "t1", "s"}, {"t2"}},
      {"(s t1)^2 = t1 t2", {"s", "t1", "s", "t1"}, {"t1", "t2"}},
      {"g s g = s t1 t2", {"g", "s", "g"}, {"s", "t1", "t2"}},
      {"a2 a1 = a1 a2 (fails)", {"a2", "a1"}, {"a1", "a2"}, false},
  };
  return {rc};
}

template <class F>
std::vector<MapCase<F>> genus5_maps(const F& f, const Genus5Family& g) {
  using E = typename F::E;
  const auto Ca = curve_eq(f, "Ca", g.Ca);
  const auto Ca2 = curve_eq(f, "Ca2", g.Ca2);
  const auto Ca3 = curve_eq(f, "Ca3", g.Ca3);
  const auto Ca32 = curve_eq(f, "Ca32", g.Ca32);
  const auto E1 = curve_eq(f, "E1", g.E1);
  const auto E1n = curve_eq(f, "E1(-a)", g.E1neg);
  const auto W = curve_eq(f, "W", g.W);
  std::vector<MapCase<F>> out;
  auto single = [&](std::string name, const CurveEq<F>& s, const CurveEq<F>& t, std::vector<RatFn<F>> comps) {
    out.push_back({name, {make_map<F>(name, "", s, t, std::move(comps))}});
  };
  single("Ca -> Ca2", Ca, Ca2, {ratfn(f, "x^2"), ratfn(f, "y")});
  single("Ca -> Ca3", Ca, Ca3, {ratfn(f, "x^2"), ratfn(f, "x*y")});
  single("Ca2 -> E1", Ca2, E1, {ratfn(f, "-(x - 1)^2", "(x + 1)^2"), ratfn(f, "-2*y", "(x + 1)^3")});
  single("Ca2 -> E1(-a)", Ca2, E1n, {ratfn(f, "-(x + 1)^2", "(x - 1)^2"), ratfn(f, "2*y", "(x - 1)^3")});
  single("Ca3 -> W", Ca3, W, {ratfn(f, "x^2 + 1", "x"), ratfn(f, "-y", "x^2")});
  single("Ca3 -> Ca32", Ca3, Ca32, {ratfn(f, "x^2 + 1", "x"), ratfn(f, "x^2*y - y", "x^3")});
  single("beta2 on Ca2", Ca2, Ca2, {ratfn(f, "1", "x"), ratfn(f, "y", "x^3")});
  single("gamma2 on Ca3", Ca3, Ca3, {ratfn(f, "1", "x"), ratfn(f, "y", "x^4")});
  MapCase<F> tw{"E1 -> E1(-a)", {}};
  MapCase<F> ew{"E1 -> W", {}};
  for (const E& xi : both_roots(f, f.neg(f.one()), "sqrt(-1)")) {
    const Bindings<F> b{{"xi", xi}};
    const std::string br = "xi=" + f.str(xi);
    tw.branches.push_back(make_map<F>(tw.name, br, E1, E1n, {ratfn(f, "-x - 1"), ratfn(f, "xi*y", "1", b)}));
    ew.branches.push_back(make_map<F>(ew.name, br, E1, W, {ratfn(f, "-4*x - 2"), ratfn(f, "4*xi*y", "1", b)}));
  }
  out.push_back(std::move(tw));
  out.push_back(std::move(ew));
  return out;
}

namespace {

template <class F>
Bindings<F> k_bindings(const F& f, const typename F::E& k) {
  using E = typename F::E;
  auto c = [&](std::string_view s, const Bindings<F>& b) { return parse_const(f, s, b); };
  Bindings<F> b{{"k", k}};
  const E lam = c("(12 - k^2)/(2*k)", b);
  b.emplace_back("lam", lam);
  b.emplace_back("a", c("(lam^3 - 36*lam)/(lam^2 - 4)", b));
  b.emplace_back("mu", c("((k^2 + 12)/(2*k))^3", b));
  b.emplace_back("c0", c("k^4/4 - 10*k^2 + 36", b));
  b.emplace_back("c1", c("k^5/4 - 10*k^3 + 36*k", b));
  return b;
}

constexpr const char* kCa32 = "y^2 - (x^5 - a*x^4 - 40*x^3 + 8*a*x^2 + 144*x - 16*a)";
constexpr const char* kC0 = "y^2 - (x^3 + (k^5/2 - 36*k^3 + 264*k)/c0*x^2 + (-32*k^4 + 640*k^2)/c0*x + 512*k^3/c0)";
constexpr const char* kC1 = "y^2 - (x^3 + (-22*k^4 + 432*k^2 - 864)/c1*x^2 + (640*k^3 - 4608*k)/c1*x - 6144*k^2/c1)";

}  // namespace

template <class F>
std::vector<MapCase<F>> genus5_k_maps(const F& f, const typename F::E& k) {
  using E = typename F::E;
  Bindings<F> b = k_bindings(f, k);
  const E mu = b[3].second;
  const auto Ca32 = curve_eq(f, "Ca32", kCa32, b);
  const auto C0 = curve_eq(f, "C0", kC0, b);
  const auto C1 = curve_eq(f, "C1", kC1, b);
  MapCase<F> psi{"psi_i on Ca32", {}};
  MapCase<F> q0{"Ca32 -> C0", {}};
  MapCase<F> q1{"Ca32 -> C1", {}};
  for (const E& m : {mu, f.neg(mu)}) {
    Bindings<F> bm = b;
    bm.emplace_back("m", m);
    const std::string br = "mu=" + f.str(m);
    psi.branches.push_back(make_map<F>(psi.name, br, Ca32, Ca32,
                                       {ratfn(f, "lam*x + 12", "x - lam", bm), ratfn(f, "m*y", "(x - lam)^3", bm)}));
    const RatFn<F> X = ratfn(f, "x^2 + 12", "x - lam", bm);
    const RatFn<F> Y = ratfn(f, "((x - lam)*(lam^2 + 12) + m)*y", "(x - lam)^2*(lam^2 + 12)", bm);
    q0.branches.push_back(make_map<F>(q0.name, br, Ca32, C0, {X, Y}));
    q1.branches.push_back(make_map<F>(q1.name, br, Ca32, C1, {X, Y}));
  }
  const std::string den = "(x - 64*k/(k^2 - 36))";
  MapCase<F> iso{"C0 -> C1", {make_map<F>("C0 -> C1", "", C0, C1,
                                          {ratfn(f,
                                                 "4/k^2*x^3 + 32/k*x^2 - 3072/(k^2 - 36)*x + 98304*k/(k^2 - 36)^2",
                                                 den + "^2", b),
                                           ratfn(f,
                                                 "x*y*(8/k^3*x^2 - 1536/(k^2*(k^2 - 36))*x - 2048/(k^3 - 36*k))",
                                                 den + "^3", b)})}};
  return {psi, q0, q1, iso};
}

template <class F>
std::vector<MapCase<F>> genus5_k36_5_maps(const F& f) {
  using E = typename F::E;
  std::vector<MapCase<F>> out;
  for (const E& k : both_roots(f, parse_const(f, "36/5"), "sqrt(36/5)")) {
    const Bindings<F> b = k_bindings(f, k);
    const auto C0 = curve_eq(f, "C0", kC0, b);
    const auto E1 = curve_eq(f, "E1 (monic)", "y^2 - (x^3 + (a+6)/4*x^2 + (a-6)/4*x - 1)", b);
    const std::string name = "C0 -> E1 (k=" + f.str(k) + ")";
    out.push_back(
        {name,
         {make_map<F>(
             name, "", C0, E1,
             {ratfn(f,
                    "-360*x^3*k + 2160*x^3 + 14688*x^2*k - 36288*x^2 - 138240*x*k + 331776*x + 368640*k - 1105920",
                    "360*x^3*k - 1296*x^3 - 10368*x^2 - 69120*x*k + 82944*x + 92160*k - 552960", b),
              ratfn(f,
                    "y*(103680*x^4*k - 124416*x^4 - 1105920*x^3*k + 6635520*x^3 + 17694720*x^2*k"
                    " - 21233664*x^2 - 17694720*x*k + 106168320*x)",
                    "-6480*x^6*k + 12960*x^6 - 103680*x^5*k - 103680*x^4*k - 6842880*x^4 - 15482880*x^3*k"
                    " - 53084160*x^3 - 225607680*x^2*k - 79626240*x^2 - 2548039680*x - 1415577600*k",
                    b)})}});
  }
  return out;
}

template <class F>
std::vector<RelationCase<F>> genus5_relations(const F& f, const Genus5Family& g) {
  using E = typename F::E;
  std::vector<RelationCase<F>> out;
  for (const E& i : both_roots(f, f.neg(f.one()), "sqrt(-1)")) {
    const Bindings<F> b{{"i", i}};
    RelationCase<F> rc{"A4 x C2 on Ca", "i=" + f.str(i), curve_eq(f, "Ca", g.Ca), {}, {}};
    auto gen = [&](const std::string& n, std::string_view X, std::string_view Xd, std::string_view Y,
                   std::string_view Yd) { rc.gens.emplace(n, auto_map(f, n, rc.curve, X, Xd, Y, Yd, b)); };
    gen("a1", "x", "1", "-y", "1");
    gen("a2", "-x", "1", "y", "1");
    gen("a3", "1", "x", "y", "x^6");
    gen("b", "x - i", "x + i", "-8*i*y", "(x + i)^6");
    gen("b8", "x - i", "x + i", "8*i*y", "(x + i)^6");
    rc.relations = {
        {"a1^2 = 1", {"a1", "a1"}, {}},
        {"a2^2 = 1", {"a2", "a2"}, {}},
        {"a3^2 = 1", {"a3", "a3"}, {}},
        {"a2 a3 = a3 a2", {"a2", "a3"}, {"a3", "a2"}},
        {"b^3 = 1", {"b", "b", "b"}, {}},
        {"b^-1 a2 b = a3", {"b", "b", "a2", "b"}, {"a3"}},
        {"a1 b = b a1", {"a1", "b"}, {"b", "a1"}},
        {"beta8: beta^3 = a1", {"b8", "b8", "b8"}, {"a1"}},
        {"beta8: beta^3 = 1 (fails)", {"b8", "b8", "b8"}, {}, false},
    };
    out.push_back(std::move(rc));
  }
  return out;
}

MapOutcome verify_phi_projection(const Genus4Family& g, const SamplePlan& plan) {
  const Fp f(g.p);
  const CurveEq<Fp> Rs{"Rs", g.Rs, {}};
  const RatFn<Fp> xmap{parse_bipoly(f, kPhiX, "X", "Y"), parse_bipoly(f, kPhiZ, "X", "Y")};
  return verify_x_projection(f, "phi (abscissa): Rs -> E", Rs, xmap, g.E.f, plan);
}

std::vector<IsogenyPair> genus4_isogeny_pairs(const Genus4Family& g) {
  auto e = [](const char* n, const auto& m) { return curve_ref(n, 1, m); };
  return {{e("C1", g.C1), e("E", g.E)},       {e("C2", g.C2), e("C1", g.C1)},
          {e("E1'", g.E1p), e("E", g.E)},     {e("E2'", g.E2p), e("E", g.E)},
          {e("Q1", g.Q1), e("E1'", g.E1p)}, {e("Q2", g.Q2), e("E2'", g.E2p)}};
}

std::vector<IsogenyPair> genus5_isogeny_pairs(const Genus5Family& g) {
  return {{curve_ref("E1", 1, g.E1), curve_ref("E1(-a)", 1, g.E1neg)}, {curve_ref("E1", 1, g.E1), curve_ref("W", 1, g.W)}};
}

std::vector<IsogenyPair> genus5_k_isogeny_pairs(const Fp& f, const SpecialK& k) {
  const C0C1 c = build_c0c1(f, k.k);
  std::vector<IsogenyPair> out{{curve_ref("C0", 1, c.C0), curve_ref("C1", 1, c.C1)}};
  const Genus5Family g = build_genus5(f.p(), k.a);
  out.push_back({curve_ref("C0", 1, c.C0), curve_ref("E1", 1, g.E1)});
  return out;
}

bool MapSuiteReport::pass() const {
  auto ok = [](const auto& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& o) {
      if constexpr (std::is_same_v<std::decay_t<decltype(o)>, MapOutcome>) {
        return o.pass;
      } else {
        return o.second;
      }
    });
  };
  return ok(maps) && ok(relations) && ok(isogeny_traces);
}

namespace {

template <class F>
void run_cases(const F& f, const std::vector<MapCase<F>>& cases, const SamplePlan& plan, MapSuiteReport& r) {
  for (const auto& c : cases) r.maps.push_back(verify_map(f, c.branches, plan));
}

template <class F>
void run_relations(const F& f, const std::vector<RelationCase<F>>& cases, const SamplePlan& plan,
                   MapSuiteReport& r) {
  for (const auto& c : cases) {
    for (auto o : verify_relations(f, c.curve, c.gens, c.relations, plan)) {
      if (!c.branch.empty()) o.branch = c.branch;
      r.relations.push_back(std::move(o));
    }
  }
}

void run_pairs(const Tower& t, const std::vector<IsogenyPair>& pairs, MapSuiteReport& r) {
  for (const auto& pr : pairs) {
    const bool eq = trace_at(pr.a, t, pr.level) == trace_at(pr.b, t, pr.level);
    r.isogeny_traces.emplace_back(pr.a.name + " ~ " + pr.b.name, eq);
  }
}

template <class Fn>
void at_level(const Tower& t, unsigned level, Fn&& fn) {
  switch (level) {
    case 0: fn(t.f1); break;
    case 1: fn(t.f2); break;
    case 2: fn(t.quartic()); break;
    default: throw ConfigError("field level must be 0, 1 or 2");
  }
}

}  // namespace

MapSuiteReport run_genus4_suite(const Tower& t, const SamplePlan& plan) {
  const Genus4Family g = build_genus4(t.p());
  MapSuiteReport r;
  at_level(t, plan.level, [&](const auto& f) {
    run_cases(f, genus4_maps(f, g), plan, r);
    run_relations(f, genus4_relations(f, g), plan, r);
  });
  r.maps.push_back(verify_phi_projection(g, plan));
  run_pairs(t, genus4_isogeny_pairs(g), r);
  return r;
}

MapSuiteReport run_genus5_suite(const Tower& t, u64 a, const SamplePlan& plan) {
  const Genus5Family g = build_genus5(t.p(), a);
  MapSuiteReport r;
  at_level(t, plan.level, [&](const auto& f) {
    run_cases(f, genus5_maps(f, g), plan, r);
    run_relations(f, genus5_relations(f, g), plan, r);
  });
  run_pairs(t, genus5_isogeny_pairs(g), r);
  return r;
}

MapSuiteReport run_genus5_k_suite(const Tower& t, const SpecialK& k, const SamplePlan& plan) {
  MapSuiteReport r;
  at_level(t, plan.level, [&](const auto& f) {
    run_cases(f, genus5_k_maps(f, f.embed(k.k)), plan, r);
    if (k.tag == KTag::K36_5) run_cases(f, genus5_k36_5_maps(f), plan, r);
  });
  run_pairs(t, genus5_k_isogeny_pairs(t.f1, k), r);
  return r;
}

#define MC_INSTANTIATE(F)                                                                             \
  template std::vector<MapCase<F>> genus4_maps(const F&, const Genus4Family&);                        \
  template std::vector<RelationCase<F>> genus4_relations(const F&, const Genus4Family&);              \
  template std::vector<MapCase<F>> genus5_maps(const F&, const Genus5Family&);                        \
  template std::vector<MapCase<F>> genus5_k_maps(const F&, const typename F::E&);                     \
  template std::vector<MapCase<F>> genus5_k36_5_maps(const F&);                                       \
  template std::vector<RelationCase<F>> genus5_relations(const F&, const Genus5Family&);

MC_INSTANTIATE(Fp)
MC_INSTANTIATE(Fp2)
MC_INSTANTIATE(Fp4)

}  // namespace mc
