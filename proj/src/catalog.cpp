#include "maxcurves/catalog.hpp"

#include <algorithm>

namespace mc {

namespace {

constexpr const char* kRelL =
    "16*x^6*y^4 - 40*x^5*y^4 - 32*x^5*y^3 + 32*x^5*y^2 + 32*x^4*y^6 - 80*x^4*y^5 + 185*x^4*y^4"
    " + 80*x^4*y^3 + 128*x^4*y^2 - 32*x^4*y + 16*x^4 - 40*x^3*y^6 - 124*x^3*y^5 - 24*x^3*y^4"
    " - 482*x^3*y^3 - 518*x^3*y^2 - 112*x^3*y - 104*x^3 + 16*x^2*y^8 - 48*x^2*y^7 + 212*x^2*y^6"
    " - 352*x^2*y^5 + 1184*x^2*y^4 - 916*x^2*y^3 + 2193*x^2*y^2 + 318*x^2*y + 425*x^2 - 32*x*y^7"
    " + 48*x*y^6 - 296*x*y^5 + 304*x*y^4 - 1076*x*y^3 + 524*x*y^2 - 1312*x*y - 832*x + 32*y^6"
    " - 64*y^5 + 308*y^4 - 488*y^3 + 1000*y^2 - 1024*y + 1024";

constexpr const char* kRelRs =
    "4*x^4*y^2 + 4*x^4 - 8*x^3*y^3 - 12*x^3*y^2 - 12*x^3*y - 8*x^3 + 4*x^2*y^4 + 8*x^2*y^3"
    " + 21*x^2*y^2 + 8*x^2*y + 4*x^2 + 12*x*y^4 + 14*x*y^3 + 14*x*y^2 + 12*x*y - 8*y^5 - 19*y^4"
    " - 38*y^3 - 19*y^2 - 8*y";

constexpr const char* kRelR1 =
    "4*(1-x)^3*y^2*(y-1)^2 + 4*(y^2-y+1)^3*x^2 - 27*x^2*y^2*(y-1)^2";

}  // namespace

Genus4Family build_genus4(u64 p) {
  if (p <= 7) throw BadCharacteristic("the genus-4 family needs p > 7");
  const Fp f(p);
  Genus4Family g;
  g.p = p;
  Poly<Fp> num = parse_poly(f, "4*(x^2-x+1)^3");
  Poly<Fp> den = parse_poly(f, "27*x^2*(x-1)^2");
  g.C = make_separated(f, num, den, num, den, 1);
  g.G = make_hyperelliptic(f, "4*x^6 - 12*x^5 + 21*x^4 - 22*x^3 + 21*x^2 - 12*x + 4");
  g.C1 = make_elliptic(f, "x^3 + 9/16*x^2 + 3/16*x + 1/64");
  g.C2 = make_elliptic(f, "x^3 + 11/12*x^2 + 1/9*x + 1/81");
  g.E = make_elliptic(f, "x^3 + 9/16*x^2 + 3/16*x + 1/64");
  g.Hx = make_hyperelliptic(f, "-x^6 - 3*x^5 - x^4 - 7*x^3 - x^2 - 3*x - 1", "x^2 + x");
  g.sextic = complete_square(f, g.Hx);
  g.sextic1 = parse_poly(f, "4*x^6 + 12*x^5 - 21*x^4 - 26*x^3 + 51*x^2 - 24*x + 4");
  g.sextic2 = parse_poly(f, "-4*x^6 - 12*x^5 + 21*x^4 + 42*x^3 - 3*x^2 - 12*x + 4");
  g.Q1 = make_hyperelliptic(f, "-(x+2)*(4*x^3 + 12*x^2 - 9*x + 2)");
  g.Q2 = make_hyperelliptic(f, "-(x-2)*(4*x^3 + 12*x^2 - 9*x + 2)");
  g.E1p = make_elliptic(f, "x^3 - 9517824*x + 11448262656");
  g.E2p = make_elliptic(f, "x^3 - 4541184*x + 4938817536");
  g.R1 = parse_bipoly(f, kRelR1);
  g.L = parse_bipoly(f, kRelL);
  g.Rs = parse_bipoly(f, kRelRs);
  return g;
}

template <class F>
u64 genus4_smooth_count(const SeparatedPlaneModel& C, const F& f) {
  return separated_count_affine(C, f) + static_cast<u64>(9 * (1 + f.chi(f.neg(f.one()))));
}

template u64 genus4_smooth_count<Fp>(const SeparatedPlaneModel&, const Fp&);
template u64 genus4_smooth_count<Fp2>(const SeparatedPlaneModel&, const Fp2&);
template u64 genus4_smooth_count<Fp4>(const SeparatedPlaneModel&, const Fp4&);

Genus5Family build_genus5(u64 p, u64 a) {
  const Fp f(p);
  if (p < 5) throw BadCharacteristic("the genus-5 family needs p >= 5");
  a = f.from_u64(a);
  if (f.add(f.sqr(a), f.from_int(108)) == 0) throw SingularModel("a^2 + 108 = 0");
  const Bindings<Fp> bind = {{"a", a}};
  Genus5Family g;
  g.p = p;
  g.a = a;
  g.Ca = make_hyperelliptic(f, genus5_polynomial(f, a));
  g.Ca2 = make_hyperelliptic(f, "x^6 - a*x^5 - 33*x^4 + 2*a*x^3 - 33*x^2 - a*x + 1", "", bind);
  g.Ca3 = make_hyperelliptic(f, "x*(x^6 - a*x^5 - 33*x^4 + 2*a*x^3 - 33*x^2 - a*x + 1)", "", bind);
  g.Ca32 = make_hyperelliptic(f, "x^5 - a*x^4 - 40*x^3 + 8*a*x^2 + 144*x - 16*a", "", bind);
  g.E1 = make_elliptic(f, "4*x^3 + (a+6)*x^2 + (a-6)*x - 4", bind);
  g.E1neg = make_elliptic(f, "4*x^3 + (6-a)*x^2 + (-a-6)*x - 4", bind);
  g.W = make_elliptic(f, "x^3 - a*x^2 - 36*x + 4*a", bind);
  return g;
}

template <class F>
Poly<F> genus5_polynomial(const F& f, const typename F::E& a) {
  return parse_poly(f, "x^12 - a*x^10 - 33*x^8 + 2*a*x^6 - 33*x^4 - a*x^2 + 1", "x", Bindings<F>{{"a", a}});
}

template Poly<Fp> genus5_polynomial<Fp>(const Fp&, const u64&);
template Poly<Fp2> genus5_polynomial<Fp2>(const Fp2&, const Fp2::E&);

const char* tag_name(KTag t) {
  switch (t) {
    case KTag::K36_5: return "K36_5";
    case KTag::Kneg4_7: return "Kneg4_7";
    case KTag::K24plus: return "K24plus";
    case KTag::K24minus: return "K24minus";
  }
  return "?";
}

std::optional<KTag> parse_tag(const std::string& s) {
  for (KTag t : kAllTags) {
    if (s == tag_name(t)) return t;
  }
  return std::nullopt;
}

KParams param_a_from_k(const Fp& f, u64 k) {
  k = f.from_u64(k);
  const Bindings<Fp> bind = {{"k", k}};
  const u64 den = parse_const(f, "2*k^5 - 80*k^3 + 288*k", bind);
  if (den == 0) throw DegenerateParam("2k^5 - 80k^3 + 288k vanishes");
  const u64 a = f.mul(parse_const(f, "-k^6 + 180*k^4 - 2160*k^2 + 1728", bind), f.inv(den));
  const u64 lambda = f.mul(f.sub(12 % f.p(), f.sqr(k)), f.inv(f.add(k, k)));
  const u64 l2m4 = f.sub(f.sqr(lambda), 4 % f.p());
  if (l2m4 == 0) throw DegenerateParam("lambda^2 = 4");
  const u64 a_lambda = f.mul(f.sub(f.pow(lambda, 3), f.mul(36 % f.p(), lambda)), f.inv(l2m4));
  if (a_lambda != a) throw DegenerateParam("k-formula and lambda-formula for a disagree");
  if (f.add(f.sqr(a), f.from_int(108)) == 0) throw SingularModel("a(k)^2 + 108 = 0");
  return {a, lambda};
}

std::vector<SpecialK> special_k_values(u64 p) {
  const Fp f(p);
  if (p < 5) throw BadCharacteristic("special k values need p >= 5");
  std::vector<SpecialK> out;
  auto add_roots = [&](KTag tag, const char* poly) {
    Poly<Fp> g;
    try {
      g = parse_poly(f, poly, "k");
    } catch (const BadCharacteristic&) {
      return;
    }
    for (u64 k : poly_roots(f, g)) {
      try {
        KParams kp = param_a_from_k(f, k);
        out.push_back({k, tag, kp.a, kp.lambda});
      } catch (const DegenerateParam&) {
      } catch (const SingularModel&) {
      }
    }
  };
  add_roots(KTag::K36_5, "k^2 - 36/5");
  add_roots(KTag::Kneg4_7, "k^2 + 4/7");
  add_roots(KTag::K24plus, "k^2 - 24*k - 36");
  add_roots(KTag::K24minus, "k^2 + 24*k - 36");
  return out;
}

namespace {

void require_valid_k(const Fp& f, u64 k) {
  for (i64 bad : {0, 2, -2, 6, -6}) {
    if (f.from_u64(k) == f.from_int(bad)) throw DegenerateParam("k in {0, +-2, +-6}");
  }
}

}  // namespace

u64 j_bar(const Fp& f, u64 k) {
  require_valid_k(f, k);
  const Bindings<Fp> bind = {{"k", f.from_u64(k)}};
  const u64 num = parse_const(f, "(k^2+12)^3 * (k^6 - 60*k^4 + 1200*k^2 + 192)^3", bind);
  const u64 den = parse_const(f, "64*(k^2-36)^2*(k^2-4)^6*k^2", bind);
  if (den == 0) throw DegenerateParam("j_bar denominator vanishes");
  return f.mul(num, f.inv(den));
}

u64 j_tilde(const Fp& f, u64 k) {
  require_valid_k(f, k);
  const Bindings<Fp> bind = {{"k", f.from_u64(k)}};
  const u64 num = parse_const(f, "4*(k^2+12)^6", bind);
  const u64 den = parse_const(f, "(k^2-36)^2*(k^2-4)^2*k^2", bind);
  if (den == 0) throw DegenerateParam("j_tilde denominator vanishes");
  return f.mul(num, f.inv(den));
}

C0C1 build_c0c1(const Fp& f, u64 k) {
  require_valid_k(f, k);
  const Bindings<Fp> bind = {{"k", f.from_u64(k)}};
  const u64 c0 = parse_const(f, "k^4/4 - 10*k^2 + 36", bind);
  const u64 c1 = f.mul(c0, f.from_u64(k));
  if (c0 == 0 || c1 == 0) throw DegenerateParam("leading factor of C0/C1 vanishes");
  Poly<Fp> r0 = parse_poly(f, "(k^4/4 - 10*k^2 + 36)*x^3 + (k^5/2 - 36*k^3 + 264*k)*x^2 + (-32*k^4 + 640*k^2)*x + 512*k^3",
                           "x", bind);
  Poly<Fp> r1 = parse_poly(
      f, "(k^5/4 - 10*k^3 + 36*k)*x^3 + (-22*k^4 + 432*k^2 - 864)*x^2 + (640*k^3 - 4608*k)*x - 6144*k^2", "x", bind);
  return {make_elliptic(f, poly_scale(f, r0, f.inv(c0))), make_elliptic(f, poly_scale(f, r1, f.inv(c1)))};
}

namespace {

template <class F>
typename F::E imaginary_unit(const F& f) {
  auto i = f.sqrt(f.neg(f.one()));
  if (!i) throw DegenerateParam("field has no square root of -1");
  return *i;
}

}  // namespace

template <class F>
typename F::E a_from_t(const F& f, const typename F::E& t) {
  const Bindings<F> bind = {{"t", t}};
  auto den = parse_const(f, "t^2*(t^4-1)^2", bind);
  if (f.is_zero(den)) throw DegenerateParam("t^2 (t^4-1)^2 vanishes");
  return f.mul(parse_const(f, "t^12 - 33*t^8 - 33*t^4 + 1", bind), f.inv(den));
}

template <class F>
std::vector<typename F::E> weierstrass_orbit(const F& f, const typename F::E& t) {
  using E = typename F::E;
  const E i = imaginary_unit(f);
  const E one = f.one();
  auto div = [&](const E& n, const E& d) {
    if (f.is_zero(d)) throw DegenerateParam("orbit image undefined");
    return f.mul(n, f.inv(d));
  };
  std::vector<E> base = {
      t,
      div(f.sub(t, i), f.add(t, i)),
      div(f.add(t, i), f.sub(t, i)),
      div(f.mul(i, f.add(t, one)), f.sub(t, one)),
      div(f.mul(i, f.sub(t, one)), f.add(t, one)),
      div(one, t),
  };
  std::vector<E> orbit = base;
  for (const E& z : base) orbit.push_back(f.neg(z));
  std::vector<u64> idx;
  for (const E& z : orbit) idx.push_back(f.index(z));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw DegenerateParam("orbit has fewer than 12 points");
  return orbit;
}

template <class F>
Poly<F> orbit_product(const F& f, const std::vector<typename F::E>& orbit) {
  Poly<F> r = poly_const(f, f.one());
  for (const auto& z : orbit) r = poly_mul(f, r, Poly<F>{{f.neg(z), f.one()}});
  return r;
}

template Fp::E a_from_t<Fp>(const Fp&, const Fp::E&);
template Fp2::E a_from_t<Fp2>(const Fp2&, const Fp2::E&);
template std::vector<Fp::E> weierstrass_orbit<Fp>(const Fp&, const Fp::E&);
template std::vector<Fp2::E> weierstrass_orbit<Fp2>(const Fp2&, const Fp2::E&);
template Poly<Fp> orbit_product<Fp>(const Fp&, const std::vector<Fp::E>&);
template Poly<Fp2> orbit_product<Fp2>(const Fp2&, const std::vector<Fp2::E>&);

Genus10Family build_genus10(u64 p, u64 b) {
  if (p < 5) throw BadCharacteristic("the genus-10 family needs p >= 5");
  const Fp f(p);
  b = f.from_u64(b);
  if (f.add(f.pow(b, 3), 27 % p) == 0) throw SingularModel("b^3 + 27 = 0");
  const Bindings<Fp> bind = {{"b", b}};
  Genus10Family g;
  g.p = p;
  g.b = b;
  g.U = make_plane(f, "x^6 + y^6 + 1 + b*x^2*y^2", bind);
  g.E1 = make_elliptic(f, "x^3 + 3*(b+6)*x^2 + 3*(b+3)*(b+12)*x + 27*(b+3)^2", bind);
  g.E2 = make_elliptic(f, "x^3 - 27*b^2*x^2 + 216*b*(b^3+27)*x - 432*(b^3+27)^2", bind);
  g.E3 = make_elliptic(f, "x^3 + 2*b*x^2 + b^2*x - 4", bind);
  g.E4 = make_elliptic(f, "x^3 - 48*b^2*x^2 + 768*b*(b^3+27)*x - 4096*(b^3+27)^2", bind);
  g.H1 = make_hyperelliptic(f, "((-b-3)*x + 3)*(1 - 3*x + 3*x^2)", "", bind);
  g.H2 = make_plane(f, "x^3 + y^3 + 1 + b*x*y", bind);
  g.H3 = make_hyperelliptic(f, "-(x^3 + b*x^2 + 4)*(x^3 + 1)", "", bind);
  return g;
}

}  // namespace mc
