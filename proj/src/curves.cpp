#include "maxcurves/curves.hpp"

#include <cstdint>
#include <string>

namespace mc {

namespace {

void require_field(u64 model_p, const Fp& f) {
  if (model_p != f.p()) {
    throw BadCharacteristic("model over F_" + std::to_string(model_p) + " used with F_" + std::to_string(f.p()));
  }
}

}  // namespace

EllipticModel make_elliptic(const Fp& f, Poly<Fp> cubic) {
  if (cubic.deg() != 3) throw SingularModel("elliptic right-hand side must be a cubic");
  if (!poly_is_squarefree(f, cubic)) throw SingularModel("cubic has a repeated root");
  return {f.p(), std::move(cubic)};
}

EllipticModel make_elliptic(const Fp& f, std::string_view cubic, const Bindings<Fp>& consts) {
  return make_elliptic(f, parse_poly(f, cubic, "x", consts));
}

Poly<Fp> completed_rhs(const Fp& f, const HyperellipticModel& H) {
  require_field(H.p, f);
  if (H.h.is_zero()) return H.f;
  return poly_add(f, poly_mul(f, H.h, H.h), poly_scale(f, H.f, f.from_int(4)));
}

HyperellipticModel make_hyperelliptic(const Fp& f, Poly<Fp> rhs, Poly<Fp> cross) {
  HyperellipticModel H{f.p(), std::move(rhs), std::move(cross)};
  Poly<Fp> R = completed_rhs(f, H);
  if (R.deg() < 3) throw SingularModel("hyperelliptic right-hand side must have degree >= 3");
  if (!poly_is_squarefree(f, R)) throw SingularModel("hyperelliptic right-hand side is not squarefree");
  return H;
}

HyperellipticModel make_hyperelliptic(const Fp& f, std::string_view rhs, std::string_view cross,
                                      const Bindings<Fp>& consts) {
  Poly<Fp> h = cross.empty() ? Poly<Fp>{} : parse_poly(f, cross, "x", consts);
  return make_hyperelliptic(f, parse_poly(f, rhs, "x", consts), std::move(h));
}

HyperellipticModel complete_square(const Fp& f, const HyperellipticModel& H) {
  return {H.p, completed_rhs(f, H), {}};
}

unsigned hyperelliptic_genus(const Fp& f, const HyperellipticModel& H) {
  Poly<Fp> R = completed_rhs(f, H);
  if (R.deg() < 3 || !poly_is_squarefree(f, R)) throw SingularModel("hyperelliptic model is singular");
  return static_cast<unsigned>((R.deg() + 1) / 2 - 1);
}

SeparatedPlaneModel make_separated(const Fp& f, Poly<Fp> gn, Poly<Fp> gd, Poly<Fp> hn, Poly<Fp> hd, u64 c) {
  if (gd.is_zero() || hd.is_zero()) throw DegenerateParam("separated model with zero denominator");
  return {f.p(), std::move(gn), std::move(gd), std::move(hn), std::move(hd), f.from_u64(c)};
}

PlaneModel make_plane(const Fp& f, BiPoly<Fp> F) {
  F = bipoly_trim(f, std::move(F));
  if (bipoly_total_degree(f, F) < 1) throw DegenerateParam("plane model must have positive degree");
  return {f.p(), std::move(F)};
}

PlaneModel make_plane(const Fp& f, std::string_view F, const Bindings<Fp>& consts) {
  return make_plane(f, parse_bipoly(f, F, "x", "y", consts));
}

void check_hasse(u64 q, i64 a, unsigned genus) {
  u128 lhs = static_cast<u128>(static_cast<i128>(a) * a);
  u128 rhs = static_cast<u128>(4) * genus * genus * q;
  if (lhs > rhs) {
    throw HasseViolation("trace " + std::to_string(a) + " exceeds the Hasse-Weil bound for genus " +
                         std::to_string(genus) + " over a field of size " + std::to_string(q));
  }
}

i64 trace_of(u64 q, u64 N) { return static_cast<i64>(static_cast<i128>(q) + 1 - static_cast<i128>(N)); }

TraceData make_trace(u64 q, u64 N1, unsigned genus) {
  TraceData t;
  t.q = q;
  t.N1 = N1;
  t.a1 = trace_of(q, N1);
  t.genus = genus;
  check_hasse(q, t.a1, genus);
  return t;
}

template <class F>
u64 ell_count(const EllipticModel& E, const F& f) {
  require_field(E.p, f.prime());
  if (E.f.deg() != 3 || !poly_is_squarefree(f.prime(), E.f)) throw SingularModel("cubic has a repeated root");
  const Poly<F> g = poly_lift(f, E.f);
  i64 s = 0;
  const u64 q = f.size();
  for (u64 i = 0; i < q; ++i) s += f.chi(poly_eval(f, g, f.element(i)));
  return static_cast<u64>(static_cast<i64>(q) + 1 + s);
}

template <class F>
u64 hyp_count(const HyperellipticModel& H, const F& f) {
  const Fp& fp = f.prime();
  const Poly<Fp> R = completed_rhs(fp, H);
  if (R.deg() < 3 || !poly_is_squarefree(fp, R)) throw SingularModel("hyperelliptic model is singular");
  const Poly<F> g = poly_lift(f, R);
  i64 s = 0;
  const u64 q = f.size();
  for (u64 i = 0; i < q; ++i) s += f.chi(poly_eval(f, g, f.element(i)));
  i64 at_inf = R.deg() % 2 ? 1 : 1 + f.chi(f.embed(R.lc()));
  return static_cast<u64>(static_cast<i64>(q) + s + at_inf);
}

template <class F>
u64 separated_count_affine(const SeparatedPlaneModel& S, const F& f) {
  require_field(S.p, f.prime());
  const Poly<F> gn = poly_lift(f, S.gn), gd = poly_lift(f, S.gd);
  const Poly<F> hn = poly_lift(f, S.hn), hd = poly_lift(f, S.hd);
  const auto c = f.embed(S.c);
  const u64 q = f.size();
  std::vector<std::uint32_t> hist(q, 0);
  for (u64 i = 0; i < q; ++i) {
    auto y = f.element(i);
    auto d = poly_eval(f, hd, y);
    if (f.is_zero(d)) continue;
    ++hist[f.index(f.mul(poly_eval(f, hn, y), f.inv(d)))];
  }
  u64 total = 0;
  for (u64 i = 0; i < q; ++i) {
    auto x = f.element(i);
    auto d = poly_eval(f, gd, x);
    if (f.is_zero(d)) continue;
    total += hist[f.index(f.sub(c, f.mul(poly_eval(f, gn, x), f.inv(d))))];
  }
  return total;
}

namespace {

// P(x + l*y, y); singular points correspond under the shear.
template <class F>
BiPoly<F> shear(const F& f, const BiPoly<F>& P, const typename F::E& l) {
  BiPoly<F> lin;
  bipoly_add_term(f, lin, 1, 0, f.one());
  bipoly_add_term(f, lin, 0, 1, l);
  BiPoly<F> out;
  BiPoly<F> power;
  bipoly_add_term(f, power, 0, 0, f.one());
  for (std::size_t i = 0; i < P.c.size(); ++i) {
    BiPoly<F> row;
    for (std::size_t j = 0; j < P.c[i].size(); ++j) bipoly_add_term(f, row, 0, static_cast<int>(j), P.c[i][j]);
    out = bipoly_add(f, std::move(out), bipoly_mul(f, power, row));
    power = bipoly_mul(f, power, lin);
  }
  return bipoly_trim(f, std::move(out));
}

// No common zero of P, P_x, P_y: the resultants in y of (P, P_x) and (P, P_y) are coprime
// after some shear. Projections of distinct points can collide, so several shears are tried.
template <class F>
bool chart_smooth(const F& f, const BiPoly<F>& P) {
  const u64 tries = std::min<u64>(f.size(), 12);
  for (u64 i = 0; i < tries; ++i) {
    const BiPoly<F> S = shear(f, P, f.element(i));
    const Poly<F> r1 = bipoly_resultant_y(f, S, bipoly_dx(f, S));
    const Poly<F> r2 = bipoly_resultant_y(f, S, bipoly_dy(f, S));
    if (poly_gcd(f, r1, r2).deg() == 0) return true;
  }
  return false;
}

// The three affine charts of the projective closure, in a field large enough to interpolate.
template <class F>
bool nonsingular_in(const F& f, const BiPoly<Fp>& model, int d) {
  const BiPoly<F> A = bipoly_lift(f, model);
  BiPoly<F> B, C;
  for (std::size_t i = 0; i < A.c.size(); ++i) {
    for (std::size_t j = 0; j < A.c[i].size(); ++j) {
      const int k = d - static_cast<int>(i + j);
      bipoly_add_term(f, B, static_cast<int>(i), k, A.c[i][j]);
      bipoly_add_term(f, C, static_cast<int>(j), k, A.c[i][j]);
    }
  }
  B = bipoly_trim(f, std::move(B));
  C = bipoly_trim(f, std::move(C));
  return chart_smooth(f, A) && chart_smooth(f, B) && chart_smooth(f, C);
}

}  // namespace

bool plane_is_nonsingular(const PlaneModel& P) {
  const Fp f(P.p);
  const int d = bipoly_total_degree(f, P.F);
  if (d < 1) return false;
  const u64 bound = static_cast<u64>(2 * d * d) + 1;
  if (f.size() > bound) return nonsingular_in(f, P.F, d);
  const Fp2 f2(f);
  if (f2.size() > bound) return nonsingular_in(f2, P.F, d);
  return nonsingular_in(Fp4(f2), P.F, d);
}

template <class F>
u64 plane_count(const PlaneModel& P, const F& f) {
  require_field(P.p, f.prime());
  const int d = bipoly_total_degree(f.prime(), P.F);
  if (d < 1) throw DegenerateParam("plane model must have positive degree");
  if (!plane_is_nonsingular(P)) throw SingularModel("plane model may be singular; count refused");
  const BiPoly<F> G = bipoly_lift(f, P.F);
  const u64 q = f.size();
  const unsigned n = f.degree();
  u64 affine = 0;
  for (u64 idx = 0; idx < q; ++idx) {
    const auto x = f.element(idx);
    u64 orbit = 1;
    if (n > 1) {
      bool rep = true;
      auto y = f.frob(x);
      while (!(y == x)) {
        if (f.index(y) < idx) {
          rep = false;
          break;
        }
        y = f.frob(y);
        ++orbit;
      }
      if (!rep) continue;
    }
    const Poly<F> g = bipoly_at_x(f, G, x);
    affine += orbit * (g.is_zero() ? q : count_roots(f, g));
  }
  std::vector<typename F::E> top(d + 1, f.zero());
  for (int j = 0; j <= d; ++j) top[j] = bipoly_coeff(f, G, d - j, j);
  const Poly<F> T = poly_trim(f, top);
  u64 at_inf = count_roots(f, T);
  if (f.is_zero(bipoly_coeff(f, G, 0, d))) ++at_inf;
  return affine + at_inf;
}

template <class F>
u64 count_points(const CurveModel& C, const F& f) {
  return std::visit(
      [&](const auto& m) -> u64 {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, EllipticModel>) return ell_count(m, f);
        if constexpr (std::is_same_v<M, HyperellipticModel>) return hyp_count(m, f);
        if constexpr (std::is_same_v<M, SeparatedPlaneModel>) return separated_count_affine(m, f);
        if constexpr (std::is_same_v<M, PlaneModel>) return plane_count(m, f);
      },
      C);
}

i64 ell_trace_lift(i64 a1, u64 q, unsigned n) {
  if (n == 0) return 2;
  i128 prev = 2, cur = a1;
  for (unsigned k = 1; k < n; ++k) {
    i128 next = a1 * cur - static_cast<i128>(q) * prev;
    prev = cur;
    cur = next;
  }
  return static_cast<i64>(cur);
}

TraceData ell_trace(const EllipticModel& E, const Fp& f) {
  TraceData t = make_trace(f.size(), ell_count(E, f), 1);
  t.a2 = ell_trace_lift(t.a1, t.q, 2);
  t.N2 = static_cast<u64>(static_cast<i128>(t.q) * t.q + 1 - *t.a2);
  return t;
}

bool is_supersingular(const EllipticModel& E, const Fp& f) {
  if (f.p() < 5) throw BadCharacteristic("supersingularity test needs p >= 5");
  return trace_of(f.size(), ell_count(E, f)) == 0;
}

u64 j_invariant(const EllipticModel& E, const Fp& f) {
  require_field(E.p, f);
  if (f.p() <= 3) throw BadCharacteristic("j-invariant needs p > 3");
  const u64 c3 = E.f.c[3], c2 = E.f.c[2], c1 = E.f.c[1], c0 = E.f.c[0];
  const u64 a2 = c2, a4 = f.mul(c1, c3), a6 = f.mul(c0, f.sqr(c3));
  const u64 b2 = f.mul(4, a2), b4 = f.mul(2, a4), b6 = f.mul(4, a6);
  const u64 b8 = f.sub(f.mul(f.mul(4, a2), a6), f.sqr(a4));
  const u64 c4 = f.sub(f.sqr(b2), f.mul(24 % f.p(), b4));
  u64 disc = f.neg(f.mul(f.sqr(b2), b8));
  disc = f.sub(disc, f.mul(8, f.pow(b4, 3)));
  disc = f.sub(disc, f.mul(27 % f.p(), f.sqr(b6)));
  disc = f.add(disc, f.mul(f.mul(9 % f.p(), b2), f.mul(b4, b6)));
  if (disc == 0) throw SingularModel("discriminant vanishes");
  return f.mul(f.pow(c4, 3), f.inv(disc));
}

#define MC_INSTANTIATE(F)                                                     \
  template u64 ell_count<F>(const EllipticModel&, const F&);                 \
  template u64 hyp_count<F>(const HyperellipticModel&, const F&);            \
  template u64 separated_count_affine<F>(const SeparatedPlaneModel&, const F&); \
  template u64 plane_count<F>(const PlaneModel&, const F&);                  \
  template u64 count_points<F>(const CurveModel&, const F&);

MC_INSTANTIATE(Fp)
MC_INSTANTIATE(Fp2)
MC_INSTANTIATE(Fp4)

#undef MC_INSTANTIATE

}  // namespace mc
