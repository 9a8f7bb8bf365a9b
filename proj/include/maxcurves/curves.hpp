#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "maxcurves/arith.hpp"

namespace mc {

// y^2 = c3 x^3 + c2 x^2 + c1 x + c0 over F_p, c3 != 0.
struct EllipticModel {
  u64 p = 0;
  Poly<Fp> f;
};

// y^2 + h(x) y = f(x) over F_p.
struct HyperellipticModel {
  u64 p = 0;
  Poly<Fp> f;
  Poly<Fp> h;
};

// gn(x)/gd(x) + hn(y)/hd(y) = c over F_p.
struct SeparatedPlaneModel {
  u64 p = 0;
  Poly<Fp> gn, gd, hn, hd;
  u64 c = 0;
};

// F(x, y) = 0 over F_p.
struct PlaneModel {
  u64 p = 0;
  BiPoly<Fp> F;
};

using CurveModel = std::variant<EllipticModel, HyperellipticModel, SeparatedPlaneModel, PlaneModel>;

EllipticModel make_elliptic(const Fp& f, Poly<Fp> cubic);
EllipticModel make_elliptic(const Fp& f, std::string_view cubic, const Bindings<Fp>& consts = {});
HyperellipticModel make_hyperelliptic(const Fp& f, Poly<Fp> rhs, Poly<Fp> cross = {});
HyperellipticModel make_hyperelliptic(const Fp& f, std::string_view rhs, std::string_view cross = "",
                                      const Bindings<Fp>& consts = {});
SeparatedPlaneModel make_separated(const Fp& f, Poly<Fp> gn, Poly<Fp> gd, Poly<Fp> hn, Poly<Fp> hd, u64 c);
PlaneModel make_plane(const Fp& f, BiPoly<Fp> F);
PlaneModel make_plane(const Fp& f, std::string_view F, const Bindings<Fp>& consts = {});

// h^2 + 4f, or f when there is no cross term.
Poly<Fp> completed_rhs(const Fp& f, const HyperellipticModel& H);
HyperellipticModel complete_square(const Fp& f, const HyperellipticModel& H);
unsigned hyperelliptic_genus(const Fp& f, const HyperellipticModel& H);

struct TraceData {
  u64 q = 0;
  u64 N1 = 0;
  i64 a1 = 0;
  std::optional<u64> N2;
  std::optional<i64> a2;
  unsigned genus = 0;
};

// Throws HasseViolation when a^2 > 4 g^2 q.
void check_hasse(u64 q, i64 a, unsigned genus);
TraceData make_trace(u64 q, u64 N1, unsigned genus);
i64 trace_of(u64 q, u64 N);

template <class F>
u64 ell_count(const EllipticModel& E, const F& f);
template <class F>
u64 hyp_count(const HyperellipticModel& H, const F& f);
template <class F>
u64 separated_count_affine(const SeparatedPlaneModel& S, const F& f);
template <class F>
u64 plane_count(const PlaneModel& P, const F& f);
// Separated models contribute their affine count.
template <class F>
u64 count_points(const CurveModel& C, const F& f);

// Trace over F_{q^n} from the trace over F_q.
i64 ell_trace_lift(i64 a1, u64 q, unsigned n);
TraceData ell_trace(const EllipticModel& E, const Fp& f);
bool is_supersingular(const EllipticModel& E, const Fp& f);
u64 j_invariant(const EllipticModel& E, const Fp& f);

// False when a singular point cannot be excluded.
bool plane_is_nonsingular(const PlaneModel& P);

}  // namespace mc
