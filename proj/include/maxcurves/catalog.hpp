#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxcurves/curves.hpp"

namespace mc {

// g(x) + g(y) = 1 with g = 4(x^2-x+1)^3 / (27 x^2 (x-1)^2), and its quotients.
struct Genus4Family {
  u64 p = 0;
  SeparatedPlaneModel C;
  HyperellipticModel G;
  EllipticModel C1, C2, E;
  HyperellipticModel Hx;     // genus 2, with cross term
  HyperellipticModel sextic;  // Hx with the square completed
  Poly<Fp> sextic1, sextic2;  // sextic quotients; each has a square factor
  HyperellipticModel Q1, Q2;  // genus-1 quartics behind sextic1 and sextic2
  EllipticModel E1p, E2p;
  BiPoly<Fp> R1;  // image of (x(1-x), y)
  BiPoly<Fp> L;   // image of (x(1-x) + y(1-y), x/y + (1-x)/(1-y))
  BiPoly<Fp> Rs;  // image of (x+y, xy)
};

Genus4Family build_genus4(u64 p);

// Affine count plus the 9 nodes over the poles of g, each split iff -1 is a square.
template <class F>
u64 genus4_smooth_count(const SeparatedPlaneModel& C, const F& f);

// y^2 = X^12 - aX^10 - 33X^8 + 2aX^6 - 33X^4 - aX^2 + 1 and its quotients.
struct Genus5Family {
  u64 p = 0;
  u64 a = 0;
  HyperellipticModel Ca, Ca2, Ca3, Ca32;
  EllipticModel E1, E1neg, W;
};

Genus5Family build_genus5(u64 p, u64 a);

enum class KTag { K36_5, Kneg4_7, K24plus, K24minus };

const char* tag_name(KTag t);
std::optional<KTag> parse_tag(const std::string& s);
constexpr KTag kAllTags[] = {KTag::K36_5, KTag::Kneg4_7, KTag::K24plus, KTag::K24minus};

struct KParams {
  u64 a = 0;
  u64 lambda = 0;
};

struct SpecialK {
  u64 k = 0;
  KTag tag = KTag::K36_5;
  u64 a = 0;
  u64 lambda = 0;
};

KParams param_a_from_k(const Fp& f, u64 k);
std::vector<SpecialK> special_k_values(u64 p);
u64 j_bar(const Fp& f, u64 k);
u64 j_tilde(const Fp& f, u64 k);

// The two psi_i quotients of C_{a,3,2} for a = a(k), normalised to monic cubics.
struct C0C1 {
  EllipticModel C0, C1;
};
C0C1 build_c0c1(const Fp& f, u64 k);

template <class F>
typename F::E a_from_t(const F& f, const typename F::E& t);
template <class F>
std::vector<typename F::E> weierstrass_orbit(const F& f, const typename F::E& t);
template <class F>
Poly<F> orbit_product(const F& f, const std::vector<typename F::E>& orbit);
template <class F>
Poly<F> genus5_polynomial(const F& f, const typename F::E& a);

// x^6 + y^6 + 1 + b x^2 y^2 = 0 and the curves in its decomposition.
struct Genus10Family {
  u64 p = 0;
  u64 b = 0;
  PlaneModel U;
  EllipticModel E1, E2, E3, E4;
  HyperellipticModel H1, H3;
  PlaneModel H2;
};

Genus10Family build_genus10(u64 p, u64 b);

}  // namespace mc
