#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maxcurves/decomp.hpp"

namespace mc {

template <class F>
struct Point {
  typename F::E x, y;
  bool operator==(const Point&) const = default;
};

// G(x, y) = 0. Points where avoid(x, y) = 0 are never sampled.
template <class F>
struct CurveEq {
  std::string name;
  BiPoly<F> G;
  BiPoly<F> avoid;
};

template <class F>
struct RatFn {
  BiPoly<F> num, den;
};

template <class F>
struct RationalMap {
  std::string name;
  std::string branch;
  CurveEq<F> source, target;
  std::vector<RatFn<F>> comps;
};

struct SamplePlan {
  std::size_t n = 100;
  u64 seed = 1;
  unsigned level = 1;
};

struct MapOutcome {
  std::string name;
  bool pass = false;
  std::string branch;
  std::size_t checked = 0;
  std::string witness;
};

template <class F>
std::string point_str(const F& f, const Point<F>& P) {
  return "(" + f.str(P.x) + ", " + f.str(P.y) + ")";
}

template <class F>
bool on_curve(const F& f, const CurveEq<F>& C, const Point<F>& P) {
  return f.is_zero(bipoly_eval(f, C.G, P.x, P.y));
}

template <class F>
CurveEq<F> curve_eq(const F& f, std::string name, const CurveModel& m) {
  CurveEq<F> C{std::move(name), {}, {}};
  const BiPoly<F> y2 = parse_bipoly(f, "y^2");
  auto in_x = [&](const Poly<Fp>& a) {
    BiPoly<F> r;
    const Poly<F> l = poly_lift(f, a);
    for (int i = 0; i <= l.deg(); ++i) bipoly_add_term(f, r, i, 0, l.c[i]);
    return r;
  };
  auto in_y = [&](const Poly<Fp>& a) { return bipoly_swap(f, in_x(a)); };
  if (auto* e = std::get_if<EllipticModel>(&m)) {
    C.G = bipoly_add(f, y2, bipoly_scale(f, in_x(e->f), f.neg(f.one())));
  } else if (auto* h = std::get_if<HyperellipticModel>(&m)) {
    C.G = bipoly_add(f, y2, bipoly_scale(f, in_x(h->f), f.neg(f.one())));
    C.G = bipoly_add(f, C.G, bipoly_mul(f, in_x(h->h), parse_bipoly(f, "y")));
  } else if (auto* s = std::get_if<SeparatedPlaneModel>(&m)) {
    const BiPoly<F> gd = in_x(s->gd), hd = in_y(s->hd);
    C.G = bipoly_add(f, bipoly_mul(f, in_x(s->gn), hd), bipoly_mul(f, in_y(s->hn), gd));
    C.G = bipoly_add(f, C.G, bipoly_scale(f, bipoly_mul(f, gd, hd), f.neg(f.embed(s->c))));
    C.avoid = bipoly_mul(f, gd, hd);
  } else {
    C.G = bipoly_lift(f, std::get<PlaneModel>(m).F);
  }
  C.G = bipoly_trim(f, C.G);
  return C;
}

template <class F>
CurveEq<F> curve_eq(const F& f, std::string name, std::string_view G, const Bindings<F>& consts = {}) {
  return {std::move(name), parse_bipoly(f, G, "x", "y", consts), {}};
}

template <class F>
RatFn<F> ratfn(const F& f, std::string_view num, std::string_view den = "1", const Bindings<F>& consts = {}) {
  return {parse_bipoly(f, num, "x", "y", consts), parse_bipoly(f, den, "x", "y", consts)};
}

template <class F>
std::optional<Point<F>> apply_map(const F& f, const RationalMap<F>& m, const Point<F>& P) {
  std::vector<typename F::E> v;
  for (const auto& c : m.comps) {
    const auto d = bipoly_eval(f, c.den, P.x, P.y);
    if (f.is_zero(d)) return std::nullopt;
    v.push_back(f.mul(bipoly_eval(f, c.num, P.x, P.y), f.inv(d)));
  }
  return Point<F>{v.at(0), v.at(1)};
}

// Draws x uniformly and a uniform root of G(x, .). Points failing accept are redrawn.
template <class F, class Accept>
std::vector<Point<F>> sample_points(const F& f, const CurveEq<F>& C, const SamplePlan& plan, Accept accept) {
  if (plan.n == 0) throw ConfigError("sample count must be positive");
  std::mt19937_64 rng(plan.seed);
  std::vector<Point<F>> out;
  const int dy = bipoly_deg_y(C.G);
  if (dy < 1) throw DegenerateParam("curve " + C.name + " has no y-dependence");
  for (std::size_t draw = 0; draw < 50 * plan.n && out.size() < plan.n; ++draw) {
    const auto x = f.random(rng);
    const Poly<F> g = bipoly_at_x(f, C.G, x);
    std::vector<typename F::E> ys;
    if (g.deg() == 2) {
      const auto d = f.sub(f.sqr(g.c[1]), f.mul(f.from_int(4), f.mul(g.c[2], g.c[0])));
      if (auto r = f.sqrt(d)) {
        const auto i2a = f.inv(f.add(g.c[2], g.c[2]));
        ys.push_back(f.mul(f.sub(*r, g.c[1]), i2a));
        ys.push_back(f.mul(f.sub(f.neg(*r), g.c[1]), i2a));
      }
    } else if (g.deg() >= 1) {
      ys = poly_roots(f, g, rng());
    }
    if (ys.empty()) continue;
    const Point<F> P{x, ys[std::uniform_int_distribution<std::size_t>(0, ys.size() - 1)(rng)]};
    if (!C.avoid.is_zero() && f.is_zero(bipoly_eval(f, C.avoid, P.x, P.y))) continue;
    if (!accept(P)) continue;
    out.push_back(P);
  }
  if (out.size() < plan.n) {
    throw SampleExhausted("found " + std::to_string(out.size()) + " of " + std::to_string(plan.n) + " points on " +
                          C.name + " in " + std::to_string(50 * plan.n) + " draws");
  }
  return out;
}

template <class F>
std::vector<Point<F>> sample_points(const F& f, const CurveEq<F>& C, const SamplePlan& plan) {
  return sample_points(f, C, plan, [](const Point<F>&) { return true; });
}

template <class F>
MapOutcome verify_one_branch(const F& f, const RationalMap<F>& m, const SamplePlan& plan) {
  MapOutcome o{m.name, true, m.branch, 0, ""};
  const auto pts = sample_points(f, m.source, plan, [&](const Point<F>& P) { return apply_map(f, m, P).has_value(); });
  for (const auto& P : pts) {
    ++o.checked;
    if (!on_curve(f, m.target, *apply_map(f, m, P))) {
      o.pass = false;
      o.witness = point_str(f, P);
      break;
    }
  }
  return o;
}

// Passes when at least one branch passes; the first passing branch is recorded.
template <class F>
MapOutcome verify_map(const F& f, const std::vector<RationalMap<F>>& branches, const SamplePlan& plan) {
  MapOutcome first;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    MapOutcome o = verify_one_branch(f, branches[i], plan);
    if (o.pass) return o;
    if (i == 0) first = o;
  }
  return first;
}

template <class F>
MapOutcome verify_map(const F& f, const RationalMap<F>& m, const SamplePlan& plan) {
  return verify_one_branch(f, m, plan);
}

struct Relation {
  std::string name;
  std::vector<std::string> lhs, rhs;  // applied left to right
  bool holds = true;                  // false for relations expected to fail
};

template <class F>
using Generators = std::map<std::string, RationalMap<F>>;

template <class F>
std::optional<Point<F>> apply_word(const F& f, const Generators<F>& gens, const std::vector<std::string>& w,
                                   Point<F> P) {
  for (const auto& s : w) {
    auto it = gens.find(s);
    if (it == gens.end()) throw ConfigError("unknown generator " + s);
    auto Q = apply_map(f, it->second, P);
    if (!Q) return std::nullopt;
    P = *Q;
  }
  return P;
}

// pass is true when the observed behaviour matches r.holds.
template <class F>
MapOutcome verify_relation(const F& f, const CurveEq<F>& C, const Generators<F>& gens, const Relation& r,
                           const SamplePlan& plan) {
  MapOutcome o{r.name, true, "", 0, ""};
  auto defined = [&](const Point<F>& P) {
    return apply_word(f, gens, r.lhs, P).has_value() && apply_word(f, gens, r.rhs, P).has_value();
  };
  bool all_equal = true;
  for (const auto& P : sample_points(f, C, plan, defined)) {
    ++o.checked;
    if (*apply_word(f, gens, r.lhs, P) != *apply_word(f, gens, r.rhs, P)) {
      all_equal = false;
      o.witness = point_str(f, P);
      break;
    }
  }
  o.pass = all_equal == r.holds;
  return o;
}

template <class F>
std::vector<MapOutcome> verify_relations(const F& f, const CurveEq<F>& C, const Generators<F>& gens,
                                         const std::vector<Relation>& rels, const SamplePlan& plan) {
  std::vector<MapOutcome> out;
  for (const auto& r : rels) out.push_back(verify_relation(f, C, gens, r, plan));
  return out;
}

// Checks that the x-coordinate image is an abscissa of y^2 = rhs(x) over the sampling field.
template <class F>
MapOutcome verify_x_projection(const F& f, std::string name, const CurveEq<F>& source, const RatFn<F>& xmap,
                               const Poly<F>& rhs, const SamplePlan& plan) {
  MapOutcome o{std::move(name), true, "", 0, ""};
  auto defined = [&](const Point<F>& P) { return !f.is_zero(bipoly_eval(f, xmap.den, P.x, P.y)); };
  for (const auto& P : sample_points(f, source, plan, defined)) {
    ++o.checked;
    const auto x = f.mul(bipoly_eval(f, xmap.num, P.x, P.y), f.inv(bipoly_eval(f, xmap.den, P.x, P.y)));
    if (f.chi(poly_eval(f, rhs, x)) < 0) {
      o.pass = false;
      o.witness = point_str(f, P);
      break;
    }
  }
  return o;
}

// Paper maps grouped per family; each entry lists one map per branch choice.
template <class F>
struct MapCase {
  std::string name;
  std::vector<RationalMap<F>> branches;
};

template <class F>
struct RelationCase {
  std::string name;
  std::string branch;
  CurveEq<F> curve;
  Generators<F> gens;
  std::vector<Relation> relations;
};

template <class F>
std::vector<MapCase<F>> genus4_maps(const F& f, const Genus4Family& g);
template <class F>
std::vector<RelationCase<F>> genus4_relations(const F& f, const Genus4Family& g);

template <class F>
std::vector<MapCase<F>> genus5_maps(const F& f, const Genus5Family& g);
// Maps attached to a parameter k: psi_i, the quotients onto C0 and C1, and the 3-isogeny C0 -> C1.
template <class F>
std::vector<MapCase<F>> genus5_k_maps(const F& f, const typename F::E& k);
// The explicit 3-isogeny C0 -> E1 for k^2 = 36/5, one branch per root k.
template <class F>
std::vector<MapCase<F>> genus5_k36_5_maps(const F& f);
template <class F>
std::vector<RelationCase<F>> genus5_relations(const F& f, const Genus5Family& g);

// phi restricted to its abscissa, on the sigma quotient Rs over F_p.
MapOutcome verify_phi_projection(const Genus4Family& g, const SamplePlan& plan);

// Pairs of curves joined by a catalogued isogeny (equal traces over the field of definition).
struct IsogenyPair {
  CurveRef a, b;
  unsigned level = 1;
};
std::vector<IsogenyPair> genus4_isogeny_pairs(const Genus4Family& g);
std::vector<IsogenyPair> genus5_isogeny_pairs(const Genus5Family& g);
std::vector<IsogenyPair> genus5_k_isogeny_pairs(const Fp& f, const SpecialK& k);

struct MapSuiteReport {
  std::vector<MapOutcome> maps;
  std::vector<MapOutcome> relations;
  std::vector<std::pair<std::string, bool>> isogeny_traces;
  bool pass() const;
};

// Runs every catalogued map, relation and isogeny trace check at the plan's field level.
MapSuiteReport run_genus4_suite(const Tower& t, const SamplePlan& plan);
MapSuiteReport run_genus5_suite(const Tower& t, u64 a, const SamplePlan& plan);
MapSuiteReport run_genus5_k_suite(const Tower& t, const SpecialK& k, const SamplePlan& plan);

}  // namespace mc
