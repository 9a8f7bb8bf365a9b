#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "maxcurves/field.hpp"

namespace mc {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class F>
struct Poly {
  using E = typename F::E;
  std::vector<E> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const E& lc() const { return c.back(); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

template <class F>
Poly<F> poly_trim(const F& f, std::vector<typename F::E> c) {
  while (!c.empty() && f.is_zero(c.back())) c.pop_back();
  return {std::move(c)};
}

template <class F>
Poly<F> poly_from_ints(const F& f, std::initializer_list<i64> coeffs) {
  std::vector<typename F::E> c;
  for (i64 v : coeffs) c.push_back(f.from_int(v));
  return poly_trim(f, std::move(c));
}

template <class F>
Poly<F> poly_const(const F& f, const typename F::E& a) {
  return poly_trim(f, {a});
}

template <class F>
Poly<F> poly_x(const F& f) {
  return {{f.zero(), f.one()}};
}

// Image of an F_p polynomial in an extension field.
template <class F>
Poly<F> poly_lift(const F& f, const Poly<Fp>& a) {
  std::vector<typename F::E> c;
  c.reserve(a.c.size());
  for (u64 v : a.c) c.push_back(f.embed(v));
  return {std::move(c)};
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::E> c(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f.add(c[i], b.c[i]);
  return poly_trim(f, std::move(c));
}

template <class F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& v : r.c) v = f.neg(v);
  return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_add(f, a, poly_neg(f, b));
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::E& s) {
  std::vector<typename F::E> c;
  c.reserve(a.c.size());
  for (const auto& v : a.c) c.push_back(f.mul(v, s));
  return poly_trim(f, std::move(c));
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename F::E> c(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
  }
  return poly_trim(f, std::move(c));
}

template <class F>
Poly<F> poly_pow(const F& f, Poly<F> a, unsigned e) {
  Poly<F> r = poly_const(f, f.one());
  while (e) {
    if (e & 1) r = poly_mul(f, r, a);
    a = poly_mul(f, a, a);
    e >>= 1;
  }
  return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw DegenerateParam("polynomial division by zero");
  if (a.deg() < b.deg()) return {{}, a};
  std::vector<typename F::E> r = a.c;
  std::vector<typename F::E> q(a.c.size() - b.c.size() + 1, f.zero());
  const auto li = f.inv(b.lc());
  const int db = b.deg();
  for (int i = a.deg(); i >= db; --i) {
    if (f.is_zero(r[i])) continue;
    auto t = f.mul(r[i], li);
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(t, b.c[j]));
  }
  r.resize(db);
  return {poly_trim(f, std::move(q)), poly_trim(f, std::move(r))};
}

template <class F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& m) {
  if (a.deg() < m.deg()) return a;
  return poly_divrem(f, a, m).second;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.lc()));
}

template <class F>
Poly<F> poly_deriv(const F& f, const Poly<F>& a) {
  if (a.deg() < 1) return {};
  std::vector<typename F::E> c(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = f.mul(f.from_int(static_cast<i64>(i)), a.c[i]);
  return poly_trim(f, std::move(c));
}

template <class F>
typename F::E poly_eval(const F& f, const Poly<F>& a, const typename F::E& x) {
  auto r = f.zero();
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

template <class F>
Poly<F> poly_mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return poly_mod(f, poly_mul(f, a, b), m);
}

template <class F>
Poly<F> poly_powmod(const F& f, Poly<F> base, u64 e, const Poly<F>& m) {
  Poly<F> r = poly_mod(f, poly_const(f, f.one()), m);
  base = poly_mod(f, base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = poly_mulmod(f, base, base, m);
  }
  return r;
}

// Resultant by the Euclidean remainder sequence over the field.
template <class F>
typename F::E poly_resultant(const F& f, Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) return f.zero();
  auto acc = f.one();
  while (true) {
    const int n = a.deg();
    const int m = b.deg();
    if (m == 0) return f.mul(acc, f.pow(b.lc(), static_cast<u64>(n)));
    if (n == 0) return f.mul(acc, f.pow(a.lc(), static_cast<u64>(m)));
    Poly<F> r = poly_mod(f, a, b);
    if (r.is_zero()) return f.zero();
    if ((static_cast<long>(n) * m) % 2) acc = f.neg(acc);
    acc = f.mul(acc, f.pow(b.lc(), static_cast<u64>(n - r.deg())));
    a = std::move(b);
    b = std::move(r);
  }
}

// Resultant of a and b regarded as polynomials of formal degrees n >= deg a, m >= deg b.
template <class F>
typename F::E poly_resultant_formal(const F& f, const Poly<F>& a, int n, const Poly<F>& b, int m) {
  const int na = a.deg();
  const int mb = b.deg();
  if (na < n && mb < m) return f.zero();
  if (na < 0 || mb < 0) return f.zero();
  if (na == n && mb == m) return poly_resultant(f, a, b);
  if (na < n) {
    auto r = f.mul(f.pow(b.lc(), static_cast<u64>(n - na)), poly_resultant(f, a, b));
    return (static_cast<long>(n - na) * m) % 2 ? f.neg(r) : r;
  }
  return f.mul(f.pow(a.lc(), static_cast<u64>(m - mb)), poly_resultant(f, a, b));
}

template <class F>
bool poly_is_squarefree(const F& f, const Poly<F>& a) {
  if (a.is_zero()) throw DegenerateParam("squarefree test on zero polynomial");
  return poly_gcd(f, a, poly_deriv(f, a)).deg() == 0;
}

// x^q - x mod a, with q the field size.
template <class F>
Poly<F> poly_frobenius_residue(const F& f, const Poly<F>& a) {
  Poly<F> h = poly_powmod(f, poly_x(f), f.size(), a);
  return poly_sub(f, h, poly_mod(f, poly_x(f), a));
}

template <class F>
unsigned count_roots(const F& f, const Poly<F>& a) {
  if (a.is_zero()) throw DegenerateParam("count_roots on zero polynomial");
  const int d = a.deg();
  if (d <= 0) return 0;
  if (d == 1) return 1;
  if (d == 2) {
    auto disc = f.sub(f.sqr(a.c[1]), f.mul(f.from_int(4), f.mul(a.c[2], a.c[0])));
    if (f.is_zero(disc)) return 1;
    return f.chi(disc) == 1 ? 2 : 0;
  }
  Poly<F> m = poly_monic(f, a);
  return static_cast<unsigned>(poly_gcd(f, m, poly_frobenius_residue(f, m)).deg());
}

namespace detail {

template <class F>
void split_roots(const F& f, const Poly<F>& g, std::mt19937_64& rng, std::vector<typename F::E>& out) {
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    out.push_back(f.neg(f.mul(g.c[0], f.inv(g.c[1]))));
    return;
  }
  const u64 half = (f.size() - 1) / 2;
  while (true) {
    Poly<F> shift = {{f.random(rng), f.one()}};
    Poly<F> h = poly_powmod(f, shift, half, g);
    Poly<F> d = poly_gcd(f, g, poly_sub(f, h, poly_const(f, f.one())));
    if (d.deg() > 0 && d.deg() < g.deg()) {
      split_roots(f, d, rng, out);
      split_roots(f, poly_divrem(f, g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct roots in the field, sorted by element index. Cantor-Zassenhaus with a fixed seed.
template <class F>
std::vector<typename F::E> poly_roots(const F& f, const Poly<F>& a, u64 seed = 0x5eedULL) {
  if (a.is_zero()) throw DegenerateParam("poly_roots on zero polynomial");
  std::vector<typename F::E> out;
  if (a.deg() <= 0) return out;
  Poly<F> m = poly_monic(f, a);
  Poly<F> g = poly_gcd(f, m, poly_frobenius_residue(f, m));
  std::mt19937_64 rng(seed);
  detail::split_roots(f, g, rng, out);
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return f.index(x) < f.index(y); });
  return out;
}

// Newton interpolation through (xs[i], ys[i]) with distinct xs.
template <class F>
Poly<F> poly_interpolate(const F& f, const std::vector<typename F::E>& xs, std::vector<typename F::E> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = f.mul(f.sub(ys[i], ys[i - 1]), f.inv(f.sub(xs[i], xs[i - j])));
      if (i == j) break;
    }
  }
  Poly<F> r;
  for (std::size_t k = n; k-- > 0;) {
    r = poly_mul(f, r, Poly<F>{{f.neg(xs[k]), f.one()}});
    r = poly_add(f, r, poly_const(f, ys[k]));
  }
  return r;
}

// Bivariate polynomial, c[i][j] is the coefficient of x^i y^j.
template <class F>
struct BiPoly {
  using E = typename F::E;
  std::vector<std::vector<E>> c;

  bool is_zero() const { return c.empty(); }
  int deg_x() const { return static_cast<int>(c.size()) - 1; }
};

template <class F>
BiPoly<F> bipoly_trim(const F& f, BiPoly<F> p) {
  for (auto& row : p.c) {
    while (!row.empty() && f.is_zero(row.back())) row.pop_back();
  }
  while (!p.c.empty() && p.c.back().empty()) p.c.pop_back();
  return p;
}

template <class F>
typename F::E bipoly_coeff(const F& f, const BiPoly<F>& p, int i, int j) {
  if (i < 0 || j < 0 || i >= static_cast<int>(p.c.size()) || j >= static_cast<int>(p.c[i].size())) return f.zero();
  return p.c[i][j];
}

template <class F>
void bipoly_add_term(const F& f, BiPoly<F>& p, int i, int j, const typename F::E& v) {
  if (static_cast<int>(p.c.size()) <= i) p.c.resize(i + 1);
  auto& row = p.c[i];
  if (static_cast<int>(row.size()) <= j) row.resize(j + 1, f.zero());
  row[j] = f.add(row[j], v);
}

template <class F>
int bipoly_deg_y(const BiPoly<F>& p) {
  int d = -1;
  for (const auto& row : p.c) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

template <class F>
int bipoly_total_degree(const F& f, const BiPoly<F>& p) {
  int d = -1;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    for (std::size_t j = 0; j < p.c[i].size(); ++j) {
      if (!f.is_zero(p.c[i][j])) d = std::max(d, static_cast<int>(i + j));
    }
  }
  return d;
}

template <class F>
BiPoly<F> bipoly_add(const F& f, BiPoly<F> a, const BiPoly<F>& b) {
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c[i].size(); ++j) bipoly_add_term(f, a, static_cast<int>(i), static_cast<int>(j), b.c[i][j]);
  }
  return bipoly_trim(f, std::move(a));
}

template <class F>
BiPoly<F> bipoly_scale(const F& f, BiPoly<F> a, const typename F::E& s) {
  for (auto& row : a.c) {
    for (auto& v : row) v = f.mul(v, s);
  }
  return bipoly_trim(f, std::move(a));
}

template <class F>
BiPoly<F> bipoly_mul(const F& f, const BiPoly<F>& a, const BiPoly<F>& b) {
  BiPoly<F> r;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < a.c[i].size(); ++j) {
      if (f.is_zero(a.c[i][j])) continue;
      for (std::size_t k = 0; k < b.c.size(); ++k) {
        for (std::size_t l = 0; l < b.c[k].size(); ++l) {
          bipoly_add_term(f, r, static_cast<int>(i + k), static_cast<int>(j + l), f.mul(a.c[i][j], b.c[k][l]));
        }
      }
    }
  }
  return bipoly_trim(f, std::move(r));
}

template <class F>
typename F::E bipoly_eval(const F& f, const BiPoly<F>& p, const typename F::E& x, const typename F::E& y) {
  auto r = f.zero();
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    auto row = f.zero();
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = f.add(f.mul(row, y), *jt);
    r = f.add(f.mul(r, x), row);
  }
  return r;
}

// p(x0, y) as a polynomial in y.
template <class F>
Poly<F> bipoly_at_x(const F& f, const BiPoly<F>& p, const typename F::E& x0) {
  std::vector<typename F::E> c(std::max(bipoly_deg_y(p) + 1, 0), f.zero());
  auto xp = f.one();
  for (const auto& row : p.c) {
    for (std::size_t j = 0; j < row.size(); ++j) c[j] = f.add(c[j], f.mul(row[j], xp));
    xp = f.mul(xp, x0);
  }
  return poly_trim(f, std::move(c));
}

// p(x, y0) as a polynomial in x.
template <class F>
Poly<F> bipoly_at_y(const F& f, const BiPoly<F>& p, const typename F::E& y0) {
  std::vector<typename F::E> c;
  c.reserve(p.c.size());
  for (const auto& row : p.c) {
    auto v = f.zero();
    for (auto jt = row.rbegin(); jt != row.rend(); ++jt) v = f.add(f.mul(v, y0), *jt);
    c.push_back(v);
  }
  return poly_trim(f, std::move(c));
}

template <class F>
BiPoly<F> bipoly_swap(const F& f, const BiPoly<F>& p) {
  BiPoly<F> r;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    for (std::size_t j = 0; j < p.c[i].size(); ++j) bipoly_add_term(f, r, static_cast<int>(j), static_cast<int>(i), p.c[i][j]);
  }
  return bipoly_trim(f, std::move(r));
}

template <class F>
BiPoly<F> bipoly_dx(const F& f, const BiPoly<F>& p) {
  BiPoly<F> r;
  for (std::size_t i = 1; i < p.c.size(); ++i) {
    for (std::size_t j = 0; j < p.c[i].size(); ++j) {
      bipoly_add_term(f, r, static_cast<int>(i - 1), static_cast<int>(j), f.mul(f.from_int(static_cast<i64>(i)), p.c[i][j]));
    }
  }
  return bipoly_trim(f, std::move(r));
}

template <class F>
BiPoly<F> bipoly_dy(const F& f, const BiPoly<F>& p) {
  return bipoly_swap(f, bipoly_dx(f, bipoly_swap(f, p)));
}

template <class F>
BiPoly<F> bipoly_lift(const F& f, const BiPoly<Fp>& p) {
  BiPoly<F> r;
  r.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    for (u64 v : p.c[i]) r.c[i].push_back(f.embed(v));
  }
  return r;
}

// Res_y(a, b) as a polynomial in x, by evaluation at enough points and interpolation.
// Formal y-degrees are those of a and b; the field must have more than the degree bound elements.
template <class F>
Poly<F> bipoly_resultant_y(const F& f, const BiPoly<F>& a, const BiPoly<F>& b) {
  const int n = bipoly_deg_y(a);
  const int m = bipoly_deg_y(b);
  if (n < 0 || m < 0) return {};
  const int bound = n * std::max(b.deg_x(), 0) + m * std::max(a.deg_x(), 0);
  if (f.size() <= static_cast<u64>(bound)) throw BadCharacteristic("field too small for resultant interpolation");
  std::vector<typename F::E> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    auto x = f.element(static_cast<u64>(k));
    xs.push_back(x);
    ys.push_back(poly_resultant_formal(f, bipoly_at_x(f, a, x), n, bipoly_at_x(f, b, x), m));
  }
  return poly_interpolate(f, xs, std::move(ys));
}

}  // namespace mc
