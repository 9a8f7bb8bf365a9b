#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "maxcurves/errors.hpp"

namespace mc {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(u64 n);

struct Rat {
  i64 num = 0;
  i64 den = 1;
};

// Prime field F_p, 3 <= p < 2^63.
class Fp {
 public:
  using E = u64;

  explicit Fp(u64 p);

  u64 p() const { return p_; }
  u64 size() const { return p_; }
  unsigned degree() const { return 1; }
  const Fp& prime() const { return *this; }
  E nonresidue() const { return ns_; }

  E zero() const { return 0; }
  E one() const { return 1; }
  E add(E a, E b) const {
    E s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + (p_ - b); }
  E neg(E a) const { return a ? p_ - a : 0; }
  E mul(E a, E b) const {
    return small_ ? a * b % p_ : static_cast<E>(static_cast<u128>(a) * b % p_);
  }
  E sqr(E a) const { return mul(a, a); }
  E inv(E a) const;
  E pow(E a, u64 e) const;
  bool is_zero(E a) const { return a == 0; }

  E from_int(i64 v) const;
  E from_u64(u64 v) const { return v % p_; }
  E from_rat(Rat r) const;
  E from_decimal(std::string_view s) const;
  E embed(u64 residue) const { return residue; }

  int chi(E a) const;
  std::optional<E> sqrt(E a) const;
  E frob(E a) const { return a; }

  u64 index(E a) const { return a; }
  E element(u64 i) const { return i; }
  bool less(E a, E b) const { return a < b; }
  E random(std::mt19937_64& rng) const;
  std::string str(E a) const;

 private:
  int jacobi(E a) const;

  u64 p_;
  bool small_;
  u64 ns_ = 0;
  u64 odd_part_ = 0;
  unsigned two_adic_ = 0;
  std::shared_ptr<const std::vector<std::int8_t>> chi_table_;
};

// Quadratic extension B[w]/(w^2 - beta). beta is the first element of B in
// index order, starting at index 2, with chi = -1.
template <class B>
class QuadExt {
 public:
  using Base = B;
  using BE = typename B::E;
  struct E {
    BE c0{};
    BE c1{};
    friend bool operator==(const E&, const E&) = default;
  };

  explicit QuadExt(const B& base) : base_(base) {
    const u64 bq = base_.size();
    if (bq >= (u64{1} << 32)) throw BadCharacteristic("extension field too large");
    size_ = bq * bq;
    for (u64 i = 2; i < bq; ++i) {
      BE c = base_.element(i);
      if (base_.chi(c) == -1) {
        beta_ = c;
        break;
      }
    }
    gamma_ = base_.pow(beta_, (base_.prime().p() - 1) / 2);
  }

  const B& base() const { return base_; }
  const Fp& prime() const { return base_.prime(); }
  u64 p() const { return base_.prime().p(); }
  u64 size() const { return size_; }
  unsigned degree() const { return 2 * base_.degree(); }
  BE nonresidue() const { return beta_; }

  E zero() const { return {base_.zero(), base_.zero()}; }
  E one() const { return {base_.one(), base_.zero()}; }
  E gen() const { return {base_.zero(), base_.one()}; }
  E add(const E& a, const E& b) const { return {base_.add(a.c0, b.c0), base_.add(a.c1, b.c1)}; }
  E sub(const E& a, const E& b) const { return {base_.sub(a.c0, b.c0), base_.sub(a.c1, b.c1)}; }
  E neg(const E& a) const { return {base_.neg(a.c0), base_.neg(a.c1)}; }
  E mul(const E& a, const E& b) const {
    BE t0 = base_.mul(a.c0, b.c0);
    BE t1 = base_.mul(a.c1, b.c1);
    BE m = base_.mul(base_.add(a.c0, a.c1), base_.add(b.c0, b.c1));
    return {base_.add(t0, base_.mul(beta_, t1)), base_.sub(base_.sub(m, t0), t1)};
  }
  E sqr(const E& a) const {
    BE c1 = base_.mul(a.c0, a.c1);
    return {base_.add(base_.sqr(a.c0), base_.mul(beta_, base_.sqr(a.c1))), base_.add(c1, c1)};
  }
  E scale(const E& a, const BE& s) const { return {base_.mul(a.c0, s), base_.mul(a.c1, s)}; }
  BE norm(const E& a) const {
    return base_.sub(base_.sqr(a.c0), base_.mul(beta_, base_.sqr(a.c1)));
  }
  E conj(const E& a) const { return {a.c0, base_.neg(a.c1)}; }
  E inv(const E& a) const {
    BE ni = base_.inv(norm(a));
    return {base_.mul(a.c0, ni), base_.neg(base_.mul(a.c1, ni))};
  }
  E pow(E a, u64 e) const {
    E r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = sqr(a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(const E& a) const { return base_.is_zero(a.c0) && base_.is_zero(a.c1); }

  E lift(const BE& b) const { return {b, base_.zero()}; }
  E from_int(i64 v) const { return lift(base_.from_int(v)); }
  E from_rat(Rat r) const { return lift(base_.from_rat(r)); }
  E from_decimal(std::string_view s) const { return lift(base_.from_decimal(s)); }
  E embed(u64 residue) const { return lift(base_.embed(residue)); }

  int chi(const E& a) const { return is_zero(a) ? 0 : base_.chi(norm(a)); }

  std::optional<E> sqrt(const E& a) const {
    if (is_zero(a)) return zero();
    if (chi(a) == -1) return std::nullopt;
    E r;
    if (base_.is_zero(a.c1)) {
      if (base_.chi(a.c0) >= 0) {
        r = {*base_.sqrt(a.c0), base_.zero()};
      } else {
        r = {base_.zero(), *base_.sqrt(base_.mul(a.c0, base_.inv(beta_)))};
      }
    } else {
      BE s = *base_.sqrt(norm(a));
      BE half = base_.inv(base_.from_int(2));
      BE t = base_.mul(base_.add(a.c0, s), half);
      if (base_.chi(t) != 1) t = base_.mul(base_.sub(a.c0, s), half);
      BE r0 = *base_.sqrt(t);
      BE r1 = base_.mul(a.c1, base_.inv(base_.add(r0, r0)));
      r = {r0, r1};
    }
    E m = neg(r);
    return less(m, r) ? m : r;
  }

  E frob(const E& a) const { return {base_.frob(a.c0), base_.mul(base_.frob(a.c1), gamma_)}; }

  u64 index(const E& a) const { return base_.index(a.c0) + base_.size() * base_.index(a.c1); }
  E element(u64 i) const { return {base_.element(i % base_.size()), base_.element(i / base_.size())}; }
  bool less(const E& a, const E& b) const {
    if (!(a.c0 == b.c0)) return base_.less(a.c0, b.c0);
    return base_.less(a.c1, b.c1);
  }
  E random(std::mt19937_64& rng) const { return {base_.random(rng), base_.random(rng)}; }
  std::string str(const E& a) const { return "[" + base_.str(a.c0) + "," + base_.str(a.c1) + "]"; }

 private:
  B base_;
  u64 size_ = 0;
  BE beta_{};
  BE gamma_{};
};

using Fp2 = QuadExt<Fp>;
using Fp4 = QuadExt<Fp2>;

template <class F>
concept FiniteField = requires(const F& f, const typename F::E& a, std::mt19937_64& rng) {
  { f.size() } -> std::convertible_to<u64>;
  { f.prime() } -> std::convertible_to<const Fp&>;
  { f.add(a, a) } -> std::same_as<typename F::E>;
  { f.mul(a, a) } -> std::same_as<typename F::E>;
  { f.inv(a) } -> std::same_as<typename F::E>;
  { f.chi(a) } -> std::same_as<int>;
  { f.sqrt(a) } -> std::same_as<std::optional<typename F::E>>;
  { f.frob(a) } -> std::same_as<typename F::E>;
  { f.index(a) } -> std::same_as<u64>;
  { f.embed(u64{}) } -> std::same_as<typename F::E>;
  { f.random(rng) } -> std::same_as<typename F::E>;
};

template <FiniteField F>
typename F::E sqrt_or_throw(const F& f, const typename F::E& a) {
  auto r = f.sqrt(a);
  if (!r) throw NoRoot("element is not a square");
  return *r;
}

template <FiniteField F>
typename F::E frac(const F& f, i64 num, i64 den) {
  return f.from_rat({num, den});
}

// F_p, F_{p^2} and, when p < 2^16, F_{p^4}.
struct Tower {
  Fp f1;
  Fp2 f2;
  std::optional<Fp4> f4;

  explicit Tower(u64 p, bool with_f4 = true)
      : f1(p), f2(f1), f4(with_f4 && p < (u64{1} << 16) ? std::optional<Fp4>(Fp4(f2)) : std::nullopt) {}
  u64 p() const { return f1.p(); }
  const Fp4& quartic() const {
    if (!f4) throw BadCharacteristic("F_{p^4} unavailable for this p");
    return *f4;
  }
};

}  // namespace mc
