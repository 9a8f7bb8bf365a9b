#include "maxcurves/field.hpp"

#include <algorithm>

namespace mc {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kTableLimit = u64{1} << 22;

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp::Fp(u64 p) : p_(p), small_(p < (u64{1} << 32)) {
  if (p < 3 || p % 2 == 0 || p >= (u64{1} << 63) || !is_prime_u64(p)) {
    throw BadCharacteristic("p must be an odd prime below 2^63, got " + std::to_string(p));
  }
  if (p_ < kTableLimit) {
    auto table = std::make_shared<std::vector<std::int8_t>>(p_, std::int8_t{-1});
    (*table)[0] = 0;
    for (u64 x = 1; x <= (p_ - 1) / 2; ++x) (*table)[x * x % p_] = 1;
    chi_table_ = std::move(table);
  }
  for (u64 n = 2;; ++n) {
    if (chi(n) == -1) {
      ns_ = n;
      break;
    }
  }
  odd_part_ = p_ - 1;
  while ((odd_part_ & 1) == 0) {
    odd_part_ >>= 1;
    ++two_adic_;
  }
}

Fp::E Fp::inv(E a) const {
  if (a == 0) throw DegenerateParam("inverse of zero");
  i128 t = 0, nt = 1;
  u64 r = p_, nr = a;
  while (nr) {
    u64 q = r / nr;
    i128 tt = t - static_cast<i128>(q) * nt;
    t = nt;
    nt = tt;
    u64 rr = r - q * nr;
    r = nr;
    nr = rr;
  }
  if (t < 0) t += p_;
  return static_cast<E>(t);
}

Fp::E Fp::pow(E a, u64 e) const {
  E r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fp::E Fp::from_int(i64 v) const {
  i64 m = static_cast<i64>(p_);
  i64 r = v % m;
  return static_cast<E>(r < 0 ? r + m : r);
}

Fp::E Fp::from_rat(Rat r) const {
  E d = from_int(r.den);
  if (d == 0) {
    throw BadCharacteristic("denominator " + std::to_string(r.den) + " vanishes mod " + std::to_string(p_));
  }
  return mul(from_int(r.num), inv(d));
}

Fp::E Fp::from_decimal(std::string_view s) const {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw DataFormat("empty integer literal");
  E v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw DataFormat("bad digit in integer literal");
    v = add(mul(v, 10 % p_), static_cast<E>(ch - '0') % p_);
  }
  return negative ? neg(v) : v;
}

int Fp::jacobi(E a) const {
  u64 n = p_;
  int t = 1;
  while (a) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int Fp::chi(E a) const {
  if (chi_table_) return (*chi_table_)[a];
  if (a == 0) return 0;
  return jacobi(a);
}

std::optional<Fp::E> Fp::sqrt(E a) const {
  if (a == 0) return E{0};
  if (chi(a) != 1) return std::nullopt;
  E r;
  if (two_adic_ == 1) {
    r = pow(a, (p_ + 1) / 4);
  } else {
    unsigned m = two_adic_;
    E c = pow(ns_, odd_part_);
    E t = pow(a, odd_part_);
    r = pow(a, (odd_part_ + 1) / 2);
    while (t != 1) {
      unsigned i = 0;
      E tt = t;
      while (tt != 1) {
        tt = sqr(tt);
        ++i;
      }
      E b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = sqr(b);
      m = i;
      c = sqr(b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  return std::min(r, neg(r));
}

Fp::E Fp::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<u64>(0, p_ - 1)(rng);
}

std::string Fp::str(E a) const { return std::to_string(a); }

}  // namespace mc
