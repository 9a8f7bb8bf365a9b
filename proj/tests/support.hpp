#pragma once

#include <random>
#include <vector>

#include "maxcurves/curves.hpp"
#include "oracle.hpp"

namespace testutil {

inline std::vector<oracle::i64> ints(const mc::Poly<mc::Fp>& a) {
  return {a.c.begin(), a.c.end()};
}

inline oracle::Bi ints(const mc::BiPoly<mc::Fp>& a) {
  oracle::Bi out;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < a.c[i].size(); ++j) {
      if (a.c[i][j]) out[{static_cast<int>(i), static_cast<int>(j)}] = static_cast<oracle::i64>(a.c[i][j]);
    }
  }
  return out;
}

inline mc::Poly<mc::Fp> random_poly(const mc::Fp& f, int deg, std::mt19937_64& rng) {
  std::vector<mc::u64> c(deg + 1);
  for (auto& x : c) x = f.random(rng);
  if (c.back() == 0) c.back() = 1;
  return mc::poly_trim(f, c);
}

inline std::vector<mc::u64> primes_upto(mc::u64 n) {
  std::vector<mc::u64> out;
  for (mc::u64 p = 3; p <= n; p += 2) {
    bool prime = true;
    for (mc::u64 d = 3; d * d <= p; d += 2) prime = prime && p % d;
    if (prime) out.push_back(p);
  }
  return out;
}

// Brute-force point count of any catalogued model over GF(p^n).
inline oracle::i64 oracle_count(const oracle::Field& F, const mc::CurveModel& m) {
  if (auto* e = std::get_if<mc::EllipticModel>(&m)) return oracle::hyperelliptic_count(F, ints(e->f));
  if (auto* h = std::get_if<mc::HyperellipticModel>(&m)) return oracle::hyperelliptic_count(F, ints(h->f), ints(h->h));
  if (auto* s = std::get_if<mc::SeparatedPlaneModel>(&m)) {
    return oracle::separated_count(F, ints(s->gn), ints(s->gd), ints(s->hn), ints(s->hd),
                                   static_cast<oracle::i64>(s->c));
  }
  return oracle::plane_count(F, ints(std::get<mc::PlaneModel>(m).F));
}

}  // namespace testutil
