#include "maxcurves/decomp.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mc {

CurveRef rational_ref(std::string name) {
  auto counter = [](const auto& f) { return f.size() + 1; };
  return {std::move(name), 0, counter, counter, counter};
}

CurveRef genus4_ref(std::string name, const SeparatedPlaneModel& C) {
  auto counter = [C](const auto& f) { return genus4_smooth_count(C, f); };
  return {std::move(name), 4, counter, counter, counter};
}

u64 level_size(const Tower& t, unsigned level) {
  switch (level) {
    case 0: return t.f1.size();
    case 1: return t.f2.size();
    case 2: return t.quartic().size();
  }
  throw DegenerateParam("level must be 0, 1 or 2");
}

i64 trace_at(const CurveRef& c, const Tower& t, unsigned level) {
  u64 N = 0;
  switch (level) {
    case 0: N = c.count1(t.f1); break;
    case 1: N = c.count2(t.f2); break;
    case 2: N = c.count4(t.quartic()); break;
    default: throw DegenerateParam("level must be 0, 1 or 2");
  }
  const u64 q = level_size(t, level);
  const i64 a = trace_of(q, N);
  check_hasse(q, a, c.genus);
  return a;
}

bool genus_consistent(const DecompositionSpec& s) {
  if (s.kr) {
    const KRConstants& k = *s.kr;
    if (k.h.size() != k.quotients.size() || static_cast<int>(k.h.size()) != k.m) return false;
    long lhs = static_cast<long>(k.m - 1) * s.base.genus + static_cast<long>(k.g) * k.quotient_G.genus;
    long rhs = 0;
    long order = 1;
    for (std::size_t i = 0; i < k.h.size(); ++i) {
      rhs += static_cast<long>(k.h[i]) * k.quotients[i].genus;
      order += k.h[i] - 1;
    }
    return lhs == rhs && order == k.g;
  }
  long sum = 0;
  for (const auto& [c, mult] : s.factors) sum += static_cast<long>(mult) * c.genus;
  return sum == s.base.genus;
}

bool KRReport::pass() const {
  return !levels.empty() && std::all_of(levels.begin(), levels.end(), [](const LevelReport& l) { return l.pass; });
}

KRReport verify_kr_identity(const DecompositionSpec& s, const Tower& t, const std::vector<unsigned>& levels) {
  KRReport report{s.name, {}};
  for (unsigned level : levels) {
    LevelReport lr;
    lr.level = level;
    lr.q = level_size(t, level);
    const i64 ab = trace_at(s.base, t, level);
    lr.traces.emplace_back(s.base.name, ab);
    if (s.kr) {
      const KRConstants& k = *s.kr;
      const i64 aG = trace_at(k.quotient_G, t, level);
      lr.traces.emplace_back(k.quotient_G.name, aG);
      lr.lhs = (k.m - 1) * ab + k.g * aG;
      for (std::size_t i = 0; i < k.quotients.size(); ++i) {
        const i64 ai = trace_at(k.quotients[i], t, level);
        lr.traces.emplace_back(k.quotients[i].name, ai);
        lr.rhs += k.h[i] * ai;
      }
    } else {
      lr.lhs = ab;
      for (const auto& [c, mult] : s.factors) {
        const i64 ai = trace_at(c, t, level);
        lr.traces.emplace_back(c.name, ai);
        lr.rhs += mult * ai;
      }
    }
    lr.pass = lr.lhs == lr.rhs;
    report.levels.push_back(std::move(lr));
  }
  return report;
}

DecompositionSpec genus4_kr_spec(const Genus4Family& g) {
  KRConstants k;
  k.m = 5;
  k.g = 8;
  k.h = {2, 2, 2, 4, 2};
  k.quotients = {curve_ref("C/<tau1>=G", 2, g.G), curve_ref("C/<tau2>=G", 2, g.G), curve_ref("C/<sigma>~E", 1, g.E),
                 curve_ref("C/<sigma.tau1>=Q1", 1, g.Q1), curve_ref("C/<sigma.tau1.tau2>~E", 1, g.E)};
  k.quotient_G = rational_ref("C/G");
  return {"genus4-KR", genus4_ref("C", g.C), std::move(k), {}};
}

DecompositionSpec genus4_split_spec(const Genus4Family& g) {
  return {"genus4-E^3xQ1", genus4_ref("C", g.C), std::nullopt,
          {{curve_ref("E", 1, g.E), 3}, {curve_ref("Q1", 1, g.Q1), 1}}};
}

DecompositionSpec genus5_kr_spec(const Genus5Family& g) {
  KRConstants k;
  k.m = 3;
  k.g = 4;
  k.h = {2, 2, 2};
  k.quotients = {rational_ref("C/<alpha1>"), curve_ref("Ca2", 2, g.Ca2), curve_ref("Ca3", 3, g.Ca3)};
  k.quotient_G = rational_ref("C/G");
  return {"genus5-Ca2xCa3", curve_ref("Ca", 5, g.Ca), std::move(k), {}};
}

DecompositionSpec ca2_split_spec(const Genus5Family& g) {
  return {"genus5-Ca2~E1xE1neg", curve_ref("Ca2", 2, g.Ca2), std::nullopt,
          {{curve_ref("E1", 1, g.E1), 1}, {curve_ref("E1neg", 1, g.E1neg), 1}}};
}

DecompositionSpec genus5_split_spec(const Genus5Family& g) {
  return {"genus5-E1^3xCa32", curve_ref("Ca", 5, g.Ca), std::nullopt,
          {{curve_ref("E1", 1, g.E1), 3}, {curve_ref("Ca32", 2, g.Ca32), 1}}};
}

DecompositionSpec ca3_split_spec(const Genus5Family& g) {
  return {"genus5-Ca3~WxCa32", curve_ref("Ca3", 3, g.Ca3), std::nullopt,
          {{curve_ref("W", 1, g.W), 1}, {curve_ref("Ca32", 2, g.Ca32), 1}}};
}

DecompositionSpec genus10_split_spec(const Genus10Family& g) {
  return {"genus10-E1^3xE2xE3^3xE4^3",
          curve_ref("U", 10, g.U),
          std::nullopt,
          {{curve_ref("E1", 1, g.E1), 3}, {curve_ref("E2", 1, g.E2), 1}, {curve_ref("E3", 1, g.E3), 3},
           {curve_ref("E4", 1, g.E4), 3}}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Maximal: return "Maximal";
    case Verdict::Minimal: return "Minimal";
    case Verdict::Neither: return "Neither";
  }
  return "?";
}

MaximalityVerdict maximality(u64 N, u64 p, unsigned g) {
  const i128 q = static_cast<i128>(p) * p;
  const i128 diff = static_cast<i128>(N) - q - 1;
  const i128 bound = static_cast<i128>(2) * g * p;
  if (diff > bound || diff < -bound) {
    throw HasseViolation("N = " + std::to_string(N) + " outside the Hasse-Weil interval for p = " + std::to_string(p) +
                         ", g = " + std::to_string(g));
  }
  MaximalityVerdict v{p, static_cast<u64>(q), N, g, Verdict::Neither};
  if (diff == bound) v.verdict = Verdict::Maximal;
  if (diff == -bound) v.verdict = Verdict::Minimal;
  return v;
}

bool genus4_is_maximal(u64 p) {
  if (p <= 7) throw BadCharacteristic("the genus-4 family needs p > 7");
  const Fp f(p);
  return is_supersingular(make_elliptic(f, "x^3 + 9/16*x^2 + 3/16*x + 1/64"), f);
}

int twist_sign(i64 tE1, i64 tC0) {
  if (tE1 == 0 && tC0 == 0) return 0;
  if (tC0 == tE1) return 1;
  if (tC0 == -tE1) return -1;
  return 2;
}

std::optional<Genus5Certificate> genus5_certify(const Tower& t, const SpecialK& k) {
  const u64 p = t.p();
  const Genus5Family g = build_genus5(p, k.a);
  Genus5Certificate c;
  c.p = p;
  c.k = k;
  c.tE1 = trace_of(p, ell_count(g.E1, t.f1));
  if (c.tE1 != 0) return std::nullopt;
  const C0C1 cc = build_c0c1(t.f1, k.k);
  c.tC0 = trace_of(p, ell_count(cc.C0, t.f1));
  c.c0sign = twist_sign(c.tE1, c.tC0);
  const u64 q = p * p;
  c.tE1_2 = ell_trace_lift(c.tE1, p, 2);
  c.tC0_2 = ell_trace_lift(c.tC0, p, 2);
  c.tCa2_2 = trace_of(q, hyp_count(g.Ca2, t.f2));
  check_hasse(q, c.tCa2_2, 2);
  c.tCa32_2 = trace_of(q, hyp_count(g.Ca32, t.f2));
  check_hasse(q, c.tCa32_2, 2);
  if (c.tCa2_2 != 2 * c.tE1_2 || c.tCa32_2 != 2 * c.tC0_2 || c.tC0_2 != c.tE1_2) return std::nullopt;
  const i64 aC = 3 * c.tE1_2 + c.tCa32_2;
  c.verdict = maximality(static_cast<u64>(static_cast<i64>(q) + 1 - aC), p, 5);
  if (c.verdict.verdict != Verdict::Maximal) return std::nullopt;
  return c;
}

Genus10Result genus10_verdict(const Tower& t, u64 b, bool cross_check) {
  const u64 p = t.p();
  const Genus10Family g = build_genus10(p, b);
  Genus10Result r;
  r.t1 = trace_of(p, ell_count(g.E1, t.f1));
  r.t2 = trace_of(p, ell_count(g.E2, t.f1));
  r.t3 = trace_of(p, ell_count(g.E3, t.f1));
  r.t4 = trace_of(p, ell_count(g.E4, t.f1));
  r.trace2 = 3 * ell_trace_lift(r.t1, p, 2) + ell_trace_lift(r.t2, p, 2) + 3 * ell_trace_lift(r.t3, p, 2) +
             3 * ell_trace_lift(r.t4, p, 2);
  const u64 N = static_cast<u64>(static_cast<i64>(p * p) + 1 - r.trace2);
  r.verdict = maximality(N, p, 10);
  if (cross_check && p <= 300) {
    r.direct = plane_count(g.U, t.f2);
    r.consistent = *r.direct == N;
  }
  return r;
}

ModularPolynomial phi_parse(std::istream& in, unsigned level) {
  ModularPolynomial phi;
  phi.level = level;
  std::set<std::pair<unsigned, unsigned>> seen;
  std::string line;
  unsigned lineno = 0;
  unsigned maxdeg = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string si, sj, c, extra;
    if (!(ls >> si)) continue;
    if (!(ls >> sj >> c) || (ls >> extra)) throw DataFormat("line " + std::to_string(lineno) + ": expected 'i j c'");
    auto parse_exp = [&](const std::string& s) {
      if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw DataFormat("line " + std::to_string(lineno) + ": bad exponent '" + s + "'");
      }
      return static_cast<unsigned>(std::stoul(s));
    };
    const unsigned i = parse_exp(si), j = parse_exp(sj);
    const std::string digits = (c[0] == '-' || c[0] == '+') ? c.substr(1) : c;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw DataFormat("line " + std::to_string(lineno) + ": bad coefficient '" + c + "'");
    }
    if (i > level + 1 || j > level + 1) throw DataFormat("line " + std::to_string(lineno) + ": exponent exceeds degree");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
      throw DataFormat("line " + std::to_string(lineno) + ": duplicate entry for the pair (" + si + "," + sj + ")");
    }
    maxdeg = std::max({maxdeg, i, j});
    phi.terms.push_back({i, j, c});
    if (i != j) phi.terms.push_back({j, i, c});
  }
  if (maxdeg != level + 1) throw DataFormat("modular polynomial must have degree " + std::to_string(level + 1));
  return phi;
}

ModularPolynomial phi3_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFormat("cannot open " + path);
  return phi_parse(in, 3);
}

u64 phi_eval(const Fp& f, const ModularPolynomial& phi, u64 x, u64 y) {
  u64 s = 0;
  for (const auto& t : phi.terms) {
    s = f.add(s, f.mul(f.from_decimal(t.c), f.mul(f.pow(x, t.i), f.pow(y, t.j))));
  }
  return s;
}

bool phi3_check(const Fp& f, const ModularPolynomial& phi, u64 k) {
  return phi_eval(f, phi, j_bar(f, k), j_tilde(f, k)) == 0;
}

}  // namespace mc
