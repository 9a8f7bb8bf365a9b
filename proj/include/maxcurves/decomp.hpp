#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxcurves/catalog.hpp"

namespace mc {

// A curve that can be counted over F_p, F_{p^2} and F_{p^4}.
struct CurveRef {
  std::string name;
  unsigned genus = 0;
  std::function<u64(const Fp&)> count1;
  std::function<u64(const Fp2&)> count2;
  std::function<u64(const Fp4&)> count4;
};

template <class M>
CurveRef curve_ref(std::string name, unsigned genus, M model) {
  CurveModel cm = std::move(model);
  auto counter = [cm](const auto& f) { return count_points(cm, f); };
  return {std::move(name), genus, counter, counter, counter};
}

CurveRef rational_ref(std::string name);
CurveRef genus4_ref(std::string name, const SeparatedPlaneModel& C);

// Trace over F_p (level 0), F_{p^2} (level 1) or F_{p^4} (level 2).
i64 trace_at(const CurveRef& c, const Tower& t, unsigned level);
u64 level_size(const Tower& t, unsigned level);

struct KRConstants {
  int m = 0;
  int g = 0;
  std::vector<int> h;
  std::vector<CurveRef> quotients;  // X/H_i
  CurveRef quotient_G;              // X/G
};

struct DecompositionSpec {
  std::string name;
  CurveRef base;
  std::optional<KRConstants> kr;
  std::vector<std::pair<CurveRef, int>> factors;
};

// Genus bookkeeping of s (both sides of the isogeny have equal dimension).
bool genus_consistent(const DecompositionSpec& s);

struct LevelReport {
  unsigned level = 0;
  u64 q = 0;
  i64 lhs = 0;
  i64 rhs = 0;
  bool pass = false;
  std::vector<std::pair<std::string, i64>> traces;
};

struct KRReport {
  std::string name;
  std::vector<LevelReport> levels;
  bool pass() const;
};

KRReport verify_kr_identity(const DecompositionSpec& s, const Tower& t, const std::vector<unsigned>& levels);

DecompositionSpec genus4_kr_spec(const Genus4Family& g);
DecompositionSpec genus4_split_spec(const Genus4Family& g);
DecompositionSpec genus5_kr_spec(const Genus5Family& g);
DecompositionSpec ca2_split_spec(const Genus5Family& g);
DecompositionSpec genus5_split_spec(const Genus5Family& g);  // holds from F_{p^2} on
DecompositionSpec ca3_split_spec(const Genus5Family& g);
DecompositionSpec genus10_split_spec(const Genus10Family& g);

enum class Verdict { Maximal, Minimal, Neither };
const char* verdict_name(Verdict v);

struct MaximalityVerdict {
  u64 p = 0;
  u64 q = 0;
  u64 N = 0;
  unsigned g = 0;
  Verdict verdict = Verdict::Neither;
};

MaximalityVerdict maximality(u64 N, u64 p, unsigned g);

bool genus4_is_maximal(u64 p);

// +1 if t(C0) = t(E1) != 0, -1 if t(C0) = -t(E1) != 0, 0 if both vanish, 2 otherwise.
int twist_sign(i64 tE1, i64 tC0);

struct Genus5Certificate {
  u64 p = 0;
  SpecialK k;
  i64 tE1 = 0;  // over F_p
  i64 tC0 = 0;  // over F_p
  int c0sign = 0;
  i64 tE1_2 = 0;
  i64 tCa2_2 = 0;
  i64 tCa32_2 = 0;
  i64 tC0_2 = 0;
  MaximalityVerdict verdict;
};

std::optional<Genus5Certificate> genus5_certify(const Tower& t, const SpecialK& k);

struct Genus10Result {
  MaximalityVerdict verdict;
  i64 t1 = 0, t2 = 0, t3 = 0, t4 = 0;  // over F_p
  i64 trace2 = 0;                      // predicted trace of U over F_{p^2}
  std::optional<u64> direct;           // plane count of U over F_{p^2}
  bool consistent = true;
};

Genus10Result genus10_verdict(const Tower& t, u64 b, bool cross_check);

struct ModularPolynomial {
  unsigned level = 0;
  struct Term {
    unsigned i = 0, j = 0;
    std::string c;
  };
  std::vector<Term> terms;  // both (i, j) and (j, i) present
};

ModularPolynomial phi_parse(std::istream& in, unsigned level);
ModularPolynomial phi3_load(const std::string& path);
u64 phi_eval(const Fp& f, const ModularPolynomial& phi, u64 x, u64 y);
bool phi3_check(const Fp& f, const ModularPolynomial& phi, u64 k);

}  // namespace mc
