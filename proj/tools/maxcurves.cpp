#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "maxcurves/mapcheck.hpp"
#include "maxcurves/scan.hpp"

#ifndef MAXCURVES_DATA_DIR
#define MAXCURVES_DATA_DIR "data"
#endif

namespace {

using namespace mc;

constexpr int kOk = 0;
constexpr int kConfig = 2;
constexpr int kVerify = 3;
constexpr int kData = 4;

struct Options {
  ScanConfig scan;
  std::string format = "tsv";
  std::string tag;
  std::string family;
  std::optional<u64> p, a, b, k;
  std::string phi3 = std::string(MAXCURVES_DATA_DIR) + "/phi3.txt";
  bool use_phi3 = false;
};

class Report {
 public:
  void line(const std::string& s) { std::cout << s << '\n'; }
  void check(const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << '\n';
    failures_ += ok ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string traces_str(const std::vector<std::pair<std::string, i64>>& t) {
  std::string s;
  for (const auto& [n, v] : t) s += (s.empty() ? "" : " ") + n + "=" + std::to_string(v);
  return s;
}

void report_kr(Report& r, const DecompositionSpec& s, const Tower& t, const std::vector<unsigned>& levels) {
  r.check("genus bookkeeping " + s.name, genus_consistent(s));
  const KRReport kr = verify_kr_identity(s, t, levels);
  for (const auto& l : kr.levels) {
    std::ostringstream d;
    d << "q=" << l.q << " lhs=" << l.lhs << " rhs=" << l.rhs << " residual=" << (l.lhs - l.rhs) << " ["
      << traces_str(l.traces) << "]";
    r.check(s.name + " level " + std::to_string(l.level), l.pass, d.str());
  }
}

void report_maps(Report& r, const MapSuiteReport& m) {
  for (const auto& o : m.maps) {
    std::string d = "samples=" + std::to_string(o.checked);
    if (!o.branch.empty()) d += " branch " + o.branch;
    if (!o.witness.empty()) d += " witness " + o.witness;
    r.check("map " + o.name, o.pass, d);
  }
  for (const auto& o : m.relations) {
    std::string d = "samples=" + std::to_string(o.checked);
    if (!o.branch.empty()) d += " " + o.branch;
    r.check("relation " + o.name, o.pass, d);
  }
  for (const auto& [n, ok] : m.isogeny_traces) r.check("isogeny traces " + n, ok);
}

std::vector<unsigned> levels_for(u64 p, bool level2) {
  std::vector<unsigned> v{1};
  if (level2 && p <= 31) v.push_back(2);
  return v;
}

u64 require(const std::optional<u64>& v, const char* flag) {
  if (!v) throw ConfigError(std::string("missing ") + flag);
  return *v;
}

int verify_genus4(const Options& o, Report& r) {
  const u64 p = require(o.p, "--p");
  const Genus4Family g = build_genus4(p);
  const Tower t(p, o.scan.level2 && p <= 31);
  const auto levels = levels_for(p, o.scan.level2);
  report_kr(r, genus4_kr_spec(g), t, levels);
  report_kr(r, genus4_split_spec(g), t, levels);
  const SamplePlan plan{100, o.scan.seed, 1};
  report_maps(r, run_genus4_suite(t, plan));
  const i64 aC = trace_at(genus4_ref("C", g.C), t, 1);
  const MaximalityVerdict v = maximality(static_cast<u64>(static_cast<i64>(p * p) + 1 - aC), p, 4);
  r.check("verdict agrees with supersingularity of E", (v.verdict == Verdict::Maximal) == genus4_is_maximal(p));
  r.line("verdict genus4 p=" + std::to_string(p) + " N=" + std::to_string(v.N) + " " + verdict_name(v.verdict));
  return 0;
}

int verify_genus5(const Options& o, Report& r) {
  const u64 p = require(o.p, "--p");
  const Tower t(p, o.scan.level2 && p <= 31);
  std::optional<SpecialK> special;
  if (o.k) {
    for (const auto& s : special_k_values(p)) {
      if (s.k == *o.k % p) special = s;
    }
    if (!special) throw ConfigError("k = " + std::to_string(*o.k) + " is not a special value mod " + std::to_string(p));
  }
  if (!o.a && !special) throw ConfigError("missing --a or --k");
  const u64 a = special ? special->a : *o.a % p;
  if (o.a && special && *o.a % p != special->a) throw ConfigError("--a does not match a(k)");
  const Genus5Family g = build_genus5(p, a);
  const auto levels = levels_for(p, o.scan.level2);
  report_kr(r, genus5_kr_spec(g), t, levels);
  report_kr(r, ca2_split_spec(g), t, levels);
  report_kr(r, genus5_split_spec(g), t, levels);
  report_kr(r, ca3_split_spec(g), t, levels);
  const SamplePlan plan{100, o.scan.seed, 1};
  report_maps(r, run_genus5_suite(t, a, plan));
  std::vector<SpecialK> ks;
  for (const auto& s : special_k_values(p)) {
    if ((special && s.k == special->k) || (!special && s.a == a)) ks.push_back(s);
  }
  for (const auto& s : ks) {
    report_maps(r, run_genus5_k_suite(t, s, plan));
    const auto cert = genus5_certify(t, s);
    r.line(std::string("special k=") + std::to_string(s.k) + " tag=" + tag_name(s.tag) +
           (cert ? " certified Maximal, c0sign=" + std::to_string(cert->c0sign) : " not certified"));
  }
  const i64 aC = trace_at(curve_ref("Ca", 5, g.Ca), t, 1);
  const MaximalityVerdict v = maximality(static_cast<u64>(static_cast<i64>(p * p) + 1 - aC), p, 5);
  r.line("verdict genus5 p=" + std::to_string(p) + " a=" + std::to_string(a) + " N=" + std::to_string(v.N) + " " +
         verdict_name(v.verdict));
  return 0;
}

int verify_genus10(const Options& o, Report& r) {
  const u64 p = require(o.p, "--p");
  const u64 b = require(o.b, "--b") % p;
  const Genus10Family g = build_genus10(p, b);
  const Tower t(p, o.scan.level2 && p <= 31);
  report_kr(r, genus10_split_spec(g), t, levels_for(p, o.scan.level2));
  report_kr(r, {"H1~E1", curve_ref("H1", 1, g.H1), std::nullopt, {{curve_ref("E1", 1, g.E1), 1}}}, t, {0, 1});
  report_kr(r, {"H2~E2", curve_ref("H2", 1, g.H2), std::nullopt, {{curve_ref("E2", 1, g.E2), 1}}}, t, {0, 1});
  report_kr(r,
            {"H3~E3xE4", curve_ref("H3", 2, g.H3), std::nullopt,
             {{curve_ref("E3", 1, g.E3), 1}, {curve_ref("E4", 1, g.E4), 1}}},
            t, {0, 1});
  const Genus10Result res = genus10_verdict(t, b, true);
  if (res.direct) {
    r.check("direct plane count over F_p^2 equals factor prediction", res.consistent,
            "direct=" + std::to_string(*res.direct) + " predicted=" + std::to_string(res.verdict.N));
  }
  const auto pts = sample_points(t.f2, curve_eq(t.f2, "U", g.U), SamplePlan{20, o.scan.seed, 1});
  bool on = true;
  for (const auto& P : pts) on = on && on_curve(t.f2, curve_eq(t.f2, "U", g.U), P);
  r.check("sampled points on U", on && pts.size() == 20, "n=" + std::to_string(pts.size()));
  r.line("verdict genus10 p=" + std::to_string(p) + " b=" + std::to_string(b) + " N=" +
         std::to_string(res.verdict.N) + " " + verdict_name(res.verdict.verdict));
  return 0;
}

int cmd_verify(const Options& o) {
  const auto fam = parse_family(o.family);
  if (!fam) throw ConfigError("unknown family '" + o.family + "'");
  if (o.p && !is_prime_u64(*o.p)) throw ConfigError(std::to_string(*o.p) + " is not prime");
  Report r;
  switch (*fam) {
    case Family::Genus4: verify_genus4(o, r); break;
    case Family::Genus5: verify_genus5(o, r); break;
    case Family::Genus10: verify_genus10(o, r); break;
  }
  r.line(r.failures() == 0 ? "all checks passed" : std::to_string(r.failures()) + " check(s) failed");
  return r.failures() == 0 ? kOk : kVerify;
}

int cmd_phi3(const Options& o) {
  const u64 p = require(o.p, "--p");
  if (!is_prime_u64(p) || p <= 3) throw ConfigError("--p must be a prime above 3");
  const ModularPolynomial phi = phi3_load(o.phi3);
  const Fp f(p);
  std::vector<std::pair<u64, std::string>> ks;
  if (o.k) {
    ks.emplace_back(*o.k % p, "-");
  } else {
    for (const auto& s : special_k_values(p)) ks.emplace_back(s.k, tag_name(s.tag));
  }
  int bad = 0;
  for (const auto& [k, tag] : ks) {
    const u64 jb = j_bar(f, k), jt = j_tilde(f, k);
    const u64 v = phi_eval(f, phi, jb, jt);
    const bool ok = v == 0;
    std::cout << "p=" << p << "\tk=" << k << "\ttag=" << tag << "\tjbar=" << jb << "\tjtilde=" << jt
              << "\tphi3=" << v << (ok ? "\tPASS" : "\tFAIL") << '\n';
    bad += ok ? 0 : 1;
  }
  if (ks.empty()) std::cout << "p=" << p << ": no special k in F_p\n";
  return bad == 0 ? kOk : kVerify;
}

int cmd_scan(Options o, Family fam, u64 default_pmax) {
  o.scan.family = fam;
  if (o.scan.pmax == 0) o.scan.pmax = default_pmax;
  if (o.format == "tsv") {
    o.scan.format = Format::Tsv;
  } else if (o.format == "json") {
    o.scan.format = Format::Json;
  } else {
    throw ConfigError("--format must be tsv or json");
  }
  if (!o.tag.empty()) {
    o.scan.tag = parse_tag(o.tag);
    if (!o.scan.tag) throw ConfigError("unknown tag '" + o.tag + "'");
  }
  if (o.use_phi3) o.scan.phi3 = o.phi3;
  o.scan.b = o.b;
  const ScanSummary s = run_scan_to_output(o.scan);
  std::cerr << s.records << " record(s), " << s.maximal.size() << " new maximal\n";
  if (s.inconsistent) {
    std::cerr << s.inconsistent << " record(s) failed an internal cross-check\n";
    return kVerify;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal curves: point counts, Jacobian decompositions and maximality scans"};
  app.require_subcommand(1);
  Options o;

  auto add_scan_flags = [&](CLI::App* c) {
    c->add_option("--pmin", o.scan.pmin, "smallest prime");
    c->add_option("--pmax", o.scan.pmax, "largest prime");
    c->add_option("--workers", o.scan.workers, "worker threads");
    c->add_option("--out", o.scan.out, "output file (default stdout)");
    c->add_option("--format", o.format, "tsv or json");
    c->add_flag("--resume", o.scan.resume, "continue an interrupted scan in --out");
    c->add_flag("--timing", o.scan.timing, "fill elapsed_ns with wall time");
    c->add_flag("--level2", o.scan.level2, "enable F_{p^4} checks");
    c->add_option("--seed", o.scan.seed, "sampling seed");
  };

  auto* g4 = app.add_subcommand("scan-genus4", "scan primes for the genus 4 curve");
  add_scan_flags(g4);
  auto* g5 = app.add_subcommand("scan-genus5", "certify the special parameters of the genus 5 family");
  add_scan_flags(g5);
  g5->add_option("--tag", o.tag, "K36_5, Kneg4_7, K24plus or K24minus");
  g5->add_option("--phi3", o.phi3, "modular polynomial file")->check(CLI::ExistingFile);
  auto* g10 = app.add_subcommand("scan-genus10", "sweep b for the genus 10 family");
  add_scan_flags(g10);
  g10->add_option("--b", o.b, "restrict the sweep to one b");

  auto* ver = app.add_subcommand("verify", "verify one instance: traces, KR identities, maps");
  ver->add_option("--family", o.family, "genus4, genus5 or genus10")->required();
  ver->add_option("--p", o.p, "prime")->required();
  ver->add_option("--a", o.a, "genus 5 parameter");
  ver->add_option("--b", o.b, "genus 10 parameter");
  ver->add_option("--k", o.k, "special k");
  ver->add_flag("--level2", o.scan.level2, "also check over F_{p^4} (p <= 31)");
  ver->add_option("--seed", o.scan.seed, "sampling seed");

  auto* phi = app.add_subcommand("phi3-check", "evaluate Phi_3(jbar(k), jtilde(k)) mod p");
  phi->add_option("--p", o.p, "prime")->required();
  phi->add_option("--k", o.k, "k (default: every special k mod p)");
  phi->add_option("--phi3", o.phi3, "modular polynomial file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }
  if (g5->count("--phi3")) o.use_phi3 = true;

  try {
    if (*g4) return cmd_scan(o, Family::Genus4, 5000);
    if (*g5) return cmd_scan(o, Family::Genus5, 1500);
    if (*g10) return cmd_scan(o, Family::Genus10, 251);
    if (*ver) return cmd_verify(o);
    if (*phi) return cmd_phi3(o);
  } catch (const DataFormat& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return kData;
  } catch (const HasseViolation& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return kVerify;
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}
