#include "maxcurves/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mc {

const char* family_name(Family f) {
  switch (f) {
    case Family::Genus4: return "genus4";
    case Family::Genus5: return "genus5";
    case Family::Genus10: return "genus10";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::Genus4, Family::Genus5, Family::Genus10}) {
    if (s == family_name(f)) return f;
  }
  return std::nullopt;
}

void validate(const ScanConfig& c) {
  if (c.pmin < 3) throw ConfigError("pmin must be at least 3");
  if (c.pmin > c.pmax) throw ConfigError("pmin must not exceed pmax");
  if (c.pmax >= (u64{1} << 20)) throw ConfigError("pmax must be below 2^20");
  if (c.workers < 1) throw ConfigError("workers must be positive");
  if (c.family == Family::Genus10 && c.pmax > 1000) throw ConfigError("genus10 scans need pmax <= 1000");
  if (c.resume && c.out.empty()) throw ConfigError("--resume needs --out");
  if (c.b && c.family != Family::Genus10) throw ConfigError("--b applies to genus10 scans only");
  if (c.tag && c.family != Family::Genus5) throw ConfigError("--tag applies to genus5 scans only");
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  u64 r = 1;
  while ((r + 1) * (r + 1) <= hi) ++r;
  std::vector<bool> small(r + 1, true);
  std::vector<u64> base;
  for (u64 i = 2; i <= r; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= r; j += i) small[j] = false;
  }
  const u64 seg = 1 << 16;
  for (u64 start = lo; start <= hi; start += seg) {
    const u64 end = std::min(hi, start + seg - 1);
    std::vector<bool> mark(end - start + 1, true);
    for (u64 q : base) {
      u64 m = std::max(q * q, (start + q - 1) / q * q);
      for (; m <= end; m += q) mark[m - start] = false;
    }
    for (u64 i = start; i <= end; ++i) {
      if (mark[i - start]) out.push_back(i);
    }
    if (end == hi) break;
  }
  return out;
}

namespace {

std::vector<ScanRecord> genus4_records(u64 p) {
  if (p <= 7) return {};
  const Fp f(p);
  const Genus4Family g = build_genus4(p);
  ScanRecord r;
  r.family = Family::Genus4;
  r.p = p;
  const i64 tE = trace_of(p, ell_count(g.E, f));
  const i64 tQ1 = trace_of(p, hyp_count(g.Q1, f));
  const i64 aC = 3 * ell_trace_lift(tE, p, 2) + ell_trace_lift(tQ1, p, 2);
  const MaximalityVerdict v = maximality(static_cast<u64>(static_cast<i64>(p * p) + 1 - aC), p, 4);
  r.verdict = verdict_name(v.verdict);
  r.traces = {{"tE", tE}, {"tQ1", tQ1}, {"aC2", aC}};
  r.inconsistent = (v.verdict == Verdict::Maximal) != genus4_is_maximal(p);
  return {r};
}

std::vector<ScanRecord> genus5_records(const ScanConfig& c, u64 p, const ModularPolynomial* phi3) {
  if (p <= 3) return {};
  const Tower t(p, false);
  std::map<std::pair<int, u64>, ScanRecord> best;
  std::map<std::pair<int, u64>, u64> best_k;
  for (const SpecialK& k : special_k_values(p)) {
    if (c.tag && *c.tag != k.tag) continue;
    auto cert = genus5_certify(t, k);
    if (!cert) continue;
    const std::pair<int, u64> key{static_cast<int>(k.tag), k.a};
    if (best_k.count(key) && best_k[key] <= k.k) continue;
    ScanRecord r;
    r.family = Family::Genus5;
    r.p = p;
    r.tag_order = key.first;
    r.a = k.a;
    r.param = std::string("tag=") + tag_name(k.tag) + ";a=" + std::to_string(k.a) + ";k=" + std::to_string(k.k);
    r.verdict = verdict_name(cert->verdict.verdict);
    r.traces = {{"tE1", cert->tE1},       {"tC0", cert->tC0},         {"c0sign", cert->c0sign},
                {"tE1_2", cert->tE1_2},   {"tCa2_2", cert->tCa2_2},   {"tCa32_2", cert->tCa32_2},
                {"tC0_2", cert->tC0_2}};
    if (phi3) {
      const bool ok = phi3_check(t.f1, *phi3, k.k);
      r.traces.emplace_back("phi3", ok ? 1 : 0);
      r.inconsistent = !ok;
    }
    best[key] = std::move(r);
    best_k[key] = k.k;
  }
  std::vector<ScanRecord> out;
  for (auto& [key, r] : best) out.push_back(std::move(r));
  return out;
}

std::vector<ScanRecord> genus10_records(const ScanConfig& c, u64 p) {
  if (p <= 3) return {};
  const Tower t(p, false);
  std::vector<ScanRecord> out;
  const u64 b0 = c.b ? *c.b % p : 0;
  const u64 b1 = c.b ? b0 + 1 : p;
  for (u64 b = b0; b < b1; ++b) {
    Genus10Result res;
    try {
      res = genus10_verdict(t, b, false);
    } catch (const SingularModel&) {
      continue;
    }
    if (res.verdict.verdict != Verdict::Maximal) continue;
    if (p <= 300) res = genus10_verdict(t, b, true);
    ScanRecord r;
    r.family = Family::Genus10;
    r.p = p;
    r.a = b;
    r.param = "b=" + std::to_string(b);
    r.verdict = verdict_name(res.verdict.verdict);
    r.traces = {{"t1", res.t1}, {"t2", res.t2}, {"t3", res.t3}, {"t4", res.t4}, {"aU2", res.trace2}};
    if (res.direct) r.traces.emplace_back("N2direct", static_cast<i64>(*res.direct));
    r.inconsistent = !res.consistent;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<ScanRecord> scan_prime(const ScanConfig& c, u64 p, const ModularPolynomial* phi3) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ScanRecord> out;
  switch (c.family) {
    case Family::Genus4: out = genus4_records(p); break;
    case Family::Genus5: out = genus5_records(c, p, phi3); break;
    case Family::Genus10: out = genus10_records(c, p); break;
  }
  if (c.timing) {
    const u64 ns = static_cast<u64>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count());
    for (auto& r : out) r.elapsed_ns = ns;
  }
  return out;
}

void run_scan(const ScanConfig& c, const std::vector<u64>& primes,
              const std::function<void(u64, std::vector<ScanRecord>&&)>& sink) {
  std::optional<ModularPolynomial> phi;
  if (c.phi3) phi = phi3_load(*c.phi3);
  const ModularPolynomial* phip = phi ? &*phi : nullptr;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex m;
  std::condition_variable cv;
  std::map<std::size_t, std::vector<ScanRecord>> done;
  std::exception_ptr error;

  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= primes.size()) break;
      std::vector<ScanRecord> recs;
      try {
        recs = scan_prime(c, primes[i], phip);
      } catch (...) {
        std::lock_guard lk(m);
        if (!error) error = std::current_exception();
        stop = true;
        cv.notify_all();
        return;
      }
      std::lock_guard lk(m);
      done.emplace(i, std::move(recs));
      cv.notify_all();
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(c.workers, static_cast<unsigned>(primes.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);

  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<ScanRecord> recs;
    {
      std::unique_lock lk(m);
      cv.wait(lk, [&] { return done.count(i) || error; });
      if (error) break;
      recs = std::move(done[i]);
      done.erase(i);
    }
    try {
      sink(primes[i], std::move(recs));
    } catch (...) {
      std::lock_guard lk(m);
      error = std::current_exception();
      stop = true;
      break;
    }
  }
  stop = true;
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string tsv_header() { return "#family\tp\tparam\tverdict\ttrace_list\telapsed_ns"; }

std::string format_record(const ScanRecord& r, Format f) {
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["p"] = r.p;
    j["param"] = r.param;
    j["verdict"] = r.verdict;
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.traces) t[name] = v;
    j["trace_list"] = t;
    j["elapsed_ns"] = r.elapsed_ns;
    return j.dump();
  }
  std::string traces;
  for (const auto& [name, v] : r.traces) {
    if (!traces.empty()) traces += ';';
    traces += name + "=" + std::to_string(v);
  }
  std::ostringstream os;
  os << family_name(r.family) << '\t' << r.p << '\t' << r.param << '\t' << r.verdict << '\t' << traces << '\t'
     << r.elapsed_ns;
  return os.str();
}

std::vector<std::pair<u64, std::string>> read_record_lines(std::istream& in, Format f) {
  std::vector<std::pair<u64, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  u64 last = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    // an unterminated last line is a torn write
    if (in.eof()) break;
    u64 p = 0;
    try {
      if (f == Format::Json) {
        p = nlohmann::json::parse(line).at("p").get<u64>();
      } else {
        std::istringstream ls(line);
        std::string fam, ps;
        if (!std::getline(ls, fam, '\t') || !std::getline(ls, ps, '\t')) throw std::invalid_argument("columns");
        std::size_t used = 0;
        p = std::stoull(ps, &used);
        if (used != ps.size()) throw std::invalid_argument("p");
        if (std::count(line.begin(), line.end(), '\t') != 5) throw std::invalid_argument("columns");
      }
    } catch (const std::exception&) {
      throw DataFormat("cannot parse record on line " + std::to_string(lineno));
    }
    if (p < last) throw DataFormat("records out of order on line " + std::to_string(lineno));
    last = p;
    out.emplace_back(p, line);
  }
  return out;
}

ScanSummary run_scan_to_output(const ScanConfig& c) {
  validate(c);
  ScanConfig cfg = c;
  std::vector<std::string> kept;
  if (c.resume) {
    std::ifstream in(c.out);
    if (in) {
      auto lines = read_record_lines(in, c.format);
      if (!lines.empty()) {
        const u64 last = lines.back().first;
        for (const auto& [p, l] : lines) {
          if (p < last) kept.push_back(l);
        }
        cfg.pmin = std::max(cfg.pmin, last);
      }
    }
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::trunc);
    if (!file) throw ConfigError("cannot open " + c.out + " for writing");
    os = &file;
  }
  if (c.format == Format::Tsv) *os << tsv_header() << '\n';
  for (const auto& l : kept) *os << l << '\n';
  os->flush();

  ScanSummary s;
  s.records = kept.size();
  const auto primes = primes_in(cfg.pmin, cfg.pmax);
  run_scan(cfg, primes, [&](u64, std::vector<ScanRecord>&& recs) {
    for (const auto& r : recs) {
      *os << format_record(r, c.format) << '\n';
      ++s.records;
      if (r.inconsistent) ++s.inconsistent;
      if (r.verdict == verdict_name(Verdict::Maximal)) s.maximal.emplace_back(r.p, r.param);
    }
    os->flush();
  });
  return s;
}

}  // namespace mc
