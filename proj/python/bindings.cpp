#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxcurves/mapcheck.hpp"
#include "maxcurves/scan.hpp"

namespace py = pybind11;
using namespace mc;

namespace {

u64 count_at(const CurveModel& m, u64 p, unsigned level) {
  const Tower t(p, level == 2);
  switch (level) {
    case 0: return count_points(m, t.f1);
    case 1: return count_points(m, t.f2);
    case 2: return count_points(m, t.quartic());
  }
  throw ConfigError("level must be 0, 1 or 2");
}

py::dict verdict_dict(const MaximalityVerdict& v) {
  py::dict d;
  d["p"] = v.p;
  d["q"] = v.q;
  d["N"] = v.N;
  d["genus"] = v.g;
  d["verdict"] = verdict_name(v.verdict);
  return d;
}

py::list records(const std::vector<ScanRecord>& rs) {
  py::list out;
  for (const auto& r : rs) {
    py::dict d;
    d["family"] = family_name(r.family);
    d["p"] = r.p;
    d["param"] = r.param;
    d["verdict"] = r.verdict;
    py::dict traces;
    for (const auto& [n, v] : r.traces) traces[py::str(n)] = v;
    d["traces"] = traces;
    d["consistent"] = !r.inconsistent;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Point counts, trace identities and maximality scans for curves over finite fields";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SingularModel>(m, "SingularModel", base.ptr());
  py::register_exception<BadCharacteristic>(m, "BadCharacteristic", base.ptr());
  py::register_exception<DegenerateParam>(m, "DegenerateParam", base.ptr());
  py::register_exception<HasseViolation>(m, "HasseViolation", base.ptr());
  py::register_exception<DataFormat>(m, "DataFormat", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<NoRoot>(m, "NoRoot", base.ptr());
  py::register_exception<SampleExhausted>(m, "SampleExhausted", base.ptr());

  m.def("is_prime", &is_prime_u64, py::arg("n"));

  m.def(
      "elliptic_count",
      [](u64 p, const std::string& cubic, unsigned level) {
        return count_at(make_elliptic(Fp(p), cubic), p, level);
      },
      py::arg("p"), py::arg("cubic"), py::arg("level") = 0, "Points of y^2 = cubic(x) over F_{p^(2^level)}.");
  m.def(
      "hyperelliptic_count",
      [](u64 p, const std::string& rhs, const std::string& cross, unsigned level) {
        return count_at(make_hyperelliptic(Fp(p), rhs, cross), p, level);
      },
      py::arg("p"), py::arg("rhs"), py::arg("cross") = "", py::arg("level") = 0,
      "Points of the smooth model of y^2 + cross(x) y = rhs(x).");
  m.def(
      "plane_count",
      [](u64 p, const std::string& F, unsigned level) { return count_at(make_plane(Fp(p), F), p, level); },
      py::arg("p"), py::arg("F"), py::arg("level") = 0, "Projective points of the nonsingular plane curve F(x, y) = 0.");
  m.def(
      "j_invariant", [](u64 p, const std::string& cubic) { return j_invariant(make_elliptic(Fp(p), cubic), Fp(p)); },
      py::arg("p"), py::arg("cubic"));

  m.def("genus4_is_maximal", &genus4_is_maximal, py::arg("p"));
  m.def(
      "special_k_values",
      [](u64 p) {
        py::list out;
        for (const auto& k : special_k_values(p)) {
          py::dict d;
          d["k"] = k.k;
          d["tag"] = tag_name(k.tag);
          d["a"] = k.a;
          d["lambda"] = k.lambda;
          out.append(d);
        }
        return out;
      },
      py::arg("p"));
  m.def("j_bar", [](u64 p, u64 k) { return j_bar(Fp(p), k); }, py::arg("p"), py::arg("k"));
  m.def("j_tilde", [](u64 p, u64 k) { return j_tilde(Fp(p), k); }, py::arg("p"), py::arg("k"));
  m.def(
      "genus5_certify",
      [](u64 p, u64 k) -> py::object {
        std::optional<SpecialK> sk;
        for (const auto& s : special_k_values(p)) {
          if (s.k == k % p) sk = s;
        }
        if (!sk) throw ConfigError("k is not a special value mod p");
        const auto c = genus5_certify(Tower(p, false), *sk);
        if (!c) return py::none();
        py::dict d = verdict_dict(c->verdict);
        d["a"] = sk->a;
        d["tag"] = tag_name(sk->tag);
        d["tE1"] = c->tE1;
        d["tC0"] = c->tC0;
        d["c0sign"] = c->c0sign;
        return d;
      },
      py::arg("p"), py::arg("k"), "Certificate for the genus-5 curve with a = a(k), or None.");
  m.def(
      "genus10_verdict",
      [](u64 p, u64 b, bool cross_check) {
        const auto r = genus10_verdict(Tower(p, false), b, cross_check);
        py::dict d = verdict_dict(r.verdict);
        d["traces"] = py::make_tuple(r.t1, r.t2, r.t3, r.t4);
        d["direct"] = r.direct ? py::cast(*r.direct) : py::none();
        d["consistent"] = r.consistent;
        return d;
      },
      py::arg("p"), py::arg("b"), py::arg("cross_check") = false);
  m.def("maximality", [](u64 N, u64 p, unsigned g) { return verdict_dict(maximality(N, p, g)); }, py::arg("N"),
        py::arg("p"), py::arg("genus"));

  m.def(
      "scan",
      [](const std::string& family, u64 pmin, u64 pmax, unsigned workers, std::optional<std::string> tag,
         std::optional<u64> b) {
        ScanConfig c;
        const auto fam = parse_family(family);
        if (!fam) throw ConfigError("unknown family '" + family + "'");
        c.family = *fam;
        c.pmin = pmin;
        c.pmax = pmax;
        c.workers = workers;
        if (tag) {
          c.tag = parse_tag(*tag);
          if (!c.tag) throw ConfigError("unknown tag '" + *tag + "'");
        }
        c.b = b;
        validate(c);
        std::vector<ScanRecord> all;
        {
          py::gil_scoped_release release;
          run_scan(c, primes_in(c.pmin, c.pmax), [&](u64, std::vector<ScanRecord>&& rs) {
            for (auto& r : rs) all.push_back(std::move(r));
          });
        }
        return records(all);
      },
      py::arg("family"), py::arg("pmin") = 3, py::arg("pmax"), py::arg("workers") = 1, py::arg("tag") = py::none(),
      py::arg("b") = py::none(), "Scan records in increasing p.");

  m.def(
      "verify_identities",
      [](const std::string& family, u64 p, u64 param, std::vector<unsigned> levels) {
        const Tower t(p);
        std::vector<DecompositionSpec> specs;
        if (family == "genus4") {
          const auto g = build_genus4(p);
          specs = {genus4_kr_spec(g), genus4_split_spec(g)};
        } else if (family == "genus5") {
          const auto g = build_genus5(p, param);
          specs = {genus5_kr_spec(g), ca2_split_spec(g), genus5_split_spec(g), ca3_split_spec(g)};
        } else if (family == "genus10") {
          specs = {genus10_split_spec(build_genus10(p, param))};
        } else {
          throw ConfigError("unknown family '" + family + "'");
        }
        py::dict out;
        for (const auto& s : specs) out[py::str(s.name)] = verify_kr_identity(s, t, levels).pass();
        return out;
      },
      py::arg("family"), py::arg("p"), py::arg("param") = 0, py::arg("levels") = std::vector<unsigned>{1},
      "Trace identities of the family's decompositions: name -> pass.");
}
