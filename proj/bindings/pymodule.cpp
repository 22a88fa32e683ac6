// python bindings for the main operations: field arithmetic, arcs, spectra,
// coverage, censuses, genus gates, codes and the verification task registry.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "arcforge/tasks.hpp"

namespace py = pybind11;
using namespace arcforge;

namespace {

// thin wrappers: the C++ side hands out shared_ptr<const T>, which pybind11
// holders do not mix well with

struct PyField {
    GFPtr F;
};

struct PyArc {
    Arc arc;
};

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<i64>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<u64>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::dict coverage_to_py(const Arc& arc, const CoverageReport& cov) {
    py::dict d;
    d["n"] = cov.n;
    d["is_complete"] = cov.is_complete;
    d["uncovered_off_count"] = cov.uncovered_off_count;
    d["uncovered_on_count"] = cov.uncovered_on_count;
    d["uncovered_off"] = cov.uncovered_off;
    d["uncovered_on"] = cov.uncovered_on;
    py::dict off, on;
    for (const auto& [s, c] : cov.off_subplane) off[py::int_(s)] = c;
    for (const auto& [s, c] : cov.on_subplane) on[py::int_(s)] = c;
    d["off_subplane"] = off;
    d["on_subplane"] = on;
    (void)arc;
    return d;
}

py::dict spectrum_to_py(const Spectrum& s) {
    py::dict d;
    for (const auto& [c, cnt] : s.counts) d[py::int_(c)] = cnt;
    return d;
}

TaskParams params_from_kwargs(py::object q, py::object r, unsigned threads, u64 seed,
                              double tolerance_tv) {
    TaskParams p;
    if (!q.is_none()) p.q = q.cast<u64>();
    if (!r.is_none()) p.r = r.cast<unsigned>();
    p.threads = threads;
    p.seed = seed;
    p.tolerance_tv = tolerance_tv;
    return p;
}

}  // namespace

PYBIND11_MODULE(arcforge, m) {
    m.doc() = "plane-curve arcs, character spectra, coverage scans and monodromy censuses "
              "over small finite fields";

    py::class_<PyField>(m, "Field")
        .def(py::init([](u64 p, unsigned deg, std::vector<u64> modulus) {
                 return PyField{GF::make(p, deg, std::move(modulus))};
             }),
             py::arg("p"), py::arg("m"), py::arg("modulus") = std::vector<u64>{})
        .def_property_readonly("p", [](const PyField& f) { return f.F->p(); })
        .def_property_readonly("m", [](const PyField& f) { return f.F->m(); })
        .def_property_readonly("order", [](const PyField& f) { return f.F->order(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.F->modulus(); })
        .def("descriptor", [](const PyField& f) { return f.F->descriptor(); })
        .def("elem_str", [](const PyField& f, u64 x) { return f.F->elem_str(x); })
        .def("add", [](const PyField& f, u64 a, u64 b) { return f.F->add(a, b); })
        .def("sub", [](const PyField& f, u64 a, u64 b) { return f.F->sub(a, b); })
        .def("neg", [](const PyField& f, u64 a) { return f.F->neg(a); })
        .def("mul", [](const PyField& f, u64 a, u64 b) { return f.F->mul(a, b); })
        .def("inv", [](const PyField& f, u64 a) { return f.F->inv(a); })
        .def("pow", [](const PyField& f, u64 a, u64 e) { return f.F->pow(a, e); })
        .def("frobenius", [](const PyField& f, u64 x, u64 s) { return f.F->frobenius(x, s); })
        .def("in_subfield", [](const PyField& f, u64 x, u64 s) { return f.F->in_subfield(x, s); })
        .def("rel_trace", [](const PyField& f, u64 x, u64 s) { return f.F->rel_trace(x, s); })
        .def("rel_norm", [](const PyField& f, u64 x, u64 s) { return f.F->rel_norm(x, s); })
        .def("subfield_elements",
             [](const PyField& f, u64 s) { return f.F->subfield_elements(s); })
        .def("coeffs", [](const PyField& f, u64 x) { return f.F->coeffs(x); });

    py::class_<PyArc>(m, "Arc")
        .def_property_readonly("size", [](const PyArc& a) { return a.arc.size(); })
        .def_property_readonly("points", [](const PyArc& a) { return a.arc.points; })
        .def_property_readonly("q", [](const PyArc& a) { return a.arc.q; })
        .def_property_readonly("r", [](const PyArc& a) { return a.arc.r; })
        .def_property_readonly("plane_order", [](const PyArc& a) { return a.arc.plane->order(); })
        .def("contains", [](const PyArc& a, u64 idx) { return a.arc.contains(idx); })
        .def("point_str", [](const PyArc& a, u64 idx) { return a.arc.plane->point_str(idx); })
        .def("to_json", [](const PyArc& a) { return arc_to_json(a.arc); });

    m.def("hermitian_arc", [](u64 q, unsigned r) { return PyArc{hermitian_arc(q, r)}; },
          py::arg("q"), py::arg("r"));
    m.def("bks_arc_implicit", [](u64 q, unsigned r) { return PyArc{bks_arc_implicit(q, r)}; },
          py::arg("q"), py::arg("r"));
    m.def("bks_arc_parametric",
          [](u64 q, unsigned r) { return PyArc{bks_arc_parametric(q, r)}; }, py::arg("q"),
          py::arg("r"));
    m.def("arc_from_json", [](const std::string& text) { return PyArc{arc_from_json(text)}; });

    m.def("spectrum",
          [](const PyArc& a, unsigned threads) { return spectrum_to_py(spectrum(a.arc, threads)); },
          py::arg("arc"), py::arg("threads") = 0);
    m.def("coverage",
          [](const PyArc& a, u64 n, unsigned threads) {
              return coverage_to_py(a.arc, coverage(a.arc, n, threads));
          },
          py::arg("arc"), py::arg("n"), py::arg("threads") = 0);
    m.def("secants_through",
          [](const PyArc& a, u64 point, u64 n) { return secants_through(a.arc, point, n); });
    m.def("extend_and_recheck",
          [](const PyArc& a, const std::vector<u64>& extra, u64 n, unsigned threads) {
              auto res = extend_and_recheck(a.arc, extra, n, threads);
              py::dict d;
              d["arc"] = PyArc{std::move(res.arc)};
              d["spectrum"] = spectrum_to_py(res.spectrum);
              d["coverage"] = coverage_to_py(a.arc, res.coverage);
              d["character_violation"] = res.character_violation;
              return d;
          },
          py::arg("arc"), py::arg("extra"), py::arg("n"), py::arg("threads") = 0);

    m.def("bluher_check",
          [](const PyField& f, u64 q, const std::string& family, u64 a, u64 b, u64 mm) {
              const auto fam =
                  family == "hermitian" ? BluherFamily::hermitian : BluherFamily::bks;
              const auto v = bluher_check(f.F, q, fam, a, b, mm);
              py::dict d;
              d["pass"] = v.pass;
              d["root_count"] = v.root_count;
              d["squarefree"] = v.squarefree;
              return d;
          });

    m.def("pgl2_distribution", [](u64 q) {
        return json_to_py(nlohmann::json::parse(pgl2_distribution(q).to_json()));
    });
    m.def("agl1_distribution", [](u64 q) {
        return json_to_py(nlohmann::json::parse(agl1_distribution(q).to_json()));
    });
    m.def("specialization_census",
          [](const std::string& family, const PyField& f, u64 q, u64 a, u64 b) {
              CensusFamily fam;
              if (family == "hermitian-line") fam = CensusFamily::hermitian_line;
              else if (family == "hermitian-onpoint") fam = CensusFamily::hermitian_onpoint;
              else if (family == "bks-line") fam = CensusFamily::bks_line_monic;
              else if (family == "bks-onpoint") fam = CensusFamily::bks_onpoint;
              else if (family == "calibration-i") fam = CensusFamily::calibration_i;
              else if (family == "calibration-ii") fam = CensusFamily::calibration_ii;
              else throw std::invalid_argument("unknown census family: " + family);
              return json_to_py(
                  nlohmann::json::parse(specialization_census(fam, f.F, q, a, b).to_json()));
          });

    m.def("closure_genus", [](const std::string& name, u64 q) {
        ClosureCase c;
        if (name == "hermitian_offcurve") c = ClosureCase::hermitian_offcurve;
        else if (name == "hermitian_onpoint") c = ClosureCase::hermitian_onpoint;
        else if (name == "bks_general_distinct") c = ClosureCase::bks_general_distinct;
        else if (name == "bks_general_equal") c = ClosureCase::bks_general_equal;
        else if (name == "bks_special") c = ClosureCase::bks_special;
        else throw std::invalid_argument("unknown closure case: " + name);
        return closure_genus(c, q).convert_to<u64>();
    });
    m.def("guarantee_table", [](u64 q_max) {
        return json_to_py(nlohmann::json::parse(guarantee_table_json(guarantee_table(q_max))));
    });

    m.def("min_distance", [](const PyArc& a, unsigned threads) {
        const auto d = min_distance(a.arc, threads);
        py::dict out;
        out["k"] = d.k;
        out["d"] = d.d;
        out["d_enum"] = d.d_enum;
        out["d_spectrum"] = d.d_spectrum;
        out["agree"] = d.agree;
        return out;
    }, py::arg("arc"), py::arg("threads") = 0);
    m.def("extendibility_report", [](const PyArc& a, unsigned threads) {
        const auto rep = extendibility_report(a.arc, threads);
        py::dict out;
        out["n"] = rep.n;
        out["complete"] = rep.complete;
        out["extendible"] = rep.extendible;
        out["witness"] = rep.witness ? py::object(py::int_(*rep.witness)) : py::object(py::none());
        out["witness_valid"] = rep.witness_valid;
        return out;
    }, py::arg("arc"), py::arg("threads") = 0);

    m.def("task_ids", [] { return task_ids(); });
    m.def("run_task",
          [](const std::string& id, py::object q, py::object r, unsigned threads, u64 seed,
             double tolerance_tv) {
              const TaskReport rep =
                  run_task(id, params_from_kwargs(q, r, threads, seed, tolerance_tv));
              py::dict d;
              d["id"] = rep.id;
              d["verdict"] = verdict_name(rep.verdict);
              d["exit_code"] = verdict_exit_code(rep.verdict);
              d["elapsed_ms"] = rep.elapsed_ms;
              d["report"] = json_to_py(nlohmann::json::parse(rep.json));
              return d;
          },
          py::arg("id"), py::arg("q") = py::none(), py::arg("r") = py::none(),
          py::arg("threads") = 0, py::arg("seed") = 0, py::arg("tolerance_tv") = 0.05);

    m.def("max_enumeration", &max_enumeration);
    m.def("set_max_enumeration", &set_max_enumeration);
}
