#include "quiverhom/module_expr.hpp"
#include "quiverhom/worked_examples.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace quiverhom;

namespace {

py::object extnat_to_py(const ExtendedNat& e) {
    if (e.is_finite) return py::int_(e.v);
    return py::str(">=" + std::to_string(e.v));
}

KupischSeries::Kind kind_from(const std::string& s) {
    if (s == "linear") return KupischSeries::Kind::Linear;
    if (s == "cyclic") return KupischSeries::Kind::Cyclic;
    throw QhError("kind must be 'linear' or 'cyclic'");
}

struct PyAlgebra {
    AlgebraPtr a;

    int dim() const { return a->dim(); }
    int vertex_count() const { return a->vertex_count(); }
    std::string field() const { return a->field().name(); }

    py::dict analyze(int cap) const {
        HigherAuslanderInfo ha = is_higher_auslander(a, cap);
        py::dict d;
        d["dim"] = a->dim();
        d["gldim"] = extnat_to_py(ha.gldim);
        d["domdim"] = extnat_to_py(ha.domdim);
        d["higher_auslander"] = ha.is_higher_auslander;
        if (ha.g) d["g"] = *ha.g;
        return d;
    }

    py::dict qf1(int cap) const {
        Qf1Verdict v = qf1_finite_test(a, cap);
        py::dict d;
        d["qf1"] = v.is_qf1;
        d["gldim"] = extnat_to_py(v.gldim);
        d["domdim"] = extnat_to_py(v.domdim);
        d["higher_auslander"] = v.higher_auslander;
        py::dict c1;
        c1["pdim_tau_g_DA"] = extnat_to_py(v.condition1.pdim_tau_g_DA);
        c1["idim_stable"] = extnat_to_py(v.condition1.idim_stable);
        c1["holds"] = v.condition1.holds;
        d["condition1"] = c1;
        py::dict c2;
        c2["holds"] = v.condition2.holds;
        if (v.condition2.witness) {
            c2["witness_e"] = a->quiver().vertex_labels[v.condition2.witness->first];
            c2["witness_f"] = a->quiver().vertex_labels[v.condition2.witness->second];
        } else {
            c2["witness_e"] = py::none();
            c2["witness_f"] = py::none();
        }
        d["condition2"] = c2;
        return d;
    }

    py::object module_dims(const std::string& expr, int cap) const {
        QuiverModule m = parse_module_expr(a, expr, cap);
        py::list out;
        for (int v = 0; v < a->vertex_count(); ++v) out.append(m.dim(v));
        return out;
    }

    py::dict module_dims_report(const std::string& expr, int cap) const {
        QuiverModule m = parse_module_expr(a, expr, cap);
        py::dict d;
        d["pdim"] = extnat_to_py(pdim(m, cap));
        d["idim"] = extnat_to_py(idim(m, cap));
        d["domdim"] = extnat_to_py(domdim(m, cap));
        d["codomdim"] = extnat_to_py(codomdim(m, cap));
        return d;
    }

    int ext(const std::string& from, const std::string& to, int k, int cap) const {
        return ext_dim(parse_module_expr(a, from, cap), parse_module_expr(a, to, cap), k);
    }

    PyAlgebra opposite() const { return {a->opposite()}; }

    std::string serialize() const { return serialize_algebra(*a); }
};

PyAlgebra parse_py(const std::string& text, int length_cap) {
    return {parse_algebra_text(text, length_cap).algebra};
}

PyAlgebra nakayama_py(const std::string& kind, const std::vector<int>& entries,
                      const std::string& field) {
    return {BoundQuiverAlgebra::nakayama({kind_from(kind), entries}, Field::parse(field))};
}

py::dict scan_py(const std::string& kind, int max_simples, int max_entry,
                 const std::string& parity, int workers, std::uint64_t seed, int cap,
                 const std::string& field) {
    ScanConfig cfg;
    cfg.kind = kind == "linear"   ? ScanConfig::Kind::Linear
               : kind == "cyclic" ? ScanConfig::Kind::Cyclic
                                  : ScanConfig::Kind::Both;
    cfg.max_simples = max_simples;
    cfg.max_entry = max_entry;
    cfg.parity = parity == "all" ? ScanConfig::Parity::All : ScanConfig::Parity::EvenOnly;
    cfg.workers = workers;
    cfg.seed = seed;
    cfg.cap = cap;
    cfg.field = Field::parse(field);
    ScanReport r = conjecture_scan(cfg);
    py::dict d;
    d["algebras_scanned"] = r.algebras_scanned;
    d["higher_auslander_found"] = r.higher_auslander_found;
    d["conjecture_instances"] = r.conjecture_instances;
    auto records = [](const std::vector<ScanRecord>& recs) {
        py::list out;
        for (const ScanRecord& rec : recs) {
            py::dict rj;
            rj["kind"] = rec.series.kind == KupischSeries::Kind::Cyclic ? "cyclic" : "linear";
            rj["entries"] = rec.series.entries;
            rj["g"] = rec.g;
            out.append(rj);
        }
        return out;
    };
    d["counterexamples"] = records(r.counterexamples);
    d["odd_g_violations"] = records(r.odd_g_violations);
    d["wall_time"] = r.wall_time;
    return d;
}

py::list enumerate_py(const std::string& kind, int n, int max_entry) {
    py::list out;
    for (const KupischSeries& s : enumerate_kupisch(kind_from(kind), n, max_entry))
        out.append(s.entries);
    return out;
}

} // namespace

PYBIND11_MODULE(quiverhom, m) {
    m.doc() = "exact homological invariants and QF-1 tests for bound quiver algebras";

    py::register_exception<QhError>(m, "QhError");

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("dim", &PyAlgebra::dim)
        .def_property_readonly("vertex_count", &PyAlgebra::vertex_count)
        .def_property_readonly("field", &PyAlgebra::field)
        .def("analyze", &PyAlgebra::analyze, py::arg("cap") = 33)
        .def("qf1", &PyAlgebra::qf1, py::arg("cap") = 33,
             "finite QF-1 test; raises QhError unless gldim = domdim is finite")
        .def("module_dims", &PyAlgebra::module_dims, py::arg("expr"), py::arg("cap") = 33,
             "dimension vector of a module expression such as 'P(1)' or 'stableA'")
        .def("homological_dims", &PyAlgebra::module_dims_report, py::arg("expr"),
             py::arg("cap") = 33)
        .def("ext", &PyAlgebra::ext, py::arg("from_expr"), py::arg("to_expr"), py::arg("k"),
             py::arg("cap") = 33)
        .def("opposite", &PyAlgebra::opposite)
        .def("serialize", &PyAlgebra::serialize);

    m.def("parse", &parse_py, py::arg("text"), py::arg("length_cap") = 64,
          "build an algebra from the text format");
    m.def("nakayama", &nakayama_py, py::arg("kind"), py::arg("entries"), py::arg("field") = "Q",
          "Nakayama algebra from a Kupisch series");
    m.def("scan", &scan_py, py::arg("kind") = "both", py::arg("max_simples") = 6,
          py::arg("max_entry") = 0, py::arg("parity") = "even", py::arg("workers") = 2,
          py::arg("seed") = 0, py::arg("cap") = 33, py::arg("field") = "GF(2)",
          "Kupisch-series conjecture scan");
    m.def("enumerate_kupisch", &enumerate_py, py::arg("kind"), py::arg("n"),
          py::arg("max_entry"));
}
