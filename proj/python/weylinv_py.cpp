#include "weylinv/invariants.hpp"
#include "weylinv/spec_parser.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weylinv;

namespace {

// Python ints are arbitrary precision, so go through the decimal string.
py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::list to_py(const IntVec& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const IntMat& rows) {
    py::list out;
    for (const auto& r : rows) out.append(to_py(r));
    return out;
}

IntMat from_py_rows(const py::iterable& rows) {
    IntMat out;
    for (const auto& r : rows) {
        IntVec v;
        for (const auto& x : py::reinterpret_borrow<py::iterable>(r)) v.push_back(from_py(x));
        out.push_back(std::move(v));
    }
    return out;
}

py::dict to_py(const InvariantLattice& l) {
    py::dict d;
    d["hnf"] = to_py(l.lattice.basis());
    d["exactness"] = to_string(l.exactness);
    d["source"] = l.source;
    return d;
}

py::dict to_py(const FactorGroup& g) {
    py::dict d;
    d["factors"] = to_py(g.factors);
    d["free_rank"] = g.free_rank;
    d["text"] = g.to_string();
    return d;
}

DecMode dec_mode(const std::string& s) {
    if (s == "enumerate") return DecMode::Enumerate;
    if (s == "table") return DecMode::Table;
    if (s == "both") return DecMode::Both;
    throw std::invalid_argument("dec_mode must be enumerate, table or both");
}

SdecMode sdec_mode(const std::string& s) {
    if (s == "auto") return SdecMode::Auto;
    if (s == "generators") return SdecMode::Generators;
    if (s == "elements") return SdecMode::Elements;
    if (s == "table") return SdecMode::Table;
    throw std::invalid_argument("sdec_mode must be auto, generators, elements or table");
}

py::dict invariants(const std::string& spec, int height, int window, const std::string& dec, const std::string& sdec) {
    LatticeModel m(parse_spec(spec));
    InvariantReport r;
    {
        py::gil_scoped_release release;
        r = compute_invariants(m, dec_mode(dec), sdec_mode(sdec), DecOptions{height, window});
    }
    py::dict d;
    d["spec"] = format_spec(m.spec());
    d["Q"] = to_py(r.Q);
    d["Dec"] = to_py(r.Dec);
    d["Sdec"] = to_py(r.Sdec);
    d["inv_ind"] = to_py(r.inv_ind);
    d["inv_sd"] = to_py(r.inv_sd);
    return d;
}

}  // namespace

PYBIND11_MODULE(_weylinv, m) {
    m.doc() = "Degree-3 invariant groups of split reductive groups";

    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    m.def("normalize_spec", [](const std::string& s) { return format_spec(parse_spec(s)); }, py::arg("spec"));
    m.def("invariants", &invariants, py::arg("spec"), py::arg("height") = 4, py::arg("window") = 2,
          py::arg("dec_mode") = "both", py::arg("sdec_mode") = "auto");
    m.def(
        "dec_at_height",
        [](const std::string& spec, int h) { return to_py(dec_at_height(LatticeModel(parse_spec(spec)), h).basis()); },
        py::arg("spec"), py::arg("height"));
    m.def(
        "c2",
        [](const std::string& spec, const std::string& poly) {
            LatticeModel model(parse_spec(spec));
            return to_py(c2(model, LaurentPoly::parse(poly, model.total_rank())));
        },
        py::arg("spec"), py::arg("poly"),
        "Degree-2 part of a Laurent polynomial in x1..xn, in Killing coordinates; the part must be W-invariant.");
    m.def(
        "factor_group",
        [](const py::iterable& sub, const py::iterable& super, std::size_t dim) {
            return to_py(factor_group(Lattice(dim, from_py_rows(sub)), Lattice(dim, from_py_rows(super))));
        },
        py::arg("sub"), py::arg("super"), py::arg("dim"));
}
