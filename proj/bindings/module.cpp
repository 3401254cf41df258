#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hessk3/checks.hpp"
#include "hessk3/curve_lattice.hpp"
#include "hessk3/hypergeom.hpp"
#include "hessk3/isometry.hpp"
#include "hessk3/theta_suite.hpp"
#include "hessk3/zmatrix.hpp"

namespace py = pybind11;
using namespace hessk3;

namespace {

// Exact values cross the boundary as decimal strings; the Python side can
// feed them to int() or Fraction().
py::object big(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::list matrix_rows(const ZMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(big(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict verify(const std::vector<std::string>& suites, int order, std::uint64_t seed,
                int samples) {
    RunConfig cfg;
    cfg.suites = suites;
    cfg.order = order;
    cfg.seed = seed;
    cfg.samples = samples;
    const std::string err = validate_config(cfg);
    if (!err.empty()) throw py::value_error(err);
    return json_to_py(render_json(run_checks(cfg)));
}

py::dict smith(const std::vector<std::vector<long>>& rows) {
    const ZMatrix m = ZMatrix::from_rows(rows);
    const SmithForm f = smith_normal_form(m);
    py::dict out;
    out["u"] = matrix_rows(f.u);
    out["s"] = matrix_rows(f.s);
    out["v"] = matrix_rows(f.v);
    py::list inv;
    for (const auto& d : f.invariant_factors()) inv.append(big(d));
    out["invariant_factors"] = inv;
    return out;
}

py::dict lattice_summary() {
    const CurveConfig cfg;
    const DiscriminantGroup disc(cfg);
    const OqGroup oq = enumerate_Oq(disc);
    py::dict out;
    out["curves"] = static_cast<int>(cfg.labels().size());
    out["rank"] = static_cast<int>(cfg.rank());
    out["det"] = big(cfg.det17());
    const auto sig = cfg.signature17();
    out["signature"] = py::make_tuple(sig.first, sig.second);
    py::list inv;
    for (const auto& d : disc.invariant_factors()) inv.append(big(d));
    out["invariant_factors"] = inv;
    out["isotropic_classes"] = static_cast<int>(disc.isotropic_two_torsion().size());
    out["oq_order"] = static_cast<int>(oq.order());
    out["oq_abelian"] = oq.is_abelian();
    out["oq_center"] = static_cast<int>(oq.center_order());
    return out;
}

py::dict theta_diagonal(int order) {
    const DiagonalSeries d = diagonal_series(order);
    py::dict out;
    out["theta"] = json_to_py(d.theta.to_json());
    out["phi"] = json_to_py(d.phi.to_json());
    out["chi"] = json_to_py(d.chi.to_json());
    out["psi"] = json_to_py(d.psi.to_json());
    out["weight4"] = json_to_py(d.weight4.to_json());
    return out;
}

py::dict theta_constants(int order) {
    const ThetaConstants tc = determine_theta_constants(order);
    py::dict out;
    out["c"] = tc.c.to_string();
    out["c4"] = tc.c4.to_string();
    out["c5"] = tc.c5.to_string();
    out["f4_sq_3f8"] = tc.f4_sq_3f8;
    out["f6_relation"] = tc.f6_relation;
    return out;
}

py::dict fc_scaling(int order) {
    const FcScaling sc = match_fc_scaling(period_series_3d(order), order);
    py::dict out;
    py::list matching;
    for (const auto& m : sc.matching) matching.append(m.to_string());
    out["matching"] = matching;
    out["unique_match"] = sc.unique_match;
    out["quoted_scale"] = sc.quoted_scale.to_string();
    return out;
}

py::dict reduce_triple(long x, long y, long z) {
    const ReductionResult res = reduce_sublattice({x, y, z});
    py::dict out;
    out["tag"] = res.tag == NormalFormTag::M1 ? "M1" : "M2";
    out["endpoint"] = py::make_tuple(res.endpoint.x, res.endpoint.y, res.endpoint.z);
    out["steps"] = static_cast<int>(res.steps);
    out["word"] = res.transform.word;
    return out;
}

py::list enumerate_triples(long bound) {
    py::list out;
    for (const auto& s : enumerate_solutions(bound))
        out.append(py::make_tuple(s.x, s.y, s.z));
    return out;
}

py::dict cusp() {
    const CuspNumeric c = cusp_numeric();
    py::dict out;
    out["h1"] = py::make_tuple(c.h1.real(), c.h1.imag());
    out["h2"] = py::make_tuple(c.h2.real(), c.h2.imag());
    out["ratio_error"] = c.ratio_error;
    out["h1_error"] = c.h1_error;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification kernel for the Hessian-quartic K3 family";
    m.attr("__version__") = "0.1.0";

    m.def("verify", &verify, py::arg("suites") = std::vector<std::string>{"all"},
          py::arg("order") = 64, py::arg("seed") = 7, py::arg("samples") = 100,
          "run the named check suites and return the JSON report as a dict");
    m.def("smith_normal_form", &smith, py::arg("rows"),
          "U*M*V = S decomposition with the invariant factor list");
    m.def("lattice_summary", &lattice_summary,
          "rank, determinant, discriminant group, and O(q) data of the curve lattice");
    m.def("theta_diagonal", &theta_diagonal, py::arg("order") = 64,
          "diagonal q-expansions of the ring generators");
    m.def("theta_constants", &theta_constants, py::arg("order") = 64,
          "embedding constants (c, c4, c5) and the diagonal relations");
    m.def("constant_term",
          [](int p, int q, int r) { return constant_term_N(p, q, r).to_string(); },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "period constant term N(p,q,r) as a decimal string");
    m.def("fc_scaling", &fc_scaling, py::arg("order") = 6,
          "argument scales that match F_C to the period series");
    m.def("reduce_triple", &reduce_triple, py::arg("x"), py::arg("y"), py::arg("z"),
          "reduce a norm-12 sublattice triple to M1 or M2");
    m.def("enumerate_triples", &enumerate_triples, py::arg("bound") = 50,
          "integer solutions of x*y = z^2 + 3 with |x|,|y| > |z|");
    m.def("cusp", &cusp, "numeric Siegel-image values at the order-3 cusp");
}
