#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commat/bcom.hpp"
#include "commat/fi.hpp"
#include "commat/homotopy.hpp"
#include "commat/hz.hpp"
#include "commat/kr.hpp"
#include "commat/parse.hpp"
#include "commat/spectral.hpp"

namespace py = pybind11;
using namespace commat;

namespace {

CommutingTuple make_tuple(const std::vector<Matrix>& matrices, double tol) {
    if (matrices.empty()) throw InvalidParameter("expected at least one matrix");
    CommutingTuple t;
    t.n = static_cast<int>(matrices.size());
    t.dim = static_cast<int>(matrices.front().rows());
    t.matrices = matrices;
    t.tol = tol;
    return t;
}

SpectralOptions make_options(double tol_commute, double tol_cluster) {
    SpectralOptions o;
    o.tol_commute = tol_commute;
    o.tol_cluster = tol_cluster;
    return o;
}

std::vector<BlockSpec> make_spec(
    const std::vector<std::pair<std::vector<Complex>, int>>& spec) {
    std::vector<BlockSpec> out;
    for (const auto& [label, dim] : spec) out.push_back({label, dim});
    return out;
}

std::string mul_expr(const std::string& ring, const std::string& e1, const std::string& e2) {
    if (ring == "kr") return render(kr_mul(parse_kr(e1), parse_kr(e2)));
    if (ring == "hz") return render(hz_mul(parse_hz(e1), parse_hz(e2)));
    if (ring == "ku") return render(ku_mul(parse_ku(e1), parse_ku(e2)));
    if (ring == "bcom" || ring == "bcom-kr")
        return render(bcom_mul(parse_bcom(e1), parse_bcom(e2)));
    throw InvalidParameter("unknown ring: " + ring);
}

std::string canonical_expr(const std::string& ring, const std::string& e) {
    if (ring == "kr") return render(parse_kr(e));
    if (ring == "hz") return render(parse_hz(e));
    if (ring == "ku") return render(parse_ku(e));
    if (ring == "bcom" || ring == "bcom-kr") return render(parse_bcom(e));
    throw InvalidParameter("unknown ring: " + ring);
}

}  // namespace

PYBIND11_MODULE(_commat, m) {
    m.doc() =
        "Exact calculators for the homotopy of stable commuting-matrix spaces: "
        "RO(C2)-graded coefficient rings, homotopy group tables, representation "
        "stability, and the commuting-tuple <-> labeled-configuration "
        "correspondence.";

    py::class_<FinAbGroup>(m, "Group", "Z^free_rank + (Z/2)^z2_rank")
        .def(py::init<long long, long long>(), py::arg("free_rank") = 0, py::arg("z2_rank") = 0)
        .def_readonly("free_rank", &FinAbGroup::free_rank)
        .def_readonly("z2_rank", &FinAbGroup::z2_rank)
        .def("is_zero", &FinAbGroup::is_zero)
        .def("__eq__", [](const FinAbGroup& a, const FinAbGroup& b) { return a == b; })
        .def("__repr__", [](const FinAbGroup& g) { return render_group(g); })
        .def("__str__", [](const FinAbGroup& g) { return render_group(g); });

    m.def(
        "pi",
        [](const std::string& space, int k, long long n) {
            return pi_group(parse_space(space), k, n);
        },
        py::arg("space"), py::arg("k"), py::arg("n") = 1,
        "pi_k of cnu|repu|cno|repo|bcomu|bcomo|spin (n ignored for bcom*)");

    m.def(
        "pi_oracle",
        [](const std::string& space, int k, long long n) {
            return pi_group_oracle(parse_space(space), k, n);
        },
        py::arg("space"), py::arg("k"), py::arg("n"),
        "coefficient-enumeration path for cno/repo (cross-check of pi)");

    m.def(
        "table",
        [](const std::string& space, int kmax, long long nmax, const std::string& fmt) {
            return render_table(parse_space(space), kmax, nmax, parse_format(fmt));
        },
        py::arg("space"), py::arg("kmax"), py::arg("nmax") = 6, py::arg("format") = "json");

    m.def(
        "kr_group", [](int p, int q) { return kr_group_at({p, q}); }, py::arg("p"), py::arg("q"),
        "additive group of the Real K-theory coefficients in degree p + q*sigma");
    m.def(
        "hz_group", [](int p, int q) { return hz_group_at({p, q}); }, py::arg("p"), py::arg("q"));
    m.def("ko_group", &ko_group, py::arg("d"));

    m.def(
        "ak",
        [](int k, int dmax, bool oracle) {
            std::map<int, FinAbGroup> out;
            for (int d = 0; d <= dmax; ++d)
                out[d] = oracle ? ak_oracle_at(k, d) : ak_formula_at(k, d);
            return out;
        },
        py::arg("k"), py::arg("dmax"), py::arg("oracle") = false,
        "graded pieces A(k)_d for 0 <= d <= dmax");

    m.def("mul", &mul_expr, py::arg("ring"), py::arg("expr1"), py::arg("expr2"),
          "product of two expressions in kr|hz|ku|bcom-kr, rendered canonically");
    m.def("canonicalize", &canonical_expr, py::arg("ring"), py::arg("expr"));

    m.def(
        "stability",
        [](const std::string& family, int k) {
            StabilityVerdict v = is_rep_stable(parse_space(family), k);
            py::dict out;
            out["stable"] = v.stable;
            out["stable_from"] = v.stable_from ? py::object(py::int_(*v.stable_from))
                                               : py::object(py::none());
            return out;
        },
        py::arg("family"), py::arg("k"));

    m.def(
        "fi_summands",
        [](const std::string& family, int k, long long nmax) {
            FIDecomposition d = fi_decomposition(parse_space(family), k, nmax);
            std::vector<std::pair<long long, FinAbGroup>> summands;
            for (const auto& s : d.summands) summands.emplace_back(s.n, s.coeff_group);
            py::dict out;
            out["summands"] = summands;
            out["exact"] = d.exact;
            return out;
        },
        py::arg("family"), py::arg("k"), py::arg("nmax"));

    py::class_<LabeledBlock>(m, "Block", "joint eigenspace with its eigenvalue tuple")
        .def(py::init([](const Matrix& basis, const std::vector<Complex>& label) {
                 return LabeledBlock{basis, label};
             }),
             py::arg("basis"), py::arg("label"))
        .def_readonly("basis", &LabeledBlock::basis)
        .def_readonly("label", &LabeledBlock::label)
        .def("__repr__", [](const LabeledBlock& b) {
            return "Block(dim=" + std::to_string(b.basis.cols()) + ", n=" +
                   std::to_string(b.label.size()) + ")";
        });

    py::class_<LabeledConfig>(m, "Config", "labeled eigenspace configuration")
        .def(py::init([](int ambient_dim, const std::vector<LabeledBlock>& blocks) {
                 return LabeledConfig{ambient_dim, blocks};
             }),
             py::arg("ambient_dim"), py::arg("blocks") = std::vector<LabeledBlock>{})
        .def_readonly("ambient_dim", &LabeledConfig::ambient_dim)
        .def_readonly("blocks", &LabeledConfig::blocks)
        .def("__repr__", [](const LabeledConfig& c) {
            return "Config(ambient_dim=" + std::to_string(c.ambient_dim) + ", blocks=" +
                   std::to_string(c.blocks.size()) + ")";
        });

    m.def(
        "check_commuting",
        [](const std::vector<Matrix>& matrices, double tol) {
            return check_commuting(make_tuple(matrices, tol));
        },
        py::arg("matrices"), py::arg("tol") = 1e-9);

    m.def(
        "decompose",
        [](const std::vector<Matrix>& matrices, double tol_commute, double tol_cluster) {
            return decompose(make_tuple(matrices, tol_commute),
                             make_options(tol_commute, tol_cluster));
        },
        py::arg("matrices"), py::arg("tol_commute") = 1e-9, py::arg("tol_cluster") = 1e-6,
        "coarsest joint eigenspace decomposition of a commuting unitary tuple");

    m.def(
        "realize",
        [](const LabeledConfig& c, int n) { return realize(c, n).matrices; },
        py::arg("config"), py::arg("n") = -1,
        "commuting tuple acting by the labels on the blocks, identity elsewhere");

    m.def(
        "component_invariant",
        [](const std::vector<Matrix>& matrices, double tol) {
            return component_invariant(make_tuple(matrices, tol));
        },
        py::arg("matrices"), py::arg("tol") = 1e-9,
        "mod-2 joint eigenspace dimensions over sign patterns; index bit j of "
        "(i+1) set means coordinate j has eigenvalue -1");

    m.def(
        "real_form",
        [](const LabeledConfig& c) { return real_form(c).matrices; }, py::arg("config"),
        "real orthogonal tuple from a conjugation-closed label multiset");

    m.def(
        "random_commuting",
        [](int n, int dim, const std::vector<std::pair<std::vector<Complex>, int>>& spec,
           std::uint64_t seed) { return random_commuting(n, dim, make_spec(spec), seed).matrices; },
        py::arg("n"), py::arg("dim"), py::arg("spec"), py::arg("seed") = 0,
        "seeded random conjugate of the prescribed (label, dim) blocks");

    m.def(
        "random_label_spec",
        [](int n, int dim, std::uint64_t seed) {
            std::vector<std::pair<std::vector<Complex>, int>> out;
            for (const auto& b : random_label_spec(n, dim, seed))
                out.emplace_back(b.label, b.dim);
            return out;
        },
        py::arg("n"), py::arg("dim"), py::arg("seed") = 0);

    // error taxonomy
    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<OutOfRegion>(m, "OutOfRegionError", PyExc_ValueError);
    py::register_exception<InvalidParameter>(m, "InvalidParameterError", PyExc_ValueError);
    py::register_exception<UnsupportedFamily>(m, "UnsupportedFamilyError", PyExc_ValueError);
    py::register_exception<OrderTooSmall>(m, "OrderTooSmallError", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatchError", PyExc_ValueError);
    py::register_exception<NotUnitary>(m, "NotUnitaryError", PyExc_ValueError);
    py::register_exception<NotCommuting>(m, "NotCommutingError", PyExc_ValueError);
    py::register_exception<NotReal>(m, "NotRealError", PyExc_ValueError);
    py::register_exception<NonOrthogonalBlocks>(m, "NonOrthogonalBlocksError", PyExc_ValueError);
    py::register_exception<NotConjugationClosed>(m, "NotConjugationClosedError", PyExc_ValueError);
    py::register_exception<InvalidSpec>(m, "InvalidSpecError", PyExc_ValueError);
}
