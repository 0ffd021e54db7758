#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <tuple>

#include "ghcode/cli.hpp"
#include "ghcode/codes.hpp"
#include "ghcode/curve.hpp"
#include "ghcode/lattice.hpp"
#include "ghcode/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ghcode;

namespace {

using SpecTuple = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

DivisorSpec to_spec(const SpecTuple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)}; }
SpecTuple from_spec(const DivisorSpec& s) { return {s.v, s.r, s.s, s.t}; }

std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> triples(const OmegaSet& os) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    out.reserve(os.size());
    for (const auto& t : os.points) out.emplace_back(t.i, t.j, t.k);
    return out;
}

py::array_t<std::uint32_t> to_array(const Matrix& m) {
    py::array_t<std::uint32_t> arr(std::vector<py::ssize_t>{static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
    auto view = arr.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m.at(r, c).value;
    }
    return arr;
}

std::vector<std::uint32_t> to_values(const std::vector<Element>& v) {
    std::vector<std::uint32_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-point AG codes on generalized Hermitian curves";

    py::register_exception<CurveError>(m, "CurveError", PyExc_ValueError);
    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
    py::register_exception<ThresholdError>(m, "ThresholdError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<CurveParams>(m, "CurveParams")
        .def_readonly("q", &CurveParams::q)
        .def_readonly("p", &CurveParams::p)
        .def_readonly("e", &CurveParams::e)
        .def_readonly("c", &CurveParams::c)
        .def_readonly("a", &CurveParams::a)
        .def_readonly("b", &CurveParams::b)
        .def_readonly("g", &CurveParams::g)
        .def_readonly("n", &CurveParams::n)
        .def_readonly("v0", &CurveParams::v0)
        .def_readonly("A", &CurveParams::A)
        .def_readonly("B", &CurveParams::B)
        .def_readonly("R", &CurveParams::R)
        .def("__repr__", [](const CurveParams& cp) {
            std::ostringstream os;
            os << "CurveParams(q=" << cp.q << ", c=" << cp.c << ", g=" << cp.g << ", n=" << cp.n << ")";
            return os.str();
        });

    m.def("curve_params", &make_curve_params, "q"_a, "c"_a);

    py::class_<Curve, std::shared_ptr<Curve>>(m, "Curve")
        .def(py::init<std::int64_t, unsigned>(), "q"_a, "c"_a)
        .def_property_readonly("params", &Curve::params, py::return_value_policy::reference_internal)
        .def("points", [](const Curve& c) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
            for (const auto& p : c.points()) out.emplace_back(p.alpha.value, p.beta.value);
            return out;
        })
        .def("field_modulus", [](const Curve& c) { return modulus_to_string(c.field().modulus()); })
        .def("special_places", [](const Curve& c) {
            const auto sp = c.special_places();
            return py::dict("p1_exists"_a = sp.p1_exists, "gamma"_a = sp.gamma.value, "q1_exists"_a = sp.q1_exists,
                            "v_rational_count"_a = sp.v_rational_count);
        });

    m.def("degree", [](const CurveParams& cp, const SpecTuple& s) { return degree(cp, to_spec(s)); });
    m.def("omega", [](const CurveParams& cp, const SpecTuple& s, bool prime) {
        auto os = omega_enumerate(cp, to_spec(s));
        return triples(prime ? omega_prime_transform(cp, os) : os);
    }, "cp"_a, "spec"_a, "prime"_a = false);
    m.def("omega_reduce", [](const CurveParams& cp, const SpecTuple& s) {
        const auto red = omega_reduce(cp, to_spec(s));
        return py::dict("spec"_a = from_spec(red.spec_hat), "lambda_"_a = red.lambda, "sigma"_a = red.sigma);
    });
    m.def("omega_count_formula", [](const CurveParams& cp, const SpecTuple& s) {
        return omega_count_formula(cp, to_spec(s));
    });
    m.def("dual_spec", [](const CurveParams& cp, const SpecTuple& s) { return from_spec(dual_spec(cp, to_spec(s))); });
    m.def("code_dimension", [](const CurveParams& cp, const SpecTuple& s) { return code_dimension(cp, to_spec(s)); });
    m.def("psi_count", &psi_count, "cp"_a, "m"_a, "s"_a, "t"_a);
    m.def("pick_count", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& vertices) {
        const auto pc = pick_count(LatticePolygon{vertices});
        return py::dict("area2"_a = pc.area2, "boundary"_a = pc.boundary, "interior"_a = pc.interior);
    });

    py::class_<LinearCode>(m, "LinearCode")
        .def_property_readonly("spec", [](const LinearCode& c) { return from_spec(c.spec); })
        .def_property_readonly("dual", [](const LinearCode& c) { return from_spec(c.dual); })
        .def_property_readonly("kind", [](const LinearCode& c) { return std::string(to_string(c.kind)); })
        .def_readonly("n", &LinearCode::n)
        .def_readonly("k", &LinearCode::k)
        .def_readonly("degree", &LinearCode::degree)
        .def_readonly("goppa_lb", &LinearCode::goppa_lb)
        .def("generator", [](const LinearCode& c) { return to_array(c.gen); })
        .def("min_distance", [](const LinearCode& c, std::uint64_t budget) {
            py::gil_scoped_release release;
            return min_distance_bruteforce(c, budget);
        }, "budget"_a = kDefaultMinDistanceBudget);

    m.def("build_code", [](const Curve& curve, const SpecTuple& s) {
        py::gil_scoped_release release;
        return build_code(curve, to_spec(s));
    }, "curve"_a, "spec"_a);
    m.def("equivalence_witness", [](const Curve& curve, const SpecTuple& s) {
        return to_values(equivalence_witness(curve, to_spec(s)));
    });
    m.def("row_space_equal", [](const LinearCode& a, const LinearCode& b) { return row_space_equal(a.gen, b.gen); });

    m.def("q_ary_entropy", &q_ary_entropy, "l"_a, "delta"_a);
    m.def("gv_compare", [](const CurveParams& cp, const std::vector<SpecTuple>& specs) {
        std::vector<DivisorSpec> ds;
        for (const auto& s : specs) ds.push_back(to_spec(s));
        py::list rows;
        for (const auto& r : gv_compare(cp, ds)) {
            rows.append(py::dict("spec"_a = from_spec(r.spec), "degree"_a = r.degree, "k"_a = r.k,
                                 "goppa_lb"_a = r.goppa_lb, "delta"_a = r.delta, "rate"_a = r.rate,
                                 "gv_rate"_a = r.gv_rate, "beats_gv"_a = std::string(to_string(r.status))));
        }
        return rows;
    });

    m.def("verify", [](const Curve& curve, std::uint64_t seed) {
        VerifyOptions opt;
        opt.seed = seed;
        std::vector<std::tuple<std::string, bool, std::string>> out;
        {
            py::gil_scoped_release release;
            for (const auto& r : run_verification(curve, opt)) out.emplace_back(r.name, r.pass, r.detail);
        }
        return out;
    }, "curve"_a, "seed"_a = 1);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
    }, "args"_a, "Runs a ghcode command in-process; returns (exit_code, stdout, stderr).");
}
