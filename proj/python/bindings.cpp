#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>

#include "russell/elliptic.hpp"
#include "russell/errors.hpp"
#include "russell/harness.hpp"
#include "russell/identities.hpp"
#include "russell/oracle.hpp"
#include "russell/quadrature.hpp"
#include "russell/specfun.hpp"

namespace py = pybind11;
using namespace russell;

namespace {

const IdentitySpec& lookup(const std::string& id) {
    const IdentitySpec* spec = find_identity(id);
    if (spec == nullptr) throw py::key_error("unknown identity " + id);
    return *spec;
}

ParameterPoint to_point(const std::map<std::string, double>& params, const IdentitySpec& spec) {
    // Keep the domain's parameter order.
    std::vector<std::pair<std::string, double>> values;
    for (const auto& p : spec.domain.parameters) {
        if (auto it = params.find(p.name); it != params.end()) values.emplace_back(p.name, it->second);
    }
    if (values.size() != params.size()) throw DomainError("unexpected parameter for " + spec.id);
    return ParameterPoint(std::move(values));
}

py::dict record_dict(const VerificationRecord& r) {
    py::dict point;
    for (const auto& [k, v] : r.point.values()) point[py::str(k)] = v;
    py::dict d;
    d["id"] = r.id;
    d["params"] = point;
    d["lhs"] = r.lhs;
    d["lhs_error"] = r.lhs_error;
    d["rhs"] = r.rhs;
    d["rhs_error"] = r.rhs_error;
    d["abs_diff"] = r.abs_diff;
    d["rel_diff"] = r.rel_diff;
    d["tol"] = r.tol;
    d["pass"] = r.pass;
    d["note"] = r.note;
    return d;
}

py::tuple quad_tuple(const QuadratureResult& q) {
    return py::make_tuple(q.value, q.error_estimate, q.evaluations, q.converged);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Special functions, quadrature and identity verification";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    (void)domain_error;

    m.def("gamma", &russell::gamma, py::arg("x"));
    m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("n"));
    m.def("r1_series", &r1_series, py::arg("r"), py::arg("x"));
    m.def("gauss_2f1", py::overload_cast<double, double, double, double>(&gauss_2f1), py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("z"));
    m.def("lerch_phi", py::overload_cast<double, double, double>(&lerch_phi), py::arg("z"), py::arg("s"),
          py::arg("b"));

    m.def("agm", &agm, py::arg("a"), py::arg("b"));
    m.def("ellip_k", py::overload_cast<double>(&ellip_k), py::arg("m"));
    m.def("jacobi", [](double z, double mm) {
        const auto j = jacobi(z, mm);
        return py::make_tuple(j.sn, j.cn, j.dn);
    }, py::arg("z"), py::arg("m"), "(sn, cn, dn) at z for parameter m");
    m.def("gauss_constant", &gauss_constant);

    m.def("integrate_finite", [](const std::function<double(double)>& f, double a, double b, double tol) {
        return quad_tuple(integrate_finite(f, a, b, tol));
    }, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10,
          "(value, error_estimate, evaluations, converged)");
    m.def("integrate_semi_infinite", [](const std::function<double(double)>& f, double tol, double lower) {
        return quad_tuple(integrate_semi_infinite(f, tol, lower));
    }, py::arg("f"), py::arg("tol") = 1e-10, py::arg("lower") = 0.0);

    m.def("moment_recursive", [](unsigned r, unsigned p, unsigned q) { return oracle::moment_recursive({r, p, q}); },
          py::arg("r"), py::arg("p"), py::arg("q"));
    m.def("lemma1_closed_form", &oracle::lemma1_closed_form, py::arg("j"), py::arg("m"));

    m.def("identity_ids", [] {
        std::vector<std::string> ids;
        for (const auto& s : registry()) ids.push_back(s.id);
        return ids;
    });
    m.def("verify", [](const std::string& id, const std::map<std::string, double>& params, std::optional<double> tol) {
        const auto& spec = lookup(id);
        return record_dict(verify(spec, to_point(params, spec), tol));
    }, py::arg("id"), py::arg("params") = std::map<std::string, double>{}, py::arg("tol") = py::none());
    m.def("sweep", [](const std::string& id, unsigned samples, std::uint64_t seed) {
        py::list out;
        for (const auto& r : sweep(lookup(id), samples, seed)) out.append(record_dict(r));
        return out;
    }, py::arg("id"), py::arg("samples") = 5, py::arg("seed") = kDefaultSeed);
    m.def("run", [](const std::string& selection, unsigned samples, std::optional<double> tol, std::uint64_t seed) {
        RunOptions o;
        o.selection = selection;
        o.samples = samples;
        o.tol_override = tol;
        o.seed = seed;
        o.include_timestamp = false;
        std::ostringstream out;
        const auto outcome = run(o, out);
        return py::make_tuple(outcome.exit_status, out.str());
    }, py::arg("selection") = "*", py::arg("samples") = 5, py::arg("tol") = py::none(),
          py::arg("seed") = kDefaultSeed, "(exit_status, JSON report)");
}
