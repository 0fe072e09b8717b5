#include "cokahler/cli.hpp"
#include "cokahler/document.hpp"
#include "cokahler/sullivan.hpp"
#include "cokahler/toral_rank.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cokahler;

namespace {

CliOptions options(const std::string& command, std::optional<int> maxDegree, const std::string& omega,
                   const std::string& eta, std::optional<int> dim) {
    CliOptions o;
    o.command = command;
    o.maxDegree = maxDegree;
    o.omega = omega;
    o.eta = eta;
    o.dim = dim;
    return o;
}

/// (structured report, produced document or None)
py::tuple run(const std::string& command, const std::string& document, std::optional<int> maxDegree,
              const std::string& omega, const std::string& eta, std::optional<int> dim) {
    CommandResult res;
    {
        py::gil_scoped_release release;
        try {
            res = runCommand(parseAlgebraDocument(document), options(command, maxDegree, omega, eta, dim));
        } catch (const InputError& e) {
            res.report.command = command;
            res.report.add(e.where().empty() ? "input" : e.where(), Status::InputError, {}, e.what());
        }
    }
    py::object out = py::none();
    if (res.output)
        out = py::str(serializeAlgebraDocument(*res.output));
    return py::make_tuple(renderStructured(res.report), out);
}

}  // namespace

PYBIND11_MODULE(_cokahler, m) {
    m.doc() = "Exact checks on graded algebras, co-Kähler models and Sullivan models";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("commands", &commandNames);
    m.def("run", &run, py::arg("command"), py::arg("document"), py::arg("max_degree") = py::none(),
          py::arg("omega") = "omega", py::arg("eta") = "eta", py::arg("dim") = py::none());
    m.def("exit_status", [](const std::string& verdict) {
        for (Status s : {Status::Pass, Status::Fail, Status::Inconclusive, Status::InputError})
            if (toString(s) == verdict)
                return exitStatus(s);
        throw py::value_error("unknown verdict " + verdict);
    });
    m.def("normalize", [](const std::string& document) { return serializeAlgebraDocument(parseAlgebraDocument(document)); },
          "Canonical form of a document");
    m.def(
        "betti",
        [](const std::string& document, std::optional<int> maxDegree) {
            return loadAlgebra(parseAlgebraDocument(document), maxDegree).presented.algebra().betti();
        },
        py::arg("document"), py::arg("max_degree") = py::none(), "Dimensions of the presented algebra");
    m.def(
        "exterior_rank",
        [](const std::string& document) {
            auto l = loadAlgebra(parseAlgebraDocument(document));
            return maxExteriorRank(l.presented.algebra()).r;
        },
        "Largest r with a nonzero product of r degree-1 classes");
    m.def(
        "minimal_model",
        [](const std::string& document, int degree, std::optional<std::uint64_t> seed) {
            auto l = loadAlgebra(parseAlgebraDocument(document));
            if (!l.cdga().isZeroDifferential())
                throw InputError("differential", "minimal_model expects an algebra with zero differential");
            MinimalModelOptions o;
            o.seed = seed;
            ModelMap mm = minimalModelOfFormal(l.presented.algebraPtr(), degree, o);
            py::dict out;
            out["model"] = mm.source.format();
            out["fingerprint"] = modelFingerprint(mm.source, degree).format();
            out["quasi_iso"] = verifyQuasiIso(mm, degree).passed();
            std::vector<int> degrees;
            for (const auto& g : mm.source.generators)
                degrees.push_back(g.degree);
            out["generator_degrees"] = degrees;
            return out;
        },
        py::arg("document"), py::arg("degree"), py::arg("seed") = py::none());
    m.def("parse_scalar", [](const std::string& s) {
        Scalar q = parseScalar(s);
        return py::make_tuple(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
    });
}
