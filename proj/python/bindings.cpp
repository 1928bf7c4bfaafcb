#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "spinpst/document.hpp"
#include "spinpst/fidelity.hpp"
#include "spinpst/network.hpp"
#include "spinpst/oracle.hpp"
#include "spinpst/report.hpp"
#include "spinpst/spectral.hpp"
#include "spinpst/stratification.hpp"

namespace py = pybind11;
using namespace spinpst;

namespace {

std::vector<std::vector<double>> matrix_rows(const HamiltonianMatrix& m) {
    std::vector<std::vector<double>> rows(m.order(), std::vector<double>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

std::vector<Edge> edges_from_tuples(const std::vector<std::tuple<int, int, double>>& triples) {
    std::vector<Edge> edges;
    edges.reserve(triples.size());
    for (const auto& [a, b, coupling] : triples) edges.push_back({a, b, coupling});
    return edges;
}

}  // namespace

PYBIND11_MODULE(spinpst, m) {
    m.doc() = "Perfect state transfer on spin networks via graph stratification, "
              "orthogonal polynomials, and Gauss quadrature";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidEdgeError>(m, "InvalidEdgeError", base.ptr());
    py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError", base.ptr());
    py::register_exception<QuotientClosureError>(m, "QuotientClosureViolation", base.ptr());
    py::register_exception<DegenerateSequenceError>(m, "DegenerateSequenceError", base.ptr());
    py::register_exception<PoleProximityError>(m, "PoleProximityError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<ModeMismatchError>(m, "ModeMismatchError", base.ptr());
    py::register_exception<InvalidTargetError>(m, "InvalidTargetError", base.ptr());
    py::register_exception<InvalidWindowError>(m, "InvalidWindowError", base.ptr());
    py::register_exception<DocumentError>(m, "DocumentError", base.ptr());

    py::class_<SpinNetwork>(m, "SpinNetwork")
        .def_property_readonly("vertex_count", &SpinNetwork::vertex_count)
        .def_property_readonly("reference", &SpinNetwork::reference)
        .def_property_readonly("scale", &SpinNetwork::scale)
        .def_property_readonly("adjacency_mode", &SpinNetwork::adjacency_mode)
        .def_property_readonly("edges",
                               [](const SpinNetwork& net) {
                                   std::vector<std::tuple<int, int, double>> out;
                                   for (const Edge& e : net.edges()) out.emplace_back(e.a, e.b, e.coupling);
                                   return out;
                               })
        .def("with_reference", &SpinNetwork::with_reference, py::arg("reference"))
        .def("with_scale", &SpinNetwork::with_scale, py::arg("scale"))
        .def("as_adjacency_mode", &SpinNetwork::as_adjacency_mode)
        .def(py::self == py::self)
        .def("__repr__", [](const SpinNetwork& net) {
            return "<SpinNetwork n=" + std::to_string(net.vertex_count()) + " edges=" +
                   std::to_string(net.edges().size()) + " reference=" + std::to_string(net.reference()) + ">";
        });

    m.def(
        "from_edge_list",
        [](int n, const std::vector<std::tuple<int, int, double>>& edges, int reference, double scale,
           bool adjacency_mode) { return from_edge_list(n, edges_from_tuples(edges), reference, scale, adjacency_mode); },
        py::arg("vertex_count"), py::arg("edges"), py::arg("reference") = 1, py::arg("scale") = 1.0,
        py::arg("adjacency_mode") = false);

    m.def("build_hypercube_column", &build_hypercube_column, py::arg("dimension"));
    m.def("build_w_network", &build_w_network);
    m.def("build_binary_tree_unweighted", &build_binary_tree_unweighted);
    m.def("build_engineered_chain", &build_engineered_chain, py::arg("length"));
    m.def("build_star_extended", &build_star_extended);
    m.def("build_circulant6", &build_circulant6);
    m.def("build_binary_tree_modulated", &build_binary_tree_modulated);

    m.def("hamiltonian", [](const SpinNetwork& net) { return matrix_rows(hamiltonian(net)); });

    m.def("stratify", [](const SpinNetwork& net) { return stratify(net).layers; });

    py::class_<JacobiSequences>(m, "JacobiSequences")
        .def_readonly("omega", &JacobiSequences::omega)
        .def_readonly("alpha", &JacobiSequences::alpha)
        .def("depth", &JacobiSequences::depth);

    m.def("reduce", &reduce, py::arg("network"));
    m.def("quotient_matrix", [](const JacobiSequences& seq) { return matrix_rows(quotient_matrix(seq)); });

    py::class_<SpectralMeasure>(m, "SpectralMeasure")
        .def_readonly("atoms", &SpectralMeasure::atoms)
        .def_readonly("weights", &SpectralMeasure::weights);

    m.def("gauss_measure", &gauss_measure, py::arg("sequences"));
    m.def("stieltjes_cf", &stieltjes_cf, py::arg("sequences"), py::arg("z"));
    m.def("stieltjes_pf", &stieltjes_pf, py::arg("measure"), py::arg("z"));
    m.def("moment", &moment, py::arg("measure"), py::arg("order"));

    py::class_<OrthoPolySystem>(m, "OrthoPolySystem")
        .def(py::init<JacobiSequences>())
        .def("degree_bound", &OrthoPolySystem::degree_bound)
        .def("evaluate", py::overload_cast<int, double>(&OrthoPolySystem::evaluate, py::const_), py::arg("k"),
             py::arg("x"))
        .def("evaluate_associated", py::overload_cast<int, double>(&OrthoPolySystem::evaluate_associated, py::const_),
             py::arg("k"), py::arg("x"));

    py::class_<FidelityTrace>(m, "FidelityTrace")
        .def_readonly("times", &FidelityTrace::times)
        .def_readonly("amplitudes", &FidelityTrace::amplitudes)
        .def_readonly("target_layer", &FidelityTrace::target_layer);

    py::class_<PstCertificate>(m, "PstCertificate")
        .def_readonly("time", &PstCertificate::time)
        .def_readonly("deficit", &PstCertificate::deficit)
        .def_readonly("achieved", &PstCertificate::achieved)
        .def_readonly("target_is_single_vertex", &PstCertificate::target_is_single_vertex);

    m.def("amplitude", &amplitude, py::arg("sequences"), py::arg("measure"), py::arg("layer"), py::arg("t"));
    m.def("trace", &trace, py::arg("sequences"), py::arg("measure"), py::arg("layer"), py::arg("t_start"),
          py::arg("t_end"), py::arg("samples"));
    m.def("pst_search", &pst_search, py::arg("sequences"), py::arg("measure"), py::arg("antipodal_layer_size"),
          py::arg("t_max"), py::arg("tolerance") = 1e-9);
    m.def("commensurate_period", &commensurate_period, py::arg("measure"), py::arg("tolerance") = 1e-9);
    m.def("default_search_window", &default_search_window, py::arg("measure"));

    m.def(
        "amplitude_full",
        [](const SpinNetwork& net, double t, std::optional<int> vertex, std::optional<int> layer) {
            if (vertex.has_value() == layer.has_value())
                throw InvalidTargetError("exactly one of vertex= or layer= is required");
            return amplitude_full(net, t,
                                  vertex ? TransferTarget::vertex(*vertex) : TransferTarget::layer(*layer));
        },
        py::arg("network"), py::arg("t"), py::kw_only(), py::arg("vertex") = std::nullopt,
        py::arg("layer") = std::nullopt);
    m.def("walk_count", &walk_count, py::arg("network"), py::arg("steps"));

    m.def(
        "analyze_text",
        [](const SpinNetwork& net, const std::string& label, std::optional<double> t_max, double tolerance) {
            AnalysisOptions options;
            options.label = label;
            options.t_max = t_max;
            options.pst_tolerance = tolerance;
            return analyze_network(net, options).to_text();
        },
        py::arg("network"), py::arg("label") = "", py::arg("t_max") = std::nullopt, py::arg("tolerance") = 1e-9);

    m.def("parse_network_document", &parse_network_document, py::arg("text"));
    m.def("write_network_document", &write_network_document, py::arg("network"));
}
