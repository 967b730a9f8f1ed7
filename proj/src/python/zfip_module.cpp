#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zf/drivers.hpp"
#include "zf/graph6.hpp"
#include "zf/models.hpp"
#include "zf/sim.hpp"

namespace py = pybind11;
using namespace zf;

namespace {

// exact rationals cross the boundary as fractions.Fraction
py::object to_fraction(const Rat& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.get_num().get_str(), r.get_den().get_str());
}

std::vector<int> to_list(std::uint64_t mask) { return mask_to_vertices(mask); }

std::vector<std::vector<int>> forts_to_lists(const FortCollection& forts) {
    std::vector<std::vector<int>> out;
    for (auto f : forts.forts) out.push_back(mask_to_vertices(f));
    return out;
}

drivers::SolverConfig config(double time_limit) {
    drivers::SolverConfig cfg;
    cfg.budget.wall_seconds = time_limit;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_zfip, m) {
    m.doc() = "zero forcing parameters of simple graphs via exact integer programming";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("from_graph6", &parse_graph6, py::arg("line"));
    m.def("to_graph6", &encode_graph6, py::arg("graph"));
    m.def(
        "family",
        [](const std::string& kind, int size) { return family(family_from_name(kind), size); },
        py::arg("kind"), py::arg("size"));
    m.def("cartesian_product", &cartesian_product);
    m.def("vertex_sum", &vertex_sum);
    m.def("edge_sum", &edge_sum);
    m.def(
        "random_gnp",
        [](int n, const std::string& p, std::uint64_t seed) { return random_gnp(n, p, seed); },
        py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def(
        "closure",
        [](const Graph& g, const std::vector<int>& c) {
            auto trace = closure(g, vertices_to_mask(c));
            std::vector<std::vector<std::pair<int, int>>> steps;
            for (const auto& step : trace.steps) {
                std::vector<std::pair<int, int>> forces;
                for (const auto& f : step) forces.emplace_back(f.forcer, f.forced);
                steps.push_back(std::move(forces));
            }
            return py::make_tuple(to_list(trace.filled()), steps);
        },
        py::arg("graph"), py::arg("initial"),
        "returns (closure vertices, per-step (forcer, forced) lists)");
    m.def(
        "is_zfs", [](const Graph& g, const std::vector<int>& c) { return is_zfs(g, vertices_to_mask(c)); },
        py::arg("graph"), py::arg("initial"));
    m.def(
        "propagation_time",
        [](const Graph& g, const std::vector<int>& c) -> py::object {
            auto pt = propagation_time(g, vertices_to_mask(c));
            return pt ? py::cast(*pt) : py::none();
        },
        py::arg("graph"), py::arg("initial"));
    m.def(
        "is_fort", [](const Graph& g, const std::vector<int>& f) { return is_fort(g, vertices_to_mask(f)); },
        py::arg("graph"), py::arg("subset"));

    m.def(
        "zero_forcing_number",
        [](const Graph& g, const std::string& method, double time_limit) {
            auto r = drivers::zero_forcing_number(g, drivers::method_from_name(method), {},
                                                  config(time_limit));
            return py::make_tuple(r.value, to_list(r.witness));
        },
        py::arg("graph"), py::arg("method") = "tsm", py::arg("time_limit") = 7200.0,
        "returns (Z, witness vertices)");
    m.def(
        "propagation_times",
        [](const Graph& g, double time_limit) {
            auto cfg = config(time_limit);
            auto lo = drivers::propagation(g, drivers::Method::TSM, models::Variant::Pt, {}, cfg);
            auto hi = drivers::propagation(g, drivers::Method::TSM, models::Variant::PT, {}, cfg);
            return py::make_tuple(lo.time, hi.time);
        },
        py::arg("graph"), py::arg("time_limit") = 7200.0, "returns (pt, PT) over minimum ZFSs");
    m.def(
        "throttling_number",
        [](const Graph& g, double time_limit) {
            auto r = drivers::throttling(g, drivers::Method::TSM, {}, config(time_limit));
            return py::make_tuple(r.set_size + r.time, to_list(r.witness));
        },
        py::arg("graph"), py::arg("time_limit") = 7200.0);
    m.def(
        "fractional_zero_forcing_number",
        [](const Graph& g, double time_limit) {
            auto r = drivers::fractional_zf(g, config(time_limit));
            py::list weights;
            for (const auto& w : r.weights) weights.append(to_fraction(w));
            return py::make_tuple(to_fraction(r.value), weights);
        },
        py::arg("graph"), py::arg("time_limit") = 7200.0,
        "returns (Z* as Fraction, vertex weights)");
    m.def(
        "minimal_forts",
        [](const Graph& g, double time_limit) {
            auto r = drivers::all_minimal_forts(g, config(time_limit));
            if (!r.complete) throw std::runtime_error("budget exhausted before completion");
            return forts_to_lists(r.forts);
        },
        py::arg("graph"), py::arg("time_limit") = 7200.0);
    m.def(
        "fort_number",
        [](const Graph& g, double time_limit) {
            auto r = drivers::fort_number(g, config(time_limit));
            return py::make_tuple(r.value, forts_to_lists(r.packing));
        },
        py::arg("graph"), py::arg("time_limit") = 7200.0, "returns (ft, disjoint fort packing)");
    m.def(
        "realized_propagation_interval",
        [](const Graph& g, std::optional<int> T, double time_limit) {
            auto r = drivers::realized_pti(g, T, config(time_limit));
            if (!r.complete) throw std::runtime_error("budget exhausted before completion");
            return r.realized;
        },
        py::arg("graph"), py::arg("T") = py::none(), py::arg("time_limit") = 7200.0);
}
