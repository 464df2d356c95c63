// Python bindings for the main solver, verifier, and oracle operations.
// Rationals cross the boundary as strings ("p/q" or integers) to keep every
// value exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fairchore/errors.hpp"
#include "fairchore/generator.hpp"
#include "fairchore/io.hpp"
#include "fairchore/oracle.hpp"
#include "fairchore/three_types_solver.hpp"
#include "fairchore/two_chore_types_solver.hpp"
#include "fairchore/verify.hpp"
#include "fairchore/wps.hpp"

namespace py = pybind11;
using namespace fairchore;

namespace {

using PyRational = std::variant<long long, std::string>;

Rational to_rational(const PyRational& value) {
    if (std::holds_alternative<long long>(value))
        return Rational(std::get<long long>(value));
    return parse_rational(std::get<std::string>(value));
}

Instance build_instance(const std::vector<PyRational>& weights,
                        const std::vector<std::vector<PyRational>>& disutilities) {
    std::vector<Rational> w;
    w.reserve(weights.size());
    for (const auto& value : weights) w.push_back(to_rational(value));
    std::vector<std::vector<Rational>> d;
    d.reserve(disutilities.size());
    for (const auto& row : disutilities) {
        std::vector<Rational> converted;
        converted.reserve(row.size());
        for (const auto& value : row) converted.push_back(to_rational(value));
        d.push_back(std::move(converted));
    }
    return Instance::create(std::move(w), std::move(d));
}

std::vector<std::string> format_payments(const PaymentVector& payments) {
    std::vector<std::string> out;
    out.reserve(payments.size());
    for (const auto& p : payments) out.push_back(format_rational(p));
    return out;
}

py::dict report_to_dict(const FairnessReport& report) {
    py::dict out;
    out["verdict"] = report.verdict;
    py::list witnesses;
    for (const auto& w : report.witnesses)
        witnesses.append(py::make_tuple(w.envier, w.envied, format_rational(w.lhs),
                                        format_rational(w.rhs)));
    out["witnesses"] = witnesses;
    return out;
}

CompetitiveState state_from_python(const Instance& instance,
                                   const std::vector<std::vector<int>>& bundles,
                                   const std::vector<PyRational>& payments) {
    PaymentVector p;
    p.reserve(payments.size());
    for (const auto& value : payments) p.push_back(to_rational(value));
    return make_competitive_state(instance, Allocation{bundles}, std::move(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted-EF1 + fractionally-Pareto-optimal chore allocation";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<UnsupportedInstanceError>(m, "UnsupportedInstanceError",
                                                     PyExc_ValueError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);

    py::class_<Instance>(m, "Instance")
        .def(py::init(&build_instance), py::arg("weights"), py::arg("disutilities"))
        .def_property_readonly("n", &Instance::agent_count)
        .def_property_readonly("m", &Instance::chore_count)
        .def("weight", [](const Instance& inst, int i) {
            return format_rational(inst.weights[i]);
        })
        .def("disutility", [](const Instance& inst, int i, int j) {
            return format_rational(inst.disutility(i, j));
        });

    m.def("classify", [](const Instance& instance) {
        auto [agents, chores] = classify(instance);
        return py::make_tuple(agents.groups, chores.classes);
    });

    m.def("check_wef1", [](const Instance& instance, const std::vector<std::vector<int>>& bundles) {
        return report_to_dict(check_wef1(instance, Allocation{bundles}));
    });

    m.def("check_wpef1",
          [](const Instance& instance, const std::vector<std::vector<int>>& bundles,
             const std::vector<PyRational>& payments) {
              auto state = state_from_python(instance, bundles, payments);
              return report_to_dict(check_wpef1(state, instance.weights));
          });

    m.def("check_mpb_certificate",
          [](const Instance& instance, const std::vector<std::vector<int>>& bundles,
             const std::vector<PyRational>& payments) {
              return check_mpb_certificate(state_from_python(instance, bundles, payments));
          });

    m.def("solve_three_agent_types", [](const Instance& instance) {
        ThreeTypesResult result = solve_three_agent_types(instance);
        py::dict out;
        out["allocation"] = result.state.allocation.bundles;
        out["payments"] = format_payments(result.state.payments);
        out["steps"] = result.trace.size();
        return out;
    });

    m.def("solve_two_chore_types", [](const Instance& instance) {
        TwoChoreTypesResult result = solve_two_chore_types(instance);
        py::dict out;
        out["allocation"] = result.state.allocation.bundles;
        out["payments"] = format_payments(result.state.payments);
        out["pivot"] = result.successful_pivot;
        out["phases"] = result.phases.size();
        return out;
    });

    m.def("wps", [](const std::vector<PyRational>& weights,
                    const std::vector<PyRational>& costs) {
        std::vector<Rational> w;
        for (const auto& value : weights) w.push_back(to_rational(value));
        std::vector<std::pair<int, Rational>> c;
        for (int j = 0; j < static_cast<int>(costs.size()); ++j)
            c.emplace_back(j, to_rational(costs[j]));
        return wps(w, c).bundles;
    });

    m.def("is_integrally_dominated",
          [](const Instance& instance, const std::vector<std::vector<int>>& bundles)
              -> std::optional<std::vector<std::vector<int>>> {
              oracle::DominationQuery query{instance, Allocation{bundles}};
              auto witness = oracle::is_integrally_dominated(query);
              if (!witness) return std::nullopt;
              return witness->bundles;
          });

    m.def("is_fractionally_dominated",
          [](const Instance& instance, const std::vector<std::vector<int>>& bundles) {
              oracle::DominationQuery query{instance, Allocation{bundles}};
              return oracle::is_fractionally_dominated(query);
          });

    m.def("exhaustive_wef1_po_set",
          [](const Instance& instance, bool also_fractional) {
              std::vector<std::vector<std::vector<int>>> out;
              for (auto& allocation :
                   oracle::exhaustive_wef1_po_set(instance, {}, also_fractional))
                  out.push_back(std::move(allocation.bundles));
              return out;
          },
          py::arg("instance"), py::arg("also_fractional") = false);

    m.def("random_instance",
          [](std::uint64_t seed, int n, int m, int agent_types, int chore_types) {
              GenSpec spec;
              spec.agents = n;
              spec.chores = m;
              spec.agent_types = agent_types;
              spec.chore_types = chore_types;
              return random_instance(seed, spec);
          },
          py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("agent_types") = 1,
          py::arg("chore_types") = 1);

    m.def("instance_hash", [](const Instance& instance) { return io::instance_hash(instance); });
}
