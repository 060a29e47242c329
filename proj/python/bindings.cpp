// Python bindings. Results cross the boundary as JSON text and are decoded
// by the chromon package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromon/error.hpp"
#include "chromon/io.hpp"
#include "chromon/lighttrail.hpp"
#include "chromon/lp.hpp"
#include "chromon/partition.hpp"
#include "chromon/splitgraph.hpp"
#include "chromon/verify.hpp"
#include "chromon/weighted.hpp"

namespace py = pybind11;
using namespace chromon;

namespace {

std::string solve_json(const std::string& text, int capacity) {
    const IntervalInstance inst = parse_instance(text);
    if (!inst.unit_weights()) throw InfeasibleInputError("weighted instance; use solve_split or solve_weighted");
    const CanonicalPIG g = build_canonical(inst);
    const BlockPartition p = solve_unweighted(g, capacity);
    const Coloring c = partition_to_coloring(p, g);
    ValidationReport r = validate_blocks(g, p, p.lambda);
    const auto more = validate_coloring(g, c, capacity, p.lambda);
    r.violations.insert(r.violations.end(), more.violations.begin(), more.violations.end());
    Json j = solution_json(inst, g, p, c, r);
    j["omega"] = g.omega;
    return j.dump();
}

std::string solve_split_json(const std::string& text, int capacity) {
    const IntervalInstance inst = parse_instance(text);
    const CanonicalPIG g = build_canonical(inst);
    const SplitSolution s = solve_split(g, capacity);
    return solution_json(inst, g, s, validate_split_coloring(g, s.coloring, capacity, s.coloring.lambda)).dump();
}

std::string solve_weighted_json(const std::string& text, int capacity) {
    const IntervalInstance inst = parse_instance(text);
    const CanonicalPIG g = build_canonical(inst);
    const NonSplitSolution s = two_approx_nonsplit(g, capacity);
    return solution_json(inst, g, s, validate_coloring(g, s.coloring, capacity, s.partition.lambda)).dump();
}

int oracle_lambda(const std::string& text, int capacity, int guard) {
    const CanonicalPIG g = build_canonical(parse_instance(text));
    require_weights_within(g, capacity);
    return brute_min_lambda_block(g, capacity, guard).lambda;
}

std::string verify_json(const std::string& instance, const std::string& solution, long long capacity) {
    const IntervalInstance inst = parse_instance(instance);
    return report_json(verify_solution(parse_solution_json(solution, inst), inst, capacity)).dump();
}

std::string schedule_json(const std::string& requests, long long capacity, const std::string& mode) {
    return plan_to_json(schedule(parse_requests(requests), capacity, parse_mode(mode)), -1);
}

std::string validate_plan_json(const std::string& plan, const std::string& requests, long long capacity) {
    return report_json(validate_plan(plan_from_json(plan), parse_requests(requests), capacity)).dump();
}

std::string reduce_json(const std::string& cnf_text) {
    const Cnf f = parse_dimacs(cnf_text);
    Json j;
    j["sat"] = decide_sat_bruteforce(f).has_value();
    const auto sp = sat_to_sp(f);
    if (!sp) {
        j["sp"] = false;
        j["cp"] = false;
        return j.dump();
    }
    const CPInstance cp = sp_to_cp(*sp);
    j["sp"] = decide_sp_bruteforce(*sp).has_value();
    j["cp"] = decide_cp_bruteforce(cp.graph, cp.capacity).has_value();
    j["clique_vertices"] = cp.graph.q.size();
    j["independent_vertices"] = cp.graph.s.size();
    j["target"] = cp.target;
    return j.dump();
}

std::string split_bound_json(const std::string& text, int capacity) {
    const SplitBound b = split_upper_bound(parse_split_graph(text), capacity);
    return Json{{"omega", b.graph.omega()}, {"lambda", b.lambda}, {"colors", b.colors}}.dump();
}

}  // namespace

PYBIND11_MODULE(_chromon, m) {
    m.doc() = "Component coloring solvers (native core)";

    static py::exception<Error> base(m, "Error", PyExc_ValueError);
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<NotProperError> not_proper(m, "NotProperError", base.ptr());
    static py::exception<WeightTooLargeError> too_heavy(m, "WeightTooLargeError", base.ptr());
    static py::exception<GuardError> guard(m, "GuardError", base.ptr());
    static py::exception<InfeasibleInputError> infeasible(m, "InfeasibleInputError", base.ptr());
    static py::exception<InvalidCertificate> invalid(m, "InvalidCertificate", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const NotProperError& e) {
            py::set_error(not_proper, e.what());
        } catch (const WeightTooLargeError& e) {
            py::set_error(too_heavy, e.what());
        } catch (const GuardError& e) {
            py::set_error(guard, e.what());
        } catch (const InfeasibleInputError& e) {
            py::set_error(infeasible, e.what());
        } catch (const InvalidCertificate& e) {
            py::set_error(invalid, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("lower_bound", &lower_bound, py::arg("omega"), py::arg("capacity"));
    m.def("upper_bound", &upper_bound, py::arg("omega"), py::arg("capacity"));
    m.def("solve_json", &solve_json, py::arg("text"), py::arg("capacity"));
    m.def("solve_split_json", &solve_split_json, py::arg("text"), py::arg("capacity"));
    m.def("solve_weighted_json", &solve_weighted_json, py::arg("text"), py::arg("capacity"));
    m.def("oracle_lambda", &oracle_lambda, py::arg("text"), py::arg("capacity"), py::arg("guard") = 14);
    m.def("verify_json", &verify_json, py::arg("instance"), py::arg("solution"), py::arg("capacity"));
    m.def("schedule_json", &schedule_json, py::arg("requests"), py::arg("capacity"), py::arg("mode"));
    m.def("validate_plan_json", &validate_plan_json, py::arg("plan"), py::arg("requests"), py::arg("capacity"));
    m.def("reduce_json", &reduce_json, py::arg("cnf"));
    m.def("split_bound_json", &split_bound_json, py::arg("text"), py::arg("capacity"));
    m.def("emit_ilp", [](const std::string& text, int capacity) {
        return emit_ilp(build_canonical(parse_instance(text)), capacity).text;
    }, py::arg("text"), py::arg("capacity"));
}
