#ifndef NCC_VERIFY_HPP
#define NCC_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ncc/bounds.hpp"
#include "ncc/engine.hpp"
#include "ncc/graph_domain.hpp"
#include "ncc/oracle.hpp"
#include "ncc/propagators.hpp"

namespace ncc {

// Certifies Eqs. of one property against exhaustive enumeration: the
// computed bounds must bracket every completion value (soundness) and each
// must be attained (sharpness). Returns a diagnostic on violation.
inline std::optional<std::string> audit_bounds(const GraphDomain& g, ConstraintKind kind,
                                               int cap = kDefaultOracleCap) {
    auto [lo, hi] = exact_range(g, kind, cap);
    int lb = kind == ConstraintKind::MinNcc ? min_ncc_lb(g) : max_ncc_lb(g);
    int ub = kind == ConstraintKind::MinNcc ? min_ncc_ub(g) : max_ncc_ub(g);
    std::string name = kind == ConstraintKind::MinNcc ? "min_ncc" : "max_ncc";
    if (lb > lo || ub < hi)
        return name + " bounds [" + std::to_string(lb) + "," + std::to_string(ub) +
               "] do not bracket exact range [" + std::to_string(lo) + "," +
               std::to_string(hi) + "]";
    if (lb != lo || ub != hi)
        return name + " bounds [" + std::to_string(lb) + "," + std::to_string(ub) +
               "] not sharp, exact range [" + std::to_string(lo) + "," + std::to_string(hi) +
               "]";
    return std::nullopt;
}

// Runs one propagator and checks it against the oracle:
//  - Failed implies an empty oracle solution set;
//  - no element of any oracle solution is excluded;
//  - every forced-T element belongs to all oracle solutions;
//  - every achievable P value stays inside the filtered interval;
//  - the output is a refinement of the input (contractance).
inline std::optional<std::string> audit_filter(const GraphDomain& domain, ConstraintKind kind,
                                               IntervalVar p, int cap = kDefaultOracleCap) {
    GraphDomain g = domain;
    IntervalVar filtered = p;
    FilterOutcome out = kind == ConstraintKind::MinNcc ? filter_min_ncc(g, filtered)
                                                       : filter_max_ncc(g, filtered);

    std::vector<OracleSolution> sols = oracle_solutions(domain, {{kind, p}}, cap);

    if (out.status == FilterStatus::Failed) {
        if (!sols.empty())
            return "propagator failed but the oracle finds " + std::to_string(sols.size()) +
                   " solutions";
        return std::nullopt;
    }

    // Contractance.
    if (filtered.lb < p.lb || filtered.ub > p.ub) return "interval grew";
    for (int v = 0; v < domain.vertex_count(); ++v)
        if (domain.vertex_state(v) != ElementState::Possible &&
            g.vertex_state(v) != domain.vertex_state(v))
            return "decided vertex " + std::to_string(v) + " changed state";
    for (int a = 0; a < domain.arc_count(); ++a)
        if (domain.arc(a).state != ElementState::Possible &&
            g.arc(a).state != domain.arc(a).state)
            return "decided arc " + std::to_string(a) + " changed state";

    for (const OracleSolution& sol : sols) {
        std::set<int> vs(sol.graph.vertices.begin(), sol.graph.vertices.end());
        std::set<int> as(sol.graph.arcs.begin(), sol.graph.arcs.end());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.vertex_state(v) == ElementState::Excluded && vs.count(v))
                return "excluded vertex " + std::to_string(v) + " belongs to a solution";
            if (g.vertex_state(v) == ElementState::Mandatory && !vs.count(v))
                return "forced vertex " + std::to_string(v) + " missing from a solution";
        }
        for (int a = 0; a < g.arc_count(); ++a) {
            if (g.arc(a).state == ElementState::Excluded && as.count(a))
                return "excluded arc " + std::to_string(a) + " belongs to a solution";
            if (g.arc(a).state == ElementState::Mandatory && !as.count(a))
                return "forced arc " + std::to_string(a) + " missing from a solution";
        }
        if (sol.p_values[0] < filtered.lb || sol.p_values[0] > filtered.ub)
            return "achievable P value " + std::to_string(sol.p_values[0]) +
                   " filtered out of [" + std::to_string(filtered.lb) + "," +
                   std::to_string(filtered.ub) + "]";
    }
    return std::nullopt;
}

}  // namespace ncc

#endif
