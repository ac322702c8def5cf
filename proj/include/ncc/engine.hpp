#ifndef NCC_ENGINE_HPP
#define NCC_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ncc/connectivity.hpp"
#include "ncc/graph_domain.hpp"
#include "ncc/propagators.hpp"

namespace ncc {

enum class ConstraintKind { MinNcc, MaxNcc };

// One graph-property constraint posted on the shared graph variable,
// owning its integer variable P.
struct ConstraintSpec {
    ConstraintKind kind;
    IntervalVar p;
};

// A fully instantiated value of the graph variable together with the exact
// property value of each constraint.
struct Solution {
    std::vector<int> vertices;  // ascending
    std::vector<int> arcs;      // ascending arc ids
    std::vector<int> p_values;  // one per constraint, declaration order

    bool operator==(const Solution&) const = default;
};

enum class PropagateResult { Failed, Stable };

inline FilterOutcome run_propagator(GraphDomain& g, ConstraintSpec& c) {
    return c.kind == ConstraintKind::MinNcc ? filter_min_ncc(g, c.p) : filter_max_ncc(g, c.p);
}

// Round-robin fixpoint loop in constraint declaration order.
inline PropagateResult propagate_fixpoint(GraphDomain& g, std::vector<ConstraintSpec>& constraints) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (ConstraintSpec& c : constraints) {
            FilterOutcome out = run_propagator(g, c);
            if (out.status == FilterStatus::Failed) return PropagateResult::Failed;
            if (out.status == FilterStatus::Progressed) changed = true;
        }
    }
    return PropagateResult::Stable;
}

// Exact property value of an instantiated domain (the kernel).
inline int evaluate_property(const GraphDomain& g, ConstraintKind kind) {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_state(v) == ElementState::Mandatory) vertices.push_back(v);
    for (int a = 0; a < g.arc_count(); ++a)
        if (g.arc(a).state == ElementState::Mandatory)
            edges.emplace_back(g.arc(a).tail, g.arc(a).head);
    std::vector<int> sizes = concrete_component_sizes(g.vertex_count(), vertices, edges);
    if (sizes.empty()) return 0;
    return kind == ConstraintKind::MinNcc ? *std::min_element(sizes.begin(), sizes.end())
                                          : *std::max_element(sizes.begin(), sizes.end());
}

namespace detail {

// Lowest-indexed U-vertex, else lowest-id U-arc.
struct BranchChoice {
    bool is_vertex;
    int id;
};

inline std::optional<BranchChoice> pick_branch(const GraphDomain& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_state(v) == ElementState::Possible) return BranchChoice{true, v};
    for (int a = 0; a < g.arc_count(); ++a)
        if (g.arc(a).state == ElementState::Possible) return BranchChoice{false, a};
    return std::nullopt;
}

inline void solve_rec(GraphDomain& g, std::vector<ConstraintSpec>& constraints,
                      std::optional<long> limit, std::vector<Solution>& out) {
    if (limit && static_cast<long>(out.size()) >= *limit) return;
    if (propagate_fixpoint(g, constraints) == PropagateResult::Failed) return;

    std::optional<BranchChoice> choice = pick_branch(g);
    if (!choice) {
        // Leaf: recompute each property from the concrete graph; the
        // propagators are not complete, so this is the correctness backstop.
        Solution sol;
        for (const ConstraintSpec& c : constraints) {
            int value = evaluate_property(g, c.kind);
            if (value < c.p.lb || value > c.p.ub) return;
            sol.p_values.push_back(value);
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.vertex_state(v) == ElementState::Mandatory) sol.vertices.push_back(v);
        for (int a = 0; a < g.arc_count(); ++a)
            if (g.arc(a).state == ElementState::Mandatory) sol.arcs.push_back(a);
        out.push_back(std::move(sol));
        return;
    }

    Snapshot snap = g.snapshot();
    std::vector<ConstraintSpec> saved = constraints;

    // Inclusion first, exclusion second.
    if (choice->is_vertex) g.include_vertex(choice->id);
    else g.include_arc(choice->id);
    solve_rec(g, constraints, limit, out);
    g.restore(snap);
    constraints = saved;

    if (choice->is_vertex) g.exclude_vertex(choice->id);
    else g.exclude_arc(choice->id);
    solve_rec(g, constraints, limit, out);
    g.restore(snap);
    constraints = saved;
}

}  // namespace detail

// Depth-first search enumerating every instantiated solution, in
// deterministic branch order. Inputs are taken by value; the caller's
// domain is untouched.
inline std::vector<Solution> solve(GraphDomain g, std::vector<ConstraintSpec> constraints,
                                   std::optional<long> limit = std::nullopt) {
    std::vector<Solution> out;
    if (limit && *limit <= 0) return out;
    detail::solve_rec(g, constraints, limit, out);
    return out;
}

}  // namespace ncc

#endif
