#ifndef NCC_ORACLE_HPP
#define NCC_ORACLE_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncc/connectivity.hpp"
#include "ncc/engine.hpp"
#include "ncc/graph_domain.hpp"

namespace ncc {

// A concrete graph between kernel and envelope, closed under the
// arc-endpoint rule.
struct Completion {
    std::vector<int> vertices;  // ascending
    std::vector<int> arcs;      // ascending arc ids

    bool operator==(const Completion&) const = default;
};

class oracle_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleSolution {
    Completion graph;
    std::vector<int> p_values;
};

inline constexpr int kDefaultOracleCap = 24;

namespace detail {

inline int property_of(const GraphDomain& g, const Completion& c, ConstraintKind kind) {
    std::vector<std::pair<int, int>> edges;
    for (int a : c.arcs) edges.emplace_back(g.arc(a).tail, g.arc(a).head);
    std::vector<int> sizes = concrete_component_sizes(g.vertex_count(), c.vertices, edges);
    if (sizes.empty()) return 0;
    return kind == ConstraintKind::MinNcc ? *std::min_element(sizes.begin(), sizes.end())
                                          : *std::max_element(sizes.begin(), sizes.end());
}

}  // namespace detail

// Enumerates every completion exactly once: vertex subsets form the outer
// radix, arc subsets (restricted to arcs with both endpoints chosen) the
// inner one.
template <typename Visit>
void for_each_completion(const GraphDomain& g, Visit&& visit, int cap = kDefaultOracleCap) {
    std::vector<int> free_vertices;
    std::vector<int> free_arcs;
    std::vector<int> base_vertices;
    std::vector<int> base_arcs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertex_state(v) == ElementState::Possible) free_vertices.push_back(v);
        else if (g.vertex_state(v) == ElementState::Mandatory) base_vertices.push_back(v);
    }
    for (int a = 0; a < g.arc_count(); ++a) {
        if (g.arc(a).state == ElementState::Possible) free_arcs.push_back(a);
        else if (g.arc(a).state == ElementState::Mandatory) base_arcs.push_back(a);
    }
    if (static_cast<int>(free_vertices.size() + free_arcs.size()) > cap)
        throw oracle_limit_error("instance has " +
                                 std::to_string(free_vertices.size() + free_arcs.size()) +
                                 " free elements, cap is " + std::to_string(cap));

    std::vector<char> chosen(g.vertex_count(), 0);
    for (int v : base_vertices) chosen[v] = 1;

    const std::uint64_t vmasks = 1ull << free_vertices.size();
    for (std::uint64_t vm = 0; vm < vmasks; ++vm) {
        Completion base;
        base.vertices = base_vertices;
        for (std::size_t i = 0; i < free_vertices.size(); ++i) {
            bool in = (vm >> i) & 1;
            chosen[free_vertices[i]] = in;
            if (in) base.vertices.push_back(free_vertices[i]);
        }
        std::sort(base.vertices.begin(), base.vertices.end());

        std::vector<int> eligible;
        for (int a : free_arcs)
            if (chosen[g.arc(a).tail] && chosen[g.arc(a).head]) eligible.push_back(a);

        const std::uint64_t amasks = 1ull << eligible.size();
        for (std::uint64_t am = 0; am < amasks; ++am) {
            Completion c = base;
            c.arcs = base_arcs;
            for (std::size_t i = 0; i < eligible.size(); ++i)
                if ((am >> i) & 1) c.arcs.push_back(eligible[i]);
            std::sort(c.arcs.begin(), c.arcs.end());
            visit(std::as_const(c));
        }
    }
    for (int v : free_vertices) chosen[v] = 0;
}

inline std::vector<Completion> enumerate_completions(const GraphDomain& g,
                                                     int cap = kDefaultOracleCap) {
    std::vector<Completion> out;
    for_each_completion(g, [&](const Completion& c) { out.push_back(c); }, cap);
    return out;
}

// Exact extrema of a property over all completions. Every domain has at
// least one completion (the kernel).
inline std::pair<int, int> exact_range(const GraphDomain& g, ConstraintKind kind,
                                       int cap = kDefaultOracleCap) {
    int lo = 0, hi = 0;
    bool first = true;
    for_each_completion(g, [&](const Completion& c) {
        int value = detail::property_of(g, c, kind);
        if (first) {
            lo = hi = value;
            first = false;
        } else {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }, cap);
    return {lo, hi};
}

// Ground-truth solution set: completions whose property values fall inside
// every constraint's interval.
inline std::vector<OracleSolution> oracle_solutions(const GraphDomain& g,
                                                    const std::vector<ConstraintSpec>& constraints,
                                                    int cap = kDefaultOracleCap) {
    std::vector<OracleSolution> out;
    for_each_completion(g, [&](const Completion& c) {
        OracleSolution sol;
        for (const ConstraintSpec& cs : constraints) {
            int value = detail::property_of(g, c, cs.kind);
            if (value < cs.p.lb || value > cs.p.ub) return;
            sol.p_values.push_back(value);
        }
        sol.graph = c;
        out.push_back(std::move(sol));
    }, cap);
    return out;
}

}  // namespace ncc

#endif
