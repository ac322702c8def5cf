#ifndef NCC_CONNECTIVITY_HPP
#define NCC_CONNECTIVITY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ncc/graph_domain.hpp"

namespace ncc {

enum class View { Kernel, Envelope };

struct Component {
    std::vector<int> vertices;  // ascending
    int size = 0;
    bool has_mandatory = false;
};

// Connected components of one view of a domain. Components are listed in
// ascending order of their smallest vertex; component_of maps each vertex
// in the view to its component index (-1 outside the view).
struct ComponentSet {
    std::vector<Component> components;
    std::vector<int> component_of;
};

namespace detail {

inline bool in_view(ElementState s, View view) {
    if (view == View::Kernel) return s == ElementState::Mandatory;
    return s != ElementState::Excluded;
}

}  // namespace detail

// Components are computed on the underlying undirected graph; loops never
// affect connectivity.
inline ComponentSet components(const GraphDomain& g, View view) {
    const int n = g.vertex_count();
    ComponentSet cs;
    cs.component_of.assign(n, -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (!detail::in_view(g.vertex_state(root), view)) continue;
        if (cs.component_of[root] != -1) continue;
        int idx = static_cast<int>(cs.components.size());
        Component comp;
        cs.component_of[root] = idx;
        stack.assign(1, root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            if (g.vertex_state(v) == ElementState::Mandatory) comp.has_mandatory = true;
            for (int a : g.incident_arcs(v)) {
                const Arc& arc = g.arc(a);
                if (arc.is_loop() || !detail::in_view(arc.state, view)) continue;
                int w = arc.tail == v ? arc.head : arc.tail;
                if (cs.component_of[w] != -1) continue;
                cs.component_of[w] = idx;
                stack.push_back(w);
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.size = static_cast<int>(comp.vertices.size());
        cs.components.push_back(std::move(comp));
    }
    return cs;
}

// Components satisfying both predicates, in ascending first-vertex order.
template <typename SizePred, typename MandatoryPred>
std::vector<const Component*> select(const ComponentSet& cs, SizePred&& size_pred,
                                     MandatoryPred&& mandatory_pred) {
    std::vector<const Component*> out;
    for (const Component& c : cs.components)
        if (size_pred(c.size) && mandatory_pred(c.has_mandatory)) out.push_back(&c);
    return out;
}

enum class Extreme { Min, Max };

// Extremal size over the filtered components; empty selection is explicit.
template <typename SizePred, typename MandatoryPred>
std::optional<int> extreme_size(const ComponentSet& cs, Extreme which, SizePred&& size_pred,
                                MandatoryPred&& mandatory_pred) {
    std::optional<int> best;
    for (const Component& c : cs.components) {
        if (!size_pred(c.size) || !mandatory_pred(c.has_mandatory)) continue;
        if (!best || (which == Extreme::Min ? c.size < *best : c.size > *best)) best = c.size;
    }
    return best;
}

inline std::optional<int> extreme_size(const ComponentSet& cs, Extreme which) {
    return extreme_size(cs, which, [](int) { return true; }, [](bool) { return true; });
}

// Component sizes of a concrete graph given as a vertex set plus edges
// (used on instantiated domains and oracle completions).
inline std::vector<int> concrete_component_sizes(int n, const std::vector<int>& vertices,
                                                 const std::vector<std::pair<int, int>>& edges) {
    std::vector<char> present(n, 0);
    for (int v : vertices) present[v] = 1;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> sizes;
    std::vector<int> stack;
    for (int root : vertices) {
        if (seen[root]) continue;
        seen[root] = 1;
        stack.assign(1, root);
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : adj[v]) {
                if (!present[w] || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        sizes.push_back(count);
    }
    return sizes;
}

}  // namespace ncc

#endif
