#ifndef NCC_PROPAGATORS_HPP
#define NCC_PROPAGATORS_HPP

#include <optional>
#include <vector>

#include "ncc/bounds.hpp"
#include "ncc/connectivity.hpp"
#include "ncc/graph_domain.hpp"

namespace ncc {

// Integer domain variable as a closed interval.
struct IntervalVar {
    int lb = 0;
    int ub = 0;

    bool operator==(const IntervalVar&) const = default;
};

enum class FilterStatus { Failed, Progressed, AtFixpoint };

// Result of one propagator run. Failed carries no deltas; the caller is
// expected to backtrack via snapshot/restore.
struct FilterOutcome {
    FilterStatus status = FilterStatus::AtFixpoint;
    DomainDelta graph_delta;
    std::optional<IntervalVar> p_delta;
};

namespace detail {

struct FilterSession {
    GraphDomain& g;
    IntervalVar& p;
    DomainDelta delta;
    bool p_changed = false;

    void apply(DomainDelta d) { delta.merge(d); }

    void set_lb(int lb) {
        if (p.lb < lb) {
            p.lb = lb;
            p_changed = true;
        }
    }
    void set_ub(int ub) {
        if (p.ub > ub) {
            p.ub = ub;
            p_changed = true;
        }
    }

    FilterOutcome fail() const { return FilterOutcome{FilterStatus::Failed, {}, {}}; }

    FilterOutcome done() const {
        FilterOutcome out;
        out.status = (delta.empty() && !p_changed) ? FilterStatus::AtFixpoint
                                                   : FilterStatus::Progressed;
        out.graph_delta = delta;
        if (p_changed) out.p_delta = p;
        return out;
    }
};

// U-arcs with exactly one endpoint inside the component (loops never qualify).
inline std::vector<int> crossing_possible_arcs(const GraphDomain& g, const ComponentSet& cs,
                                               int comp_index) {
    std::vector<int> out;
    for (int a = 0; a < g.arc_count(); ++a) {
        const Arc& arc = g.arc(a);
        if (arc.state != ElementState::Possible || arc.is_loop()) continue;
        bool tail_in = cs.component_of[arc.tail] == comp_index;
        bool head_in = cs.component_of[arc.head] == comp_index;
        if (tail_in != head_in) out.push_back(a);
    }
    return out;
}

}  // namespace detail

// Filtering scheme for MIN_NCC(G, P): P is the size of the smallest
// connected component of G.
inline FilterOutcome filter_min_ncc(GraphDomain& g, IntervalVar& p) {
    detail::FilterSession s{g, p};

    // Steps 1-2: trivial infeasibility. A lone mandatory vertex is a legal
    // size-1 component, so the arc-count test only applies from lb >= 2.
    DomainCounts c = g.counts();
    if (p.lb > c.vtu) return s.fail();
    if (p.lb >= 2 && c.etu < p.lb - 1) return s.fail();

    // Steps 3-6: bound checks and interval tightening.
    if (min_ncc_ub(g) < p.lb) return s.fail();
    int lb = min_ncc_lb(g);
    if (lb > p.ub) return s.fail();
    s.set_lb(lb);
    s.set_ub(min_ncc_ub(g));

    // Step 7: optional envelope components too small to ever reach lb.
    {
        ComponentSet env = components(g, View::Envelope);
        for (const Component* comp :
             select(env, [&](int sz) { return sz < p.lb; }, [](bool mand) { return !mand; }))
            for (int v : comp->vertices)
                if (g.vertex_state(v) == ElementState::Possible) s.apply(g.exclude_vertex(v));
    }

    // Step 8. When 8a fires, P is instantiated and 8b is not attempted in
    // the same call; the fixpoint loop picks up any remaining forcing.
    bool changed_8b = false;
    if (min_ncc_lb(g) < p.lb) {
        bool instantiated = false;
        // 8a: mandatory envelope components of size exactly lb are forced
        // whole; P is then fixed.
        if (g.counts().vt >= 1) {
            ComponentSet env = components(g, View::Envelope);
            bool forced = false;
            for (const Component* comp : select(env, [&](int sz) { return sz == p.lb; },
                                                [](bool mand) { return mand; })) {
                forced = true;
                for (int v : comp->vertices)
                    if (g.vertex_state(v) == ElementState::Possible) s.apply(g.include_vertex(v));
            }
            if (forced) {
                if (p.ub < p.lb) return s.fail();
                s.set_ub(p.lb);
                instantiated = true;
            }
        }
        // 8b: an undersized kernel component must grow through its only
        // exit. Components are recomputed after every forcing because a
        // promotion can merge kernel components.
        while (!instantiated) {
            ComponentSet ker = components(g, View::Kernel);
            bool applied = false;
            for (int i = 0; i < static_cast<int>(ker.components.size()) && !applied; ++i) {
                if (ker.components[i].size >= p.lb) continue;
                std::vector<int> exits = detail::crossing_possible_arcs(g, ker, i);
                if (exits.size() == 1) {
                    s.apply(g.include_arc(exits[0]));
                    applied = true;
                } else if (exits.size() >= 2) {
                    int target = -1;
                    bool single = true;
                    for (int a : exits) {
                        const Arc& arc = g.arc(a);
                        int outside = ker.component_of[arc.tail] == i ? arc.head : arc.tail;
                        if (g.vertex_state(outside) != ElementState::Possible) {
                            single = false;
                            break;
                        }
                        if (target == -1) target = outside;
                        else if (target != outside) {
                            single = false;
                            break;
                        }
                    }
                    if (single && target != -1) {
                        s.apply(g.include_vertex(target));
                        applied = true;
                    }
                }
            }
            if (!applied) break;
            changed_8b = true;
        }
    }

    // Step 9: re-run steps 4-5 once after 8b forcings.
    if (changed_8b) {
        int lb2 = min_ncc_lb(g);
        if (lb2 > p.ub) return s.fail();
        s.set_lb(lb2);
    }

    // Step 10.
    if (min_ncc_ub(g) > p.ub) {
        if (p.ub == 0) {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.vertex_state(v) == ElementState::Possible) s.apply(g.exclude_vertex(v));
        } else if (p.ub == 1 && g.counts().vu == 1) {
            auto kmin = extreme_size(components(g, View::Kernel), Extreme::Min);
            if (kmin && *kmin > 1) {
                int u = -1;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (g.vertex_state(v) == ElementState::Possible) u = v;
                s.apply(g.include_vertex(u));
                for (int a : g.incident_arcs(u)) {
                    const Arc& arc = g.arc(a);
                    if (arc.state == ElementState::Possible && !arc.is_loop())
                        s.apply(g.exclude_arc(a));
                }
            }
        }
    }

    return s.done();
}

// Filtering scheme for MAX_NCC(G, P): P is the size of the largest
// connected component of G.
inline FilterOutcome filter_max_ncc(GraphDomain& g, IntervalVar& p) {
    detail::FilterSession s{g, p};

    DomainCounts c = g.counts();
    if (p.lb > c.vtu) return s.fail();
    if (p.lb >= 2 && c.etu < p.lb - 1) return s.fail();

    int ub = max_ncc_ub(g);
    if (ub < p.lb) return s.fail();
    int lb = max_ncc_lb(g);
    if (lb > p.ub) return s.fail();
    s.set_lb(lb);
    s.set_ub(ub);

    // Step 7: the envelope still allows components larger than ub(P).
    if (max_ncc_ub(g) > p.ub) {
        if (p.ub == 1) {
            for (int a = 0; a < g.arc_count(); ++a)
                if (g.arc(a).state == ElementState::Possible && !g.arc(a).is_loop())
                    s.apply(g.exclude_arc(a));
        }
        if (p.ub == 0) {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.vertex_state(v) == ElementState::Possible) s.apply(g.exclude_vertex(v));
        }
        // Exclusions cannot change kernel components, so one computation
        // serves steps 7c and 7d.
        ComponentSet ker = components(g, View::Kernel);
        // 7c: arcs leaving a kernel component already at full size.
        for (int i = 0; i < static_cast<int>(ker.components.size()); ++i) {
            if (ker.components[i].size != p.ub) continue;
            for (int a : detail::crossing_possible_arcs(g, ker, i)) s.apply(g.exclude_arc(a));
        }
        // 7d: arcs whose inclusion would merge two kernel components into
        // one exceeding ub(P).
        bool changed_7d = false;
        for (int a = 0; a < g.arc_count(); ++a) {
            const Arc& arc = g.arc(a);
            if (arc.state != ElementState::Possible || arc.is_loop()) continue;
            int ct = ker.component_of[arc.tail];
            int ch = ker.component_of[arc.head];
            if (ct < 0 || ch < 0 || ct == ch) continue;
            if (ker.components[ct].size + ker.components[ch].size > p.ub) {
                s.apply(g.exclude_arc(a));
                changed_7d = true;
            }
        }
        // 7e: re-run steps 3 and 6 once.
        if (changed_7d) {
            int ub2 = max_ncc_ub(g);
            if (ub2 < p.lb) return s.fail();
            s.set_ub(ub2);
        }
    }

    // Step 8: a single candidate envelope component of size exactly lb(P)
    // must be taken whole; P is then fixed.
    {
        ComponentSet env = components(g, View::Envelope);
        std::vector<const Component*> candidates =
            select(env, [&](int sz) { return sz >= p.lb; }, [](bool) { return true; });
        if (candidates.size() == 1 && candidates[0]->size == p.lb) {
            for (int v : candidates[0]->vertices)
                if (g.vertex_state(v) == ElementState::Possible) s.apply(g.include_vertex(v));
            if (p.ub < p.lb) return s.fail();
            s.set_ub(p.lb);
        }
    }

    return s.done();
}

}  // namespace ncc

#endif
