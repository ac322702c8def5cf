#ifndef NCC_BOUNDS_HPP
#define NCC_BOUNDS_HPP

#include <cassert>

#include "ncc/connectivity.hpp"
#include "ncc/graph_domain.hpp"

namespace ncc {

// Lower bound of MIN_NCC: 0 without mandatory vertices; 1 as soon as a
// possible vertex can be isolated next to the kernel; otherwise the
// smallest kernel component size.
inline int min_ncc_lb(const GraphDomain& g) {
    DomainCounts c = g.counts();
    if (c.vt == 0) return 0;
    if (c.vu >= 1) return 1;
    auto m = extreme_size(components(g, View::Kernel), Extreme::Min);
    assert(m.has_value());
    return *m;
}

// Upper bound of MIN_NCC: the smallest envelope component holding a
// mandatory vertex, or the largest envelope component when the kernel is
// empty. An empty envelope yields 0.
inline int min_ncc_ub(const GraphDomain& g) {
    ComponentSet cs = components(g, View::Envelope);
    if (g.counts().vt >= 1) {
        auto m = extreme_size(cs, Extreme::Min, [](int) { return true; },
                              [](bool mand) { return mand; });
        // A mandatory vertex always lies in some envelope component.
        assert(m.has_value());
        return *m;
    }
    return extreme_size(cs, Extreme::Max).value_or(0);
}

// Lower bound of MAX_NCC: the largest kernel component (0 if empty).
inline int max_ncc_lb(const GraphDomain& g) {
    return extreme_size(components(g, View::Kernel), Extreme::Max).value_or(0);
}

// Upper bound of MAX_NCC: the largest envelope component (0 if empty).
inline int max_ncc_ub(const GraphDomain& g) {
    return extreme_size(components(g, View::Envelope), Extreme::Max).value_or(0);
}

}  // namespace ncc

#endif
