#ifndef NCC_TESTS_SUPPORT_HPP
#define NCC_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ncc/graph_domain.hpp"
#include "ncc/instance.hpp"

namespace ncc::testsupport {

inline ElementState state_of(char c) {
    switch (c) {
        case 'T': return ElementState::Mandatory;
        case 'U': return ElementState::Possible;
        case 'F': return ElementState::Excluded;
    }
    throw std::logic_error("bad state letter");
}

struct ArcInit {
    int tail;
    int head;
    char state;
};

// Domain from a vertex-state string ("TUF...") and an arc list.
inline GraphDomain make_domain(const std::string& vertex_states,
                               const std::vector<ArcInit>& arcs = {}) {
    GraphDomain g(static_cast<int>(vertex_states.size()));
    for (std::size_t v = 0; v < vertex_states.size(); ++v)
        g.set_vertex_state(static_cast<int>(v), state_of(vertex_states[v]));
    for (const ArcInit& a : arcs) g.add_arc(a.tail, a.head, state_of(a.state));
    return g;
}

// Every consistent domain over n vertices: all vertex labelings times all
// labelings of the full candidate arc set (pairs i<j plus loops). Arcs
// labeled F are simply not added; that is the same domain.
template <typename Fn>
void for_each_exhaustive_domain(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i) candidates.emplace_back(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    const int m = static_cast<int>(candidates.size());

    std::vector<int> vstate(n, 0);
    std::vector<int> astate(m, 0);
    const char letters[3] = {'T', 'U', 'F'};

    long total_v = 1;
    for (int i = 0; i < n; ++i) total_v *= 3;
    long total_a = 1;
    for (int i = 0; i < m; ++i) total_a *= 3;

    for (long vcode = 0; vcode < total_v; ++vcode) {
        long vc = vcode;
        std::string vs(n, 'U');
        for (int i = 0; i < n; ++i) {
            vs[i] = letters[vc % 3];
            vc /= 3;
        }
        for (long acode = 0; acode < total_a; ++acode) {
            long ac = acode;
            bool ok = true;
            GraphDomain g(n);
            for (int i = 0; i < n && ok; ++i) g.set_vertex_state(i, state_of(vs[i]));
            for (int i = 0; i < m && ok; ++i) {
                char st = letters[ac % 3];
                ac /= 3;
                if (st == 'F') continue;
                auto [t, h] = candidates[i];
                if (st == 'T' && (vs[t] != 'T' || vs[h] != 'T')) ok = false;
                else if (st == 'U' && (vs[t] == 'F' || vs[h] == 'F')) ok = false;
                else g.add_arc(t, h, state_of(st));
            }
            if (ok) fn(g);
        }
    }
}

// Seeded random consistent domain, reusing the instance generator.
inline GraphDomain random_domain(int n, std::uint64_t seed, double density = 0.4,
                                 double mandatory_ratio = 0.35) {
    return build_domain(generate_instance(n, density, mandatory_ratio, seed));
}

}  // namespace ncc::testsupport

#endif
