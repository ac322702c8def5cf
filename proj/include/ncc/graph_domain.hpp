#ifndef NCC_GRAPH_DOMAIN_HPP
#define NCC_GRAPH_DOMAIN_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncc {

// Three-valued membership of a vertex or arc in a graph domain variable.
// Refinement is monotone: the only legal transitions are U->T and U->F.
enum class ElementState : std::uint8_t {
    Mandatory,  // T
    Possible,   // U
    Excluded,   // F
};

inline char state_letter(ElementState s) {
    switch (s) {
        case ElementState::Mandatory: return 'T';
        case ElementState::Possible: return 'U';
        case ElementState::Excluded: return 'F';
    }
    return '?';
}

// Signals that a requested refinement contradicts the current domain
// (e.g. including an excluded vertex). Propagators report failure through
// their outcome instead of throwing.
class inconsistency_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Arc {
    int tail;
    int head;
    ElementState state;

    bool is_loop() const { return tail == head; }
};

// Batch of state promotions produced by one mutating operation (or an
// accumulation of several). Every listed element was Possible beforehand.
struct DomainDelta {
    std::vector<int> vertices_to_T;
    std::vector<int> vertices_to_F;
    std::vector<int> arcs_to_T;
    std::vector<int> arcs_to_F;

    bool empty() const {
        return vertices_to_T.empty() && vertices_to_F.empty() &&
               arcs_to_T.empty() && arcs_to_F.empty();
    }

    void merge(const DomainDelta& other) {
        auto append = [](std::vector<int>& dst, const std::vector<int>& src) {
            dst.insert(dst.end(), src.begin(), src.end());
        };
        append(vertices_to_T, other.vertices_to_T);
        append(vertices_to_F, other.vertices_to_F);
        append(arcs_to_T, other.arcs_to_T);
        append(arcs_to_F, other.arcs_to_F);
    }
};

struct DomainCounts {
    int vt = 0;   // |V_T|
    int vu = 0;   // |V_U|
    int vtu = 0;  // |V_TU|
    int et = 0;   // |E_T|
    int eu = 0;   // |E_U|
    int etu = 0;  // |E_TU|
};

class GraphDomain;

// Opaque capture of the full state vector; only GraphDomain can read it.
class Snapshot {
    friend class GraphDomain;
    std::vector<ElementState> vertex_states_;
    std::vector<ElementState> arc_states_;
};

// A graph domain variable: vertices 0..n-1 and a fixed arc universe, each
// element carrying a T/U/F state. The kernel is the T elements, the
// envelope the T and U elements. Arcs are stored as ordered pairs but
// treated as undirected edges for connectivity; at most one arc per
// unordered endpoint pair plus at most one loop per vertex.
class GraphDomain {
  public:
    explicit GraphDomain(int n) : vertex_states_(n, ElementState::Possible), incident_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    }

    int vertex_count() const { return static_cast<int>(vertex_states_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    ElementState vertex_state(int v) const { return vertex_states_.at(v); }
    const Arc& arc(int a) const { return arcs_.at(a); }
    const std::vector<int>& incident_arcs(int v) const { return incident_.at(v); }

    // Initial setup only; rejects transitions that would break monotonicity
    // once arcs reference the vertex.
    void set_vertex_state(int v, ElementState s) {
        check_vertex(v);
        vertex_states_[v] = s;
    }

    // Adds an arc in the given state, validating the closure invariants
    // against the current endpoint states.
    int add_arc(int tail, int head, ElementState state) {
        check_vertex(tail);
        check_vertex(head);
        if (find_arc(tail, head) >= 0)
            throw std::invalid_argument("duplicate arc (" + std::to_string(tail) + "," +
                                        std::to_string(head) + ")");
        if (state == ElementState::Mandatory &&
            (vertex_states_[tail] != ElementState::Mandatory ||
             vertex_states_[head] != ElementState::Mandatory))
            throw std::invalid_argument("mandatory arc requires mandatory endpoints");
        if (state == ElementState::Possible &&
            (vertex_states_[tail] == ElementState::Excluded ||
             vertex_states_[head] == ElementState::Excluded))
            throw std::invalid_argument("possible arc cannot touch an excluded vertex");
        int id = arc_count();
        arcs_.push_back(Arc{tail, head, state});
        incident_[tail].push_back(id);
        if (head != tail) incident_[head].push_back(id);
        return id;
    }

    // Arc id for the unordered pair, or -1.
    int find_arc(int u, int v) const {
        for (int a : incident_.at(u)) {
            const Arc& arc = arcs_[a];
            if ((arc.tail == u && arc.head == v) || (arc.tail == v && arc.head == u)) return a;
        }
        return -1;
    }

    DomainDelta include_vertex(int v) {
        check_vertex(v);
        DomainDelta delta;
        switch (vertex_states_[v]) {
            case ElementState::Mandatory: break;
            case ElementState::Possible:
                vertex_states_[v] = ElementState::Mandatory;
                delta.vertices_to_T.push_back(v);
                break;
            case ElementState::Excluded:
                throw inconsistency_error("cannot include excluded vertex " + std::to_string(v));
        }
        return delta;
    }

    DomainDelta exclude_vertex(int v) {
        check_vertex(v);
        DomainDelta delta;
        switch (vertex_states_[v]) {
            case ElementState::Excluded: break;
            case ElementState::Mandatory:
                throw inconsistency_error("cannot exclude mandatory vertex " + std::to_string(v));
            case ElementState::Possible:
                vertex_states_[v] = ElementState::Excluded;
                delta.vertices_to_F.push_back(v);
                for (int a : incident_[v]) {
                    if (arcs_[a].state == ElementState::Possible) {
                        arcs_[a].state = ElementState::Excluded;
                        delta.arcs_to_F.push_back(a);
                    }
                }
                break;
        }
        return delta;
    }

    DomainDelta include_arc(int a) {
        check_arc(a);
        DomainDelta delta;
        Arc& arc = arcs_[a];
        switch (arc.state) {
            case ElementState::Mandatory: break;
            case ElementState::Excluded:
                throw inconsistency_error("cannot include excluded arc " + std::to_string(a));
            case ElementState::Possible:
                if (vertex_states_[arc.tail] == ElementState::Excluded ||
                    vertex_states_[arc.head] == ElementState::Excluded)
                    throw inconsistency_error("arc " + std::to_string(a) +
                                              " touches an excluded vertex");
                arc.state = ElementState::Mandatory;
                delta.arcs_to_T.push_back(a);
                delta.merge(include_vertex(arc.tail));
                delta.merge(include_vertex(arc.head));
                break;
        }
        return delta;
    }

    DomainDelta exclude_arc(int a) {
        check_arc(a);
        DomainDelta delta;
        Arc& arc = arcs_[a];
        switch (arc.state) {
            case ElementState::Excluded: break;
            case ElementState::Mandatory:
                throw inconsistency_error("cannot exclude mandatory arc " + std::to_string(a));
            case ElementState::Possible:
                arc.state = ElementState::Excluded;
                delta.arcs_to_F.push_back(a);
                break;
        }
        return delta;
    }

    DomainCounts counts() const {
        DomainCounts c;
        for (ElementState s : vertex_states_) {
            if (s == ElementState::Mandatory) ++c.vt;
            else if (s == ElementState::Possible) ++c.vu;
        }
        for (const Arc& a : arcs_) {
            if (a.state == ElementState::Mandatory) ++c.et;
            else if (a.state == ElementState::Possible) ++c.eu;
        }
        c.vtu = c.vt + c.vu;
        c.etu = c.et + c.eu;
        return c;
    }

    bool is_instantiated() const {
        for (ElementState s : vertex_states_)
            if (s == ElementState::Possible) return false;
        for (const Arc& a : arcs_)
            if (a.state == ElementState::Possible) return false;
        return true;
    }

    Snapshot snapshot() const {
        Snapshot s;
        s.vertex_states_ = vertex_states_;
        s.arc_states_.reserve(arcs_.size());
        for (const Arc& a : arcs_) s.arc_states_.push_back(a.state);
        return s;
    }

    void restore(const Snapshot& s) {
        if (s.vertex_states_.size() != vertex_states_.size() ||
            s.arc_states_.size() != arcs_.size())
            throw std::invalid_argument("snapshot shape does not match this domain");
        vertex_states_ = s.vertex_states_;
        for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].state = s.arc_states_[i];
    }

    // Structural invariant check; tests run this after every mutation.
    void check_invariants() const {
        for (int a = 0; a < arc_count(); ++a) {
            const Arc& arc = arcs_[a];
            ElementState ts = vertex_states_[arc.tail];
            ElementState hs = vertex_states_[arc.head];
            if (arc.state == ElementState::Mandatory &&
                (ts != ElementState::Mandatory || hs != ElementState::Mandatory))
                throw std::logic_error("T-arc " + std::to_string(a) + " with non-T endpoint");
            if (arc.state == ElementState::Possible &&
                (ts == ElementState::Excluded || hs == ElementState::Excluded))
                throw std::logic_error("U-arc " + std::to_string(a) + " with F endpoint");
        }
        for (int v = 0; v < vertex_count(); ++v) {
            if (vertex_states_[v] != ElementState::Excluded) continue;
            for (int a : incident_[v])
                if (arcs_[a].state != ElementState::Excluded)
                    throw std::logic_error("F-vertex " + std::to_string(v) +
                                           " with non-F incident arc");
        }
    }

    bool state_equal(const GraphDomain& other) const {
        if (vertex_states_ != other.vertex_states_ || arcs_.size() != other.arcs_.size())
            return false;
        for (std::size_t i = 0; i < arcs_.size(); ++i)
            if (arcs_[i].state != other.arcs_[i].state) return false;
        return true;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("vertex index " + std::to_string(v));
    }
    void check_arc(int a) const {
        if (a < 0 || a >= arc_count()) throw std::out_of_range("arc id " + std::to_string(a));
    }

    std::vector<ElementState> vertex_states_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> incident_;
};

}  // namespace ncc

#endif
