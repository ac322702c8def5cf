#ifndef NCC_INSTANCE_HPP
#define NCC_INSTANCE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncc/engine.hpp"
#include "ncc/graph_domain.hpp"

namespace ncc {

class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ArcSpec {
    int from;
    int to;
    ElementState state;  // Mandatory or Possible; excluded arcs are unlisted

    bool operator==(const ArcSpec&) const = default;
};

// On-disk unit: envelope, initial states and the posted constraints.
// Unlisted vertices are Possible, unlisted arcs Excluded.
struct Instance {
    int n = 0;
    std::vector<int> mandatory;
    std::vector<int> excluded;
    std::vector<ArcSpec> arcs;
    std::vector<ConstraintSpec> constraints;
};

namespace detail {

inline void check_vertex_list(const std::vector<int>& ids, int n, const std::string& field) {
    std::set<int> seen;
    for (int v : ids) {
        if (v < 0 || v >= n)
            throw parse_error(field + ": vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n) + ")");
        if (!seen.insert(v).second)
            throw parse_error(field + ": duplicate vertex " + std::to_string(v));
    }
}

inline const nlohmann::ordered_json* get_field(const nlohmann::ordered_json& obj,
                                               const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("top level must be an object");

    Instance inst;
    try {
        inst.n = doc.at("n").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("field n: ") + e.what());
    }
    if (inst.n < 0) throw parse_error("field n: must be non-negative");

    if (const auto* verts = detail::get_field(doc, "vertices")) {
        if (!verts->is_object()) throw parse_error("field vertices: must be an object");
        if (const auto* m = detail::get_field(*verts, "mandatory"))
            inst.mandatory = m->get<std::vector<int>>();
        if (const auto* x = detail::get_field(*verts, "excluded"))
            inst.excluded = x->get<std::vector<int>>();
    }
    detail::check_vertex_list(inst.mandatory, inst.n, "vertices.mandatory");
    detail::check_vertex_list(inst.excluded, inst.n, "vertices.excluded");
    {
        std::set<int> mand(inst.mandatory.begin(), inst.mandatory.end());
        for (int v : inst.excluded)
            if (mand.count(v))
                throw parse_error("vertex " + std::to_string(v) +
                                  " is both mandatory and excluded");
    }

    std::set<int> mand(inst.mandatory.begin(), inst.mandatory.end());
    std::set<int> excl(inst.excluded.begin(), inst.excluded.end());
    std::set<std::pair<int, int>> pairs;
    if (const auto* arcs = detail::get_field(doc, "arcs")) {
        if (!arcs->is_array()) throw parse_error("field arcs: must be an array");
        for (std::size_t i = 0; i < arcs->size(); ++i) {
            const auto& a = (*arcs)[i];
            const std::string where = "arcs[" + std::to_string(i) + "]";
            ArcSpec spec{};
            try {
                spec.from = a.at("from").get<int>();
                spec.to = a.at("to").get<int>();
            } catch (const nlohmann::json::exception& e) {
                throw parse_error(where + ": " + e.what());
            }
            if (spec.from < 0 || spec.from >= inst.n || spec.to < 0 || spec.to >= inst.n)
                throw parse_error(where + ": endpoint out of range");
            std::string st;
            try {
                st = a.at("state").get<std::string>();
            } catch (const nlohmann::json::exception& e) {
                throw parse_error(where + ": " + e.what());
            }
            if (st == "T") spec.state = ElementState::Mandatory;
            else if (st == "U") spec.state = ElementState::Possible;
            else throw parse_error(where + ": state must be \"T\" or \"U\", got \"" + st + "\"");

            auto key = std::minmax(spec.from, spec.to);
            if (!pairs.insert(key).second)
                throw parse_error(where + ": duplicate arc between " +
                                  std::to_string(key.first) + " and " +
                                  std::to_string(key.second));
            if (spec.state == ElementState::Mandatory &&
                (!mand.count(spec.from) || !mand.count(spec.to)))
                throw parse_error(where + ": arc in state T requires both endpoints mandatory");
            if (excl.count(spec.from) || excl.count(spec.to))
                throw parse_error(where + ": arc touches an excluded vertex");
            inst.arcs.push_back(spec);
        }
    }

    if (const auto* cons = detail::get_field(doc, "constraints")) {
        if (!cons->is_array()) throw parse_error("field constraints: must be an array");
        for (std::size_t i = 0; i < cons->size(); ++i) {
            const auto& c = (*cons)[i];
            const std::string where = "constraints[" + std::to_string(i) + "]";
            ConstraintSpec spec{};
            std::string type;
            try {
                type = c.at("type").get<std::string>();
                spec.p.lb = c.at("p").at("lb").get<int>();
                spec.p.ub = c.at("p").at("ub").get<int>();
            } catch (const nlohmann::json::exception& e) {
                throw parse_error(where + ": " + e.what());
            }
            if (type == "min_ncc") spec.kind = ConstraintKind::MinNcc;
            else if (type == "max_ncc") spec.kind = ConstraintKind::MaxNcc;
            else throw parse_error(where + ": unknown constraint type \"" + type + "\"");
            if (spec.p.lb < 0 || spec.p.lb > spec.p.ub)
                throw parse_error(where + ": interval requires 0 <= lb <= ub");
            inst.constraints.push_back(spec);
        }
    }
    return inst;
}

// Canonical JSON object: fixed field order, lists sorted ascending, arcs
// by (from, to).
inline nlohmann::ordered_json instance_json(Instance inst) {
    std::sort(inst.mandatory.begin(), inst.mandatory.end());
    std::sort(inst.excluded.begin(), inst.excluded.end());
    std::sort(inst.arcs.begin(), inst.arcs.end(), [](const ArcSpec& a, const ArcSpec& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });

    nlohmann::ordered_json doc;
    doc["n"] = inst.n;
    doc["vertices"]["mandatory"] = inst.mandatory;
    doc["vertices"]["excluded"] = inst.excluded;
    doc["arcs"] = nlohmann::ordered_json::array();
    for (const ArcSpec& a : inst.arcs)
        doc["arcs"].push_back({{"from", a.from},
                               {"to", a.to},
                               {"state", a.state == ElementState::Mandatory ? "T" : "U"}});
    doc["constraints"] = nlohmann::ordered_json::array();
    for (const ConstraintSpec& c : inst.constraints)
        doc["constraints"].push_back(
            {{"type", c.kind == ConstraintKind::MinNcc ? "min_ncc" : "max_ncc"},
             {"p", {{"lb", c.p.lb}, {"ub", c.p.ub}}}});
    return doc;
}

// parse(serialize(x)) = x for canonical x.
inline std::string serialize_instance(Instance inst) {
    return instance_json(std::move(inst)).dump(2) + "\n";
}

inline GraphDomain build_domain(const Instance& inst) {
    GraphDomain g(inst.n);
    for (int v : inst.mandatory) g.set_vertex_state(v, ElementState::Mandatory);
    for (int v : inst.excluded) g.set_vertex_state(v, ElementState::Excluded);
    for (const ArcSpec& a : inst.arcs) g.add_arc(a.from, a.to, a.state);
    return g;
}

// Reads the state of a domain back into instance form (arcs that became
// excluded are dropped, matching the on-disk convention).
inline Instance domain_to_instance(const GraphDomain& g,
                                   const std::vector<ConstraintSpec>& constraints) {
    Instance inst;
    inst.n = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertex_state(v) == ElementState::Mandatory) inst.mandatory.push_back(v);
        else if (g.vertex_state(v) == ElementState::Excluded) inst.excluded.push_back(v);
    }
    for (int a = 0; a < g.arc_count(); ++a) {
        const Arc& arc = g.arc(a);
        if (arc.state == ElementState::Excluded) continue;
        inst.arcs.push_back(ArcSpec{arc.tail, arc.head, arc.state});
    }
    inst.constraints = constraints;
    return inst;
}

// Seeded random instance: each vertex is mandatory with probability
// mandatory_ratio (else excluded with a small fixed probability, else
// possible); each candidate edge (i <= j, loops allowed) is kept with
// probability density, dropped if it touches an excluded vertex, and made
// mandatory half the time when both endpoints are mandatory.
inline Instance generate_instance(int n, double density, double mandatory_ratio,
                                  std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kExcludedShare = 0.15;

    Instance inst;
    inst.n = n;
    std::vector<ElementState> states(n, ElementState::Possible);
    for (int v = 0; v < n; ++v) {
        double r = unit(rng);
        if (r < mandatory_ratio) {
            states[v] = ElementState::Mandatory;
            inst.mandatory.push_back(v);
        } else if (r < mandatory_ratio + (1.0 - mandatory_ratio) * kExcludedShare) {
            states[v] = ElementState::Excluded;
            inst.excluded.push_back(v);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (unit(rng) >= density) continue;
            if (states[i] == ElementState::Excluded || states[j] == ElementState::Excluded)
                continue;  // closure repair
            ElementState st = ElementState::Possible;
            if (states[i] == ElementState::Mandatory && states[j] == ElementState::Mandatory &&
                unit(rng) < 0.5)
                st = ElementState::Mandatory;
            inst.arcs.push_back(ArcSpec{i, j, st});
        }
    }
    return inst;
}

}  // namespace ncc

#endif
