#ifndef NCC_CLI_HPP
#define NCC_CLI_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncc/engine.hpp"
#include "ncc/instance.hpp"
#include "ncc/oracle.hpp"
#include "ncc/verify.hpp"

namespace ncc::cli {

// Exit codes: 0 success/satisfiable, 1 proven inconsistent or check
// failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::optional<Instance> load(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const parse_error& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

inline int cmd_propagate(const std::string& path, std::ostream& out, std::ostream& err) {
    auto inst = load(path, err);
    if (!inst) return kExitUsage;
    GraphDomain g = build_domain(*inst);
    std::vector<ConstraintSpec> constraints = inst->constraints;
    if (propagate_fixpoint(g, constraints) == PropagateResult::Failed) {
        nlohmann::ordered_json doc;
        doc["result"] = "fail";
        out << doc.dump(2) << "\n";
        return kExitFail;
    }
    nlohmann::ordered_json doc;
    doc["result"] = "fixpoint";
    nlohmann::ordered_json state = instance_json(domain_to_instance(g, constraints));
    for (auto& [key, value] : state.items()) doc[key] = value;
    out << doc.dump(2) << "\n";
    return kExitOk;
}

inline int cmd_solve(const std::string& path, std::optional<long> limit, std::ostream& out,
                     std::ostream& err) {
    auto inst = load(path, err);
    if (!inst) return kExitUsage;
    GraphDomain g = build_domain(*inst);
    std::vector<Solution> sols = solve(g, inst->constraints, limit);

    nlohmann::ordered_json doc;
    doc["result"] = sols.empty() ? "unsat" : "sat";
    doc["count"] = sols.size();
    doc["solutions"] = nlohmann::ordered_json::array();
    for (const Solution& s : sols) {
        nlohmann::ordered_json js;
        js["vertices"] = s.vertices;
        js["arcs"] = nlohmann::ordered_json::array();
        for (int a : s.arcs)
            js["arcs"].push_back({{"from", g.arc(a).tail}, {"to", g.arc(a).head}});
        js["p"] = s.p_values;
        doc["solutions"].push_back(js);
    }
    out << doc.dump(2) << "\n";
    return sols.empty() ? kExitFail : kExitOk;
}

inline int cmd_check(const std::string& path, int cap, std::ostream& out, std::ostream& err) {
    auto inst = load(path, err);
    if (!inst) return kExitUsage;
    GraphDomain g = build_domain(*inst);
    bool all_ok = true;
    auto report = [&](const std::string& label, const std::optional<std::string>& problem) {
        if (problem) {
            all_ok = false;
            out << label << ": FAIL (" << *problem << ")\n";
        } else {
            out << label << ": PASS\n";
        }
    };
    try {
        report("bounds min_ncc", audit_bounds(g, ConstraintKind::MinNcc, cap));
        report("bounds max_ncc", audit_bounds(g, ConstraintKind::MaxNcc, cap));
        for (std::size_t i = 0; i < inst->constraints.size(); ++i) {
            const ConstraintSpec& c = inst->constraints[i];
            std::string label = "filter constraints[" + std::to_string(i) + "] " +
                                (c.kind == ConstraintKind::MinNcc ? "min_ncc" : "max_ncc");
            report(label, audit_filter(g, c.kind, c.p, cap));
        }
    } catch (const oracle_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return all_ok ? kExitOk : kExitFail;
}

inline int cmd_gen(int n, double density, double mandatory_ratio, std::uint64_t seed,
                   const std::vector<int>& min_ncc, const std::vector<int>& max_ncc,
                   std::ostream& out) {
    Instance inst = generate_instance(n, density, mandatory_ratio, seed);
    for (std::size_t i = 0; i + 1 < min_ncc.size(); i += 2)
        inst.constraints.push_back({ConstraintKind::MinNcc, {min_ncc[i], min_ncc[i + 1]}});
    for (std::size_t i = 0; i + 1 < max_ncc.size(); i += 2)
        inst.constraints.push_back({ConstraintKind::MaxNcc, {max_ncc[i], max_ncc[i + 1]}});
    out << serialize_instance(inst);
    return kExitOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"MIN_NCC / MAX_NCC graph-property constraint solver"};
    app.require_subcommand(1);

    std::string file;
    auto* propagate = app.add_subcommand("propagate", "run the propagators to fixpoint once");
    propagate->add_option("file", file, "instance file")->required();

    long limit_value = 0;
    bool all = false;
    auto* solve_cmd = app.add_subcommand("solve", "enumerate solutions by backtracking search");
    solve_cmd->add_option("file", file, "instance file")->required();
    auto* limit_opt = solve_cmd->add_option("--limit", limit_value, "stop after N solutions");
    solve_cmd->add_flag("--all", all, "enumerate every solution")->excludes(limit_opt);

    int cap = kDefaultOracleCap;
    auto* check = app.add_subcommand("check", "certify bounds and propagators with the oracle");
    check->add_option("file", file, "instance file")->required();
    check->add_option("--cap", cap, "max free elements for enumeration");

    int n = 0;
    double density = 0.3;
    double mandatory_ratio = 0.3;
    std::uint64_t seed = 0;
    std::vector<int> min_ncc_ivs, max_ncc_ivs;
    auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--density", density, "edge inclusion probability");
    gen->add_option("--mandatory-ratio", mandatory_ratio, "mandatory vertex fraction");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--min-ncc", min_ncc_ivs, "post MIN_NCC with interval LB UB")->expected(2);
    gen->add_option("--max-ncc", max_ncc_ivs, "post MAX_NCC with interval LB UB")->expected(2);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (propagate->parsed()) return detail::cmd_propagate(file, out, err);
    if (solve_cmd->parsed()) {
        std::optional<long> limit;
        if (limit_opt->count() > 0) limit = limit_value;
        else if (!all) limit = 1;
        return detail::cmd_solve(file, limit, out, err);
    }
    if (check->parsed()) return detail::cmd_check(file, cap, out, err);
    if (gen->parsed()) return detail::cmd_gen(n, density, mandatory_ratio, seed, min_ncc_ivs,
                                              max_ncc_ivs, out);
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace ncc::cli

#endif
