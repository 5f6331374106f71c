#pragma once

#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cis/scan.hpp"

namespace cis::cli {

namespace detail {

inline cis::FamilySpec spec_from_flags(const std::string& family_name,
                                       std::optional<int> n, std::optional<int> p,
                                       std::optional<int> q, std::optional<int> l) {
    Family family = family_from_name(family_name);
    auto require_n = [&]() {
        if (!n) throw cis::parse_error(family_name + " needs --n");
        return *n;
    };
    switch (family) {
        case Family::tadpole:
            if (!p) throw cis::parse_error("tadpole needs --p (and optionally --q)");
            if (n || l) throw cis::parse_error("tadpole takes --p and --q only");
            return FamilySpec::tadpole(*p, q.value_or(0));
        case Family::complete_minus_matching:
            if (!l) throw cis::parse_error("complete_minus_matching needs --n and --l");
            if (p || q)
                throw cis::parse_error("complete_minus_matching takes --n and --l only");
            return FamilySpec::complete_minus_matching(require_n(), *l);
        default:
            if (p || q || l)
                throw cis::parse_error(family_name + " takes only --n");
            return {family, require_n(), 0};
    }
}

inline Objective objective_from_flags(const std::string& name, std::optional<int> k) {
    auto with_k = [&](bool minimise) {
        if (!k) throw cis::parse_error("objective " + name + " needs --k");
        return minimise ? Objective::order_k_min(*k) : Objective::order_k_max(*k);
    };
    if (name == "total_min") return Objective::total_min();
    if (name == "total_max") return Objective::total_max();
    if (name == "order_k_min") return with_k(true);
    if (name == "order_k_max") return with_k(false);
    // also accept the embedded-k spelling, e.g. order_4_min
    if (name.rfind("order_", 0) == 0) {
        std::size_t digits = 6;
        while (digits < name.size() && std::isdigit(static_cast<unsigned char>(name[digits])))
            ++digits;
        if (digits > 6) {
            int embedded = std::stoi(name.substr(6, digits - 6));
            if (name.substr(digits) == "_min") return Objective::order_k_min(embedded);
            if (name.substr(digits) == "_max") return Objective::order_k_max(embedded);
        }
    }
    throw cis::parse_error("unknown objective: " + name);
}

struct InputFlags {
    std::string graph6;
    std::string file;
    std::string family;
    std::optional<int> n, p, q, l;

    void register_on(CLI::App* cmd) {
        auto* g6 = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* f = cmd->add_option("--file", file, "file with one graph per line (graph6 or edge list)");
        auto* fam = cmd->add_option("--family", family, "named family (see construct)");
        g6->excludes(f)->excludes(fam);
        f->excludes(fam);
        cmd->add_option("--n", n, "order parameter");
        cmd->add_option("--p", p, "tadpole cycle length");
        cmd->add_option("--q", q, "tadpole tail length");
        cmd->add_option("--l", l, "matching size for complete_minus_matching");
    }

    std::vector<Graph> load() const {
        if (!graph6.empty()) return {parse_graph6(graph6)};
        if (!file.empty()) return read_graph_file(file);
        if (!family.empty()) return {construct(spec_from_flags(family, n, p, q, l))};
        throw cis::parse_error("need one of --graph6, --file, --family");
    }
};

inline nlohmann::json count_json(const Graph& g, std::optional<int> containing,
                                 std::optional<std::pair<int, int>> pair) {
    CountProfile profile = count_profile(g);
    nlohmann::json j;
    j["order"] = profile.order;
    std::vector<std::string> per_order;
    for (const BigCount& c : profile.per_order) per_order.push_back(c.str());
    j["per_order"] = per_order;
    j["total"] = profile.total.str();
    if (containing) {
        j["anchored"] = {{"mode", "containing"},
                         {"u", *containing},
                         {"count", count_containing(g, *containing).str()}};
    } else if (pair) {
        j["anchored"] = {{"mode", "containing_pair"},
                         {"u", pair->first},
                         {"v", pair->second},
                         {"count", count_containing_pair(g, pair->first, pair->second).str()}};
    }
    return j;
}

}  // namespace detail

/// Full command-line front end. Writes results to `out`, diagnostics to
/// `err`; returns the process exit code: 0 success, 1 verification failure,
/// 2 usage or input-parse errors, 3 parameter-range errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"connected induced subgraph counting, scanning and verification"};
    app.require_subcommand(1);

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "emit a family member as graph6");
    std::string family;
    std::optional<int> n, p, q, l;
    construct_cmd->add_option("--family", family, "family name")->required();
    construct_cmd->add_option("--n", n, "order");
    construct_cmd->add_option("--p", p, "tadpole cycle length");
    construct_cmd->add_option("--q", q, "tadpole tail length");
    construct_cmd->add_option("--l", l, "matching size");

    // count
    auto* count_cmd = app.add_subcommand("count", "per-order and total CIS counts as JSON");
    detail::InputFlags count_input;
    count_input.register_on(count_cmd);
    std::optional<int> count_containing_v;
    std::vector<int> count_pair;
    auto* cc = count_cmd->add_option("--containing", count_containing_v,
                                     "also report the count anchored at a vertex");
    auto* cp = count_cmd->add_option("--pair", count_pair,
                                     "also report the count anchored at two vertices")
                   ->expected(2);
    cc->excludes(cp);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list CIS vertex sets, one per line");
    detail::InputFlags enum_input;
    enum_input.register_on(enum_cmd);
    std::optional<int> enum_k, enum_containing;
    std::vector<int> enum_pair;
    enum_cmd->add_option("--k", enum_k, "only sets of this order");
    auto* ec = enum_cmd->add_option("--containing", enum_containing, "only sets containing this vertex");
    auto* ep = enum_cmd->add_option("--pair", enum_pair, "only sets containing both vertices")
                   ->expected(2);
    ec->excludes(ep);

    // formula
    auto* formula_cmd = app.add_subcommand("formula", "closed forms and extremal bounds as JSON");
    std::string formula_family, formula_bound;
    std::optional<int> fn, fp, fq, fl, fk, fr;
    auto* ff = formula_cmd->add_option("--family", formula_family, "family closed form");
    auto* fb = formula_cmd->add_option("--bound", formula_bound, "named extremal bound");
    ff->excludes(fb);
    formula_cmd->add_option("--n", fn, "order");
    formula_cmd->add_option("--p", fp, "tadpole cycle length");
    formula_cmd->add_option("--q", fq, "tadpole tail length");
    formula_cmd->add_option("--l", fl, "matching size");
    formula_cmd->add_option("--k", fk, "subgraph order (per-order bounds)");
    formula_cmd->add_option("--r", fr, "component count (section-4 bounds)");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "exhaustive extremal scan over a class");
    std::string scan_class, scan_objective;
    int scan_n = 0, scan_r = 0, scan_jobs = 0, scan_k_flag = 0;
    bool scan_csv = false;
    scan_cmd->add_option("--class", scan_class, "tree|unicyclic|connected|all|r_components")
        ->required();
    scan_cmd->add_option("--n", scan_n, "graph order")->required();
    scan_cmd->add_option("--objective", scan_objective,
                         "total_min|total_max|order_k_min|order_k_max")
        ->required();
    scan_cmd->add_option("--k", scan_k_flag, "subgraph order for order_k objectives");
    scan_cmd->add_option("--r", scan_r, "component count for r_components");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads (default: CIS_JOBS or cores)");
    scan_cmd->add_flag("--csv", scan_csv, "CSV summary instead of JSON");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the whole theorem suite");
    VerifyCaps caps;
    int verify_jobs = 0;
    bool verify_csv = false;
    verify_cmd->add_option("--all", caps.all, "cap for the all-graphs sweep");
    verify_cmd->add_option("--connected", caps.connected, "cap for the connected sweep");
    verify_cmd->add_option("--trees", caps.trees, "cap for the tree sweep");
    verify_cmd->add_option("--rooted", caps.rooted, "cap for the rooted-tree sweep");
    verify_cmd->add_option("--unicyclic", caps.unicyclic, "cap for the unicyclic sweep");
    verify_cmd->add_option("--rcomp-n", caps.rcomp_n, "order cap for the component sweep");
    verify_cmd->add_option("--rcomp-r", caps.rcomp_r, "component cap for the component sweep");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_flag("--csv", verify_csv, "CSV summary instead of JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[E_USAGE]: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(construct_cmd)) {
            out << emit_graph6(construct(detail::spec_from_flags(family, n, p, q, l))) << "\n";
            return 0;
        }

        if (app.got_subcommand(count_cmd)) {
            std::optional<std::pair<int, int>> pair;
            if (count_pair.size() == 2) pair = {count_pair[0], count_pair[1]};
            for (const Graph& g : count_input.load())
                out << detail::count_json(g, count_containing_v, pair).dump() << "\n";
            return 0;
        }

        if (app.got_subcommand(enum_cmd)) {
            std::vector<Graph> graphs = enum_input.load();
            if (graphs.size() != 1)
                throw cis::parse_error("enumerate expects exactly one input graph");
            AnchorQuery query = AnchorQuery::any();
            if (enum_containing) query = AnchorQuery::at(*enum_containing);
            if (enum_pair.size() == 2) query = AnchorQuery::pair(enum_pair[0], enum_pair[1]);
            if (enum_k) query = query.with_order(*enum_k);
            enumerate_cis(graphs.front(), query,
                          [&](VertexSet s) { out << s.to_string() << "\n"; });
            return 0;
        }

        if (app.got_subcommand(formula_cmd)) {
            nlohmann::json j;
            if (!formula_family.empty()) {
                FamilySpec spec = detail::spec_from_flags(formula_family, fn, fp, fq, fl);
                j["kind"] = "family";
                j["family"] = family_name(spec.family);
                j["params"] = {{"a", spec.a}, {"b", spec.b}};
                j["value"] = closed_form_total(spec).str();
            } else if (!formula_bound.empty()) {
                BoundSpec b{bound_from_name(formula_bound), fn.value_or(0), fk.value_or(0),
                            fr.value_or(0)};
                j["kind"] = "bound";
                j["bound"] = bound_name(b.id);
                j["params"] = {{"n", b.n}, {"k", b.k}, {"r", b.r}};
                j["value"] = bound_value(b).str();
            } else {
                throw cis::parse_error("formula needs --family or --bound");
            }
            out << j.dump() << "\n";
            return 0;
        }

        if (app.got_subcommand(scan_cmd)) {
            GraphClass cls = GraphClass::from_name(scan_class, scan_r);
            Objective obj = detail::objective_from_flags(
                scan_objective, scan_k_flag > 0 ? std::optional<int>(scan_k_flag) : std::nullopt);
            ScanReport report = extremal_scan(cls, scan_n, obj, scan_jobs);
            if (scan_csv)
                out << to_csv(report);
            else
                out << to_json(report).dump() << "\n";
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            VerificationReport report = verify_theorems(caps, verify_jobs);
            if (verify_csv)
                out << to_csv(report);
            else
                out << to_json(report).dump() << "\n";
            if (!report.all_pass()) {
                int failed = 0;
                for (const ClaimResult& c : report.claims)
                    if (c.status == ClaimResult::Status::fail) ++failed;
                err << "error[E_VERIFY]: " << failed << " claim(s) failed\n";
                return 1;
            }
            return 0;
        }
    } catch (const cis::parse_error& e) {
        err << "error[E_PARSE]: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error[E_RANGE]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error[E_INTERNAL]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace cis::cli
