#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cis/counting.hpp"
#include "cis/formulas.hpp"

namespace cis {

/// Worker count: explicit request > CIS_JOBS > hardware concurrency.
inline int resolve_jobs(int requested) {
    if (requested > 0) return std::min(requested, 256);
    if (const char* env = std::getenv("CIS_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 256);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Index-parallel map over immutable inputs. Each index is processed exactly
/// once; results must go to per-index slots, so the outcome is independent
/// of the worker count.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
    jobs = std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(count, 256)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
            }
        });
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

/// Result of an exhaustive extremal scan over one catalog.
struct ScanReport {
    GraphClass graph_class;
    int n = 0;
    Objective objective;
    BigCount min_value;
    BigCount max_value;
    std::vector<std::string> minimizers;  // canonical codes, sorted
    std::vector<std::string> maximizers;
    std::size_t graphs_scanned = 0;
    double elapsed_ms = 0;  // metadata, excluded from golden comparisons
};

/// Exact minimum and maximum of the objective over every isomorphism class
/// of (cls, n), with the complete extremizer code lists.
inline ScanReport extremal_scan(GraphClass cls, int n, Objective obj, int jobs = 0) {
    auto start = std::chrono::steady_clock::now();
    if (obj.quantity == Objective::Quantity::order_k && (obj.k < 1 || obj.k > n))
        throw std::invalid_argument("objective order k must be in 1..n");
    std::vector<Graph> graphs = generate(cls, n);
    if (graphs.empty())
        throw std::invalid_argument("class " + cls.name() + " has no graphs of order " +
                                    std::to_string(n));

    std::vector<BigCount> values(graphs.size());
    parallel_for(graphs.size(), resolve_jobs(jobs), [&](std::size_t i) {
        CountProfile p = count_profile(graphs[i]);
        values[i] = obj.quantity == Objective::Quantity::total ? p.total : p.nk(obj.k);
    });

    ScanReport report;
    report.graph_class = cls;
    report.n = n;
    report.objective = obj;
    report.graphs_scanned = graphs.size();
    report.min_value = values.front();
    report.max_value = values.front();
    for (const BigCount& v : values) {
        if (v < report.min_value) report.min_value = v;
        if (v > report.max_value) report.max_value = v;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (values[i] == report.min_value) report.minimizers.push_back(emit_graph6(graphs[i]));
        if (values[i] == report.max_value) report.maximizers.push_back(emit_graph6(graphs[i]));
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

/// Sweep limits for the verification harness; the defaults are the standard
/// desk-scale run.
struct VerifyCaps {
    int all = 6;
    int connected = 7;
    int trees = 9;
    int rooted = 8;
    int unicyclic = 9;
    int rcomp_n = 7;
    int rcomp_r = 3;
};

struct ClaimResult {
    enum class Status { pass, fail, skipped };

    std::string claim;
    std::string params;
    Status status = Status::pass;
    std::vector<std::string> counterexamples;
    std::string detail;
};

struct VerificationReport {
    VerifyCaps caps;
    std::vector<ClaimResult> claims;
    double elapsed_ms = 0;

    bool all_pass() const {
        for (const ClaimResult& c : claims)
            if (c.status == ClaimResult::Status::fail) return false;
        return true;
    }
};

namespace detail {

struct ClaimBuilder {
    ClaimResult result;

    ClaimBuilder(std::string id, std::string params) {
        result.claim = std::move(id);
        result.params = std::move(params);
    }

    void fail(const std::string& why, const std::vector<std::string>& codes = {}) {
        result.status = ClaimResult::Status::fail;
        if (!result.detail.empty()) result.detail += "; ";
        result.detail += why;
        for (const std::string& c : codes) result.counterexamples.push_back(c);
    }

    void expect(bool ok, const std::string& why, const std::vector<std::string>& codes = {}) {
        if (!ok) fail(why, codes);
    }

    /// Set equality of canonical codes; mismatches become counterexamples.
    void expect_set(std::vector<std::string> got, std::vector<std::string> want,
                    const std::string& context) {
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got == want) return;
        std::vector<std::string> diff;
        std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(),
                                      std::back_inserter(diff));
        fail(context + ": extremizer set mismatch", diff);
    }

    ClaimResult skipped() {
        result.status = ClaimResult::Status::skipped;
        return result;
    }
};

inline std::string canonical_of(const FamilySpec& spec) {
    return canonical_form(construct(spec));
}

inline bool tree_is_path_rooted_at_leaf(const Graph& t, int root) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) > 2) return false;
    return t.order() == 1 || t.degree(root) == 1;
}

inline bool tree_is_star_centered_at(const Graph& t, int root) {
    return t.order() == 1 || t.degree(root) == t.order() - 1;
}

// Profiles for a whole catalog, in parallel.
inline std::vector<CountProfile> profile_all(const std::vector<Graph>& graphs, int jobs) {
    std::vector<CountProfile> profiles(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { profiles[i] = count_profile(graphs[i]); });
    return profiles;
}

}  // namespace detail

/// Runs every in-scope extremal statement over exhaustively generated
/// catalogs up to the given caps. Failures become report entries with
/// counterexample codes, never exceptions.
inline VerificationReport verify_theorems(const VerifyCaps& caps, int jobs = 0) {
    using detail::ClaimBuilder;
    auto start = std::chrono::steady_clock::now();
    int workers = resolve_jobs(jobs);
    VerificationReport report;
    report.caps = caps;

    auto range = [](int lo, int hi) {
        return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
    };

    // ---- all graphs: the global bounds -------------------------------
    {
        ClaimBuilder b("PROP-2.1", range(1, caps.all));
        if (caps.all < 1) {
            report.claims.push_back(b.skipped());
        } else {
            for (int n = 1; n <= caps.all; ++n) {
                std::vector<Graph> graphs = generate(GraphClass::all(), n);
                std::vector<CountProfile> profiles = detail::profile_all(graphs, workers);
                BigCount lo = bound_value({BoundId::min_total_graph, n});
                BigCount hi = bound_value({BoundId::max_total_graph, n});
                std::vector<std::string> at_min, at_max;
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    const BigCount& t = profiles[i].total;
                    if (t < lo || t > hi)
                        b.fail("n=" + std::to_string(n) + ": total outside [n, 2^n-1]",
                               {emit_graph6(graphs[i])});
                    if (t == lo) at_min.push_back(emit_graph6(graphs[i]));
                    if (t == hi) at_max.push_back(emit_graph6(graphs[i]));
                }
                b.expect_set(at_min, {detail::canonical_of(FamilySpec::edgeless(n))},
                             "n=" + std::to_string(n) + " minimum");
                b.expect_set(at_max, {detail::canonical_of(FamilySpec::complete(n))},
                             "n=" + std::to_string(n) + " maximum");
            }
            report.claims.push_back(b.result);
        }
    }

    // ---- trees: extremal totals and per-order minima ------------------
    {
        ClaimBuilder total_claim("THM-1.1", range(1, caps.trees));
        ClaimBuilder per_k_claim("LEM-1.2", range(4, caps.trees) + ", k=3..n-1");
        if (caps.trees < 1) {
            report.claims.push_back(total_claim.skipped());
            report.claims.push_back(per_k_claim.skipped());
        } else {
            for (int n = 1; n <= caps.trees; ++n) {
                std::vector<Graph> graphs = generate(GraphClass::tree(), n);
                std::vector<CountProfile> profiles = detail::profile_all(graphs, workers);
                BigCount min_total = binomial(n + 1, 2);
                BigCount max_total = BigCount(n) - 1 + pow2(n - 1);
                std::vector<std::string> at_min, at_max;
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    if (profiles[i].total < min_total || profiles[i].total > max_total)
                        total_claim.fail("n=" + std::to_string(n) + ": total outside tree bounds",
                                         {emit_graph6(graphs[i])});
                    if (profiles[i].total == min_total) at_min.push_back(emit_graph6(graphs[i]));
                    if (profiles[i].total == max_total) at_max.push_back(emit_graph6(graphs[i]));
                }
                total_claim.expect_set(at_min, {detail::canonical_of(FamilySpec::path(n))},
                                       "n=" + std::to_string(n) + " minimum");
                total_claim.expect_set(at_max, {detail::canonical_of(FamilySpec::star(n))},
                                       "n=" + std::to_string(n) + " maximum");

                for (int k = 3; k < n; ++k) {
                    BigCount expected = n - k + 1;
                    std::vector<std::string> at_k_min;
                    BigCount best = profiles.front().nk(k);
                    for (const CountProfile& p : profiles)
                        if (p.nk(k) < best) best = p.nk(k);
                    for (std::size_t i = 0; i < graphs.size(); ++i)
                        if (profiles[i].nk(k) == best) at_k_min.push_back(emit_graph6(graphs[i]));
                    per_k_claim.expect(best == expected,
                                       "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                           ": min N_k != n-k+1",
                                       at_k_min);
                    per_k_claim.expect_set(at_k_min, {detail::canonical_of(FamilySpec::path(n))},
                                           "n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
            report.claims.push_back(total_claim.result);
            report.claims.push_back(per_k_claim.result);
        }
    }

    // ---- connected graphs: per-order minimum and maximum --------------
    {
        ClaimBuilder min_claim("THM-2.2", range(1, caps.connected) + ", k=1..n");
        ClaimBuilder max_claim("PROP-2.3", range(3, caps.connected) + ", k=3..n");
        if (caps.connected < 1) {
            report.claims.push_back(min_claim.skipped());
            report.claims.push_back(max_claim.skipped());
        } else {
            for (int n = 1; n <= caps.connected; ++n) {
                std::vector<Graph> graphs = generate(GraphClass::connected(), n);
                std::vector<CountProfile> profiles = detail::profile_all(graphs, workers);
                std::string path_code = detail::canonical_of(FamilySpec::path(n));

                for (int k = 1; k <= n; ++k) {
                    BigCount best = profiles.front().nk(k);
                    for (const CountProfile& p : profiles)
                        if (p.nk(k) < best) best = p.nk(k);
                    std::vector<std::string> at_min;
                    for (std::size_t i = 0; i < graphs.size(); ++i)
                        if (profiles[i].nk(k) == best) at_min.push_back(emit_graph6(graphs[i]));
                    min_claim.expect(best == BigCount(n - k + 1),
                                     "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         ": min N_k != n-k+1",
                                     at_min);
                    if (k > 2 && k < n)
                        min_claim.expect_set(at_min, {path_code},
                                             "n=" + std::to_string(n) + " k=" + std::to_string(k));
                }

                if (n < 3) continue;
                std::vector<std::string> matching_family;
                for (int l = 0; 2 * l <= n; ++l)
                    matching_family.push_back(
                        detail::canonical_of(FamilySpec::complete_minus_matching(n, l)));
                for (int k = 3; k <= n; ++k) {
                    BigCount cap_value = binomial(n, k);
                    BigCount best = 0;
                    for (const CountProfile& p : profiles)
                        if (p.nk(k) > best) best = p.nk(k);
                    std::vector<std::string> at_max;
                    for (std::size_t i = 0; i < graphs.size(); ++i)
                        if (profiles[i].nk(k) == best) at_max.push_back(emit_graph6(graphs[i]));
                    max_claim.expect(best == cap_value,
                                     "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         ": max N_k != C(n,k)",
                                     at_max);
                    // every K_n-minus-matching member attains the bound...
                    std::sort(at_max.begin(), at_max.end());
                    for (const std::string& code : matching_family)
                        max_claim.expect(std::binary_search(at_max.begin(), at_max.end(), code),
                                         "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                             ": a K_n-minus-matching graph misses the bound",
                                         {code});
                    // ...and at k = 3 nothing else does.
                    if (k == 3)
                        max_claim.expect_set(at_max, matching_family,
                                             "n=" + std::to_string(n) + " k=3");
                }
            }
            report.claims.push_back(min_claim.result);
            report.claims.push_back(max_claim.result);
        }
    }

    // ---- unicyclic graphs ---------------------------------------------
    {
        ClaimBuilder min_claim("THM-3.4", range(3, caps.unicyclic));
        ClaimBuilder max_claim("THM-3.5", range(3, caps.unicyclic));
        ClaimBuilder seq_claim("SEQ-UNICYCLIC", range(3, std::min(caps.unicyclic, 11)));
        if (caps.unicyclic < 3) {
            report.claims.push_back(min_claim.skipped());
            report.claims.push_back(max_claim.skipped());
            report.claims.push_back(seq_claim.skipped());
        } else {
            const std::vector<std::size_t> sequence = {1, 2, 5, 13, 33, 89, 240, 657, 1806};
            for (int n = 3; n <= caps.unicyclic; ++n) {
                std::vector<Graph> graphs = generate(GraphClass::unicyclic(), n);
                std::vector<CountProfile> profiles = detail::profile_all(graphs, workers);

                if (n - 3 < static_cast<int>(sequence.size()) &&
                    graphs.size() != sequence[static_cast<std::size_t>(n - 3)]) {
                    std::vector<std::string> sample = catalog_codes(graphs);
                    if (sample.size() > 20) sample.resize(20);
                    seq_claim.fail("n=" + std::to_string(n) + ": catalog size " +
                                       std::to_string(graphs.size()),
                                   sample);
                }

                BigCount lo = bound_value({BoundId::min_total_unicyclic, n});
                BigCount hi = bound_value({BoundId::max_total_unicyclic, n});
                std::vector<std::string> at_min, at_max;
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    if (profiles[i].total < lo)
                        min_claim.fail("n=" + std::to_string(n) + ": total below (n^2+3n-4)/2",
                                       {emit_graph6(graphs[i])});
                    if (profiles[i].total > hi)
                        max_claim.fail("n=" + std::to_string(n) + ": total above the maximum",
                                       {emit_graph6(graphs[i])});
                    if (profiles[i].total == lo) at_min.push_back(emit_graph6(graphs[i]));
                    if (profiles[i].total == hi) at_max.push_back(emit_graph6(graphs[i]));
                }
                min_claim.expect_set(at_min, {detail::canonical_of(FamilySpec::tadpole(3, n - 3))},
                                     "n=" + std::to_string(n));
                ExpectedExtremizers expected =
                    expected_extremizers(GraphClass::unicyclic(), n, Objective::total_max());
                std::vector<std::string> want;
                for (const Graph& g : expected.graphs) want.push_back(canonical_form(g));
                max_claim.expect_set(at_max, want, "n=" + std::to_string(n));
            }
            report.claims.push_back(min_claim.result);
            report.claims.push_back(max_claim.result);
            report.claims.push_back(seq_claim.result);
        }
    }

    // ---- rooted trees: anchored bounds --------------------------------
    {
        ClaimBuilder lower_claim("LEM-3.3", range(1, caps.rooted) + ", all roots");
        ClaimBuilder upper_claim("PROP-3.6", range(1, caps.rooted) + ", all roots");
        ClaimBuilder pair_claim("PROP-3.8", range(2, caps.rooted) + ", all roots x leaves");
        if (caps.rooted < 1) {
            report.claims.push_back(lower_claim.skipped());
            report.claims.push_back(upper_claim.skipped());
            report.claims.push_back(pair_claim.skipped());
        } else {
            for (int n = 1; n <= caps.rooted; ++n) {
                std::vector<Graph> trees = generate(GraphClass::tree(), n);
                for (const Graph& t : trees) {
                    std::string code = emit_graph6(t);
                    for (int root = 0; root < n; ++root) {
                        BigCount c = count_containing(t, root);
                        std::string where =
                            "n=" + std::to_string(n) + " root=" + std::to_string(root);
                        lower_claim.expect(c >= BigCount(n), where + ": N(T)_v < |T|", {code});
                        lower_claim.expect(
                            (c == BigCount(n)) == detail::tree_is_path_rooted_at_leaf(t, root),
                            where + ": equality case of the lower bound", {code});
                        upper_claim.expect(c <= pow2(n - 1), where + ": N(T)_v > 2^(n-1)", {code});
                        upper_claim.expect(
                            (c == pow2(n - 1)) == detail::tree_is_star_centered_at(t, root),
                            where + ": equality case of the upper bound", {code});
                        if (n < 2) continue;
                        for (int leaf = 0; leaf < n; ++leaf) {
                            if (leaf == root || t.degree(leaf) != 1) continue;
                            BigCount cp = count_containing_pair(t, root, leaf);
                            std::string pw = where + " leaf=" + std::to_string(leaf);
                            pair_claim.expect(cp <= pow2(n - 2), pw + ": N(T)_{v,l} > 2^(n-2)",
                                              {code});
                            pair_claim.expect(
                                (cp == pow2(n - 2)) == detail::tree_is_star_centered_at(t, root),
                                pw + ": equality case of the pair bound", {code});
                        }
                    }
                }
            }
            report.claims.push_back(lower_claim.result);
            report.claims.push_back(upper_claim.result);
            report.claims.push_back(pair_claim.result);
        }
    }

    // ---- fixed-order components ---------------------------------------
    {
        std::string params = "n=r.." + std::to_string(caps.rcomp_n) +
                             ", r=2.." + std::to_string(caps.rcomp_r);
        ClaimBuilder min_claim("SEC-4-MIN", params);
        ClaimBuilder max_claim("SEC-4-MAX", params);
        if (caps.rcomp_r < 2 || caps.rcomp_n < 2) {
            report.claims.push_back(min_claim.skipped());
            report.claims.push_back(max_claim.skipped());
        } else {
            for (int r = 2; r <= caps.rcomp_r; ++r) {
                for (int n = r; n <= caps.rcomp_n; ++n) {
                    std::vector<Graph> graphs = generate(GraphClass::r_components(r), n);
                    std::vector<CountProfile> profiles = detail::profile_all(graphs, workers);
                    std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);

                    BigCount lo = bound_value({BoundId::min_total_r_components, n, 0, r});
                    BigCount hi = bound_value({BoundId::max_total_r_components, n, 0, r});
                    std::vector<std::string> at_min, at_max;
                    for (std::size_t i = 0; i < graphs.size(); ++i) {
                        if (profiles[i].total < lo)
                            min_claim.fail(where + ": total below the path-union value",
                                           {emit_graph6(graphs[i])});
                        if (profiles[i].total > hi)
                            max_claim.fail(where + ": total above the clique-union value",
                                           {emit_graph6(graphs[i])});
                        if (profiles[i].total == lo) at_min.push_back(emit_graph6(graphs[i]));
                        if (profiles[i].total == hi) at_max.push_back(emit_graph6(graphs[i]));
                    }
                    auto expected_min = expected_extremizers(GraphClass::r_components(r), n,
                                                             Objective::total_min());
                    auto expected_max = expected_extremizers(GraphClass::r_components(r), n,
                                                             Objective::total_max());
                    min_claim.expect_set(at_min, {canonical_form(expected_min.graphs.front())},
                                         where);
                    max_claim.expect_set(at_max, {canonical_form(expected_max.graphs.front())},
                                         where);
                }
            }
            report.claims.push_back(min_claim.result);
            report.claims.push_back(max_claim.result);
        }
    }

    // ---- family formulas against enumeration --------------------------
    {
        auto formula_check = [](ClaimBuilder& claim, const FamilySpec& spec) {
            claim.expect(closed_form_total(spec) == count_profile(construct(spec)).total,
                         spec.to_string() + ": formula != enumeration",
                         {detail::canonical_of(spec)});
        };

        ClaimBuilder cycle_claim("LEM-3.1", "n=3..12");
        for (int n = 3; n <= 12; ++n) formula_check(cycle_claim, FamilySpec::cycle(n));
        report.claims.push_back(cycle_claim.result);

        ClaimBuilder tadpole_claim("LEM-3.2", "p=3..9, q=0..12-p");
        for (int p = 3; p <= 9; ++p)
            for (int q = 0; p + q <= 12; ++q)
                formula_check(tadpole_claim, FamilySpec::tadpole(p, q));
        report.claims.push_back(tadpole_claim.result);

        ClaimBuilder banner_claim("LEM-3.7", "n=4..12");
        for (int n = 4; n <= 12; ++n) formula_check(banner_claim, FamilySpec::banner(n));
        report.claims.push_back(banner_claim.result);
    }

    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

// ---- serialization -----------------------------------------------------

inline const char* status_name(ClaimResult::Status s) {
    switch (s) {
        case ClaimResult::Status::pass: return "pass";
        case ClaimResult::Status::fail: return "fail";
        case ClaimResult::Status::skipped: return "skipped";
    }
    return "?";
}

/// Counts serialize as decimal strings so any JSON reader keeps them exact.
inline nlohmann::json to_json(const ScanReport& r) {
    nlohmann::json j;
    j["class"] = r.graph_class.name();
    j["n"] = r.n;
    j["objective"] = r.objective.name();
    j["min_value"] = r.min_value.str();
    j["max_value"] = r.max_value.str();
    j["minimizers"] = r.minimizers;
    j["maximizers"] = r.maximizers;
    j["graphs_scanned"] = r.graphs_scanned;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out.push_back(sep);
        out += s;
    }
    return out;
}

inline std::string to_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "class,n,objective,min_value,max_value,minimizers,maximizers,graphs_scanned\n";
    out << r.graph_class.name() << ',' << r.n << ',' << r.objective.name() << ','
        << r.min_value.str() << ',' << r.max_value.str() << ',' << join(r.minimizers, ';') << ','
        << join(r.maximizers, ';') << ',' << r.graphs_scanned << '\n';
    return out.str();
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["caps"] = {{"all", r.caps.all},           {"connected", r.caps.connected},
                 {"trees", r.caps.trees},       {"rooted", r.caps.rooted},
                 {"unicyclic", r.caps.unicyclic}, {"rcomp_n", r.caps.rcomp_n},
                 {"rcomp_r", r.caps.rcomp_r}};
    j["claims"] = nlohmann::json::array();
    for (const ClaimResult& c : r.claims) {
        nlohmann::json cj;
        cj["claim"] = c.claim;
        cj["params"] = c.params;
        cj["status"] = status_name(c.status);
        cj["counterexamples"] = c.counterexamples;
        cj["detail"] = c.detail;
        j["claims"].push_back(cj);
    }
    j["all_pass"] = r.all_pass();
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "claim,params,status,counterexamples\n";
    for (const ClaimResult& c : r.claims)
        out << c.claim << ',' << c.params << ',' << status_name(c.status) << ','
            << join(c.counterexamples, ';') << '\n';
    return out.str();
}

}  // namespace cis
