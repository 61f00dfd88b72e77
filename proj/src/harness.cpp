#include "cngraph/harness.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include "cngraph/curling.hpp"

namespace cngraph {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "Pass";
        case Verdict::Fail: return "Fail";
        case Verdict::KnownErratum: return "KnownErratum";
        case Verdict::Info: return "Info";
    }
    return "?";
}

void CheckSuiteReport::add(PropCheck check) {
    switch (check.verdict) {
        case Verdict::Pass: ++passes; break;
        case Verdict::Fail: ++fails; break;
        case Verdict::KnownErratum: ++errata; break;
        case Verdict::Info: ++infos; break;
    }
    checks.push_back(std::move(check));
}

void CheckSuiteReport::merge(const CheckSuiteReport& other) {
    for (const PropCheck& c : other.checks) add(c);
}

void CheckSuiteReport::sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const PropCheck& a, const PropCheck& b) {
                         if (a.prop_id != b.prop_id) return a.prop_id < b.prop_id;
                         return a.params < b.params;
                     });
}

namespace {

// Paper-internal inconsistencies reported as KnownErratum, never Fail.
const std::set<std::string> kErratumLedger = {
    "table1.knn-cnc",
    "sec3.stackedbook-degrees",
};

using Params = std::map<std::string, std::string>;
using Values = std::map<std::string, long long>;

void add_check(CheckSuiteReport& rep, std::string id, Params params,
               Values expected, Values actual) {
    PropCheck c;
    c.prop_id = std::move(id);
    c.params = std::move(params);
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    if (c.expected == c.actual)
        c.verdict = Verdict::Pass;
    else
        c.verdict = kErratumLedger.count(c.prop_id) ? Verdict::KnownErratum
                                                    : Verdict::Fail;
    rep.add(std::move(c));
}

void add_info(CheckSuiteReport& rep, std::string id, Params params, Values actual) {
    PropCheck c;
    c.prop_id = std::move(id);
    c.params = std::move(params);
    c.actual = std::move(actual);
    c.verdict = Verdict::Info;
    rep.add(std::move(c));
}

ProductInvariants invariants_of(const Graph& g) {
    const RunDecomposition runs = runs_from_multiset(degree_multiset(g));
    return {max_run_length(runs), run_length_product(runs)};
}

void add_cn_cnc(CheckSuiteReport& rep, std::string id, Params params,
                long long cn, long long cnc, const Graph& g) {
    const ProductInvariants inv = invariants_of(g);
    add_check(rep, std::move(id), std::move(params), {{"cn", cn}, {"cnc", cnc}},
              {{"cn", inv.cn}, {"cnc", inv.cnc}});
}

Values multiset_values(const DegreeMultiset& m) {
    Values v;
    for (const auto& [d, c] : m.counts) v["d" + std::to_string(d)] = c;
    return v;
}

struct RegularFactor {
    std::string label;
    Graph graph;
    int degree;
};

/// Regular graphs drawn from {C_n, K_n, K_{m,m}} with orders <= cap.
std::vector<RegularFactor> regular_factors(int cap) {
    std::vector<RegularFactor> out;
    for (int n = 3; n <= cap; ++n)
        out.push_back({"C" + std::to_string(n), generate({Family::Cycle, n}), 2});
    for (int n = 2; n <= cap; ++n)
        out.push_back({"K" + std::to_string(n), generate({Family::Complete, n}), n - 1});
    for (int m = 1; 2 * m <= cap; ++m)
        out.push_back({"K" + std::to_string(m) + "," + std::to_string(m),
                       generate({Family::CompleteBipartite, m, m}), m});
    return out;
}

long long sq(long long x) { return x * x; }

}  // namespace

CheckSuiteReport run_formula_checks(const FormulaRanges& ranges) {
    CheckSuiteReport rep;
    const int lo = ranges.lo, hi = ranges.hi;
    const auto from = [lo](int floor_) { return std::max(lo, floor_); };

    // Table 1.
    for (int n = from(1); n <= hi; ++n) {
        add_cn_cnc(rep, "table1.complete", {{"n", std::to_string(n)}}, n, n,
                   generate({Family::Complete, n}));
    }
    for (int m = from(1); m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            add_cn_cnc(rep, "table1.kmn",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}}, n,
                       static_cast<long long>(m) * n,
                       generate({Family::CompleteBipartite, m, n}));
    for (int n = from(1); n <= hi; ++n) {
        const Graph g = generate({Family::CompleteBipartite, n, n});
        const ProductInvariants inv = invariants_of(g);
        add_check(rep, "table1.knn-cn", {{"n", std::to_string(n)}},
                  {{"cn", 2LL * n}}, {{"cn", inv.cn}});
        // Table 1 row 3 gives n^2, in conflict with the regular-graph law.
        add_check(rep, "table1.knn-cnc", {{"n", std::to_string(n)}},
                  {{"cnc", static_cast<long long>(n) * n}}, {{"cnc", inv.cnc}});
    }
    for (int n = from(4); n <= hi; ++n)
        add_cn_cnc(rep, "table1.path", {{"n", std::to_string(n)}}, n - 2,
                   2LL * (n - 2), generate({Family::Path, n}));
    for (int n = from(3); n <= hi; ++n)
        add_cn_cnc(rep, "table1.cycle", {{"n", std::to_string(n)}}, n, n,
                   generate({Family::Cycle, n}));

    // Section 2: join of regular graphs.
    const auto regulars = regular_factors(std::min(hi, 10));
    for (std::size_t i = 0; i < regulars.size(); ++i)
        for (std::size_t j = i; j < regulars.size(); ++j) {
            const auto& a = regulars[i];
            const auto& b = regulars[j];
            const long long n1 = a.graph.order(), n2 = b.graph.order();
            const bool regular_join = a.degree + n2 == b.degree + n1;
            const long long cn = regular_join ? n1 + n2 : std::max(n1, n2);
            const long long cnc = regular_join ? n1 + n2 : n1 * n2;
            add_cn_cnc(rep, "sec2.join-regular", {{"g1", a.label}, {"g2", b.label}},
                       cn, cnc, join(a.graph, b.graph));
        }

    // Section 3: Cartesian products.
    for (int m = from(3); m <= hi; ++m)
        add_cn_cnc(rep, "sec3.ladder", {{"m", std::to_string(m)}},
                   std::max(4LL, 2LL * m - 4), 8LL * (m - 2),
                   cartesian(generate({Family::Path, m}), generate({Family::Path, 2})));
    for (int m = from(3); m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            add_cn_cnc(rep, "sec3.grid",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       std::max(2LL * (m + n - 4),
                                static_cast<long long>(m - 2) * (n - 2)),
                       8LL * (m - 2) * (n - 2) * (m + n - 4),
                       cartesian(generate({Family::Path, m}),
                                 generate({Family::Path, n})));
    for (int m = from(3); m <= hi; ++m) {
        add_cn_cnc(rep, "sec3.prism-p2", {{"m", std::to_string(m)}}, 2LL * m,
                   2LL * m,
                   cartesian(generate({Family::Cycle, m}), generate({Family::Path, 2})));
        add_cn_cnc(rep, "sec3.prism-p3", {{"m", std::to_string(m)}}, 2LL * m,
                   2LL * m * m,
                   cartesian(generate({Family::Cycle, m}), generate({Family::Path, 3})));
        for (int n = from(4); n <= hi; ++n)
            add_cn_cnc(rep, "sec3.prism",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       static_cast<long long>(m) * (n - 2),
                       2LL * m * m * (n - 2),
                       cartesian(generate({Family::Cycle, m}),
                                 generate({Family::Path, n})));
    }
    for (int m = from(3); m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            add_cn_cnc(rep, "sec3.torus",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       static_cast<long long>(m) * n, static_cast<long long>(m) * n,
                       cartesian(generate({Family::Cycle, m}),
                                 generate({Family::Cycle, n})));
    for (int m = from(3); m <= hi; ++m) {
        add_cn_cnc(rep, "sec3.book", {{"m", std::to_string(m)}}, 2LL * m, 4LL * m,
                   cartesian(generate({Family::Star, m}), generate({Family::Path, 2})));
        add_cn_cnc(rep, "sec3.book-p3", {{"m", std::to_string(m)}}, 2LL * m,
                   4LL * m * m,
                   cartesian(generate({Family::Star, m}), generate({Family::Path, 3})));
        for (int n = from(4); n <= hi; ++n) {
            const Graph g = cartesian(generate({Family::Star, m}),
                                      generate({Family::Path, n}));
            add_cn_cnc(rep, "sec3.stackedbook",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       static_cast<long long>(m) * (n - 2),
                       4LL * m * m * sq(n - 2), g);
            // Degree-string literal from the text: (5)^{n-2} . (4)^2 . (3)^{m(n-2)}
            // . (2)^{2m}. The centre degrees are actually m+2 and m+1, so this
            // only matches for m = 3.
            Values expected;
            expected["d5"] += n - 2;
            expected["d4"] += 2;
            expected["d3"] += static_cast<long long>(m) * (n - 2);
            expected["d2"] += 2LL * m;
            add_check(rep, "sec3.stackedbook-degrees",
                      {{"m", std::to_string(m)}, {"n", std::to_string(n)}}, expected,
                      multiset_values(degree_multiset(g)));
        }
    }

    // Section 4: strong products.
    for (int m = from(3); m <= hi; ++m)
        for (int n = m; n <= hi; ++n) {
            const Graph s = strong_product(generate({Family::Path, m}),
                                           generate({Family::Path, n}));
            add_cn_cnc(rep, "sec4.strong-grid",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       std::max(2LL * (m + n - 4),
                                static_cast<long long>(m - 2) * (n - 2)),
                       8LL * (m - 2) * (n - 2) * (m + n - 4), s);
            const Graph c = cartesian(generate({Family::Path, m}),
                                      generate({Family::Path, n}));
            add_check(rep, "sec4.strong-grid-cnc-match",
                      {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                      {{"cnc", invariants_of(c).cnc}}, {{"cnc", invariants_of(s).cnc}});
        }
    for (int m = from(3); m <= hi; ++m)
        for (int n = from(3); n <= hi; ++n) {
            const Graph s = strong_product(generate({Family::Cycle, m}),
                                           generate({Family::Path, n}));
            add_cn_cnc(rep, "sec4.strong-prism",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       std::max(2LL * m, static_cast<long long>(m) * (n - 2)),
                       2LL * m * m * (n - 2), s);
            const Graph c = cartesian(generate({Family::Cycle, m}),
                                      generate({Family::Path, n}));
            add_check(rep, "sec4.strong-prism-cnc-match",
                      {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                      {{"cnc", invariants_of(c).cnc}}, {{"cnc", invariants_of(s).cnc}});
        }
    for (int m = from(3); m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            add_cn_cnc(rep, "sec4.strong-torus",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       static_cast<long long>(m) * n, static_cast<long long>(m) * n,
                       strong_product(generate({Family::Cycle, m}),
                                      generate({Family::Cycle, n})));
    for (int m = from(3); m <= hi; ++m)
        for (int n = from(3); n <= hi; ++n)
            add_cn_cnc(rep, "sec4.strong-star",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       std::max(2LL * m, static_cast<long long>(m) * (n - 2)),
                       4LL * m * m * sq(n - 2),
                       strong_product(generate({Family::Star, m}),
                                      generate({Family::Path, n})));

    // Section 5: corona of regular graphs.
    long long corona_witnesses = 0;
    for (const auto& a : regulars)
        for (const auto& b : regulars) {
            const long long n1 = a.graph.order(), n2 = b.graph.order();
            const bool regular_corona = a.degree + n2 == 1 + b.degree;
            if (regular_corona) ++corona_witnesses;
            const long long cn = regular_corona ? n1 * (1 + n2) : n1 * n2;
            const long long cnc = regular_corona ? n1 * (1 + n2) : n1 * n1 * n2;
            add_cn_cnc(rep, "sec5.corona-regular", {{"g1", a.label}, {"g2", b.label}},
                       cn, cnc, corona(a.graph, b.graph));
        }
    // The equality branch needs a 0-regular outer graph; no witness exists
    // among non-trivial regular factors.
    add_info(rep, "sec5.corona-equality-witness",
             {{"factors", std::to_string(regulars.size())}},
             {{"witnesses", corona_witnesses}});

    // Section 6: tensor products.
    for (std::size_t i = 0; i < regulars.size(); ++i)
        for (std::size_t j = i; j < regulars.size(); ++j) {
            const auto& a = regulars[i];
            const auto& b = regulars[j];
            const long long mn =
                static_cast<long long>(a.graph.order()) * b.graph.order();
            add_cn_cnc(rep, "sec6.tensor-regular", {{"g1", a.label}, {"g2", b.label}},
                       mn, mn, tensor(a.graph, b.graph));
        }
    add_cn_cnc(rep, "sec6.tensor-p2-p2", {}, 4, 4,
               tensor(generate({Family::Path, 2}), generate({Family::Path, 2})));
    add_cn_cnc(rep, "sec6.tensor-p3-p2", {}, 4, 8,
               tensor(generate({Family::Path, 3}), generate({Family::Path, 2})));
    for (int m = from(4); m <= hi; ++m)
        add_cn_cnc(rep, "sec6.tensor-path-p2", {{"m", std::to_string(m)}},
                   2LL * m - 4, 8LL * (m - 2),
                   tensor(generate({Family::Path, m}), generate({Family::Path, 2})));
    for (int m = from(3); m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            add_cn_cnc(rep, "sec6.tensor-paths",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       std::max(2LL * (m + n - 4),
                                static_cast<long long>(m - 2) * (n - 2)),
                       8LL * (m - 2) * (n - 2) * (m + n - 4),
                       tensor(generate({Family::Path, m}), generate({Family::Path, n})));
    for (int m = from(3); m <= hi; ++m)
        for (int n = from(3); n <= hi; ++n)
            add_cn_cnc(rep, "sec6.tensor-cycle-path",
                       {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       std::max(2LL * m, static_cast<long long>(m) * (n - 2)),
                       2LL * m * m * (n - 2),
                       tensor(generate({Family::Cycle, m}), generate({Family::Path, n})));

    // The conclusion claims cn of every fundamental product factors as
    // cn(G1)*cn(G2); count counterexamples, no verdict.
    {
        std::vector<Graph> sample;
        std::vector<long long> sample_cn;
        for (int n = 3; n <= 6; ++n) sample.push_back(generate({Family::Path, n}));
        for (int n = 3; n <= 6; ++n) sample.push_back(generate({Family::Cycle, n}));
        for (int n = 2; n <= 5; ++n) sample.push_back(generate({Family::Complete, n}));
        for (const Graph& g : sample) sample_cn.push_back(invariants_of(g).cn);
        long long checked = 0, counterexamples = 0;
        const ProductKind kinds[] = {ProductKind::Join, ProductKind::Cartesian,
                                     ProductKind::Strong, ProductKind::Tensor};
        for (std::size_t i = 0; i < sample.size(); ++i)
            for (std::size_t j = i; j < sample.size(); ++j)
                for (ProductKind k : kinds) {
                    ++checked;
                    if (invariants_of(product(k, sample[i], sample[j])).cn !=
                        sample_cn[i] * sample_cn[j])
                        ++counterexamples;
                }
        add_info(rep, "conclusion.product-claim", {},
                 {{"checked", checked}, {"counterexamples", counterexamples}});
    }

    rep.sort();
    return rep;
}

namespace {

Graph random_graph(std::mt19937_64& rng, int max_order) {
    const int order = std::uniform_int_distribution<int>(1, max_order)(rng);
    const double probs[] = {0.2, 0.5, 0.8};
    const double p = probs[std::uniform_int_distribution<int>(0, 2)(rng)];
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (edge(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(order, edges);
}

Graph random_regular(std::mt19937_64& rng, std::string* label) {
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    if (kind == 0) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        if (label) *label = "C" + std::to_string(n);
        return generate({Family::Cycle, n});
    }
    if (kind == 1) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        if (label) *label = "K" + std::to_string(n);
        return generate({Family::Complete, n});
    }
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    if (label) *label = "K" + std::to_string(m) + "," + std::to_string(m);
    return generate({Family::CompleteBipartite, m, m});
}

}  // namespace

CheckSuiteReport run_bound_checks(int samples, int max_order, std::uint64_t seed) {
    CheckSuiteReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const Params base = {{"samples", std::to_string(samples)},
                         {"max_order", std::to_string(max_order)},
                         {"seed", std::to_string(seed)}};

    long long join_violations = 0;
    for (int s = 0; s < samples; ++s) {
        const Graph g1 = random_graph(rng, max_order);
        const Graph g2 = random_graph(rng, max_order);
        const long long cn1 = graph_curling_number(g1);
        const long long cn2 = graph_curling_number(g2);
        const long long cnj = graph_curling_number(join(g1, g2));
        if (cnj < std::max(cn1, cn2) || cnj > cn1 + cn2) ++join_violations;
    }
    add_check(rep, "thm2.1.join-bounds", base, {{"violations", 0}},
              {{"violations", join_violations}});

    const int corona_cap = std::min(max_order, 7);
    long long corona_violations = 0;
    for (int s = 0; s < samples; ++s) {
        const Graph g1 = random_graph(rng, corona_cap);
        const Graph g2 = random_graph(rng, corona_cap);
        const long long cn1 = graph_curling_number(g1);
        const long long cn2 = graph_curling_number(g2);
        const long long cnc_ = graph_curling_number(corona(g1, g2));
        const long long n1 = g1.order();
        if (cnc_ < n1 * cn2 || cnc_ > cn1 + n1 * cn2) ++corona_violations;
    }
    {
        Params p = base;
        p["max_order"] = std::to_string(corona_cap);
        add_check(rep, "thm5.1.corona-bounds", p, {{"violations", 0}},
                  {{"violations", corona_violations}});
    }

    const ProductKind all_kinds[] = {ProductKind::Join, ProductKind::Cartesian,
                                     ProductKind::Strong, ProductKind::Tensor,
                                     ProductKind::Corona};
    long long oracle_violations[5] = {0, 0, 0, 0, 0};
    for (int s = 0; s < samples; ++s) {
        const Graph g1 = random_graph(rng, max_order);
        const Graph g2 = random_graph(rng, max_order);
        const DegreeMultiset m1 = degree_multiset(g1);
        const DegreeMultiset m2 = degree_multiset(g2);
        for (int k = 0; k < 5; ++k)
            if (degree_multiset(product(all_kinds[k], g1, g2)) !=
                product_degree_multiset(all_kinds[k], m1, m2))
                ++oracle_violations[k];
    }
    for (int k = 0; k < 5; ++k)
        add_check(rep, "oracle." + product_kind_name(all_kinds[k]), base,
                  {{"violations", 0}}, {{"violations", oracle_violations[k]}});

    long long cart_violations = 0;
    for (int s = 0; s < samples; ++s) {
        const Graph g1 = random_regular(rng, nullptr);
        const Graph g2 = random_graph(rng, max_order);
        if (graph_curling_number(cartesian(g1, g2)) !=
            g1.order() * graph_curling_number(g2))
            ++cart_violations;
    }
    add_check(rep, "sec3.regular-arbitrary", base, {{"violations", 0}},
              {{"violations", cart_violations}});

    long long tensor_violations = 0;
    for (int s = 0; s < samples; ++s) {
        const Graph g1 = random_regular(rng, nullptr);  // degree >= 1 throughout
        const Graph g2 = random_graph(rng, max_order);
        if (graph_curling_number(tensor(g1, g2)) !=
            g1.order() * graph_curling_number(g2))
            ++tensor_violations;
    }
    add_check(rep, "sec6.regular-arbitrary", base, {{"violations", 0}},
              {{"violations", tensor_violations}});

    // Fixed spot checks.
    const Graph k1 = generate({Family::Complete, 1});
    add_cn_cnc(rep, "thm2.1.degenerate", {{"g1", "K1"}, {"g2", "K1"}}, 2, 2,
               join(k1, k1));
    add_cn_cnc(rep, "thm5.1.degenerate", {{"g1", "K1"}, {"g2", "K1"}}, 2, 2,
               corona(k1, k1));
    {
        const Graph c5 = generate({Family::Cycle, 5});
        const Graph c6 = generate({Family::Cycle, 6});
        add_cn_cnc(rep, "prop3.1.regular-pair-cartesian",
                   {{"g1", "C5"}, {"g2", "C6"}}, 30, 30, cartesian(c5, c6));
        add_cn_cnc(rep, "prop3.1.regular-pair-strong", {{"g1", "C5"}, {"g2", "C6"}},
                   30, 30, strong_product(c5, c6));
        add_cn_cnc(rep, "prop3.1.regular-pair-tensor", {{"g1", "C5"}, {"g2", "C6"}},
                   30, 30, tensor(c5, c6));
    }

    rep.sort();
    return rep;
}

nlohmann::json report_to_json(const CheckSuiteReport& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PropCheck& c : report.checks) {
        nlohmann::json entry;
        entry["prop_id"] = c.prop_id;
        entry["params"] = c.params;
        entry["expected"] = c.expected;
        entry["actual"] = c.actual;
        entry["verdict"] = verdict_name(c.verdict);
        arr.push_back(std::move(entry));
    }
    return arr;
}

void print_report_table(std::ostream& os, const CheckSuiteReport& report) {
    for (const PropCheck& c : report.checks) {
        os << c.prop_id << " [";
        bool first = true;
        for (const auto& [k, v] : c.params) {
            if (!first) os << " ";
            os << k << "=" << v;
            first = false;
        }
        os << "]";
        if (!c.expected.empty()) {
            os << " expected {";
            first = true;
            for (const auto& [k, v] : c.expected) {
                if (!first) os << " ";
                os << k << "=" << v;
                first = false;
            }
            os << "}";
        }
        os << " actual {";
        first = true;
        for (const auto& [k, v] : c.actual) {
            if (!first) os << " ";
            os << k << "=" << v;
            first = false;
        }
        os << "} " << verdict_name(c.verdict) << "\n";
    }
    os << "pass " << report.passes << ", fail " << report.fails << ", erratum "
       << report.errata << ", info " << report.infos << "\n";
}

}  // namespace cngraph
