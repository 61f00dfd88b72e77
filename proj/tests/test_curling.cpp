#include <algorithm>
#include <random>

#include "doctest.h"

#include "cngraph/curling.hpp"

using namespace cngraph;

TEST_CASE("string curling number") {
    CHECK(string_curling_number({2, 2, 2, 2}) == 4);
    CHECK(string_curling_number({7}) == 1);
    CHECK(string_curling_number({0, 1, 2, 2, 1, 2, 2, 1}) == 2);
    CHECK_THROWS_AS(string_curling_number({}), EmptySequence);
}

TEST_CASE("string curling oracle") {
    CHECK(string_curling_oracle({1, 2, 1, 2}) == 2);
    CHECK(string_curling_oracle({3, 3, 2}) == 1);
    CHECK(string_curling_oracle({5, 5, 5}) == 3);
    CHECK_THROWS_AS(string_curling_oracle({}), EmptySequence);
}

TEST_CASE("differential: scan matches exhaustive oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<int> sym(0, 5);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<int> s(static_cast<std::size_t>(len(rng)));
        for (int& v : s) v = sym(rng);
        CAPTURE(trial);
        CHECK(string_curling_number(s) == string_curling_oracle(s));
    }
}

TEST_CASE("doubling: s . s curls at least twice") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 15);
    std::uniform_int_distribution<int> sym(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> s(static_cast<std::size_t>(len(rng)));
        for (int& v : s) v = sym(rng);
        std::vector<int> doubled = s;
        doubled.insert(doubled.end(), s.begin(), s.end());
        CHECK(string_curling_number(doubled) >= 2);
    }
}

TEST_CASE("monotone collapse cross-check by oracle") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(1, 30);
    std::uniform_int_distribution<int> sym(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> s(static_cast<std::size_t>(len(rng)));
        for (int& v : s) v = sym(rng);
        std::sort(s.begin(), s.end(), std::greater<int>());
        CHECK(string_curling_number(s) == string_curling_oracle(s));
    }
}

TEST_CASE("run decomposition") {
    const RunDecomposition a = run_decomposition({2, 2, 2, 1, 1});
    CHECK(a.runs == std::vector<Run>{{2, 3}, {1, 2}});
    const RunDecomposition b = run_decomposition({4, 4, 4, 4});
    CHECK(b.runs == std::vector<Run>{{4, 4}});
    const RunDecomposition c = run_decomposition({4, 3, 3, 3, 3, 2, 2, 2, 2});
    CHECK(c.runs == std::vector<Run>{{4, 1}, {3, 4}, {2, 4}});

    CHECK_THROWS_AS(run_decomposition({1, 2}), NotSorted);
    CHECK_THROWS_AS(run_decomposition({}), EmptySequence);
}

TEST_CASE("graph curling numbers against Table 1 cases") {
    CHECK(graph_curling_number(generate({Family::Complete, 5})) == 5);
    CHECK(graph_curling_number(generate({Family::Path, 6})) == 4);
    CHECK(graph_curling_number(generate({Family::CompleteBipartite, 2, 3})) == 3);

    CHECK(compound_curling_number(generate({Family::Cycle, 7})) == 7);
    CHECK(compound_curling_number(generate({Family::Path, 6})) == 8);
    CHECK(compound_curling_number(generate({Family::CompleteBipartite, 2, 3})) == 6);
}

TEST_CASE("curling report") {
    const CurlingReport c4 = curling_report(generate({Family::Cycle, 4}));
    CHECK(c4.order == 4);
    CHECK(c4.cn == 4);
    CHECK(c4.cnc == 4);
    CHECK(c4.string_cn == 4);
    CHECK(c4.runs.runs == std::vector<Run>{{2, 4}});

    const CurlingReport p5 = curling_report(generate({Family::Path, 5}));
    CHECK(p5.cn == 3);
    CHECK(p5.cnc == 6);
    CHECK(p5.string_cn == 2);

    // Proposition forcing cnc = 6, against the Table's n^2 row.
    const CurlingReport k33 = curling_report(generate({Family::CompleteBipartite, 3, 3}));
    CHECK(k33.cn == 6);
    CHECK(k33.cnc == 6);
}

TEST_CASE("regular-graph law and divisibility") {
    std::vector<FamilySpec> specs;
    for (int n = 3; n <= 10; ++n) specs.push_back({Family::Cycle, n});
    for (int n = 1; n <= 10; ++n) specs.push_back({Family::Complete, n});
    for (int m = 1; m <= 5; ++m) specs.push_back({Family::CompleteBipartite, m, m});
    for (const FamilySpec& spec : specs) {
        const Graph g = generate(spec);
        CHECK(g.is_regular());
        CHECK(graph_curling_number(g) == g.order());
        CHECK(compound_curling_number(g) == g.order());
    }

    for (int n = 1; n <= 12; ++n) {
        const Graph g = generate({Family::Path, n});
        const long long cn = graph_curling_number(g);
        const long long cnc = compound_curling_number(g);
        CHECK(cn >= 1);
        CHECK(cn <= g.order());
        CHECK(cnc % cn == 0);
    }
}

TEST_CASE("run product is overflow-checked") {
    RunDecomposition rd;
    rd.runs = {{3, 1LL << 40}, {2, 1LL << 40}};
    CHECK_THROWS_AS(run_length_product(rd), OverflowError);
}

TEST_CASE("fast report from multiset matches materialized report") {
    for (int n = 3; n <= 9; ++n) {
        const Graph g = generate({Family::Path, n});
        const CurlingReport full = curling_report(g);
        const CurlingReport fast = report_from_multiset(degree_multiset(g));
        CHECK_FALSE(fast.materialized);
        CHECK(fast.order == full.order);
        CHECK(fast.runs == full.runs);
        CHECK(fast.cn == full.cn);
        CHECK(fast.cnc == full.cnc);
        CHECK(fast.string_cn == full.string_cn);
    }
}
