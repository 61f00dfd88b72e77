#include "cngraph/curling.hpp"

#include <algorithm>

namespace cngraph {

long long string_curling_number(const std::vector<int>& s) {
    if (s.empty()) throw EmptySequence();
    const long long n = static_cast<long long>(s.size());
    long long best = 1;
    for (long long t = 1; t * 2 <= n; ++t) {
        // Count consecutive trailing copies of the final t-element block.
        long long k = 1;
        while (k * t + t <= n) {
            bool match = true;
            const long long base = n - k * t - t;
            for (long long i = 0; i < t; ++i) {
                if (s[static_cast<std::size_t>(base + i)] !=
                    s[static_cast<std::size_t>(n - t + i)]) {
                    match = false;
                    break;
                }
            }
            if (!match) break;
            ++k;
        }
        best = std::max(best, k);
    }
    return best;
}

long long string_curling_oracle(const std::vector<int>& s) {
    if (s.empty()) throw EmptySequence();
    const long long n = static_cast<long long>(s.size());
    long long best = 1;
    for (long long p = 0; p < n; ++p) {          // prefix length
        const long long rest = n - p;
        for (long long t = 1; t <= rest; ++t) {  // block length
            if (rest % t != 0) continue;
            const long long k = rest / t;
            bool ok = true;
            for (long long i = 0; ok && i < rest; ++i)
                if (s[static_cast<std::size_t>(p + i)] !=
                    s[static_cast<std::size_t>(p + (i % t))])
                    ok = false;
            if (ok) best = std::max(best, k);
        }
    }
    return best;
}

RunDecomposition run_decomposition(const std::vector<int>& sorted_desc) {
    if (sorted_desc.empty()) throw EmptySequence();
    RunDecomposition rd;
    for (std::size_t i = 1; i < sorted_desc.size(); ++i)
        if (sorted_desc[i] > sorted_desc[i - 1]) throw NotSorted();
    for (int v : sorted_desc) {
        if (!rd.runs.empty() && rd.runs.back().value == v)
            ++rd.runs.back().length;
        else
            rd.runs.push_back({v, 1});
    }
    return rd;
}

RunDecomposition runs_from_multiset(const DegreeMultiset& m) {
    RunDecomposition rd;
    for (auto it = m.counts.rbegin(); it != m.counts.rend(); ++it)
        rd.runs.push_back({it->first, it->second});
    return rd;
}

long long run_length_product(const RunDecomposition& rd) {
    long long product = 1;
    for (const Run& r : rd.runs)
        if (__builtin_mul_overflow(product, r.length, &product))
            throw OverflowError();
    return product;
}

long long max_run_length(const RunDecomposition& rd) {
    long long best = 0;
    for (const Run& r : rd.runs) best = std::max(best, r.length);
    return best;
}

long long graph_curling_number(const Graph& g) {
    return max_run_length(runs_from_multiset(degree_multiset(g)));
}

long long compound_curling_number(const Graph& g) {
    return run_length_product(runs_from_multiset(degree_multiset(g)));
}

CurlingReport curling_report(const Graph& g) {
    CurlingReport r;
    r.order = g.order();
    r.size = g.size();
    r.degree_sequence = degree_sequence(g);
    r.runs = run_decomposition(r.degree_sequence);
    r.cn = max_run_length(r.runs);
    r.cnc = run_length_product(r.runs);
    r.string_cn = string_curling_number(r.degree_sequence);
    return r;
}

CurlingReport report_from_multiset(const DegreeMultiset& m) {
    CurlingReport r;
    r.order = m.order;
    r.runs = runs_from_multiset(m);
    r.cn = max_run_length(r.runs);
    r.cnc = run_length_product(r.runs);
    r.string_cn = r.runs.runs.empty() ? 0 : r.runs.runs.back().length;
    r.materialized = false;
    return r;
}

}  // namespace cngraph
