#ifndef CNGRAPH_CURLING_HPP
#define CNGRAPH_CURLING_HPP

#include <stdexcept>
#include <vector>

#include "cngraph/graph.hpp"

namespace cngraph {

class EmptySequence : public GraphError {
public:
    EmptySequence() : GraphError("curling number of an empty sequence is undefined") {}
};

class NotSorted : public GraphError {
public:
    NotSorted() : GraphError("run decomposition requires a non-increasing sequence") {}
};

class OverflowError : public GraphError {
public:
    OverflowError() : GraphError("compound curling number overflows 64-bit range") {}
};

struct Run {
    int value = 0;
    long long length = 0;

    bool operator==(const Run&) const = default;
};

/// Maximal constant runs of a non-increasing sequence, values strictly
/// decreasing; run i carries the pair (value, k_i).
struct RunDecomposition {
    std::vector<Run> runs;

    bool operator==(const RunDecomposition&) const = default;
};

struct CurlingReport {
    long long order = 0;
    long long size = 0;
    std::vector<int> degree_sequence;
    RunDecomposition runs;
    long long cn = 0;
    long long cnc = 0;
    long long string_cn = 0;
    // False when built from a degree multiset only; size and degree_sequence
    // are then unset.
    bool materialized = true;
};

/// Largest k with s = X . Y^k for a non-empty block Y. Scans trailing block
/// lengths t = 1..n/2 and counts consecutive trailing copies.
long long string_curling_number(const std::vector<int>& s);

/// Same contract, by exhaustive enumeration of every (prefix, block, k)
/// decomposition. Differential-testing oracle only.
long long string_curling_oracle(const std::vector<int>& s);

RunDecomposition run_decomposition(const std::vector<int>& sorted_desc);
RunDecomposition runs_from_multiset(const DegreeMultiset& m);

/// Product of all run lengths, overflow-checked.
long long run_length_product(const RunDecomposition& rd);

long long max_run_length(const RunDecomposition& rd);

long long graph_curling_number(const Graph& g);
long long compound_curling_number(const Graph& g);

CurlingReport curling_report(const Graph& g);

/// Fast-path report from a degree multiset alone; size and degree_sequence
/// are not populated. On a sorted sequence the trailing run realizes the
/// string curling number, so string_cn is the last run length.
CurlingReport report_from_multiset(const DegreeMultiset& m);

}  // namespace cngraph

#endif
