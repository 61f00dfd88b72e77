#ifndef CNGRAPH_GRAPH_HPP
#define CNGRAPH_GRAPH_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cngraph {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroOrder : public GraphError {
public:
    ZeroOrder() : GraphError("graph must have at least one vertex") {}
};

class IdOutOfRange : public GraphError {
public:
    IdOutOfRange(int id, int order)
        : GraphError("vertex id " + std::to_string(id) + " out of range [0," +
                     std::to_string(order) + ")") {}
};

class SelfLoop : public GraphError {
public:
    explicit SelfLoop(int id)
        : GraphError("self-loop at vertex " + std::to_string(id)) {}
};

class BadParameter : public GraphError {
public:
    using GraphError::GraphError;
};

class FileFormatError : public GraphError {
public:
    using GraphError::GraphError;
};

/// Degree value -> multiplicity, plus the total vertex count.
struct DegreeMultiset {
    std::map<int, long long> counts;
    long long order = 0;

    bool operator==(const DegreeMultiset&) const = default;
};

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, EmptyOnN };

/// A named-family instance: Star(m) is K_{1,m}; CompleteBipartite carries (p1, p2).
struct FamilySpec {
    Family family = Family::Path;
    int p1 = 0;
    int p2 = 0;

    bool operator==(const FamilySpec&) const = default;
};

/// Simple undirected graph, immutable after construction. Vertex ids are
/// 0..order-1, neighbor lists are sorted, no loops or parallel edges.
/// Disconnected graphs are allowed.
class Graph {
public:
    static Graph from_edge_list(int order,
                                const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    long long size() const { return size_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool is_regular() const;

    /// All edges as (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edge_list() const;

private:
    explicit Graph(std::vector<std::vector<int>> adj);

    std::vector<std::vector<int>> adj_;
    long long size_ = 0;
};

Graph generate(const FamilySpec& spec);

/// Degree sequence sorted non-increasing ("well-arranged").
std::vector<int> degree_sequence(const Graph& g);

DegreeMultiset degree_multiset(const Graph& g);

/// Reads the edge-list format: `n <order>` on the first meaningful line, then
/// one `<u> <v>` pair per line; `#` comments and blank lines are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

std::string family_to_string(const FamilySpec& spec);

}  // namespace cngraph

#endif
