#include "cngraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace cngraph {

Graph::Graph(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {
    long long total = 0;
    for (const auto& nbrs : adj_) total += static_cast<long long>(nbrs.size());
    size_ = total / 2;
}

Graph Graph::from_edge_list(int order,
                            const std::vector<std::pair<int, int>>& edges) {
    if (order < 1) throw ZeroOrder();
    std::vector<std::vector<int>> adj(order);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= order) throw IdOutOfRange(u, order);
        if (v < 0 || v >= order) throw IdOutOfRange(v, order);
        if (u == v) throw SelfLoop(u);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Duplicate edges collapse to one.
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return Graph(std::move(adj));
}

bool Graph::is_regular() const {
    const int d = degree(0);
    for (int v = 1; v < order(); ++v)
        if (degree(v) != d) return false;
    return true;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(size_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

Graph generate(const FamilySpec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
        case Family::Path: {
            const int n = spec.p1;
            if (n < 1) throw BadParameter("Path requires n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edge_list(n, edges);
        }
        case Family::Cycle: {
            const int n = spec.p1;
            if (n < 3) throw BadParameter("Cycle requires n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            return Graph::from_edge_list(n, edges);
        }
        case Family::Complete: {
            const int n = spec.p1;
            if (n < 1) throw BadParameter("Complete requires n >= 1");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            return Graph::from_edge_list(n, edges);
        }
        case Family::CompleteBipartite: {
            const int m = spec.p1, n = spec.p2;
            if (m < 1 || n < 1)
                throw BadParameter("CompleteBipartite requires m, n >= 1");
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
            return Graph::from_edge_list(m + n, edges);
        }
        case Family::Star: {
            const int m = spec.p1;
            if (m < 1) throw BadParameter("Star requires m >= 1");
            for (int j = 1; j <= m; ++j) edges.emplace_back(0, j);
            return Graph::from_edge_list(m + 1, edges);
        }
        case Family::EmptyOnN: {
            const int n = spec.p1;
            if (n < 1) throw BadParameter("EmptyOnN requires n >= 1");
            return Graph::from_edge_list(n, {});
        }
    }
    throw BadParameter("unknown family");
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        degrees[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    return degrees;
}

DegreeMultiset degree_multiset(const Graph& g) {
    DegreeMultiset m;
    m.order = g.order();
    for (int v = 0; v < g.order(); ++v) ++m.counts[g.degree(v)];
    return m;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int order = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        if (order < 0) {
            std::string tag;
            if (!(ss >> tag >> order) || tag != "n" || order < 1)
                throw FileFormatError("line " + std::to_string(lineno) +
                                      ": expected header `n <order>`");
            continue;
        }
        int u = 0, v = 0;
        if (!(ss >> u >> v))
            throw FileFormatError("line " + std::to_string(lineno) +
                                  ": expected `<u> <v>`");
        edges.emplace_back(u, v);
    }
    if (order < 0) throw FileFormatError("missing `n <order>` header line");
    return Graph::from_edge_list(order, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open file: " + path);
    return read_edge_list(in);
}

std::string family_to_string(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return "P" + std::to_string(spec.p1);
        case Family::Cycle: return "C" + std::to_string(spec.p1);
        case Family::Complete: return "K" + std::to_string(spec.p1);
        case Family::CompleteBipartite:
            return "K" + std::to_string(spec.p1) + "," + std::to_string(spec.p2);
        case Family::Star: return "S" + std::to_string(spec.p1);
        case Family::EmptyOnN: return "E" + std::to_string(spec.p1);
    }
    return "?";
}

}  // namespace cngraph
