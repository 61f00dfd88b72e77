#include "cngraph/products.hpp"

#include "cngraph/curling.hpp"

namespace cngraph {

std::string product_kind_name(ProductKind kind) {
    switch (kind) {
        case ProductKind::Join: return "join";
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Strong: return "strong";
        case ProductKind::Tensor: return "tensor";
        case ProductKind::Corona: return "corona";
    }
    return "?";
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<std::pair<int, int>> edges = g1.edge_list();
    for (const auto& [u, v] : g2.edge_list()) edges.emplace_back(n1 + u, n1 + v);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) edges.emplace_back(i, n1 + j);
    return Graph::from_edge_list(n1 + n2, edges);
}

namespace {
int pair_id(int i, int j, int n2) { return i * n2 + j; }
}  // namespace

Graph cartesian(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g1.edge_list())
        for (int j = 0; j < n2; ++j)
            edges.emplace_back(pair_id(a, j, n2), pair_id(b, j, n2));
    for (int i = 0; i < n1; ++i)
        for (const auto& [c, d] : g2.edge_list())
            edges.emplace_back(pair_id(i, c, n2), pair_id(i, d, n2));
    return Graph::from_edge_list(n1 * n2, edges);
}

Graph tensor(const Graph& g1, const Graph& g2) {
    const int n2 = g2.order();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g1.edge_list())
        for (const auto& [c, d] : g2.edge_list()) {
            edges.emplace_back(pair_id(a, c, n2), pair_id(b, d, n2));
            edges.emplace_back(pair_id(a, d, n2), pair_id(b, c, n2));
        }
    return Graph::from_edge_list(g1.order() * n2, edges);
}

Graph strong_product(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> edges = cartesian(g1, g2).edge_list();
    for (const auto& e : tensor(g1, g2).edge_list()) edges.push_back(e);
    return Graph::from_edge_list(g1.order() * g2.order(), edges);
}

Graph corona(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<std::pair<int, int>> edges = g1.edge_list();
    for (int i = 0; i < n1; ++i) {
        const int base = n1 + i * n2;
        for (const auto& [u, v] : g2.edge_list())
            edges.emplace_back(base + u, base + v);
        for (int j = 0; j < n2; ++j) edges.emplace_back(i, base + j);
    }
    return Graph::from_edge_list(n1 * (1 + n2), edges);
}

Graph product(ProductKind kind, const Graph& g1, const Graph& g2) {
    switch (kind) {
        case ProductKind::Join: return join(g1, g2);
        case ProductKind::Cartesian: return cartesian(g1, g2);
        case ProductKind::Strong: return strong_product(g1, g2);
        case ProductKind::Tensor: return tensor(g1, g2);
        case ProductKind::Corona: return corona(g1, g2);
    }
    throw BadParameter("unknown product kind");
}

namespace {

/// Convolution of two degree multisets under a derived-degree map.
template <typename DegreeOf>
DegreeMultiset convolve(const DegreeMultiset& m1, const DegreeMultiset& m2,
                        DegreeOf&& derived) {
    DegreeMultiset out;
    out.order = m1.order * m2.order;
    for (const auto& [d1, c1] : m1.counts)
        for (const auto& [d2, c2] : m2.counts) out.counts[derived(d1, d2)] += c1 * c2;
    return out;
}

}  // namespace

DegreeMultiset product_degree_multiset(ProductKind kind, const DegreeMultiset& m1,
                                       const DegreeMultiset& m2) {
    const int n1 = static_cast<int>(m1.order);
    const int n2 = static_cast<int>(m2.order);
    switch (kind) {
        case ProductKind::Join: {
            DegreeMultiset out;
            out.order = m1.order + m2.order;
            for (const auto& [d, c] : m1.counts) out.counts[d + n2] += c;
            for (const auto& [d, c] : m2.counts) out.counts[d + n1] += c;
            return out;
        }
        case ProductKind::Cartesian:
            return convolve(m1, m2, [](int a, int b) { return a + b; });
        case ProductKind::Strong:
            return convolve(m1, m2, [](int a, int b) { return a + b + a * b; });
        case ProductKind::Tensor:
            return convolve(m1, m2, [](int a, int b) { return a * b; });
        case ProductKind::Corona: {
            DegreeMultiset out;
            out.order = m1.order * (1 + m2.order);
            for (const auto& [d, c] : m1.counts) out.counts[d + n2] += c;
            for (const auto& [d, c] : m2.counts) out.counts[d + 1] += m1.order * c;
            return out;
        }
    }
    throw BadParameter("unknown product kind");
}

ProductInvariants predicted_invariants(ProductKind kind, const Graph& g1,
                                       const Graph& g2) {
    const DegreeMultiset combined =
        product_degree_multiset(kind, degree_multiset(g1), degree_multiset(g2));
    const RunDecomposition runs = runs_from_multiset(combined);
    return {max_run_length(runs), run_length_product(runs)};
}

}  // namespace cngraph
