#ifndef CNGRAPH_PRODUCTS_HPP
#define CNGRAPH_PRODUCTS_HPP

#include <string>

#include "cngraph/graph.hpp"

namespace cngraph {

enum class ProductKind { Join, Cartesian, Strong, Tensor, Corona };

std::string product_kind_name(ProductKind kind);

/// G1 + G2: disjoint union plus all cross edges; g2 ids shifted by |V1|.
Graph join(const Graph& g1, const Graph& g2);

/// G1 box G2 on pairs (i,j) labeled i*n2+j; adjacency when one coordinate is
/// equal and the other adjacent.
Graph cartesian(const Graph& g1, const Graph& g2);

/// G1 strong G2: Cartesian edges plus tensor edges.
Graph strong_product(const Graph& g1, const Graph& g2);

/// G1 x G2: (i,j) ~ (k,l) iff i~k and j~l. May be disconnected.
Graph tensor(const Graph& g1, const Graph& g2);

/// G1 corona G2: one copy of g2 per vertex of g1, each fully joined to its
/// host vertex. Copy i of g2 occupies ids n1 + i*n2 .. n1 + (i+1)*n2 - 1.
Graph corona(const Graph& g1, const Graph& g2);

Graph product(ProductKind kind, const Graph& g1, const Graph& g2);

/// Predicts the product's degree multiset from the factors' multisets alone,
/// iterating distinct (value, multiplicity) entries only.
DegreeMultiset product_degree_multiset(ProductKind kind, const DegreeMultiset& m1,
                                       const DegreeMultiset& m2);

struct ProductInvariants {
    long long cn = 0;
    long long cnc = 0;

    bool operator==(const ProductInvariants&) const = default;
};

/// (cn, cnc) of the product without materializing it.
ProductInvariants predicted_invariants(ProductKind kind, const Graph& g1,
                                       const Graph& g2);

}  // namespace cngraph

#endif
