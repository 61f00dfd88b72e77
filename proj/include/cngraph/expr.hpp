#ifndef CNGRAPH_EXPR_HPP
#define CNGRAPH_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>

#include "cngraph/curling.hpp"
#include "cngraph/products.hpp"

namespace cngraph {

class SyntaxError : public GraphError {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : GraphError(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownFamily : public SyntaxError {
public:
    UnknownFamily(const std::string& name, std::size_t offset)
        : SyntaxError("unknown family `" + name + "`", offset) {}
};

/// AST of family atoms and edge-list file references combined by the five
/// product operators. All operators bind equally and associate left.
struct ProductExpr {
    enum class Kind { Atom, File, Binary };

    Kind kind = Kind::Atom;
    FamilySpec atom;                      // Kind::Atom
    std::string path;                     // Kind::File
    ProductKind op = ProductKind::Join;   // Kind::Binary
    std::unique_ptr<ProductExpr> lhs, rhs;
};

bool expr_equal(const ProductExpr& a, const ProductExpr& b);

/// Grammar: atoms P<n>, C<n>, K<n>, K<m>,<n> (braces optional), S<m>,
/// file(<path>); operators `+` join, `box` Cartesian, `strong`, `x` tensor,
/// `o` corona, plus the Unicode aliases; parentheses for grouping.
std::unique_ptr<ProductExpr> parse_expression(const std::string& text);

std::string to_string(const ProductExpr& expr);

Graph build_graph(const ProductExpr& expr);

/// Default path materializes the graph bottom-up; fast combines leaf degree
/// multisets with product_degree_multiset and never builds the product.
CurlingReport evaluate(const ProductExpr& expr, bool fast = false);

}  // namespace cngraph

#endif
