#include "cngraph/expr.hpp"

#include <cctype>
#include <optional>

namespace cngraph {

bool expr_equal(const ProductExpr& a, const ProductExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ProductExpr::Kind::Atom: return a.atom == b.atom;
        case ProductExpr::Kind::File: return a.path == b.path;
        case ProductExpr::Kind::Binary:
            return a.op == b.op && expr_equal(*a.lhs, *b.lhs) &&
                   expr_equal(*a.rhs, *b.rhs);
    }
    return false;
}

namespace {

std::unique_ptr<ProductExpr> make_atom(FamilySpec spec) {
    auto e = std::make_unique<ProductExpr>();
    e->kind = ProductExpr::Kind::Atom;
    e->atom = spec;
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    std::unique_ptr<ProductExpr> parse() {
        auto expr = parse_expr();
        skip_ws();
        if (pos_ != src_.size())
            throw SyntaxError("expected operator or end of input", pos_);
        return expr;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(const std::string& literal) {
        if (src_.compare(pos_, literal.size(), literal) == 0) {
            pos_ += literal.size();
            return true;
        }
        return false;
    }

    std::string read_word() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    int read_number() {
        skip_ws();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            value = value * 10 + (src_[pos_] - '0');
            if (value > 1000000) throw SyntaxError("parameter too large", start);
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError("expected a number", pos_);
        return static_cast<int>(value);
    }

    std::optional<ProductKind> try_operator() {
        skip_ws();
        const std::size_t save = pos_;
        if (eat("+")) return ProductKind::Join;
        if (eat("□")) return ProductKind::Cartesian;
        if (eat("⊠")) return ProductKind::Strong;
        if (eat("×")) return ProductKind::Tensor;
        if (eat("⊙")) return ProductKind::Corona;
        const std::string word = read_word();
        if (word == "box") return ProductKind::Cartesian;
        if (word == "strong") return ProductKind::Strong;
        if (word == "x") return ProductKind::Tensor;
        if (word == "o") return ProductKind::Corona;
        pos_ = save;
        return std::nullopt;
    }

    std::unique_ptr<ProductExpr> parse_expr() {
        auto node = parse_primary();
        while (auto op = try_operator()) {
            auto rhs = parse_primary();
            auto bin = std::make_unique<ProductExpr>();
            bin->kind = ProductExpr::Kind::Binary;
            bin->op = *op;
            bin->lhs = std::move(node);
            bin->rhs = std::move(rhs);
            node = std::move(bin);
        }
        return node;
    }

    std::unique_ptr<ProductExpr> parse_primary() {
        skip_ws();
        if (pos_ >= src_.size())
            throw SyntaxError("unexpected end of input", pos_);
        if (eat("(")) {
            auto inner = parse_expr();
            skip_ws();
            if (!eat(")")) throw SyntaxError("expected `)`", pos_);
            return inner;
        }
        const std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(src_[pos_])))
            throw SyntaxError("expected an atom or `(`", pos_);
        const std::string word = read_word();
        if (word == "file") {
            skip_ws();
            if (!eat("(")) throw SyntaxError("expected `(` after `file`", pos_);
            const std::size_t close = src_.find(')', pos_);
            if (close == std::string::npos)
                throw SyntaxError("unterminated file reference", pos_);
            auto e = std::make_unique<ProductExpr>();
            e->kind = ProductExpr::Kind::File;
            e->path = src_.substr(pos_, close - pos_);
            pos_ = close + 1;
            return e;
        }
        if (word == "P") return make_atom({Family::Path, read_number()});
        if (word == "C") return make_atom({Family::Cycle, read_number()});
        if (word == "S") return make_atom({Family::Star, read_number()});
        if (word == "K") {
            skip_ws();
            if (eat("{")) {
                const int m = read_number();
                skip_ws();
                if (!eat(",")) throw SyntaxError("expected `,`", pos_);
                const int n = read_number();
                skip_ws();
                if (!eat("}")) throw SyntaxError("expected `}`", pos_);
                return make_atom({Family::CompleteBipartite, m, n});
            }
            const int m = read_number();
            skip_ws();
            if (eat(","))
                return make_atom({Family::CompleteBipartite, m, read_number()});
            return make_atom({Family::Complete, m});
        }
        throw UnknownFamily(word, start);
    }
};

std::string op_spelling(ProductKind op) {
    switch (op) {
        case ProductKind::Join: return "+";
        case ProductKind::Cartesian: return "box";
        case ProductKind::Strong: return "strong";
        case ProductKind::Tensor: return "x";
        case ProductKind::Corona: return "o";
    }
    return "?";
}

DegreeMultiset multiset_of(const ProductExpr& expr) {
    switch (expr.kind) {
        case ProductExpr::Kind::Atom:
            return degree_multiset(generate(expr.atom));
        case ProductExpr::Kind::File:
            return degree_multiset(read_edge_list_file(expr.path));
        case ProductExpr::Kind::Binary:
            return product_degree_multiset(expr.op, multiset_of(*expr.lhs),
                                           multiset_of(*expr.rhs));
    }
    throw BadParameter("malformed expression node");
}

}  // namespace

std::unique_ptr<ProductExpr> parse_expression(const std::string& text) {
    // Validate family parameters eagerly so BadParameter surfaces at parse time.
    auto expr = Parser(text).parse();
    struct Validate {
        static void run(const ProductExpr& e) {
            if (e.kind == ProductExpr::Kind::Atom) {
                generate(e.atom);
            } else if (e.kind == ProductExpr::Kind::Binary) {
                run(*e.lhs);
                run(*e.rhs);
            }
        }
    };
    Validate::run(*expr);
    return expr;
}

std::string to_string(const ProductExpr& expr) {
    switch (expr.kind) {
        case ProductExpr::Kind::Atom:
            return family_to_string(expr.atom);
        case ProductExpr::Kind::File:
            return "file(" + expr.path + ")";
        case ProductExpr::Kind::Binary: {
            const std::string rhs = to_string(*expr.rhs);
            const bool wrap = expr.rhs->kind == ProductExpr::Kind::Binary;
            return to_string(*expr.lhs) + " " + op_spelling(expr.op) + " " +
                   (wrap ? "(" + rhs + ")" : rhs);
        }
    }
    return "?";
}

Graph build_graph(const ProductExpr& expr) {
    switch (expr.kind) {
        case ProductExpr::Kind::Atom:
            return generate(expr.atom);
        case ProductExpr::Kind::File:
            return read_edge_list_file(expr.path);
        case ProductExpr::Kind::Binary:
            return product(expr.op, build_graph(*expr.lhs), build_graph(*expr.rhs));
    }
    throw BadParameter("malformed expression node");
}

CurlingReport evaluate(const ProductExpr& expr, bool fast) {
    if (fast) return report_from_multiset(multiset_of(expr));
    return curling_report(build_graph(expr));
}

}  // namespace cngraph
