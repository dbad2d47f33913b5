#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "kneserlab/families.hpp"
#include "kneserlab/graph.hpp"
#include "kneserlab/products.hpp"

namespace kneserlab {

/// Term language over the graph families:
///   K(n) | C(n) | Kneser(m,n) | X(e,e) | Lex(e,e) | Exp(c,e) | Myc(e)
/// X is the categorical product, Lex the lexicographic product, Exp the
/// exponential graph, Myc the Mycielskian.
class ConstructionExpression {
public:
    enum class Op { complete, cycle, kneser, categorical, lexicographic, exponential, mycielski };

    Op op;
    std::vector<int> args;                                        // numeric arguments
    std::vector<std::shared_ptr<ConstructionExpression>> children; // subexpressions

    Graph evaluate() const {
        switch (op) {
        case Op::complete:
            return complete(args[0]);
        case Op::cycle:
            return cycle(args[0]);
        case Op::kneser:
            return kneser(args[0], args[1]);
        case Op::categorical:
            return categorical_product(children[0]->evaluate(), children[1]->evaluate());
        case Op::lexicographic:
            return lexicographic_product(children[0]->evaluate(), children[1]->evaluate());
        case Op::exponential:
            return exponential_graph(args[0], children[0]->evaluate());
        case Op::mycielski:
            return mycielskian(children[0]->evaluate());
        }
        throw ValidationError("ConstructionExpression: unknown op");
    }

    std::string to_string() const {
        switch (op) {
        case Op::complete:
            return "K(" + std::to_string(args[0]) + ")";
        case Op::cycle:
            return "C(" + std::to_string(args[0]) + ")";
        case Op::kneser:
            return "Kneser(" + std::to_string(args[0]) + "," + std::to_string(args[1]) + ")";
        case Op::categorical:
            return "X(" + children[0]->to_string() + "," + children[1]->to_string() + ")";
        case Op::lexicographic:
            return "Lex(" + children[0]->to_string() + "," + children[1]->to_string() + ")";
        case Op::exponential:
            return "Exp(" + std::to_string(args[0]) + "," + children[0]->to_string() + ")";
        case Op::mycielski:
            return "Myc(" + children[0]->to_string() + ")";
        }
        return "?";
    }
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    ConstructionExpression parse() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input after expression");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected family name");
        return s_.substr(start, pos_ - start);
    }

    ConstructionExpression parse_expr() {
        using Op = ConstructionExpression::Op;
        std::size_t name_pos = pos_;
        std::string name = parse_name();
        ConstructionExpression e;
        if (name == "K") {
            e.op = Op::complete;
            expect('(');
            e.args.push_back(parse_int());
            expect(')');
        } else if (name == "C") {
            e.op = Op::cycle;
            expect('(');
            e.args.push_back(parse_int());
            expect(')');
        } else if (name == "Kneser") {
            e.op = Op::kneser;
            expect('(');
            e.args.push_back(parse_int());
            expect(',');
            e.args.push_back(parse_int());
            expect(')');
        } else if (name == "X" || name == "Lex") {
            e.op = name == "X" ? Op::categorical : Op::lexicographic;
            expect('(');
            e.children.push_back(std::make_shared<ConstructionExpression>(parse_expr()));
            expect(',');
            e.children.push_back(std::make_shared<ConstructionExpression>(parse_expr()));
            expect(')');
        } else if (name == "Exp") {
            e.op = Op::exponential;
            expect('(');
            e.args.push_back(parse_int());
            expect(',');
            e.children.push_back(std::make_shared<ConstructionExpression>(parse_expr()));
            expect(')');
        } else if (name == "Myc") {
            e.op = Op::mycielski;
            expect('(');
            e.children.push_back(std::make_shared<ConstructionExpression>(parse_expr()));
            expect(')');
        } else {
            pos_ = name_pos;
            fail("unknown family name '" + name + "'");
        }
        return e;
    }
};

} // namespace detail

inline ConstructionExpression parse_expression(const std::string& text) {
    return detail::ExprParser(text).parse();
}

} // namespace kneserlab
