#include "autonet/rules.hpp"

#include <cctype>

namespace autonet {

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    RuleExpr parse_or() {
        RuleExpr lhs = parse_xor();
        while (eat('|')) {
            RuleExpr rhs = parse_xor();
            RuleExpr node{RuleExpr::Kind::Or, 0, {}};
            node.operands.push_back(std::move(lhs));
            node.operands.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    RuleExpr parse_xor() {
        RuleExpr lhs = parse_and();
        while (eat('^')) {
            RuleExpr rhs = parse_and();
            RuleExpr node{RuleExpr::Kind::Xor, 0, {}};
            node.operands.push_back(std::move(lhs));
            node.operands.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    RuleExpr parse_and() {
        RuleExpr lhs = parse_unary();
        while (eat('&')) {
            RuleExpr rhs = parse_unary();
            RuleExpr node{RuleExpr::Kind::And, 0, {}};
            node.operands.push_back(std::move(lhs));
            node.operands.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    RuleExpr parse_unary() {
        skip_ws();
        if (pos < src.size() && src[pos] == '!') {
            ++pos;
            RuleExpr node{RuleExpr::Kind::Not, 0, {}};
            node.operands.push_back(parse_unary());
            return node;
        }
        return parse_atom();
    }

    RuleExpr parse_atom() {
        skip_ws();
        if (pos >= src.size()) throw RuleParseError(pos, "expected operand");
        const char c = src[pos];
        if (c == '(') {
            ++pos;
            RuleExpr inner = parse_or();
            skip_ws();
            if (pos >= src.size() || src[pos] != ')') throw RuleParseError(pos, "expected ')'");
            ++pos;
            return inner;
        }
        if (c == '0' || c == '1') {
            ++pos;
            return RuleExpr{RuleExpr::Kind::Const, c - '0', {}};
        }
        if (c == 'x') {
            const std::size_t start = pos;
            ++pos;
            std::size_t digits = 0;
            int index = 0;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                index = index * 10 + (src[pos] - '0');
                if (index > Network::kMaxNodes) throw RuleParseError(start, "variable index too large");
                ++pos;
                ++digits;
            }
            if (digits == 0) throw RuleParseError(pos, "expected variable index after 'x'");
            if (index < 1) throw RuleParseError(start, "variable index must be at least 1");
            return RuleExpr{RuleExpr::Kind::Var, index, {}};
        }
        throw RuleParseError(pos, std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RuleExpr parse_rule(std::string_view text) {
    Parser p{text};
    RuleExpr e = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size()) throw RuleParseError(p.pos, "unexpected trailing input");
    return e;
}

int max_variable(const RuleExpr& e) {
    int m = e.kind == RuleExpr::Kind::Var ? e.value : 0;
    for (const RuleExpr& child : e.operands) m = std::max(m, max_variable(child));
    return m;
}

int eval_rule(const RuleExpr& e, state_t x, int n) {
    switch (e.kind) {
        case RuleExpr::Kind::Const: return e.value;
        case RuleExpr::Kind::Var: return (x >> (n - e.value)) & 1u;
        case RuleExpr::Kind::Not: return 1 - eval_rule(e.operands[0], x, n);
        case RuleExpr::Kind::And: return eval_rule(e.operands[0], x, n) & eval_rule(e.operands[1], x, n);
        case RuleExpr::Kind::Xor: return eval_rule(e.operands[0], x, n) ^ eval_rule(e.operands[1], x, n);
        case RuleExpr::Kind::Or: return eval_rule(e.operands[0], x, n) | eval_rule(e.operands[1], x, n);
    }
    return 0;
}

}  // namespace autonet
