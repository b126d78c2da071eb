#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autonet/network.hpp"

namespace autonet {

/// Syntax error with a 0-based byte offset into the rule text.
class RuleParseError : public std::runtime_error {
public:
    RuleParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Boolean expression over x1..xn, constants 0/1 and !, &, ^, | with
/// precedence ! > & > ^ > |, all binary operators left-associative.
struct RuleExpr {
    enum class Kind { Const, Var, Not, And, Xor, Or };
    Kind kind = Kind::Const;
    int value = 0;  ///< Const: 0/1; Var: 1-based node index
    std::vector<RuleExpr> operands;
};

RuleExpr parse_rule(std::string_view text);

/// Largest variable index referenced (0 for variable-free expressions).
int max_variable(const RuleExpr& e);

/// Value on the Boolean configuration with index x (n nodes).
int eval_rule(const RuleExpr& e, state_t x, int n);

}  // namespace autonet
