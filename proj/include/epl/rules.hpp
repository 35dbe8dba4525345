#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "epl/network.hpp"

namespace epl {

// Expression over named slices of a network snapshot.
//
// Concrete syntax, one rule per line, `#` starts a comment:
//
//   program := { rule }
//   rule    := label "<-" expr
//   expr    := term { "+" term }
//   term    := factor { ("." | "&") factor }
//   factor  := label | "I" | func "(" expr ")" | "(" expr ")"
//   func    := "T" | "conv" | "clip" | "not"
//   label   := [A-Za-z_][A-Za-z0-9_:]*
//
// `.` composes slices (evidential matrix product), `&` filters them
// (Hadamard product), `+` sums them entrywise; `T` is the plain transpose,
// `conv` the converse transpose, `clip` the indicator projection, `not` the
// indicator complement, and `I` the evidential identity matrix.
struct PathExpr {
    enum class Kind {
        label_ref,
        identity_ref,
        compose,
        sum,
        filter,
        transpose,
        converse,
        clip,
        not_op
    };

    Kind kind = Kind::identity_ref;
    std::string label;                      // label_ref only
    std::shared_ptr<const PathExpr> left;   // binary lhs / unary operand
    std::shared_ptr<const PathExpr> right;  // binary rhs
};

using PathExprPtr = std::shared_ptr<const PathExpr>;

// AST builders, mainly for tests and embedding.
namespace ast {
PathExprPtr label_ref(std::string name);
PathExprPtr identity_ref();
PathExprPtr compose(PathExprPtr lhs, PathExprPtr rhs);
PathExprPtr sum(PathExprPtr lhs, PathExprPtr rhs);
PathExprPtr filter(PathExprPtr lhs, PathExprPtr rhs);
PathExprPtr transpose(PathExprPtr inner);
PathExprPtr converse(PathExprPtr inner);
PathExprPtr clip(PathExprPtr inner);
PathExprPtr not_op(PathExprPtr inner);
}  // namespace ast

bool structurally_equal(const PathExpr& a, const PathExpr& b);

// Prints with the fewest parentheses that reparse to the same tree.
std::string to_string(const PathExpr& expr);

// One simultaneous assignment per time step.
struct Rule {
    std::string target;
    PathExprPtr expr;
};

struct RuleProgram {
    std::vector<Rule> rules;
};

std::string to_string(const RuleProgram& program);

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejects malformed input and duplicate rule targets with line/column
// positions.
RuleProgram parse_rules(std::string_view source);

// Recursive evaluation against one immutable snapshot. `not` demands an
// indicator operand; anything else raises EvalError naming the
// subexpression.
EvidenceMatrix evaluate(const PathExpr& expr, const EvidenceNetwork& snapshot);

// Evaluates every rule body against the time-t snapshot, then replaces all
// target slices at once. An evaluation error leaves the network unchanged.
void step(const RuleProgram& program, EvidenceNetwork& net);

// step() applied `steps` times; steps must be >= 1.
void run(const RuleProgram& program, EvidenceNetwork& net, int steps);

}  // namespace epl
