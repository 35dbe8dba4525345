#include "epl/rules.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

namespace epl {

namespace ast {

namespace {
PathExprPtr make(PathExpr::Kind kind, std::string label, PathExprPtr left,
                 PathExprPtr right) {
    auto node = std::make_shared<PathExpr>();
    node->kind = kind;
    node->label = std::move(label);
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}
}  // namespace

PathExprPtr label_ref(std::string name) {
    return make(PathExpr::Kind::label_ref, std::move(name), nullptr, nullptr);
}
PathExprPtr identity_ref() {
    return make(PathExpr::Kind::identity_ref, {}, nullptr, nullptr);
}
PathExprPtr compose(PathExprPtr lhs, PathExprPtr rhs) {
    return make(PathExpr::Kind::compose, {}, std::move(lhs), std::move(rhs));
}
PathExprPtr sum(PathExprPtr lhs, PathExprPtr rhs) {
    return make(PathExpr::Kind::sum, {}, std::move(lhs), std::move(rhs));
}
PathExprPtr filter(PathExprPtr lhs, PathExprPtr rhs) {
    return make(PathExpr::Kind::filter, {}, std::move(lhs), std::move(rhs));
}
PathExprPtr transpose(PathExprPtr inner) {
    return make(PathExpr::Kind::transpose, {}, std::move(inner), nullptr);
}
PathExprPtr converse(PathExprPtr inner) {
    return make(PathExpr::Kind::converse, {}, std::move(inner), nullptr);
}
PathExprPtr clip(PathExprPtr inner) {
    return make(PathExpr::Kind::clip, {}, std::move(inner), nullptr);
}
PathExprPtr not_op(PathExprPtr inner) {
    return make(PathExpr::Kind::not_op, {}, std::move(inner), nullptr);
}

}  // namespace ast

bool structurally_equal(const PathExpr& a, const PathExpr& b) {
    if (a.kind != b.kind || a.label != b.label) return false;
    if ((a.left == nullptr) != (b.left == nullptr)) return false;
    if ((a.right == nullptr) != (b.right == nullptr)) return false;
    if (a.left && !structurally_equal(*a.left, *b.left)) return false;
    if (a.right && !structurally_equal(*a.right, *b.right)) return false;
    return true;
}

namespace {

int precedence(PathExpr::Kind kind) {
    switch (kind) {
        case PathExpr::Kind::sum: return 1;
        case PathExpr::Kind::compose:
        case PathExpr::Kind::filter: return 2;
        default: return 3;
    }
}

// Binary operators are left-associative, so a right child at the same
// precedence level needs parentheses while a left child does not.
void print_expr(const PathExpr& e, int min_prec, std::string& out) {
    switch (e.kind) {
        case PathExpr::Kind::label_ref:
            out += e.label;
            return;
        case PathExpr::Kind::identity_ref:
            out += 'I';
            return;
        case PathExpr::Kind::transpose:
        case PathExpr::Kind::converse:
        case PathExpr::Kind::clip:
        case PathExpr::Kind::not_op: {
            switch (e.kind) {
                case PathExpr::Kind::transpose: out += "T("; break;
                case PathExpr::Kind::converse: out += "conv("; break;
                case PathExpr::Kind::clip: out += "clip("; break;
                default: out += "not("; break;
            }
            print_expr(*e.left, 1, out);
            out += ')';
            return;
        }
        case PathExpr::Kind::compose:
        case PathExpr::Kind::sum:
        case PathExpr::Kind::filter: {
            const int prec = precedence(e.kind);
            const bool parens = prec < min_prec;
            if (parens) out += '(';
            print_expr(*e.left, prec, out);
            out += e.kind == PathExpr::Kind::sum    ? " + "
                   : e.kind == PathExpr::Kind::compose ? " . "
                                                       : " & ";
            print_expr(*e.right, prec + 1, out);
            if (parens) out += ')';
            return;
        }
    }
}

}  // namespace

std::string to_string(const PathExpr& expr) {
    std::string out;
    print_expr(expr, 1, out);
    return out;
}

std::string to_string(const RuleProgram& program) {
    std::string out;
    for (const Rule& rule : program.rules) {
        out += rule.target;
        out += " <- ";
        out += to_string(*rule.expr);
        out += '\n';
    }
    return out;
}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Kind { label, arrow, plus, dot, amp, lparen, rparen, newline, end };

    Kind kind = Kind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

bool label_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind kind, std::string text, std::size_t col) {
        tokens.push_back(Token{kind, std::move(text), line, col});
    };
    while (i < source.size()) {
        const char c = source[i];
        if (c == '\n') {
            push(Token::Kind::newline, "\n", column);
            ++i;
            ++line;
            column = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++column;
            continue;
        }
        if (c == '#') {
            while (i < source.size() && source[i] != '\n') ++i;
            continue;
        }
        const std::size_t start_col = column;
        if (label_start(c)) {
            std::size_t j = i;
            while (j < source.size() && label_char(source[j])) ++j;
            push(Token::Kind::label, std::string(source.substr(i, j - i)),
                 start_col);
            column += j - i;
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Token::Kind::plus, "+", start_col); break;
            case '.': push(Token::Kind::dot, ".", start_col); break;
            case '&': push(Token::Kind::amp, "&", start_col); break;
            case '(': push(Token::Kind::lparen, "(", start_col); break;
            case ')': push(Token::Kind::rparen, ")", start_col); break;
            case '<':
                if (i + 1 < source.size() && source[i + 1] == '-') {
                    push(Token::Kind::arrow, "<-", start_col);
                    ++i;
                    ++column;
                    break;
                }
                [[fallthrough]];
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 line, start_col);
        }
        ++i;
        ++column;
    }
    tokens.push_back(Token{Token::Kind::end, "", line, column});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    RuleProgram parse_program() {
        RuleProgram program;
        skip_newlines();
        while (peek().kind != Token::Kind::end) {
            program.rules.push_back(parse_rule());
            if (peek().kind != Token::Kind::end) expect(Token::Kind::newline);
            skip_newlines();
        }
        return program;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    void skip_newlines() {
        while (peek().kind == Token::Kind::newline) advance();
    }

    const Token& expect(Token::Kind kind) {
        if (peek().kind != kind) fail(describe(kind));
        return advance();
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        const std::string got = t.kind == Token::Kind::end ? "end of input"
                                : t.kind == Token::Kind::newline
                                    ? "end of line"
                                    : "'" + t.text + "'";
        throw ParseError("expected " + expected + ", found " + got, t.line,
                         t.column);
    }

    static std::string describe(Token::Kind kind) {
        switch (kind) {
            case Token::Kind::label: return "a label";
            case Token::Kind::arrow: return "'<-'";
            case Token::Kind::rparen: return "')'";
            case Token::Kind::newline: return "end of line";
            default: return "token";
        }
    }

    Rule parse_rule() {
        const Token target = expect(Token::Kind::label);
        if (!targets_.insert(target.text).second)
            throw ParseError("duplicate rule target '" + target.text + "'",
                             target.line, target.column);
        expect(Token::Kind::arrow);
        PathExprPtr expr = parse_expr();
        if (peek().kind != Token::Kind::newline &&
            peek().kind != Token::Kind::end)
            fail("end of rule");
        return Rule{target.text, std::move(expr)};
    }

    PathExprPtr parse_expr() {
        PathExprPtr left = parse_term();
        while (peek().kind == Token::Kind::plus) {
            advance();
            left = ast::sum(std::move(left), parse_term());
        }
        return left;
    }

    PathExprPtr parse_term() {
        PathExprPtr left = parse_factor();
        while (peek().kind == Token::Kind::dot ||
               peek().kind == Token::Kind::amp) {
            const bool compose = advance().kind == Token::Kind::dot;
            PathExprPtr right = parse_factor();
            left = compose ? ast::compose(std::move(left), std::move(right))
                           : ast::filter(std::move(left), std::move(right));
        }
        return left;
    }

    PathExprPtr parse_factor() {
        if (peek().kind == Token::Kind::lparen) {
            advance();
            PathExprPtr inner = parse_expr();
            expect(Token::Kind::rparen);
            return inner;
        }
        if (peek().kind != Token::Kind::label) fail("an expression");
        const Token name = advance();
        if (peek().kind == Token::Kind::lparen) {
            advance();
            PathExprPtr inner = parse_expr();
            expect(Token::Kind::rparen);
            if (name.text == "T") return ast::transpose(std::move(inner));
            if (name.text == "conv") return ast::converse(std::move(inner));
            if (name.text == "clip") return ast::clip(std::move(inner));
            if (name.text == "not") return ast::not_op(std::move(inner));
            throw ParseError("unknown function name '" + name.text + "'",
                             name.line, name.column);
        }
        if (name.text == "I") return ast::identity_ref();
        return ast::label_ref(name.text);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::unordered_set<std::string> targets_;
};

}  // namespace

RuleProgram parse_rules(std::string_view source) {
    return Parser(tokenize(source)).parse_program();
}

EvidenceMatrix evaluate(const PathExpr& expr, const EvidenceNetwork& snapshot) {
    switch (expr.kind) {
        case PathExpr::Kind::label_ref:
            return snapshot.slice(expr.label);
        case PathExpr::Kind::identity_ref:
            return identity(snapshot.vertex_count());
        case PathExpr::Kind::compose:
            return matmul(evaluate(*expr.left, snapshot),
                          evaluate(*expr.right, snapshot));
        case PathExpr::Kind::sum:
            return entrywise_sum(evaluate(*expr.left, snapshot),
                                 evaluate(*expr.right, snapshot));
        case PathExpr::Kind::filter:
            return hadamard(evaluate(*expr.left, snapshot),
                            evaluate(*expr.right, snapshot));
        case PathExpr::Kind::transpose:
            return transpose(evaluate(*expr.left, snapshot));
        case PathExpr::Kind::converse:
            return converse_transpose(evaluate(*expr.left, snapshot));
        case PathExpr::Kind::clip:
            return clip(evaluate(*expr.left, snapshot));
        case PathExpr::Kind::not_op: {
            EvidenceMatrix operand = evaluate(*expr.left, snapshot);
            if (!operand.is_indicator())
                throw EvalError("'not' applied to a non-indicator expression: " +
                                to_string(*expr.left));
            return not_filter(operand);
        }
    }
    throw EvalError("malformed expression node");
}

void step(const RuleProgram& program, EvidenceNetwork& net) {
    std::vector<std::pair<const std::string*, EvidenceMatrix>> results;
    results.reserve(program.rules.size());
    // Every right-hand side sees the same time-t snapshot; targets are only
    // swapped in once all evaluations have succeeded.
    for (const Rule& rule : program.rules) {
        if (!rule.expr) throw EvalError("rule '" + rule.target + "' has no body");
        results.emplace_back(&rule.target, evaluate(*rule.expr, net));
    }
    for (auto& [target, matrix] : results)
        net.merge_slice(*target, matrix, EvidenceNetwork::MergeMode::replace);
}

void run(const RuleProgram& program, EvidenceNetwork& net, int steps) {
    if (steps < 1) throw std::invalid_argument("run: steps must be >= 1");
    for (int i = 0; i < steps; ++i) step(program, net);
}

}  // namespace epl
