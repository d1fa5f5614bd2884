#include "oie/expression.hpp"

#include <cctype>

namespace oie {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message);
    }

    void expect(char c) {
        skip_ws();
        if (done() || peek() != c) {
            fail(done() ? std::string("expected '") + c + "' but the text ended"
                        : std::string("expected '") + c + "', found '" + peek() + "'");
        }
        advance();
    }

    bool try_consume(char c) {
        skip_ws();
        if (done() || peek() != c) return false;
        advance();
        return true;
    }

    std::string ident() {
        skip_ws();
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                        peek() == '_')) {
            fail(done() ? "expected an identifier but the text ended"
                        : std::string("expected an identifier, found '") + peek() +
                              "'");
        }
        std::string out;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_')) {
            out += peek();
            advance();
        }
        return out;
    }

    Rational number() {
        skip_ws();
        std::string out;
        if (!done() && (peek() == '-' || peek() == '+')) {
            out += peek();
            advance();
        }
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                           peek() == '.' || peek() == '/')) {
            out += peek();
            advance();
        }
        if (out.empty()) {
            fail(done() ? "expected a number but the text ended"
                        : std::string("expected a number, found '") + peek() + "'");
        }
        try {
            return Rational::parse(out);
        } catch (const ParseError&) {
            fail("malformed number \"" + out + "\"");
        }
    }
};

ExpressionPtr parse_expr(Cursor& cur);

std::vector<ExpressionPtr> parse_children(Cursor& cur) {
    std::vector<ExpressionPtr> children;
    children.push_back(parse_expr(cur));
    cur.skip_ws();
    if (cur.done() || (cur.peek() != ',')) {
        cur.fail("an operation needs at least two comma separated operands");
    }
    while (cur.try_consume(',')) {
        children.push_back(parse_expr(cur));
    }
    return children;
}

Rational parse_window_bound(Cursor& cur, const std::string& keyword) {
    const std::string word = cur.ident();
    if (word != keyword) {
        cur.fail("expected \"" + keyword + "\", found \"" + word + "\"");
    }
    cur.expect('=');
    return cur.number();
}

ExpressionPtr parse_expr(Cursor& cur) {
    cur.skip_ws();
    if (cur.done()) cur.fail("expected an expression but the text ended");

    const std::size_t mark_line = cur.line;
    const std::size_t mark_column = cur.column;
    const std::string word = cur.ident();
    cur.skip_ws();
    const bool call = !cur.done() && cur.peek() == '(';

    if (!call) {
        return std::make_shared<Expression>(Expression{AtomRef{word}});
    }
    if (word != "add" && word != "mul" && word != "natadd") {
        throw ParseError("line " + std::to_string(mark_line) + ", column " +
                         std::to_string(mark_column) + ": unknown operation \"" +
                         word + "\"");
    }

    cur.expect('(');
    auto children = parse_children(cur);
    if (word == "add") {
        cur.expect(';');
        const Rational alpha = parse_window_bound(cur, "alpha");
        cur.expect(',');
        const Rational beta = parse_window_bound(cur, "beta");
        cur.expect(')');
        if (!(alpha < beta)) {
            throw ParseError("line " + std::to_string(mark_line) + ", column " +
                             std::to_string(mark_column) +
                             ": add window must satisfy alpha < beta");
        }
        return std::make_shared<Expression>(
            Expression{AddNode{std::move(children), alpha, beta}});
    }
    cur.expect(')');
    if (word == "natadd") {
        return std::make_shared<Expression>(Expression{NatAddNode{std::move(children)}});
    }
    return std::make_shared<Expression>(Expression{MulNode{std::move(children)}});
}

void collect_atoms(const Expression& expr, std::vector<EventStarId>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AtomRef>) {
                for (const auto& seen : out) {
                    if (seen == node.id) return;
                }
                out.push_back(node.id);
            } else {
                for (const auto& child : node.children) collect_atoms(*child, out);
            }
        },
        expr.node);
}

const std::vector<ExpressionPtr>* node_children(const Expression& expr) {
    return std::visit(
        [](const auto& node) -> const std::vector<ExpressionPtr>* {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AtomRef>) {
                return nullptr;
            } else {
                return &node.children;
            }
        },
        expr.node);
}

EvalOutcome evaluate_node(const Expression& expr, const EventFile& file,
                          const EvalOptions& options) {
    if (const auto* atom = std::get_if<AtomRef>(&expr.node)) {
        for (const auto& spec : file.events) {
            if (spec.id != atom->id) continue;
            if (spec.intervals.empty()) {
                return {OIE::void_instance(), VoidStep::none};
            }
            return {OIE::atomic(spec.id, std::set<Interval>(spec.intervals.begin(),
                                                            spec.intervals.end())),
                    VoidStep::none};
        }
        throw InvalidInputError("expression references undeclared event \"" +
                                atom->id + "\"");
    }

    const auto& children = *node_children(expr);
    std::vector<OIE> operands;
    operands.reserve(children.size());
    for (const auto& child : children) {
        operands.push_back(evaluate_node(*child, file, options).value);
    }
    std::vector<EventStarId> labels;
    labels.reserve(operands.size());
    for (const auto& operand : operands) labels.push_back(oie_label(operand));
    const ConstraintSet cs = constraints_for(file, labels);
    const IndexTuple idx = IndexTuple::ascending(operands.size());

    SequentialResult result = std::visit(
        [&](const auto& node) -> SequentialResult {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AddNode>) {
                return csa_traced(operands, idx, DomainWindow(node.alpha, node.beta),
                                  cs, options.mode, options.limits);
            } else if constexpr (std::is_same_v<T, NatAddNode>) {
                return natural_csa_traced(operands, idx, cs, options.mode,
                                          options.limits);
            } else if constexpr (std::is_same_v<T, MulNode>) {
                return csm_traced(operands, idx, cs, options.mode, options.limits);
            } else {
                throw InvalidInputError("unreachable expression node");
            }
        },
        expr.node);
    return {std::move(result.value), result.voided};
}

} // namespace

ExpressionPtr parse_expression(const std::string& text) {
    Cursor cur{text};
    ExpressionPtr expr = parse_expr(cur);
    cur.skip_ws();
    if (!cur.done()) {
        cur.fail("unexpected trailing text after the expression");
    }
    return expr;
}

std::vector<EventStarId> expression_atoms(const Expression& expr) {
    std::vector<EventStarId> out;
    collect_atoms(expr, out);
    return out;
}

std::string format_expression(const Expression& expr) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AtomRef>) {
                return node.id;
            } else {
                std::string head;
                if constexpr (std::is_same_v<T, AddNode>) {
                    head = "add(";
                } else if constexpr (std::is_same_v<T, NatAddNode>) {
                    head = "natadd(";
                } else {
                    head = "mul(";
                }
                for (std::size_t i = 0; i < node.children.size(); ++i) {
                    if (i > 0) head += ", ";
                    head += format_expression(*node.children[i]);
                }
                if constexpr (std::is_same_v<T, AddNode>) {
                    head += "; alpha=" + node.alpha.str() + ", beta=" +
                            node.beta.str();
                }
                return head + ")";
            }
        },
        expr.node);
}

EvalOutcome evaluate_traced(const Expression& expr, const EventFile& file,
                            const EvalOptions& options) {
    return evaluate_node(expr, file, options);
}

OIE evaluate(const Expression& expr, const EventFile& file, const EvalOptions& options) {
    return evaluate_traced(expr, file, options).value;
}

} // namespace oie
