// The expression DSL over event files: add / natadd / mul nodes with at
// least two children each, atom references, and bottom-up evaluation that
// binds the file's constraints at every operation node.

#ifndef OIE_EXPRESSION_HPP
#define OIE_EXPRESSION_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "oie/event_file.hpp"
#include "oie/sequential.hpp"

namespace oie {

struct Expression;
using ExpressionPtr = std::shared_ptr<const Expression>;

struct AtomRef {
    EventStarId id;
};
struct AddNode {
    std::vector<ExpressionPtr> children; // size >= 2
    Timestamp alpha;
    Timestamp beta;
};
struct NatAddNode {
    std::vector<ExpressionPtr> children; // size >= 2
};
struct MulNode {
    std::vector<ExpressionPtr> children; // size >= 2
};

struct Expression {
    std::variant<AtomRef, AddNode, NatAddNode, MulNode> node;
};

// Grammar:
//   expr   := add | mul | natadd | ident
//   add    := "add(" expr ("," expr)+ ";" "alpha=" num "," "beta=" num ")"
//   mul    := "mul(" expr ("," expr)+ ")"
//   natadd := "natadd(" expr ("," expr)+ ")"
//   num    := integer | decimal | integer "/" integer
// Whitespace insensitive. Throws ParseError with line and column on
// syntax errors; unknown identifiers are caught at evaluation time.
ExpressionPtr parse_expression(const std::string& text);

// The referenced atom ids in left-to-right first-occurrence order.
std::vector<EventStarId> expression_atoms(const Expression& expr);

std::string format_expression(const Expression& expr);

struct EvalOptions {
    IntersectionMode mode = IntersectionMode::pairwise;
    Limits limits = {};
};

struct EvalOutcome {
    OIE value;
    // Step that voided the outermost operation node, none for non-void
    // results. A void child counts as step 1 of its parent.
    VoidStep voided = VoidStep::none;
};

// Evaluates bottom-up; each node's operands keep their written order (the
// ascending index tuple) and receive the file constraints applicable to
// their atomic operand labels. Throws InvalidInputError for unresolved
// ids and for natadd operands that break the shared-window precondition.
EvalOutcome evaluate_traced(const Expression& expr, const EventFile& file,
                            const EvalOptions& options = {});
OIE evaluate(const Expression& expr, const EventFile& file,
             const EvalOptions& options = {});

} // namespace oie

#endif
