// The two combo filters and the sequential operations built on them:
// complete sequential addition (windowed and natural) and complete
// sequential multiplication.

#ifndef OIE_SEQUENTIAL_HPP
#define OIE_SEQUENTIAL_HPP

#include "oie/core.hpp"
#include "oie/feasibility.hpp"

namespace oie {

// The shared window (alpha, beta) for addition; alpha < beta is enforced
// at construction.
class DomainWindow {
public:
    DomainWindow(Timestamp alpha, Timestamp beta);

    const Timestamp& alpha() const { return alpha_; }
    const Timestamp& beta() const { return beta_; }

private:
    Timestamp alpha_;
    Timestamp beta_;
};

// How the shared-atom test of step 1 reads for three or more operands.
// Pairwise voids the result when any two operands share an atom, which is
// the default because planning the same atom twice is never meaningful.
// Aggregate is the literal n-ary intersection: void only when one atom is
// common to every operand. The readings coincide for two operands.
enum class IntersectionMode { pairwise, aggregate };

// Keep combos lying inside [alpha, beta], and only if afterwards every
// position attains start = alpha in some member and end = beta in some
// member; otherwise the empty set. The input set must be non-empty.
ComboSet domain_filtered_subset(const ComboSet& cs, const DomainWindow& w);

// Keep combos whose members are pairwise ordered: for all positions i < j,
// end of c[i] <= start of c[j]. The input set must be non-empty.
ComboSet asc_order_filtered_subset(const ComboSet& cs);

// Which step produced a void result. Step 1 covers void operands and
// shared atoms, step 2 an empty feasible set, step 3 an emptying filter.
enum class VoidStep { none = 0, operands = 1, feasibility = 2, filter = 3 };

struct SequentialResult {
    OIE value;
    VoidStep voided = VoidStep::none;
};

// Complete sequential addition of the operands under idx with window w.
// Non-void results have components in idx order, the domain-filtered
// feasible set as details, derived intervals, and the union of atom sets.
SequentialResult csa_traced(const std::vector<OIE>& events, const IndexTuple& idx,
                            const DomainWindow& w, const ConstraintSet& cs,
                            IntersectionMode mode = IntersectionMode::pairwise,
                            const Limits& limits = {});
OIE csa(const std::vector<OIE>& events, const IndexTuple& idx,
        const DomainWindow& w, const ConstraintSet& cs,
        IntersectionMode mode = IntersectionMode::pairwise,
        const Limits& limits = {});

// Addition whose window is forced to the operands' shared global minimum
// start and maximum end. Throws PreconditionViolatedError when any operand
// is void or the minima/maxima differ between operands.
SequentialResult natural_csa_traced(const std::vector<OIE>& events, const IndexTuple& idx,
                                    const ConstraintSet& cs,
                                    IntersectionMode mode = IntersectionMode::pairwise,
                                    const Limits& limits = {});
OIE natural_csa(const std::vector<OIE>& events, const IndexTuple& idx,
                const ConstraintSet& cs,
                IntersectionMode mode = IntersectionMode::pairwise,
                const Limits& limits = {});

// Complete sequential multiplication: as addition but with the ascending
// ordered filter in step 3, so results schedule operands strictly one
// after another in combo position order.
SequentialResult csm_traced(const std::vector<OIE>& events, const IndexTuple& idx,
                            const ConstraintSet& cs,
                            IntersectionMode mode = IntersectionMode::pairwise,
                            const Limits& limits = {});
OIE csm(const std::vector<OIE>& events, const IndexTuple& idx,
        const ConstraintSet& cs,
        IntersectionMode mode = IntersectionMode::pairwise,
        const Limits& limits = {});

} // namespace oie

#endif
