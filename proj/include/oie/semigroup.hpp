// The finite commutative semigroup induced by complete sequential addition
// on subsets of n base events, its Cayley table, and the Full CSA diagram.

#ifndef OIE_SEMIGROUP_HPP
#define OIE_SEMIGROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oie/error.hpp"

namespace oie {

// A subset of base events {1..n} as a bitmask; bit k-1 set means event k
// participates. The empty mask is the absorbing element v_abs.
class SemigroupElement {
  public:
    constexpr SemigroupElement() = default;
    constexpr explicit SemigroupElement(std::uint32_t mask) : mask_(mask) {}

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr bool is_absorbing() const { return mask_ == 0; }
    constexpr std::size_t size() const {
        std::uint32_t m = mask_;
        std::size_t c = 0;
        while (m != 0) {
            m &= m - 1;
            ++c;
        }
        return c;
    }

    // "v_abs" for the absorbing element, otherwise "v" followed by the
    // ascending member indices. Indices join directly ("v12") while all
    // members are single digits and with "_" separators once any member
    // exceeds 9 ("v1_12").
    std::string name() const;

    friend constexpr bool operator==(SemigroupElement, SemigroupElement) = default;

  private:
    std::uint32_t mask_ = 0;
};

// Absorbing on contact with v_abs and on any shared base event, otherwise
// the union of the two subsets.
constexpr SemigroupElement semigroup_op(SemigroupElement a, SemigroupElement b) {
    if (a.is_absorbing() || b.is_absorbing() || (a.mask() & b.mask()) != 0) {
        return SemigroupElement{};
    }
    return SemigroupElement{a.mask() | b.mask()};
}

// All 2^n elements: v_abs first, then subsets grouped by ascending size and
// ordered by ascending member indices within each size group. Throws
// CapacityExceededError above the cap.
std::vector<SemigroupElement> enumerate_elements(std::size_t n, std::size_t cap = 12);

class CayleyTable {
  public:
    CayleyTable(std::vector<SemigroupElement> elements,
                std::vector<SemigroupElement> cells);

    std::size_t order() const { return elements_.size(); }
    const std::vector<SemigroupElement>& elements() const { return elements_; }
    SemigroupElement cell(std::size_t i, std::size_t j) const;

  private:
    std::vector<SemigroupElement> elements_;
    std::vector<SemigroupElement> cells_; // row-major, order() x order()
};

CayleyTable cayley_table(std::size_t n, std::size_t cap = 12);

enum class DiagramLayout { circular, grid };

// Graphviz DOT text for the Full CSA diagram: one node per element, one
// undirected edge per unordered pair of distinct elements whose product is
// not absorbing, labeled by that product. Output is deterministic byte for
// byte for a given n and layout.
std::string emit_full_csa_diagram(std::size_t n, DiagramLayout layout,
                                  std::size_t cap = 12);

} // namespace oie

#endif
