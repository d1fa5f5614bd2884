#include "oie/semigroup.hpp"

#include <algorithm>

namespace oie {

namespace {

std::vector<std::size_t> member_indices(SemigroupElement e) {
    std::vector<std::size_t> indices;
    for (std::size_t k = 0; k < 32; ++k) {
        if ((e.mask() >> k) & 1u) indices.push_back(k + 1);
    }
    return indices;
}

} // namespace

std::string SemigroupElement::name() const {
    if (is_absorbing()) return "v_abs";
    const auto indices = member_indices(*this);
    const bool wide = indices.back() > 9;
    std::string out = "v";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (wide && i > 0) out += "_";
        out += std::to_string(indices[i]);
    }
    return out;
}

std::vector<SemigroupElement> enumerate_elements(std::size_t n, std::size_t cap) {
    if (n == 0) {
        throw InvalidInputError("the semigroup needs at least one base event");
    }
    if (n > cap || n > 31) {
        throw CapacityExceededError("a base of " + std::to_string(n) +
                                    " events exceeds the cap of " +
                                    std::to_string(cap) + " (2^n elements)");
    }
    std::vector<SemigroupElement> elements;
    elements.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        elements.push_back(SemigroupElement(mask));
    }
    std::sort(elements.begin(), elements.end(),
              [](SemigroupElement a, SemigroupElement b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return member_indices(a) < member_indices(b);
              });
    return elements;
}

CayleyTable::CayleyTable(std::vector<SemigroupElement> elements,
                         std::vector<SemigroupElement> cells)
    : elements_(std::move(elements)), cells_(std::move(cells)) {
    if (cells_.size() != elements_.size() * elements_.size()) {
        throw InvalidInputError("Cayley cells must form a square over the elements");
    }
}

SemigroupElement CayleyTable::cell(std::size_t i, std::size_t j) const {
    if (i >= order() || j >= order()) {
        throw InvalidInputError("Cayley cell index out of range");
    }
    return cells_[i * order() + j];
}

CayleyTable cayley_table(std::size_t n, std::size_t cap) {
    auto elements = enumerate_elements(n, cap);
    std::vector<SemigroupElement> cells;
    cells.reserve(elements.size() * elements.size());
    for (const auto a : elements) {
        for (const auto b : elements) {
            cells.push_back(semigroup_op(a, b));
        }
    }
    return CayleyTable(std::move(elements), std::move(cells));
}

std::string emit_full_csa_diagram(std::size_t n, DiagramLayout layout, std::size_t cap) {
    const auto elements = enumerate_elements(n, cap);
    std::string out = "graph full_csa_n" + std::to_string(n) + " {\n";
    out += "    layout=";
    out += layout == DiagramLayout::circular ? "circo" : "dot";
    out += ";\n    node [shape=ellipse];\n";
    for (const auto e : elements) {
        out += "    " + e.name() + " [label=\"" + e.name() + "\"];\n";
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            const SemigroupElement product = semigroup_op(elements[i], elements[j]);
            if (product.is_absorbing()) continue;
            out += "    " + elements[i].name() + " -- " + elements[j].name() +
                   " [label=\"" + product.name() + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace oie
