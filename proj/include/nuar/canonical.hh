#ifndef NUAR_GUARD_CANONICAL_HH
#define NUAR_GUARD_CANONICAL_HH 1

#include <nuar/colored.hh>

#include <cstdint>
#include <vector>

namespace nuar
{
    /// A certificate for a coloured graph up to colour-respecting isomorphism:
    /// two coloured graphs are isomorphic iff their keys are equal. order[i] is
    /// the original vertex placed at position i of the canonical labelling.
    struct CanonicalForm
    {
        std::vector<std::uint64_t> key;
        std::vector<int> order;
    };

    /// Vertices are first split into cells by iterated degree/colour
    /// refinement; the lexicographically smallest encoding over every ordering
    /// that respects the cells is the certificate. Exact, but exponential in
    /// the cell sizes, so meant for graphs of a dozen or so vertices.
    [[nodiscard]] auto canonical_form(const ColoredGraph & x) -> CanonicalForm;

    [[nodiscard]] auto canonical_relabel(const ColoredGraph & x) -> ColoredGraph;

    [[nodiscard]] auto are_isomorphic(const ColoredGraph & a, const ColoredGraph & b) -> bool;
}

#endif
