#ifndef NUAR_GUARD_HOMOMORPHISM_HH
#define NUAR_GUARD_HOMOMORPHISM_HH 1

#include <nuar/colored.hh>
#include <nuar/graph.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nuar
{
    /// A total vertex map from a source structure to a target structure.
    struct Homomorphism
    {
        std::vector<int> assignment;

        auto operator== (const Homomorphism &) const -> bool = default;
    };

    enum class SearchStatus
    {
        Found,
        NoHomomorphism
    };

    struct SearchStats
    {
        unsigned long long nodes = 0;
        unsigned long long propagations = 0;

        auto operator== (const SearchStats &) const -> bool = default;
    };

    struct SearchOutcome
    {
        SearchStatus status = SearchStatus::NoHomomorphism;
        std::optional<Homomorphism> witness;
        SearchStats stats;

        [[nodiscard]] auto found() const -> bool { return status == SearchStatus::Found; }
    };

    /// The independent checker. Scans every source arc and every source colour
    /// and returns a description of the first violation, or nullopt if the map
    /// is a homomorphism. Shares no code with the search.
    [[nodiscard]] auto homomorphism_violation(const ColoredGraph & source, const ColoredGraph & target,
            std::span<const int> assignment) -> std::optional<std::string>;

    [[nodiscard]] auto is_homomorphism(const ColoredGraph & source, const ColoredGraph & target,
            std::span<const int> assignment) -> bool;

    /// Plain digraph homomorphism check, no colours involved.
    [[nodiscard]] auto is_graph_homomorphism(const Digraph & source, const Digraph & target,
            std::span<const int> assignment) -> bool;

    /// Complete backtracking search for a colour- and arc-preserving map from x
    /// to target, maintaining arc consistency over the arc constraints. Branches
    /// on the smallest domain (lowest id on ties) and tries values in ascending
    /// order, so results are deterministic. Throws TemplateMismatch when the two
    /// structures are coloured over templates of different sizes.
    [[nodiscard]] auto find_homomorphism(const ColoredGraph & x, const ColoredGraph & target) -> SearchOutcome;

    /// Enumerates all |target|^|x| maps in lexicographic order. Only for tiny
    /// instances; this is the oracle the search is tested against.
    [[nodiscard]] auto brute_force_homomorphism(const ColoredGraph & x, const ColoredGraph & target) -> std::optional<Homomorphism>;

    [[nodiscard]] auto is_obstruction(const ColoredGraph & x, const ColoredGraph & target) -> bool;

    /// Looks for a retraction of g onto the copy of h given by embedding
    /// (template vertex -> vertex of g). The witness maps vertices of g to
    /// vertices of h and fixes the embedded copy.
    [[nodiscard]] auto find_retraction(const Digraph & g, const Digraph & h, std::span<const int> embedding) -> SearchOutcome;

    struct CriticalityVerdict
    {
        bool critical = false;
        std::optional<Homomorphism> feasibility_witness;       // set when x is not an obstruction at all
        std::optional<SubstructureDelta> obstructing_delta;    // set when a maximal proper substructure still obstructs
    };

    [[nodiscard]] auto is_critical_obstruction(const ColoredGraph & x, const ColoredGraph & target) -> CriticalityVerdict;

    /// Greedily walks down the substructure order while x stays an obstruction,
    /// trying edge removals, then colour removals, then isolated vertex removals
    /// (highest id first), until no single step keeps the obstruction. When
    /// kept_vertices is given it receives, for each output vertex, its id in x.
    /// Throws NotAnObstruction if x maps to target.
    [[nodiscard]] auto minimize_to_critical(const ColoredGraph & x, const ColoredGraph & target,
            std::vector<int> * kept_vertices = nullptr) -> ColoredGraph;
}

#endif
