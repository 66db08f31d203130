#ifndef NUAR_GUARD_OBSTRUCTIONS_HH
#define NUAR_GUARD_OBSTRUCTIONS_HH 1

#include <nuar/colored.hh>
#include <nuar/graph.hh>
#include <nuar/homomorphism.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nuar
{
    /// Elementary critical obstructions of a non-trivial connected strongly
    /// bipartite digraph, in the order: doubly coloured vertices (pairs
    /// ascending), arcs whose sink carries a source colour, arcs whose source
    /// carries a sink colour, and the uncoloured directed path of length 2.
    /// Throws HypothesisViolated otherwise.
    [[nodiscard]] auto elementary_obstructions_directed(const Digraph & h) -> std::vector<ColoredGraph>;

    /// The elementary critical obstructions of a non-trivial connected
    /// bipartite graph with every path and cycle length capped at max_length:
    /// doubly coloured vertices, paths of length 1..max_length whose end
    /// colours have the wrong distance parity, and odd cycles. The true family
    /// is infinite. Throws HypothesisViolated, or InvalidArgument when
    /// max_length < 1.
    [[nodiscard]] auto elementary_obstructions_bipartite(const Digraph & h, int max_length) -> std::vector<ColoredGraph>;

    struct HTree
    {
        ColoredGraph tree;
        bool directed = false;
    };

    enum class TreeViolationKind
    {
        WrongCarrier,
        NotConnected,
        HasCycle,
        NotStronglyBipartite,
        ColoredInternalVertex,
        UncoloredLeaf,
        LeafColorCount,
        RepeatedLeafColor,
        ParityMismatch,
        LeafOrientation
    };

    [[nodiscard]] auto to_string(TreeViolationKind kind) -> std::string;

    struct TreeViolation
    {
        TreeViolationKind kind;
        std::vector<int> vertices;
        std::string message;
    };

    struct TreeValidation
    {
        bool valid = true;
        std::vector<TreeViolation> violations;
    };

    /// Checks t against the (directed, when requested) H-tree conditions and
    /// reports every violation. With strict_leaf_colors, two leaves may not
    /// share a colour; otherwise only "exactly one colour per leaf" is required.
    [[nodiscard]] auto validate_h_tree(const ColoredGraph & t, const Digraph & h, bool directed,
            bool strict_leaf_colors = false) -> TreeValidation;

    /// Unlabelled free trees on the given number of vertices, one per
    /// isomorphism class.
    [[nodiscard]] auto free_trees(int vertices) -> std::vector<Digraph>;

    /// Connected bipartite graphs on the given number of vertices, one per
    /// isomorphism class.
    [[nodiscard]] auto connected_bipartite_graphs(int vertices) -> std::vector<Digraph>;

    /// Every valid H-tree with 2..max_vertices vertices and at most max_leaves
    /// leaves, one per colour-respecting isomorphism class, ordered by vertex
    /// count. The directed variant is produced when h is not symmetric.
    [[nodiscard]] auto enumerate_h_trees(const Digraph & h, int max_leaves, int max_vertices,
            bool strict_leaf_colors = false) -> std::vector<HTree>;

    /// The members of enumerate_h_trees that are critical obstructions for h^c.
    [[nodiscard]] auto critical_tree_obstructions(const Digraph & h, int max_leaves, int max_vertices,
            bool strict_leaf_colors = false) -> std::vector<HTree>;

    struct SplitPiece
    {
        HTree tree;
        std::vector<int> origin;    // piece vertex -> vertex of the split tree; the new leaf copy of u maps to u
        TreeValidation validation;
    };

    /// Removes the uncoloured internal vertex u and re-attaches a copy of it,
    /// coloured {color}, as a leaf of each of the deg(u) branches. Each piece
    /// is re-validated; a failed validation is reported, not thrown. Throws
    /// VertexIsLeaf or VertexColored.
    [[nodiscard]] auto split_tree_at(const HTree & t, int u, int color, const Digraph & h) -> std::vector<SplitPiece>;

    enum class DualityStatus
    {
        Complete,
        IncompleteWithinBounds,
        Violated
    };

    [[nodiscard]] auto to_string(DualityStatus status) -> std::string;

    enum class DiscrepancyKind
    {
        UncoveredObstruction,    // X does not map to h^c, yet no member maps to X
        CoveredFeasible          // X maps to h^c, yet some member maps to X
    };

    struct Discrepancy
    {
        DiscrepancyKind kind;
        ColoredGraph x;
        std::optional<Homomorphism> feasibility;    // X -> h^c, for CoveredFeasible
        int member = -1;
        std::optional<Homomorphism> member_map;     // family[member] -> X, for CoveredFeasible
    };

    struct DualityReport
    {
        DualityStatus status = DualityStatus::Complete;
        int max_x_vertices = 0;
        long examined = 0;
        std::vector<Discrepancy> discrepancies;
    };

    /// All loopless coloured graphs on exactly the given number of vertices,
    /// with any colour subsets, one per colour-respecting isomorphism class.
    [[nodiscard]] auto enumerate_colored_graphs(int template_size, int vertices, bool symmetric) -> std::vector<ColoredGraph>;

    /// Tests whether family behaves as a homomorphism duality for h^c on every
    /// coloured graph with at most max_x_vertices vertices (symmetric graphs
    /// when h is symmetric, digraphs otherwise). Throws FamilyMemberFeasible,
    /// with the member index as witness, if a member maps to h^c.
    [[nodiscard]] auto verify_duality(const Digraph & h, std::span<const ColoredGraph> family, int max_x_vertices) -> DualityReport;

    enum class RetractVerdict
    {
        Consistent,
        CandidateCounterexample,
        Violated
    };

    [[nodiscard]] auto to_string(RetractVerdict verdict) -> std::string;

    struct TreeFailure
    {
        HTree tree;
        Homomorphism into_g;     // tree -> G_H
        bool critical = false;
    };

    struct SplitCheck
    {
        int failure = -1;
        int vertex = -1;
        int color = -1;
        std::vector<SplitPiece> pieces;
        int obstructing_piece = -1;
    };

    struct AbsoluteRetractReport
    {
        int max_leaves = 0, max_vertices = 0;
        int trees_examined = 0;
        int tree_obstructions = 0;
        int critical_tree_obstructions = 0;
        ColoredGraph g_h;
        bool hypothesis_holds = true;
        std::vector<TreeFailure> failures;
        std::vector<SplitCheck> splits;
        SearchOutcome retraction;
        RetractVerdict verdict = RetractVerdict::Consistent;
    };

    /// The bounded absolute-retract harness: checks that every H-tree
    /// obstruction for h^c within the bounds stays an obstruction for G_H,
    /// searches for a retraction of g onto h, and relates the two. Splits are
    /// recorded for every failing tree whose uncoloured vertex lands on a
    /// coloured vertex. Throws NotBipartite, NotInduced, NotInjective.
    [[nodiscard]] auto absolute_retract_check(const Digraph & g, const Digraph & h, std::span<const int> embedding,
            int max_leaves, int max_vertices, bool strict_leaf_colors = false) -> AbsoluteRetractReport;
}

#endif
