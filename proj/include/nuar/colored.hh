#ifndef NUAR_GUARD_COLORED_HH
#define NUAR_GUARD_COLORED_HH 1

#include <nuar/graph.hh>

#include <boost/dynamic_bitset.hpp>

#include <span>
#include <string>
#include <vector>

namespace nuar
{
    using ColorSet = boost::dynamic_bitset<>;

    /// A digraph whose vertices carry sets of colours drawn from the vertices
    /// of a template graph with template_size vertices. Vertex v is coloured
    /// with h when h is in colors(v).
    class ColoredGraph
    {
        private:
            Digraph _carrier;
            int _template_size = 0;
            std::vector<ColorSet> _colors;

        public:
            ColoredGraph() = default;
            ColoredGraph(Digraph carrier, int template_size, std::vector<ColorSet> colors);

            /// Convenience: colours given as lists of template vertices.
            ColoredGraph(Digraph carrier, int template_size, const std::vector<std::vector<int> > & colors);

            /// An uncoloured copy of the carrier.
            static auto uncolored(Digraph carrier, int template_size) -> ColoredGraph;

            [[nodiscard]] auto carrier() const -> const Digraph & { return _carrier; }
            [[nodiscard]] auto size() const -> int { return _carrier.size(); }
            [[nodiscard]] auto template_size() const -> int { return _template_size; }
            [[nodiscard]] auto name() const -> const std::string & { return _carrier.name(); }

            [[nodiscard]] auto colors(int v) const -> const ColorSet & { return _colors[v]; }
            [[nodiscard]] auto color_list(int v) const -> std::vector<int>;
            [[nodiscard]] auto has_color(int v, int h) const -> bool { return _colors[v].test(h); }
            [[nodiscard]] auto is_colored(int v) const -> bool { return _colors[v].any(); }
            [[nodiscard]] auto colored_vertex_count() const -> int;

            [[nodiscard]] auto with_name(std::string name) const -> ColoredGraph;

            /// Structural equality; carrier names are ignored.
            [[nodiscard]] auto same_structure(const ColoredGraph & other) const -> bool;
    };

    enum class DeltaKind
    {
        RemoveEdge,
        RemoveColor,
        RemoveIsolatedVertex
    };

    /// One step down the substructure order. For RemoveEdge on a symmetric
    /// carrier, both orientations of edge are removed and edge.first <= edge.second.
    struct SubstructureDelta
    {
        DeltaKind kind;
        Arc edge{ -1, -1 };
        int vertex = -1;
        int color = -1;

        auto operator== (const SubstructureDelta &) const -> bool = default;
    };

    auto to_string(const SubstructureDelta & delta) -> std::string;

    /// H^c: every vertex of h coloured with itself.
    [[nodiscard]] auto canonical_template(const Digraph & h) -> ColoredGraph;

    /// G_H: the vertex embedding[h] of g is coloured {h}, everything else is
    /// uncoloured. The image of the embedding must induce a copy of h.
    [[nodiscard]] auto embed_as_colored(const Digraph & g, const Digraph & h, std::span<const int> embedding) -> ColoredGraph;

    /// Every maximal proper substructure as a delta: edge removals in ascending
    /// order, then single colour removals, then removals of isolated uncoloured
    /// vertices. Isolated coloured vertices are not listed, because dropping one
    /// of their colours gives a strictly larger substructure.
    [[nodiscard]] auto maximal_proper_substructures(const ColoredGraph & x) -> std::vector<SubstructureDelta>;

    /// Vertices above a removed vertex shift down by one.
    [[nodiscard]] auto apply_delta(const ColoredGraph & x, const SubstructureDelta & delta) -> ColoredGraph;

    struct HEmbedding
    {
        Digraph graph;
        std::vector<int> embedding;           // template vertex -> vertex of graph
        std::vector<int> uncolored_vertices;  // vertex template_size + i came from uncolored_vertices[i]
    };

    /// The H-embed construction. Template vertices come first, then the
    /// uncoloured vertices of g in ascending id order.
    [[nodiscard]] auto h_embed(const ColoredGraph & g, const Digraph & h) -> HEmbedding;

    /// Disjoint union of colored graphs over the same template; the second
    /// operand's vertices are shifted after the first's.
    [[nodiscard]] auto disjoint_union(const ColoredGraph & a, const ColoredGraph & b) -> ColoredGraph;
}

#endif
