#ifndef NUAR_GUARD_GRAPH_HH
#define NUAR_GUARD_GRAPH_HH 1

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nuar
{
    using Arc = std::pair<int, int>;

    inline constexpr std::size_t default_size_cap = 1'000'000;

    /// A finite digraph on vertices 0..n-1. An undirected graph is a digraph
    /// whose arc set is closed under reversal; such graphs carry the symmetric
    /// flag, and every constructor keeps the closure intact. Loops are allowed.
    class Digraph
    {
        private:
            std::string _name;
            int _size = 0;
            bool _symmetric = false;
            std::vector<Arc> _arcs;
            std::vector<std::vector<int> > _out, _in;

        public:
            Digraph() = default;

            /// Arcs are deduplicated. When symmetric is set, the reverse of every
            /// arc is added, so undirected edges may be listed once.
            Digraph(std::string name, int size, std::vector<Arc> arcs, bool symmetric);

            static auto directed(std::string name, int size, std::vector<Arc> arcs) -> Digraph;
            static auto undirected(std::string name, int size, std::vector<Arc> edges) -> Digraph;

            [[nodiscard]] auto name() const -> const std::string & { return _name; }
            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto symmetric() const -> bool { return _symmetric; }

            /// All arcs in ascending (tail, head) order.
            [[nodiscard]] auto arcs() const -> std::span<const Arc> { return _arcs; }
            [[nodiscard]] auto arc_count() const -> std::size_t { return _arcs.size(); }

            /// Undirected edges {u, v} with u <= v; for a directed graph this is
            /// the edge set of the symmetric closure.
            [[nodiscard]] auto undirected_edges() const -> std::vector<Arc>;

            [[nodiscard]] auto out_neighbours(int v) const -> std::span<const int> { return _out[v]; }
            [[nodiscard]] auto in_neighbours(int v) const -> std::span<const int> { return _in[v]; }
            [[nodiscard]] auto out_degree(int v) const -> int { return int(_out[v].size()); }
            [[nodiscard]] auto in_degree(int v) const -> int { return int(_in[v].size()); }
            [[nodiscard]] auto has_arc(int from, int to) const -> bool;
            [[nodiscard]] auto adjacent(int u, int v) const -> bool { return has_arc(u, v) || has_arc(v, u); }
            [[nodiscard]] auto has_loops() const -> bool;

            /// Undirected degree: number of distinct neighbours in the symmetric closure.
            [[nodiscard]] auto degree(int v) const -> int;
            [[nodiscard]] auto neighbours(int v) const -> std::vector<int>;

            [[nodiscard]] auto with_name(std::string name) const -> Digraph;

            /// Structural equality: size, symmetry and arc set. Names are ignored.
            [[nodiscard]] auto same_structure(const Digraph & other) const -> bool;

            auto operator== (const Digraph &) const -> bool = default;
    };

    struct Bipartition
    {
        std::vector<int> part_a;
        std::vector<int> part_b;
    };

    struct StructureReport
    {
        bool connected = false;
        bool bipartite = false;
        bool strongly_bipartite = false;
        bool nontrivial = false;
        std::vector<int> sources;
        std::vector<int> sinks;
    };

    enum class PartSelector
    {
        FromA,
        FromB
    };

    [[nodiscard]] auto symmetric_closure(const Digraph & d) -> Digraph;

    [[nodiscard]] auto classify(const Digraph & d) -> StructureReport;

    /// The unique bipartition of a connected bipartite graph (taken on the
    /// symmetric closure), with vertex 0 in part A. Throws NotBipartite with an
    /// odd closed walk as witness, or NotConnected.
    [[nodiscard]] auto bipartition(const Digraph & d) -> Bipartition;

    /// Orient every edge of a connected bipartite undirected graph out of the
    /// selected part.
    [[nodiscard]] auto orient_bipartition(const Digraph & h, PartSelector from_part) -> Digraph;

    /// The k-fold relational power. Vertex ids are mixed-radix encodings of
    /// k-tuples with the first coordinate most significant.
    [[nodiscard]] auto power(const Digraph & h, int k, std::size_t size_cap = default_size_cap) -> Digraph;

    /// Number of k-tuples over n values, or nullopt if it exceeds the cap.
    [[nodiscard]] auto tuple_count(int n, int k, std::size_t size_cap = default_size_cap) -> std::optional<std::size_t>;

    [[nodiscard]] auto encode_tuple(std::span<const int> tuple, int base) -> std::size_t;
    [[nodiscard]] auto decode_tuple(std::size_t id, int base, int arity) -> std::vector<int>;

    /// The value of coordinate p (0-based, most significant first) of an
    /// encoded tuple; this is the projection from the power back onto h.
    [[nodiscard]] auto tuple_coordinate(std::size_t id, int base, int arity, int p) -> int;

    /// Shortest path length in the symmetric closure, nullopt if unreachable.
    [[nodiscard]] auto distance(const Digraph & h, int a, int b) -> std::optional<int>;

    /// Breadth-first distances from one source in the symmetric closure; -1
    /// marks unreachable vertices.
    [[nodiscard]] auto distances_from(const Digraph & h, int source) -> std::vector<int>;

    /// All-pairs distances in the symmetric closure, -1 for unreachable.
    [[nodiscard]] auto distance_matrix(const Digraph & h) -> std::vector<std::vector<int> >;
}

#endif
