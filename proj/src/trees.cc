#include <nuar/canonical.hh>
#include <nuar/errors.hh>
#include <nuar/obstructions.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

using std::string;
using std::vector;

namespace nuar
{
    using std::to_string;

    auto to_string(TreeViolationKind kind) -> string
    {
        switch (kind) {
            case TreeViolationKind::WrongCarrier:          return "wrong-carrier";
            case TreeViolationKind::NotConnected:          return "not-connected";
            case TreeViolationKind::HasCycle:              return "has-cycle";
            case TreeViolationKind::NotStronglyBipartite:  return "not-strongly-bipartite";
            case TreeViolationKind::ColoredInternalVertex: return "colored-internal-vertex";
            case TreeViolationKind::UncoloredLeaf:         return "uncolored-leaf";
            case TreeViolationKind::LeafColorCount:        return "leaf-color-count";
            case TreeViolationKind::RepeatedLeafColor:     return "repeated-leaf-color";
            case TreeViolationKind::ParityMismatch:        return "parity-mismatch";
            case TreeViolationKind::LeafOrientation:       return "leaf-orientation";
        }
        return "?";
    }

    auto validate_h_tree(const ColoredGraph & t, const Digraph & h, bool directed, bool strict_leaf_colors) -> TreeValidation
    {
        TreeValidation result;
        auto add = [&] (TreeViolationKind kind, vector<int> vertices, string message) {
            result.valid = false;
            result.violations.push_back(TreeViolation{ kind, std::move(vertices), std::move(message) });
        };

        auto & carrier = t.carrier();
        if (t.template_size() != h.size()) {
            add(TreeViolationKind::WrongCarrier, { }, "tree is coloured over a different template");
            return result;
        }
        if (directed && carrier.symmetric() && carrier.arc_count() > 0)
            add(TreeViolationKind::WrongCarrier, { }, "a directed H-tree needs an oriented carrier");
        if (! directed && ! carrier.symmetric())
            add(TreeViolationKind::WrongCarrier, { }, "an H-tree needs an undirected carrier");

        auto structure = classify(carrier);
        auto edges = carrier.undirected_edges();
        if (! structure.connected)
            add(TreeViolationKind::NotConnected, { }, "carrier is not connected");
        bool has_loop = carrier.has_loops();
        bool antiparallel = ! carrier.symmetric() && edges.size() != carrier.arc_count();
        if (has_loop || antiparallel || (structure.connected && int(edges.size()) != t.size() - 1))
            add(TreeViolationKind::HasCycle, { }, "carrier is not acyclic");
        if (directed && ! structure.strongly_bipartite)
            add(TreeViolationKind::NotStronglyBipartite, { }, "carrier is not strongly bipartite");

        vector<int> leaves;
        for (int v = 0 ; v < t.size() ; ++v) {
            bool leaf = carrier.degree(v) == 1;
            if (leaf)
                leaves.push_back(v);
            if (t.is_colored(v) && ! leaf)
                add(TreeViolationKind::ColoredInternalVertex, { v }, "vertex " + to_string(v) + " is coloured but not a leaf");
            if (leaf && ! t.is_colored(v))
                add(TreeViolationKind::UncoloredLeaf, { v }, "leaf " + to_string(v) + " is uncoloured");
            if (leaf && t.colors(v).count() > 1)
                add(TreeViolationKind::LeafColorCount, { v }, "leaf " + to_string(v) + " has more than one colour");
        }

        auto single_colour = [&] (int v) { return t.colors(v).count() == 1 ? int(t.colors(v).find_first()) : -1; };

        if (strict_leaf_colors) {
            std::map<int, int> first_with;
            for (int v : leaves) {
                int c = single_colour(v);
                if (c == -1)
                    continue;
                auto [it, fresh] = first_with.emplace(c, v);
                if (! fresh)
                    add(TreeViolationKind::RepeatedLeafColor, { it->second, v }, "leaves " + to_string(it->second)
                            + " and " + to_string(v) + " share colour " + to_string(c));
            }
        }

        if (! directed) {
            auto tree_dist = distance_matrix(carrier);
            auto h_dist = distance_matrix(h);
            for (std::size_t i = 0 ; i < leaves.size() ; ++i)
                for (std::size_t j = i + 1 ; j < leaves.size() ; ++j) {
                    int va = leaves[i], vb = leaves[j];
                    int a = single_colour(va), b = single_colour(vb);
                    if (a == -1 || b == -1 || tree_dist[va][vb] < 0)
                        continue;
                    if (h_dist[a][b] < 0 || (tree_dist[va][vb] - h_dist[a][b]) % 2 != 0)
                        add(TreeViolationKind::ParityMismatch, { va, vb }, "leaves " + to_string(va) + " and " + to_string(vb)
                                + " are at distance " + to_string(tree_dist[va][vb]) + " but their colours are at distance "
                                + (h_dist[a][b] < 0 ? string{ "infinity" } : to_string(h_dist[a][b])));
                }
        }
        else {
            for (int v : leaves) {
                int c = single_colour(v);
                if (c == -1)
                    continue;
                bool sink = h.out_degree(c) == 0, source = h.in_degree(c) == 0;
                bool incoming = carrier.in_degree(v) > 0, outgoing = carrier.out_degree(v) > 0;
                if ((! sink && ! source) || (sink && ! source && outgoing) || (source && ! sink && incoming))
                    add(TreeViolationKind::LeafOrientation, { v }, "leaf " + to_string(v) + " is oriented against colour " + to_string(c));
            }
        }

        return result;
    }

    auto free_trees(int vertices) -> vector<Digraph>
    {
        if (vertices <= 0)
            return { };
        vector<Digraph> current{ Digraph::undirected("tree", 1, { }) };
        for (int size = 2 ; size <= vertices ; ++size) {
            vector<Digraph> next;
            std::set<vector<std::uint64_t> > seen;
            for (auto & tree : current)
                for (int v = 0 ; v < tree.size() ; ++v) {
                    auto edges = tree.undirected_edges();
                    edges.emplace_back(v, size - 1);
                    Digraph grown = Digraph::undirected("tree", size, std::move(edges));
                    if (seen.insert(canonical_form(ColoredGraph::uncolored(grown, 0)).key).second)
                        next.push_back(std::move(grown));
                }
            current = std::move(next);
        }
        return current;
    }

    auto connected_bipartite_graphs(int vertices) -> vector<Digraph>
    {
        if (vertices <= 0)
            return { };
        if (vertices == 1)
            return { Digraph::undirected("bip1_0", 1, { }) };

        vector<Digraph> result;
        std::set<vector<std::uint64_t> > seen;
        for (int a = 1 ; a <= vertices / 2 ; ++a) {
            int b = vertices - a;
            unsigned long masks = 1ul << (a * b);
            for (unsigned long mask = 1 ; mask < masks ; ++mask) {
                vector<Arc> edges;
                for (int i = 0 ; i < a ; ++i)
                    for (int j = 0 ; j < b ; ++j)
                        if (mask & (1ul << (i * b + j)))
                            edges.emplace_back(i, a + j);
                Digraph g = Digraph::undirected("", vertices, std::move(edges));
                if (! classify(g).connected)
                    continue;
                if (seen.insert(canonical_form(ColoredGraph::uncolored(g, 0)).key).second)
                    result.push_back(g.with_name("bip" + to_string(vertices) + "_" + to_string(result.size())));
            }
        }
        return result;
    }

    namespace
    {
        // The two strongly bipartite orientations of a tree.
        auto tree_orientations(const Digraph & tree) -> vector<Digraph>
        {
            if (tree.size() == 1)
                return { Digraph::directed(tree.name(), 1, { }) };
            return { orient_bipartition(tree, PartSelector::FromA), orient_bipartition(tree, PartSelector::FromB) };
        }
    }

    auto enumerate_h_trees(const Digraph & h, int max_leaves, int max_vertices, bool strict_leaf_colors) -> vector<HTree>
    {
        vector<HTree> result;
        if (max_leaves < 2 || max_vertices < 2 || h.size() == 0)
            return result;

        bool directed = ! h.symmetric();
        std::set<vector<std::uint64_t> > seen;

        for (int size = 2 ; size <= max_vertices ; ++size)
            for (auto & shape : free_trees(size)) {
                vector<int> leaves;
                for (int v = 0 ; v < shape.size() ; ++v)
                    if (shape.degree(v) == 1)
                        leaves.push_back(v);
                if (int(leaves.size()) > max_leaves)
                    continue;

                vector<Digraph> carriers = directed ? tree_orientations(shape) : vector<Digraph>{ shape };
                for (auto & carrier : carriers) {
                    vector<int> colouring(leaves.size(), 0);
                    while (true) {
                        bool distinct = true;
                        if (strict_leaf_colors) {
                            auto sorted = colouring;
                            std::sort(sorted.begin(), sorted.end());
                            distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                        }

                        if (distinct) {
                            vector<vector<int> > colors(size);
                            for (std::size_t i = 0 ; i < leaves.size() ; ++i)
                                colors[leaves[i]].push_back(colouring[i]);
                            ColoredGraph tree(carrier.with_name("T" + to_string(result.size())), h.size(), colors);
                            if (validate_h_tree(tree, h, directed, strict_leaf_colors).valid
                                    && seen.insert(canonical_form(tree).key).second)
                                result.push_back(HTree{ std::move(tree), directed });
                        }

                        int p = int(colouring.size()) - 1;
                        while (p >= 0 && ++colouring[p] == h.size())
                            colouring[p--] = 0;
                        if (p < 0)
                            break;
                    }
                }
            }

        return result;
    }

    auto critical_tree_obstructions(const Digraph & h, int max_leaves, int max_vertices, bool strict_leaf_colors) -> vector<HTree>
    {
        auto target = canonical_template(h);
        vector<HTree> result;
        for (auto & t : enumerate_h_trees(h, max_leaves, max_vertices, strict_leaf_colors))
            if (is_critical_obstruction(t.tree, target).critical)
                result.push_back(t);
        return result;
    }

    auto split_tree_at(const HTree & t, int u, int color, const Digraph & h) -> vector<SplitPiece>
    {
        auto & tree = t.tree;
        auto & carrier = tree.carrier();
        if (u < 0 || u >= tree.size())
            throw Error(ErrorKind::InvalidArgument, "vertex out of range", { u });
        if (color < 0 || color >= tree.template_size())
            throw Error(ErrorKind::InvalidArgument, "colour out of range", { color });
        if (carrier.degree(u) == 1)
            throw Error(ErrorKind::VertexIsLeaf, "vertex " + to_string(u) + " is a leaf", { u });
        if (tree.is_colored(u))
            throw Error(ErrorKind::VertexColored, "vertex " + to_string(u) + " is coloured", { u });
        if (carrier.degree(u) == 0)
            throw Error(ErrorKind::InvalidArgument, "vertex " + to_string(u) + " has no branches", { u });

        vector<SplitPiece> pieces;
        for (int start : carrier.neighbours(u)) {
            vector<bool> in_branch(tree.size(), false);
            in_branch[start] = true;
            std::deque<int> queue{ start };
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int w : carrier.neighbours(v))
                    if (w != u && ! in_branch[w]) {
                        in_branch[w] = true;
                        queue.push_back(w);
                    }
            }

            SplitPiece piece;
            vector<int> new_id(tree.size(), -1);
            for (int v = 0 ; v < tree.size() ; ++v)
                if (in_branch[v]) {
                    new_id[v] = int(piece.origin.size());
                    piece.origin.push_back(v);
                }
            int copy = int(piece.origin.size());
            piece.origin.push_back(u);
            new_id[u] = copy;

            vector<Arc> arcs;
            for (auto [a, b] : carrier.arcs())
                if ((in_branch[a] || a == u) && (in_branch[b] || b == u) && ! (a == u && b == u))
                    arcs.emplace_back(new_id[a], new_id[b]);

            vector<ColorSet> colors;
            for (int v : piece.origin)
                colors.push_back(v == u ? ColorSet(tree.template_size()) : tree.colors(v));
            colors.back().set(color);

            ColoredGraph piece_graph(Digraph(tree.name() + "_split" + to_string(pieces.size()), copy + 1, std::move(arcs),
                        carrier.symmetric()), tree.template_size(), std::move(colors));
            piece.validation = validate_h_tree(piece_graph, h, t.directed);
            piece.tree = HTree{ std::move(piece_graph), t.directed };
            pieces.push_back(std::move(piece));
        }
        return pieces;
    }
}
