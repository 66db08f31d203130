#include "oracles.hh"

#include <nuar/errors.hh>
#include <nuar/colored.hh>

#include <doctest.h>

#include <set>
#include <tuple>

using namespace nuar;
using std::vector;

namespace
{
    auto error_kind(auto && f) -> std::optional<ErrorKind>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }
}

TEST_CASE("canonical template")
{
    auto k2 = canonical_template(oracle::path(2));
    CHECK(k2.color_list(0) == vector<int>{ 0 });
    CHECK(k2.color_list(1) == vector<int>{ 1 });

    auto single = canonical_template(Digraph::undirected("v", 1, { }));
    CHECK(single.color_list(0) == vector<int>{ 0 });

    auto c6 = canonical_template(oracle::cycle(6));
    for (int v = 0 ; v < 6 ; ++v)
        CHECK(c6.color_list(v) == vector<int>{ v });
    vector<int> identity{ 0, 1, 2, 3, 4, 5 };
    CHECK(oracle::is_map(c6, c6, identity));
}

TEST_CASE("colours are range checked")
{
    CHECK(error_kind([] { ColoredGraph(oracle::path(2), 2, vector<vector<int> >{ { 2 }, { } }); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { ColoredGraph(oracle::path(2), 2, vector<vector<int> >{ { 0 } }); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("embedding a template")
{
    auto k2 = oracle::path(2);

    auto self = embed_as_colored(k2, k2, vector<int>{ 0, 1 });
    CHECK(self.color_list(0) == vector<int>{ 0 });
    CHECK(self.color_list(1) == vector<int>{ 1 });

    auto p = Digraph::undirected("p", 3, { { 2, 0 }, { 0, 1 } });
    auto in_path = embed_as_colored(p, k2, vector<int>{ 0, 1 });
    CHECK(in_path.color_list(0) == vector<int>{ 0 });
    CHECK(in_path.color_list(1) == vector<int>{ 1 });
    CHECK_FALSE(in_path.is_colored(2));

    CHECK_NOTHROW((void) embed_as_colored(oracle::cycle(3), k2, vector<int>{ 0, 1 }));
    CHECK(error_kind([&] { (void) embed_as_colored(oracle::cycle(3), oracle::path(3), vector<int>{ 0, 1, 2 }); })
            == ErrorKind::NotInduced);
    CHECK(error_kind([&] { (void) embed_as_colored(p, k2, vector<int>{ 0, 0 }); }) == ErrorKind::NotInjective);
    CHECK(error_kind([&] { (void) embed_as_colored(p, k2, vector<int>{ 1, 2 }); }) == ErrorKind::NotInduced);
    CHECK(error_kind([&] { (void) embed_as_colored(p, k2, vector<int>{ 0 }); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("maximal proper substructures")
{
    auto doubly = ColoredGraph(Digraph::undirected("a", 1, { }), 2, vector<vector<int> >{ { 0, 1 } });
    CHECK(maximal_proper_substructures(doubly).size() == 2);

    auto edge = ColoredGraph::uncolored(oracle::path(2), 2);
    auto deltas = maximal_proper_substructures(edge);
    REQUIRE(deltas.size() == 1);
    CHECK(deltas[0].kind == DeltaKind::RemoveEdge);
    CHECK(apply_delta(edge, deltas[0]).carrier().arc_count() == 0);

    auto path = ColoredGraph(oracle::path(3), 3, vector<vector<int> >{ { 0 }, { }, { 2 } });
    CHECK(maximal_proper_substructures(path).size() == 4);

    auto isolated = ColoredGraph(Digraph::undirected("i", 3, { }), 2, vector<vector<int> >{ { }, { 1 }, { } });
    vector<int> removed;
    for (auto & d : maximal_proper_substructures(isolated))
        if (d.kind == DeltaKind::RemoveIsolatedVertex)
            removed.push_back(d.vertex);
    CHECK(removed == vector<int>{ 0, 2 });

    auto shifted = apply_delta(isolated, SubstructureDelta{ DeltaKind::RemoveIsolatedVertex, { -1, -1 }, 0, -1 });
    CHECK(shifted.size() == 2);
    CHECK(shifted.color_list(0) == vector<int>{ 1 });

    auto directed = ColoredGraph::uncolored(Digraph::directed("d", 2, { { 0, 1 }, { 1, 0 } }), 1);
    CHECK(maximal_proper_substructures(directed).size() == 2);
}

namespace
{
    auto weight(const ColoredGraph & x) -> std::size_t
    {
        std::size_t w = x.size() + x.carrier().arc_count();
        for (int v = 0 ; v < x.size() ; ++v)
            w += x.colors(v).count();
        return w;
    }

    // y in the vertex labels of x, so that two substructures compare as subsets of x
    auto relabelled(const ColoredGraph & y, const vector<int> & inclusion) -> std::tuple<vector<int>, std::set<Arc>, vector<vector<int> > >
    {
        std::set<Arc> arcs;
        for (auto [a, b] : y.carrier().arcs())
            arcs.emplace(inclusion[a], inclusion[b]);
        vector<vector<int> > colors;
        for (int v = 0 ; v < y.size() ; ++v)
            colors.push_back(y.color_list(v));
        return { inclusion, arcs, colors };
    }
}

TEST_CASE("deltas give distinct proper substructures")
{
    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto x = oracle::random_colored(rng, 4, 3, trial % 2 == 0);
        std::set<std::tuple<vector<int>, std::set<Arc>, vector<vector<int> > > > seen;
        for (auto & d : maximal_proper_substructures(x)) {
            auto y = apply_delta(x, d);
            vector<int> inclusion;
            for (int v = 0 ; v < x.size() ; ++v)
                if (! (d.kind == DeltaKind::RemoveIsolatedVertex && v == d.vertex))
                    inclusion.push_back(v);
            CHECK(oracle::is_map(y, x, inclusion));
            CHECK(weight(y) + 1 + (d.kind == DeltaKind::RemoveEdge && x.carrier().symmetric()) == weight(x));
            CHECK(seen.insert(relabelled(y, inclusion)).second);
        }
    }
}

TEST_CASE("H-embed")
{
    auto k2 = oracle::path(2);

    SUBCASE("uncoloured input becomes a disjoint union") {
        auto g = ColoredGraph::uncolored(oracle::path(3), 2);
        auto e = h_embed(g, k2);
        CHECK(e.graph.size() == 5);
        CHECK(e.graph.undirected_edges() == vector<Arc>{ { 0, 1 }, { 2, 3 }, { 3, 4 } });
        CHECK(e.embedding == vector<int>{ 0, 1 });
        CHECK(e.uncolored_vertices == vector<int>{ 0, 1, 2 });
    }
    SUBCASE("an edge to a coloured vertex is redirected to the colour") {
        auto g = ColoredGraph(oracle::path(2), 2, vector<vector<int> >{ { }, { 0 } });
        auto e = h_embed(g, k2);
        CHECK(e.graph.size() == 3);
        CHECK(e.graph.undirected_edges() == vector<Arc>{ { 0, 1 }, { 0, 2 } });
    }
    SUBCASE("preconditions") {
        auto doubly = ColoredGraph(Digraph::undirected("a", 1, { }), 2, vector<vector<int> >{ { 0, 1 } });
        CHECK(error_kind([&] { (void) h_embed(doubly, k2); }) == ErrorKind::PreconditionViolated);
        auto clash = ColoredGraph(oracle::path(2), 2, vector<vector<int> >{ { 0 }, { 0 } });
        CHECK(error_kind([&] { (void) h_embed(clash, k2); }) == ErrorKind::PreconditionViolated);
        auto directed = ColoredGraph::uncolored(Digraph::directed("d", 2, { { 0, 1 } }), 2);
        CHECK(error_kind([&] { (void) h_embed(directed, k2); }) == ErrorKind::PreconditionViolated);
        auto wrong = ColoredGraph::uncolored(oracle::path(2), 3);
        CHECK(error_kind([&] { (void) h_embed(wrong, k2); }) == ErrorKind::TemplateMismatch);
    }
}

TEST_CASE("H-embed keeps the template induced")
{
    std::mt19937_64 rng(13);
    for (auto & h : { oracle::path(2), oracle::path(4), oracle::cycle(6) })
        for (int trial = 0 ; trial < 40 ; ++trial) {
            // parity-consistent colouring of a random bipartite graph
            int n = 6;
            std::bernoulli_distribution coin(0.4);
            vector<Arc> edges;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if ((u + v) % 2 == 1 && coin(rng))
                        edges.emplace_back(u, v);
            auto hb = bipartition(h);
            vector<vector<int> > colors(n);
            for (int v = 0 ; v < n ; ++v)
                if (coin(rng)) {
                    auto & side = v % 2 == 0 ? hb.part_a : hb.part_b;
                    colors[v].push_back(side[std::uniform_int_distribution<std::size_t>(0, side.size() - 1)(rng)]);
                }
            // drop edges between coloured vertices whose colours are not adjacent
            vector<Arc> kept;
            for (auto [u, v] : edges)
                if (colors[u].empty() || colors[v].empty() || h.adjacent(colors[u][0], colors[v][0]))
                    kept.emplace_back(u, v);
            ColoredGraph g(Digraph::undirected("g", n, kept), h.size(), colors);

            auto e = h_embed(g, h);
            for (int a = 0 ; a < h.size() ; ++a)
                for (int b = 0 ; b < h.size() ; ++b)
                    CHECK(e.graph.has_arc(e.embedding[a], e.embedding[b]) == h.has_arc(a, b));
            CHECK(classify(e.graph).bipartite);
        }
}

TEST_CASE("disjoint union")
{
    auto a = ColoredGraph(oracle::path(2), 2, vector<vector<int> >{ { 0 }, { } });
    auto b = ColoredGraph(Digraph::undirected("v", 1, { }), 2, vector<vector<int> >{ { 1 } });
    auto u = disjoint_union(a, b);
    CHECK(u.size() == 3);
    CHECK(u.color_list(2) == vector<int>{ 1 });
    CHECK(u.carrier().undirected_edges() == vector<Arc>{ { 0, 1 } });
}
