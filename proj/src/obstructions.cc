#include <nuar/errors.hh>
#include <nuar/obstructions.hh>

using std::string;
using std::vector;

namespace nuar
{
    using std::to_string;

    namespace
    {
        auto check_hypothesis(const Digraph & h, const StructureReport & report, bool want_strongly_bipartite) -> void
        {
            if (! report.nontrivial)
                throw Error(ErrorKind::HypothesisViolated, "'" + h.name() + "' is trivial");
            if (! report.connected)
                throw Error(ErrorKind::HypothesisViolated, "'" + h.name() + "' is not connected");
            if (want_strongly_bipartite && ! report.strongly_bipartite)
                throw Error(ErrorKind::HypothesisViolated, "'" + h.name() + "' is not strongly bipartite");
            if (! want_strongly_bipartite && (! h.symmetric() || ! report.bipartite))
                throw Error(ErrorKind::HypothesisViolated, "'" + h.name() + "' is not an undirected bipartite graph");
        }

        auto doubly_colored_vertices(const Digraph & h, bool symmetric) -> vector<ColoredGraph>
        {
            vector<ColoredGraph> result;
            for (int a = 0 ; a < h.size() ; ++a)
                for (int b = a + 1 ; b < h.size() ; ++b)
                    result.emplace_back(Digraph("A_" + to_string(a) + "_" + to_string(b), 1, { }, symmetric),
                            h.size(), vector<vector<int> >{ { a, b } });
            return result;
        }
    }

    auto elementary_obstructions_directed(const Digraph & h) -> vector<ColoredGraph>
    {
        auto report = classify(h);
        check_hypothesis(h, report, true);

        auto result = doubly_colored_vertices(h, false);

        for (int d : report.sources)
            result.emplace_back(Digraph::directed("B_" + to_string(d), 2, { { 0, 1 } }),
                    h.size(), vector<vector<int> >{ { }, { d } });

        for (int u : report.sinks)
            result.emplace_back(Digraph::directed("C_" + to_string(u), 2, { { 0, 1 } }),
                    h.size(), vector<vector<int> >{ { u }, { } });

        result.push_back(ColoredGraph::uncolored(Digraph::directed("D", 3, { { 0, 1 }, { 1, 2 } }), h.size()));
        return result;
    }

    auto elementary_obstructions_bipartite(const Digraph & h, int max_length) -> vector<ColoredGraph>
    {
        if (max_length < 1)
            throw Error(ErrorKind::InvalidArgument, "maximum length must be at least 1");
        auto report = classify(h);
        check_hypothesis(h, report, false);

        auto result = doubly_colored_vertices(h, true);
        auto dist = distance_matrix(h);

        for (int a = 0 ; a < h.size() ; ++a)
            for (int b = a ; b < h.size() ; ++b)
                for (int length = 1 ; length <= max_length ; ++length) {
                    if ((dist[a][b] - length) % 2 == 0)
                        continue;
                    vector<Arc> edges;
                    for (int i = 0 ; i < length ; ++i)
                        edges.emplace_back(i, i + 1);
                    vector<vector<int> > colors(length + 1);
                    colors.front().push_back(a);
                    colors.back().push_back(b);
                    result.emplace_back(Digraph::undirected("B_" + to_string(a) + "_" + to_string(b) + "_" + to_string(length),
                                length + 1, std::move(edges)), h.size(), colors);
                }

        for (int length = 3 ; length <= max_length ; length += 2) {
            vector<Arc> edges;
            for (int i = 0 ; i < length ; ++i)
                edges.emplace_back(i, (i + 1) % length);
            result.push_back(ColoredGraph::uncolored(Digraph::undirected("C_" + to_string(length), length, std::move(edges)), h.size()));
        }

        return result;
    }
}
