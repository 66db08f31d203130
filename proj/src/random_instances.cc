#include <nuar/errors.hh>
#include <nuar/random_instances.hh>

using std::vector;

namespace nuar
{
    auto random_embed_instance(const Digraph & h, std::mt19937_64 & rng, int max_vertices, std::string name) -> ColoredGraph
    {
        if (! h.symmetric() || h.size() == 0 || max_vertices < 1)
            throw Error(ErrorKind::InvalidArgument, "random instances need a non-empty undirected template");

        int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        double colour_rate = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        std::uniform_int_distribution<int> pick(0, h.size() - 1);

        vector<int> colour(n, -1);
        for (int v = 0 ; v < n ; ++v)
            if (coin(rng) < colour_rate)
                colour[v] = pick(rng);

        vector<Arc> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v) {
                if (colour[u] != -1 && colour[v] != -1 && ! h.adjacent(colour[u], colour[v]))
                    continue;
                if (coin(rng) < density)
                    edges.emplace_back(u, v);
            }

        vector<vector<int> > colors(n);
        for (int v = 0 ; v < n ; ++v)
            if (colour[v] != -1)
                colors[v].push_back(colour[v]);
        return ColoredGraph(Digraph::undirected(std::move(name), n, std::move(edges)), h.size(), colors);
    }
}
