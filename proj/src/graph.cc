#include <nuar/errors.hh>
#include <nuar/graph.hh>

#include <algorithm>
#include <deque>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace nuar
{
    auto to_string(ErrorKind kind) -> string
    {
        switch (kind) {
            case ErrorKind::InvalidArgument:      return "InvalidArgument";
            case ErrorKind::NotBipartite:         return "NotBipartite";
            case ErrorKind::NotConnected:         return "NotConnected";
            case ErrorKind::SizeCapExceeded:      return "SizeCapExceeded";
            case ErrorKind::NotInduced:           return "NotInduced";
            case ErrorKind::NotInjective:         return "NotInjective";
            case ErrorKind::PreconditionViolated: return "PreconditionViolated";
            case ErrorKind::TemplateMismatch:     return "TemplateMismatch";
            case ErrorKind::NotAnObstruction:     return "NotAnObstruction";
            case ErrorKind::HypothesisViolated:   return "HypothesisViolated";
            case ErrorKind::FamilyMemberFeasible: return "FamilyMemberFeasible";
            case ErrorKind::VertexIsLeaf:         return "VertexIsLeaf";
            case ErrorKind::VertexColored:        return "VertexColored";
            case ErrorKind::Unreachable:          return "Unreachable";
            case ErrorKind::Parse:                return "Parse";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const string & message, vector<int> witness) :
        std::runtime_error(message),
        _kind(kind),
        _witness(std::move(witness))
    {
    }

    ParseError::ParseError(int line, const string & message) :
        Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    Digraph::Digraph(string name, int size, vector<Arc> arcs, bool symmetric) :
        _name(std::move(name)),
        _size(size),
        _symmetric(symmetric),
        _arcs(std::move(arcs))
    {
        if (size < 0)
            throw Error(ErrorKind::InvalidArgument, "negative vertex count");

        for (auto & [u, v] : _arcs)
            if (u < 0 || v < 0 || u >= size || v >= size)
                throw Error(ErrorKind::InvalidArgument, "arc endpoint out of range", { u, v });

        if (symmetric) {
            auto n = _arcs.size();
            for (size_t i = 0 ; i < n ; ++i)
                _arcs.emplace_back(_arcs[i].second, _arcs[i].first);
        }

        std::sort(_arcs.begin(), _arcs.end());
        _arcs.erase(std::unique(_arcs.begin(), _arcs.end()), _arcs.end());

        _out.resize(size);
        _in.resize(size);
        for (auto & [u, v] : _arcs) {
            _out[u].push_back(v);
            _in[v].push_back(u);
        }
        for (auto & row : _in)
            std::sort(row.begin(), row.end());
    }

    auto Digraph::directed(string name, int size, vector<Arc> arcs) -> Digraph
    {
        return Digraph(std::move(name), size, std::move(arcs), false);
    }

    auto Digraph::undirected(string name, int size, vector<Arc> edges) -> Digraph
    {
        return Digraph(std::move(name), size, std::move(edges), true);
    }

    auto Digraph::undirected_edges() const -> vector<Arc>
    {
        vector<Arc> result;
        for (auto [u, v] : _arcs)
            result.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto Digraph::has_arc(int from, int to) const -> bool
    {
        return std::binary_search(_out[from].begin(), _out[from].end(), to);
    }

    auto Digraph::has_loops() const -> bool
    {
        return std::any_of(_arcs.begin(), _arcs.end(), [] (const Arc & a) { return a.first == a.second; });
    }

    auto Digraph::neighbours(int v) const -> vector<int>
    {
        vector<int> result;
        std::set_union(_out[v].begin(), _out[v].end(), _in[v].begin(), _in[v].end(), std::back_inserter(result));
        return result;
    }

    auto Digraph::degree(int v) const -> int
    {
        return int(neighbours(v).size());
    }

    auto Digraph::with_name(string name) const -> Digraph
    {
        Digraph result = *this;
        result._name = std::move(name);
        return result;
    }

    auto Digraph::same_structure(const Digraph & other) const -> bool
    {
        return _size == other._size && _symmetric == other._symmetric && _arcs == other._arcs;
    }

    auto symmetric_closure(const Digraph & d) -> Digraph
    {
        return Digraph(d.name(), d.size(), vector<Arc>(d.arcs().begin(), d.arcs().end()), true);
    }

    namespace
    {
        struct TwoColouring
        {
            vector<int> side;            // 0 or 1, per vertex
            vector<int> odd_cycle;       // non-empty iff not bipartite
            int components = 0;
        };

        auto path_to_root(int v, const vector<int> & parent) -> vector<int>
        {
            vector<int> path{ v };
            while (parent[v] != -1) {
                v = parent[v];
                path.push_back(v);
            }
            return path;
        }

        auto two_colour(const Digraph & d) -> TwoColouring
        {
            TwoColouring result;
            result.side.assign(d.size(), -1);
            vector<int> parent(d.size(), -1);

            for (auto & [u, v] : d.arcs())
                if (u == v) {
                    result.odd_cycle = { u };
                    break;
                }

            for (int root = 0 ; root < d.size() ; ++root) {
                if (result.side[root] != -1)
                    continue;
                ++result.components;
                result.side[root] = 0;
                std::deque<int> queue{ root };
                while (! queue.empty()) {
                    int u = queue.front();
                    queue.pop_front();
                    for (int w : d.neighbours(u)) {
                        if (result.side[w] == -1) {
                            result.side[w] = 1 - result.side[u];
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        else if (result.side[w] == result.side[u] && result.odd_cycle.empty() && w != u) {
                            auto pu = path_to_root(u, parent), pw = path_to_root(w, parent);
                            // strip the common tail to find the lowest common ancestor
                            while (pu.size() > 1 && pw.size() > 1 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
                                pu.pop_back();
                                pw.pop_back();
                            }
                            vector<int> cycle(pu.rbegin(), pu.rend());
                            for (size_t i = 0 ; i + 1 < pw.size() ; ++i)
                                cycle.push_back(pw[i]);
                            result.odd_cycle = std::move(cycle);
                        }
                    }
                }
            }
            return result;
        }
    }

    auto classify(const Digraph & d) -> StructureReport
    {
        StructureReport report;
        auto colouring = two_colour(d);
        report.connected = colouring.components <= 1;
        report.bipartite = colouring.odd_cycle.empty();
        report.nontrivial = d.size() > 1 && d.arc_count() > 0;

        report.strongly_bipartite = true;
        for (int v = 0 ; v < d.size() ; ++v) {
            bool has_in = d.in_degree(v) > 0, has_out = d.out_degree(v) > 0;
            if (! has_in)
                report.sources.push_back(v);
            if (! has_out)
                report.sinks.push_back(v);
            if (has_in && has_out)
                report.strongly_bipartite = false;
        }
        return report;
    }

    auto bipartition(const Digraph & d) -> Bipartition
    {
        auto colouring = two_colour(d);
        if (! colouring.odd_cycle.empty())
            throw Error(ErrorKind::NotBipartite, "graph '" + d.name() + "' is not bipartite", colouring.odd_cycle);
        if (colouring.components > 1)
            throw Error(ErrorKind::NotConnected, "graph '" + d.name() + "' is not connected");

        Bipartition result;
        for (int v = 0 ; v < d.size() ; ++v)
            (colouring.side[v] == 0 ? result.part_a : result.part_b).push_back(v);
        return result;
    }

    auto orient_bipartition(const Digraph & h, PartSelector from_part) -> Digraph
    {
        auto parts = bipartition(h);
        vector<bool> in_from(h.size(), false);
        for (int v : from_part == PartSelector::FromA ? parts.part_a : parts.part_b)
            in_from[v] = true;

        vector<Arc> arcs;
        for (auto [u, v] : h.undirected_edges())
            arcs.push_back(in_from[u] ? Arc{ u, v } : Arc{ v, u });

        return Digraph::directed(h.name() + (from_part == PartSelector::FromA ? "_ab" : "_ba"), h.size(), std::move(arcs));
    }

    auto tuple_count(int n, int k, size_t size_cap) -> optional<size_t>
    {
        size_t result = 1;
        for (int i = 0 ; i < k ; ++i) {
            if (n != 0 && result > size_cap / size_t(n))
                return std::nullopt;
            result *= size_t(n);
        }
        if (result > size_cap)
            return std::nullopt;
        return result;
    }

    auto encode_tuple(span<const int> tuple, int base) -> size_t
    {
        size_t id = 0;
        for (int x : tuple)
            id = id * size_t(base) + size_t(x);
        return id;
    }

    auto decode_tuple(size_t id, int base, int arity) -> vector<int>
    {
        vector<int> tuple(arity);
        for (int p = arity - 1 ; p >= 0 ; --p) {
            tuple[p] = int(id % size_t(base));
            id /= size_t(base);
        }
        return tuple;
    }

    auto tuple_coordinate(size_t id, int base, int arity, int p) -> int
    {
        for (int i = arity - 1 ; i > p ; --i)
            id /= size_t(base);
        return int(id % size_t(base));
    }

    auto power(const Digraph & h, int k, size_t size_cap) -> Digraph
    {
        if (k < 1)
            throw Error(ErrorKind::InvalidArgument, "power exponent must be positive");
        auto count = tuple_count(h.size(), k, size_cap);
        if (! count)
            throw Error(ErrorKind::SizeCapExceeded, "power of '" + h.name() + "' exceeds the size cap");

        // Odometer over k-tuples of arcs; each combination is one product arc.
        vector<Arc> arcs;
        auto base_arcs = h.arcs();
        if (! base_arcs.empty()) {
            vector<size_t> odometer(k, 0);
            while (true) {
                size_t from = 0, to = 0;
                for (int p = 0 ; p < k ; ++p) {
                    from = from * size_t(h.size()) + size_t(base_arcs[odometer[p]].first);
                    to = to * size_t(h.size()) + size_t(base_arcs[odometer[p]].second);
                }
                arcs.emplace_back(int(from), int(to));

                int p = k - 1;
                while (p >= 0 && ++odometer[p] == base_arcs.size())
                    odometer[p--] = 0;
                if (p < 0)
                    break;
            }
        }

        return Digraph(h.name() + "^" + std::to_string(k), int(*count), std::move(arcs), h.symmetric());
    }

    auto distances_from(const Digraph & h, int source) -> vector<int>
    {
        vector<int> dist(h.size(), -1);
        dist[source] = 0;
        std::deque<int> queue{ source };
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            auto visit = [&] (int w) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            };
            for (int w : h.out_neighbours(u))
                visit(w);
            for (int w : h.in_neighbours(u))
                visit(w);
        }
        return dist;
    }

    auto distance(const Digraph & h, int a, int b) -> optional<int>
    {
        if (a < 0 || b < 0 || a >= h.size() || b >= h.size())
            throw Error(ErrorKind::InvalidArgument, "vertex out of range", { a, b });
        int d = distances_from(h, a)[b];
        if (d < 0)
            return std::nullopt;
        return d;
    }

    auto distance_matrix(const Digraph & h) -> vector<vector<int> >
    {
        vector<vector<int> > result;
        result.reserve(h.size());
        for (int v = 0 ; v < h.size() ; ++v)
            result.push_back(distances_from(h, v));
        return result;
    }
}
