#include <nuar/colored.hh>
#include <nuar/errors.hh>

#include <algorithm>

using std::span;
using std::string;
using std::vector;

namespace nuar
{
    ColoredGraph::ColoredGraph(Digraph carrier, int template_size, vector<ColorSet> colors) :
        _carrier(std::move(carrier)),
        _template_size(template_size),
        _colors(std::move(colors))
    {
        if (template_size < 0)
            throw Error(ErrorKind::InvalidArgument, "negative template size");
        if (int(_colors.size()) != _carrier.size())
            throw Error(ErrorKind::InvalidArgument, "colour table does not match the carrier");
        for (auto & c : _colors)
            if (int(c.size()) != template_size)
                throw Error(ErrorKind::InvalidArgument, "colour set has the wrong width");
    }

    namespace
    {
        auto colour_sets_from_lists(int vertices, int template_size, const vector<vector<int> > & lists) -> vector<ColorSet>
        {
            if (int(lists.size()) != vertices)
                throw Error(ErrorKind::InvalidArgument, "colour table does not match the carrier");
            vector<ColorSet> result(vertices, ColorSet(template_size));
            for (int v = 0 ; v < vertices ; ++v)
                for (int h : lists[v]) {
                    if (h < 0 || h >= template_size)
                        throw Error(ErrorKind::InvalidArgument, "colour out of range", { v, h });
                    result[v].set(h);
                }
            return result;
        }
    }

    ColoredGraph::ColoredGraph(Digraph carrier, int template_size, const vector<vector<int> > & colors) :
        ColoredGraph(carrier, template_size, colour_sets_from_lists(carrier.size(), template_size, colors))
    {
    }

    auto ColoredGraph::uncolored(Digraph carrier, int template_size) -> ColoredGraph
    {
        auto n = carrier.size();
        return ColoredGraph(std::move(carrier), template_size, vector<ColorSet>(n, ColorSet(template_size)));
    }

    auto ColoredGraph::color_list(int v) const -> vector<int>
    {
        vector<int> result;
        for (auto h = _colors[v].find_first() ; h != ColorSet::npos ; h = _colors[v].find_next(h))
            result.push_back(int(h));
        return result;
    }

    auto ColoredGraph::colored_vertex_count() const -> int
    {
        return int(std::count_if(_colors.begin(), _colors.end(), [] (const ColorSet & c) { return c.any(); }));
    }

    auto ColoredGraph::with_name(string name) const -> ColoredGraph
    {
        return ColoredGraph(_carrier.with_name(std::move(name)), _template_size, _colors);
    }

    auto ColoredGraph::same_structure(const ColoredGraph & other) const -> bool
    {
        return _template_size == other._template_size && _carrier.same_structure(other._carrier) && _colors == other._colors;
    }

    auto to_string(const SubstructureDelta & delta) -> string
    {
        switch (delta.kind) {
            case DeltaKind::RemoveEdge:
                return "remove edge " + std::to_string(delta.edge.first) + "-" + std::to_string(delta.edge.second);
            case DeltaKind::RemoveColor:
                return "remove colour " + std::to_string(delta.color) + " from vertex " + std::to_string(delta.vertex);
            case DeltaKind::RemoveIsolatedVertex:
                return "remove isolated vertex " + std::to_string(delta.vertex);
        }
        return "?";
    }

    auto canonical_template(const Digraph & h) -> ColoredGraph
    {
        vector<ColorSet> colors(h.size(), ColorSet(h.size()));
        for (int v = 0 ; v < h.size() ; ++v)
            colors[v].set(v);
        return ColoredGraph(h.with_name(h.name() + "^c"), h.size(), std::move(colors));
    }

    auto embed_as_colored(const Digraph & g, const Digraph & h, span<const int> embedding) -> ColoredGraph
    {
        if (int(embedding.size()) != h.size())
            throw Error(ErrorKind::InvalidArgument, "embedding must map every template vertex");

        vector<int> preimage(g.size(), -1);
        for (int x = 0 ; x < h.size() ; ++x) {
            int image = embedding[x];
            if (image < 0 || image >= g.size())
                throw Error(ErrorKind::InvalidArgument, "embedding image out of range", { x, image });
            if (preimage[image] != -1)
                throw Error(ErrorKind::NotInjective, "template vertices " + std::to_string(preimage[image]) + " and "
                        + std::to_string(x) + " share an image", { preimage[image], x });
            preimage[image] = x;
        }

        for (int a = 0 ; a < h.size() ; ++a)
            for (int b = 0 ; b < h.size() ; ++b)
                if (h.has_arc(a, b) != g.has_arc(embedding[a], embedding[b]))
                    throw Error(ErrorKind::NotInduced, "arc " + std::to_string(a) + "->" + std::to_string(b)
                            + (h.has_arc(a, b) ? " is missing from" : " is extra in") + " the image", { a, b });

        vector<ColorSet> colors(g.size(), ColorSet(h.size()));
        for (int x = 0 ; x < h.size() ; ++x)
            colors[embedding[x]].set(x);
        return ColoredGraph(g.with_name(g.name() + "_" + h.name()), h.size(), std::move(colors));
    }

    auto maximal_proper_substructures(const ColoredGraph & x) -> vector<SubstructureDelta>
    {
        vector<SubstructureDelta> result;
        auto & carrier = x.carrier();

        for (auto [u, v] : carrier.arcs())
            if (! carrier.symmetric() || u <= v)
                result.push_back(SubstructureDelta{ DeltaKind::RemoveEdge, { u, v } });

        for (int v = 0 ; v < x.size() ; ++v)
            for (int h : x.color_list(v))
                result.push_back(SubstructureDelta{ DeltaKind::RemoveColor, { -1, -1 }, v, h });

        for (int v = 0 ; v < x.size() ; ++v)
            if (carrier.out_degree(v) == 0 && carrier.in_degree(v) == 0 && ! x.is_colored(v))
                result.push_back(SubstructureDelta{ DeltaKind::RemoveIsolatedVertex, { -1, -1 }, v });

        return result;
    }

    auto apply_delta(const ColoredGraph & x, const SubstructureDelta & delta) -> ColoredGraph
    {
        auto & carrier = x.carrier();
        switch (delta.kind) {
            case DeltaKind::RemoveEdge: {
                auto [a, b] = delta.edge;
                if (! carrier.has_arc(a, b))
                    throw Error(ErrorKind::InvalidArgument, "no such edge to remove", { a, b });
                vector<Arc> arcs;
                for (auto arc : carrier.arcs())
                    if (arc != Arc{ a, b } && ! (carrier.symmetric() && arc == Arc{ b, a }))
                        arcs.push_back(arc);
                vector<ColorSet> colors;
                for (int v = 0 ; v < x.size() ; ++v)
                    colors.push_back(x.colors(v));
                return ColoredGraph(Digraph(carrier.name(), carrier.size(), std::move(arcs), carrier.symmetric()),
                        x.template_size(), std::move(colors));
            }

            case DeltaKind::RemoveColor: {
                if (! x.has_color(delta.vertex, delta.color))
                    throw Error(ErrorKind::InvalidArgument, "no such colour to remove", { delta.vertex, delta.color });
                vector<ColorSet> colors;
                for (int v = 0 ; v < x.size() ; ++v)
                    colors.push_back(x.colors(v));
                colors[delta.vertex].reset(delta.color);
                return ColoredGraph(carrier, x.template_size(), std::move(colors));
            }

            case DeltaKind::RemoveIsolatedVertex: {
                int r = delta.vertex;
                if (carrier.out_degree(r) != 0 || carrier.in_degree(r) != 0 || x.is_colored(r))
                    throw Error(ErrorKind::InvalidArgument, "vertex is not isolated and uncoloured", { r });
                vector<Arc> arcs;
                for (auto [u, v] : carrier.arcs())
                    arcs.emplace_back(u > r ? u - 1 : u, v > r ? v - 1 : v);
                vector<ColorSet> colors;
                for (int v = 0 ; v < x.size() ; ++v)
                    if (v != r)
                        colors.push_back(x.colors(v));
                return ColoredGraph(Digraph(carrier.name(), carrier.size() - 1, std::move(arcs), carrier.symmetric()),
                        x.template_size(), std::move(colors));
            }
        }
        throw Error(ErrorKind::InvalidArgument, "unknown delta");
    }

    auto h_embed(const ColoredGraph & g, const Digraph & h) -> HEmbedding
    {
        if (g.template_size() != h.size())
            throw Error(ErrorKind::TemplateMismatch, "coloured graph is not over this template");
        if (! h.symmetric() || ! g.carrier().symmetric())
            throw Error(ErrorKind::PreconditionViolated, "H-embed needs undirected graphs");

        auto & carrier = g.carrier();
        for (int v = 0 ; v < g.size() ; ++v)
            if (g.colors(v).count() > 1)
                throw Error(ErrorKind::PreconditionViolated, "vertex " + std::to_string(v) + " has more than one colour", { v });

        auto colour_of = [&] (int v) { return g.is_colored(v) ? int(g.colors(v).find_first()) : -1; };

        for (auto [u, v] : carrier.arcs()) {
            int cu = colour_of(u), cv = colour_of(v);
            if (cu != -1 && cv != -1 && ! h.has_arc(cu, cv))
                throw Error(ErrorKind::PreconditionViolated, "edge " + std::to_string(u) + "-" + std::to_string(v)
                        + " joins colours that are not adjacent in the template", { u, v });
        }

        HEmbedding result;
        vector<int> new_id(g.size(), -1);
        for (int v = 0 ; v < g.size() ; ++v)
            if (! g.is_colored(v)) {
                new_id[v] = h.size() + int(result.uncolored_vertices.size());
                result.uncolored_vertices.push_back(v);
            }

        vector<Arc> edges(h.arcs().begin(), h.arcs().end());
        for (auto [u, v] : carrier.arcs()) {
            int cu = colour_of(u), cv = colour_of(v);
            if (cu == -1 && cv == -1)
                edges.emplace_back(new_id[u], new_id[v]);
            else if (cu != -1 && cv == -1)
                edges.emplace_back(cu, new_id[v]);
        }

        int total = h.size() + int(result.uncolored_vertices.size());
        result.graph = Digraph::undirected(g.name() + "_embed", total, std::move(edges));
        for (int x = 0 ; x < h.size() ; ++x)
            result.embedding.push_back(x);
        return result;
    }

    auto disjoint_union(const ColoredGraph & a, const ColoredGraph & b) -> ColoredGraph
    {
        if (a.template_size() != b.template_size())
            throw Error(ErrorKind::TemplateMismatch, "disjoint union over different templates");
        if (a.carrier().symmetric() != b.carrier().symmetric())
            throw Error(ErrorKind::InvalidArgument, "disjoint union of directed and undirected graphs");

        vector<Arc> arcs(a.carrier().arcs().begin(), a.carrier().arcs().end());
        for (auto [u, v] : b.carrier().arcs())
            arcs.emplace_back(u + a.size(), v + a.size());
        vector<ColorSet> colors;
        for (int v = 0 ; v < a.size() ; ++v)
            colors.push_back(a.colors(v));
        for (int v = 0 ; v < b.size() ; ++v)
            colors.push_back(b.colors(v));
        return ColoredGraph(Digraph(a.name() + "+" + b.name(), a.size() + b.size(), std::move(arcs), a.carrier().symmetric()),
                a.template_size(), std::move(colors));
    }
}
