#include <nuar/errors.hh>
#include <nuar/nu.hh>

#include <algorithm>
#include <limits>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace nuar
{
    using std::to_string;

    auto to_string(CheckStatus status) -> string
    {
        return status == CheckStatus::Holds ? "holds" : "violated";
    }

    namespace
    {
        auto tuple_text(const vector<int> & t) -> string
        {
            string result = "(";
            for (size_t i = 0 ; i < t.size() ; ++i)
                result += (i ? "," : "") + to_string(t[i]);
            return result + ")";
        }

        // Value repeated in all but at most one coordinate, or -1.
        auto near_unanimous_value(const vector<int> & tuple) -> int
        {
            int arity = int(tuple.size());
            for (int candidate : { tuple[0], tuple[1] }) {
                int agree = int(std::count(tuple.begin(), tuple.end(), candidate));
                if (agree >= arity - 1)
                    return candidate;
            }
            return -1;
        }
    }

    auto verify_nu_witness(const Digraph & h, const NuWitness & w) -> NuVerification
    {
        NuVerification result;
        auto fail = [&] (NuViolationKind kind, vector<int> t, vector<int> u, string message) {
            result.violation = NuViolation{ kind, std::move(t), std::move(u), std::move(message) };
            return result;
        };

        int n = h.size();
        auto count = tuple_count(n, w.arity, std::numeric_limits<size_t>::max());
        if (w.base_size != n || w.arity < 1 || ! count || w.table.size() != *count)
            return fail(NuViolationKind::TableShape, { }, { }, "table does not cover every tuple over the base graph");
        for (size_t id = 0 ; id < w.table.size() ; ++id)
            if (w.table[id] < 0 || w.table[id] >= n)
                return fail(NuViolationKind::TableShape, decode_tuple(id, n, w.arity), { }, "table value out of range");

        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y)
                for (int p = 0 ; p < w.arity ; ++p) {
                    vector<int> t(w.arity, x);
                    t[p] = y;
                    if (w(t) != x)
                        return fail(NuViolationKind::NearUnanimity, t, { }, "f" + tuple_text(t) + " = "
                                + to_string(w(t)) + ", expected " + to_string(x));
                }

        auto arcs = h.arcs();
        if (! arcs.empty()) {
            vector<size_t> odometer(w.arity, 0);
            vector<int> from(w.arity), to(w.arity);
            while (true) {
                for (int p = 0 ; p < w.arity ; ++p) {
                    from[p] = arcs[odometer[p]].first;
                    to[p] = arcs[odometer[p]].second;
                }
                if (! h.has_arc(w(from), w(to)))
                    return fail(NuViolationKind::Edge, from, to, "product arc " + tuple_text(from) + "->" + tuple_text(to)
                            + " maps to non-arc " + to_string(w(from)) + "->" + to_string(w(to)));

                int p = w.arity - 1;
                while (p >= 0 && ++odometer[p] == arcs.size())
                    odometer[p--] = 0;
                if (p < 0)
                    break;
            }
        }

        result.valid = true;
        return result;
    }

    auto build_nu_instance(const Digraph & h, int arity, size_t size_cap) -> ColoredGraph
    {
        if (arity < 3)
            throw Error(ErrorKind::InvalidArgument, "NU arity must be at least 3");

        auto carrier = power(h, arity, size_cap);
        vector<ColorSet> colors(carrier.size(), ColorSet(h.size()));
        for (int id = 0 ; id < carrier.size() ; ++id) {
            int value = near_unanimous_value(decode_tuple(size_t(id), h.size(), arity));
            if (value != -1)
                colors[id].set(value);
        }
        return ColoredGraph(carrier.with_name("K_" + h.name() + "_" + to_string(arity)), h.size(), std::move(colors));
    }

    auto find_nu_polymorphism(const Digraph & h, int arity, size_t size_cap) -> NuSearchResult
    {
        auto instance = build_nu_instance(h, arity, size_cap);
        auto outcome = find_homomorphism(instance, canonical_template(h));

        NuSearchResult result;
        result.stats = outcome.stats;
        if (outcome.found()) {
            NuWitness w{ h.size(), arity, outcome.witness->assignment };
            auto check = verify_nu_witness(h, w);
            if (! check.valid)
                throw std::logic_error("search produced an invalid NU table: " + check.violation->message);
            result.witness = std::move(w);
        }
        return result;
    }

    auto interval(const Digraph & h, int u, int v) -> vector<int>
    {
        if (u < 0 || v < 0 || u >= h.size() || v >= h.size())
            throw Error(ErrorKind::InvalidArgument, "vertex out of range", { u, v });
        auto from_u = distances_from(h, u), from_v = distances_from(h, v);
        if (from_u[v] < 0)
            throw Error(ErrorKind::Unreachable, "no path between " + to_string(u) + " and " + to_string(v), { u, v });

        vector<int> result;
        for (int x = 0 ; x < h.size() ; ++x)
            if (from_u[x] >= 0 && from_v[x] >= 0 && from_u[x] + from_v[x] == from_u[v])
                result.push_back(x);
        return result;
    }

    auto bandelt_3nu_criterion(const Digraph & h) -> IntervalReport
    {
        if (! h.symmetric())
            throw Error(ErrorKind::PreconditionViolated, "the interval criterion needs an undirected graph");
        (void) bipartition(h);

        auto dist = distance_matrix(h);
        IntervalReport report;
        for (int u = 0 ; u < h.size() ; ++u)
            for (int v = 0 ; v < h.size() ; ++v) {
                if (dist[u][v] < 3)
                    continue;
                ++report.pairs_checked;

                vector<bool> inside(h.size(), false);
                for (int x = 0 ; x < h.size() ; ++x)
                    inside[x] = dist[x][u] + dist[x][v] == dist[u][v];

                vector<int> near;
                for (int x : h.neighbours(u))
                    if (inside[x])
                        near.push_back(x);

                bool shared = false;
                for (int w = 0 ; w < h.size() && ! shared ; ++w)
                    if (w != u && inside[w])
                        shared = std::all_of(near.begin(), near.end(), [&] (int x) { return h.adjacent(w, x); });

                if (! shared) {
                    report.holds = false;
                    report.violating_pair = Arc{ u, v };
                    report.violating_neighbours = std::move(near);
                    return report;
                }
            }
        return report;
    }

    auto check_lemma2(const ColoredGraph & g, const Digraph & h) -> Lemma2Report
    {
        Lemma2Report report;
        report.instance = g;
        report.base = h;
        report.embed = h_embed(g, h);
        report.direct = find_homomorphism(g, canonical_template(h));
        report.retraction = find_retraction(report.embed.graph, h, report.embed.embedding);

        if (report.retraction.found()) {
            // coloured vertices go to their colour, the others follow the retraction
            Homomorphism pulled;
            auto & r = report.retraction.witness->assignment;
            int next_uncolored = 0;
            for (int v = 0 ; v < g.size() ; ++v)
                pulled.assignment.push_back(g.is_colored(v) ? int(g.colors(v).find_first()) : r[h.size() + next_uncolored++]);
            report.pulled_back_valid = is_homomorphism(g, canonical_template(h), pulled.assignment);
            report.pulled_back = std::move(pulled);
        }

        bool agree = report.direct.found() == report.retraction.found()
            && (! report.retraction.found() || report.pulled_back_valid);
        report.status = agree ? CheckStatus::Holds : CheckStatus::Violated;
        return report;
    }

    auto check_orientation_invariance(const Digraph & h, int arity, size_t size_cap) -> OrientationReport
    {
        if (! h.symmetric())
            throw Error(ErrorKind::PreconditionViolated, "orientation check needs an undirected graph");

        OrientationReport report;
        report.arity = arity;
        report.base = h;
        report.a_to_b = orient_bipartition(h, PartSelector::FromA);
        report.b_to_a = orient_bipartition(h, PartSelector::FromB);
        report.undirected = find_nu_polymorphism(h, arity, size_cap);
        report.from_a = find_nu_polymorphism(report.a_to_b, arity, size_cap);
        report.from_b = find_nu_polymorphism(report.b_to_a, arity, size_cap);

        bool agree = report.undirected.found() == report.from_a.found() && report.undirected.found() == report.from_b.found();
        report.status = agree ? CheckStatus::Holds : CheckStatus::Violated;
        return report;
    }

    auto check_theorem1_forward(const Digraph & h, int arity, size_t size_cap) -> ForwardReport
    {
        ForwardReport report;
        report.arity = arity;
        report.base = h;

        auto instance = build_nu_instance(h, arity, size_cap);
        report.instance_size = instance.size();
        report.instance_colored = instance.colored_vertex_count();

        auto embedded = h_embed(instance, h);
        report.embed = embedded.graph;
        report.retraction = find_retraction(embedded.graph, h, embedded.embedding);
        report.direct = find_nu_polymorphism(h, arity, size_cap);

        if (report.retraction.found()) {
            NuWitness w{ h.size(), arity, vector<int>(instance.size()) };
            auto & r = report.retraction.witness->assignment;
            int next_uncolored = 0;
            for (int v = 0 ; v < instance.size() ; ++v)
                w.table[v] = instance.is_colored(v) ? int(instance.colors(v).find_first()) : r[h.size() + next_uncolored++];
            report.pulled_back_valid = verify_nu_witness(h, w).valid;
            report.pulled_back = std::move(w);
        }

        bool agree = report.retraction.found() == report.direct.found()
            && (! report.retraction.found() || report.pulled_back_valid);
        report.status = agree ? CheckStatus::Holds : CheckStatus::Violated;
        return report;
    }
}
