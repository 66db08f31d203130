#include <nuar/errors.hh>
#include <nuar/report_json.hh>

#include <deque>

using std::string;
using std::vector;

namespace nuar
{
    using std::to_string;

    namespace
    {
        auto edge_list(const Digraph & g) -> Json
        {
            Json edges = Json::array();
            auto list = g.symmetric() ? g.undirected_edges() : vector<Arc>(g.arcs().begin(), g.arcs().end());
            for (auto [u, v] : list)
                edges.push_back({ u, v });
            return edges;
        }

        auto status_text(bool found) -> string
        {
            return found ? "found" : "not-found";
        }
    }

    auto to_json(const Digraph & g) -> Json
    {
        return Json{ { "name", g.name() }, { "directed", ! g.symmetric() }, { "vertices", g.size() }, { "edges", edge_list(g) } };
    }

    auto to_json(const ColoredGraph & x) -> Json
    {
        Json j = to_json(x.carrier());
        j["template_size"] = x.template_size();
        Json colors = Json::array();
        for (int v = 0 ; v < x.size() ; ++v)
            colors.push_back(x.color_list(v));
        j["colors"] = colors;
        return j;
    }

    auto digraph_from_json(const Json & j) -> Digraph
    {
        vector<Arc> arcs;
        for (auto & e : j.at("edges"))
            arcs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Digraph(j.at("name").get<string>(), j.at("vertices").get<int>(), std::move(arcs), ! j.at("directed").get<bool>());
    }

    auto colored_from_json(const Json & j) -> ColoredGraph
    {
        return ColoredGraph(digraph_from_json(j), j.at("template_size").get<int>(), j.at("colors").get<vector<vector<int> > >());
    }

    auto homomorphism_json(const ColoredGraph & source, const ColoredGraph & target, const Homomorphism & map) -> Json
    {
        return Json{ { "kind", "homomorphism" }, { "source", to_json(source) }, { "target", to_json(target) },
            { "map", map.assignment } };
    }

    auto search_json(const SearchOutcome & outcome, const ColoredGraph & source, const ColoredGraph & target) -> Json
    {
        Json j{ { "status", status_text(outcome.found()) }, { "nodes", outcome.stats.nodes },
            { "propagations", outcome.stats.propagations } };
        if (outcome.witness)
            j["witness"] = homomorphism_json(source, target, *outcome.witness);
        return j;
    }

    auto nu_witness_json(const Digraph & base, const NuWitness & w) -> Json
    {
        return Json{ { "kind", "nu_witness" }, { "base", to_json(base) }, { "arity", w.arity }, { "table", w.table } };
    }

    auto to_json(const NuSearchResult & result, const Digraph & base) -> Json
    {
        Json j{ { "status", status_text(result.found()) }, { "nodes", result.stats.nodes },
            { "propagations", result.stats.propagations } };
        if (result.witness)
            j["witness"] = nu_witness_json(base, *result.witness);
        return j;
    }

    auto to_json(const IntervalReport & report, const Digraph & h) -> Json
    {
        Json j{ { "holds", report.holds }, { "pairs_checked", report.pairs_checked } };
        if (report.violating_pair)
            j["violation"] = Json{ { "kind", "interval_violation" }, { "graph", to_json(h) },
                { "pair", { report.violating_pair->first, report.violating_pair->second } },
                { "neighbours", report.violating_neighbours } };
        return j;
    }

    auto to_json(const TreeValidation & validation) -> Json
    {
        Json violations = Json::array();
        for (auto & v : validation.violations)
            violations.push_back({ { "kind", to_string(v.kind) }, { "vertices", v.vertices }, { "message", v.message } });
        return Json{ { "valid", validation.valid }, { "violations", violations } };
    }

    auto to_json(const Lemma2Report & report) -> Json
    {
        auto target = canonical_template(report.base);
        auto g_h = embed_as_colored(report.embed.graph, report.base, report.embed.embedding);
        Json j{ { "status", to_string(report.status) }, { "instance", to_json(report.instance) },
            { "embed", to_json(report.embed.graph) },
            { "direct", search_json(report.direct, report.instance, target) },
            { "retraction", search_json(report.retraction, g_h, target) } };
        if (report.pulled_back)
            j["pulled_back"] = homomorphism_json(report.instance, target, *report.pulled_back);
        return j;
    }

    auto to_json(const OrientationReport & report) -> Json
    {
        return Json{ { "status", to_string(report.status) }, { "arity", report.arity }, { "base", report.base.name() },
            { "undirected", to_json(report.undirected, report.base) },
            { "a_to_b", to_json(report.from_a, report.a_to_b) },
            { "b_to_a", to_json(report.from_b, report.b_to_a) } };
    }

    auto to_json(const ForwardReport & report) -> Json
    {
        Json j{ { "status", to_string(report.status) }, { "arity", report.arity }, { "base", report.base.name() },
            { "instance_size", report.instance_size }, { "instance_colored", report.instance_colored },
            { "embed_size", report.embed.size() },
            { "retraction", { { "status", status_text(report.retraction.found()) }, { "nodes", report.retraction.stats.nodes } } },
            { "direct", to_json(report.direct, report.base) } };
        if (report.pulled_back)
            j["pulled_back"] = nu_witness_json(report.base, *report.pulled_back);
        return j;
    }

    auto to_json(const DualityReport & report, const Digraph & h) -> Json
    {
        auto target = canonical_template(h);
        Json discrepancies = Json::array();
        for (auto & d : report.discrepancies) {
            Json item{ { "kind", d.kind == DiscrepancyKind::UncoveredObstruction ? "uncovered-obstruction" : "covered-feasible" },
                { "x", to_json(d.x) } };
            if (d.feasibility)
                item["feasibility"] = homomorphism_json(d.x, target, *d.feasibility);
            if (d.member != -1)
                item["member"] = d.member;
            discrepancies.push_back(item);
        }
        return Json{ { "status", to_string(report.status) }, { "max_x_vertices", report.max_x_vertices },
            { "examined", report.examined }, { "discrepancies", discrepancies } };
    }

    auto to_json(const AbsoluteRetractReport & report, const Digraph & g, const Digraph & h) -> Json
    {
        Json failures = Json::array();
        for (auto & f : report.failures)
            failures.push_back({ { "tree", to_json(f.tree.tree) }, { "critical", f.critical },
                    { "into_g", homomorphism_json(f.tree.tree, report.g_h, f.into_g) } });

        Json splits = Json::array();
        for (auto & s : report.splits) {
            Json pieces = Json::array();
            for (auto & p : s.pieces)
                pieces.push_back({ { "tree", to_json(p.tree.tree) }, { "origin", p.origin }, { "validation", to_json(p.validation) } });
            splits.push_back({ { "failure", s.failure }, { "vertex", s.vertex }, { "color", s.color }, { "pieces", pieces },
                    { "obstructing_piece", s.obstructing_piece } });
        }

        return Json{ { "g", g.name() }, { "h", h.name() }, { "max_leaves", report.max_leaves }, { "max_vertices", report.max_vertices },
            { "trees_examined", report.trees_examined }, { "tree_obstructions", report.tree_obstructions },
            { "critical_tree_obstructions", report.critical_tree_obstructions },
            { "hypothesis_holds", report.hypothesis_holds }, { "failures", failures }, { "splits", splits },
            { "retraction", search_json(report.retraction, report.g_h, canonical_template(h)) },
            { "verdict", to_string(report.verdict) } };
    }

    namespace
    {
        auto recheck_interval(const Json & j) -> std::optional<string>
        {
            auto g = digraph_from_json(j.at("graph"));
            int u = j.at("pair").at(0), v = j.at("pair").at(1);
            auto claimed = j.at("neighbours").get<vector<int> >();
            if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
                return string{ "pair out of range" };

            auto bfs = [&] (int s) {
                vector<int> d(g.size(), -1);
                std::deque<int> q{ s };
                d[s] = 0;
                while (! q.empty()) {
                    int x = q.front();
                    q.pop_front();
                    for (int y = 0 ; y < g.size() ; ++y)
                        if (d[y] < 0 && (g.has_arc(x, y) || g.has_arc(y, x))) {
                            d[y] = d[x] + 1;
                            q.push_back(y);
                        }
                }
                return d;
            };
            auto du = bfs(u), dv = bfs(v);
            if (du[v] < 3)
                return "pair is at distance " + to_string(du[v]) + ", below 3";

            auto inside = [&] (int x) { return du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == du[v]; };
            vector<int> near;
            for (int x = 0 ; x < g.size() ; ++x)
                if (inside(x) && du[x] == 1)
                    near.push_back(x);
            if (near != claimed)
                return string{ "neighbour list does not match the interval" };
            for (int w = 0 ; w < g.size() ; ++w) {
                if (w == u || ! inside(w))
                    continue;
                bool common = true;
                for (int x : near)
                    common = common && (g.has_arc(w, x) || g.has_arc(x, w));
                if (common)
                    return "vertex " + to_string(w) + " is a common neighbour inside the interval";
            }
            return std::nullopt;
        }

        auto walk(const Json & j, const string & path, RecheckResult & result) -> void
        {
            if (j.is_object()) {
                if (auto kind = j.find("kind") ; kind != j.end() && kind->is_string()) {
                    std::optional<string> problem;
                    bool relevant = true;
                    try {
                        if (*kind == "homomorphism") {
                            auto source = colored_from_json(j.at("source"));
                            auto target = colored_from_json(j.at("target"));
                            problem = homomorphism_violation(source, target, j.at("map").get<vector<int> >());
                        }
                        else if (*kind == "nu_witness") {
                            auto base = digraph_from_json(j.at("base"));
                            NuWitness w{ base.size(), j.at("arity").get<int>(), j.at("table").get<vector<int> >() };
                            auto check = verify_nu_witness(base, w);
                            if (! check.valid)
                                problem = check.violation->message;
                        }
                        else if (*kind == "interval_violation")
                            problem = recheck_interval(j);
                        else
                            relevant = false;
                    }
                    catch (const std::exception & e) {
                        problem = string{ "malformed witness: " } + e.what();
                    }
                    if (relevant) {
                        ++result.checked;
                        if (problem)
                            result.failures.push_back(path + ": " + *problem);
                    }
                }
                for (auto & [key, value] : j.items())
                    walk(value, path + "/" + key, result);
            }
            else if (j.is_array())
                for (std::size_t i = 0 ; i < j.size() ; ++i)
                    walk(j[i], path + "/" + to_string(i), result);
        }
    }

    auto recheck(const Json & report) -> RecheckResult
    {
        RecheckResult result;
        walk(report, "", result);
        return result;
    }
}
