// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
// Criterion numbers given on the command line restrict the run.

#include <nuar/canonical.hh>
#include <nuar/cli.hh>
#include <nuar/errors.hh>
#include <nuar/io.hh>
#include <nuar/nu.hh>
#include <nuar/obstructions.hh>
#include <nuar/random_instances.hh>
#include <nuar/report_json.hh>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace nuar;
using std::string;
using std::vector;

namespace
{
    const string fixtures = NUAR_FIXTURES;

    struct Outcome
    {
        bool pass = true;
        string detail;

        auto require(bool ok, const string & what) -> void
        {
            if (! ok && pass) {
                pass = false;
                detail = what;
            }
        }
    };

    auto load(const string & relative) -> Digraph
    {
        return read_graph_file(fixtures + "/" + relative).graphs.at(0);
    }

    auto templates() -> vector<Digraph>
    {
        vector<std::filesystem::path> paths;
        for (auto & e : std::filesystem::directory_iterator(fixtures + "/templates"))
            paths.push_back(e.path());
        std::sort(paths.begin(), paths.end());
        vector<Digraph> result;
        for (auto & p : paths)
            result.push_back(read_graph_file(p).graphs.at(0));
        return result;
    }

    auto by_name(const string & name) -> Digraph
    {
        return load("templates/" + name + ".hg");
    }

    // Brute force over all |H|^|X| maps into the canonical coloured template.
    auto brute_force_exists(const ColoredGraph & x, const Digraph & h) -> bool
    {
        int n = x.size(), m = h.size();
        vector<unsigned> out(m, 0);
        for (auto [a, b] : h.arcs())
            out[a] |= 1u << b;
        vector<vector<int> > domain(n);
        for (int v = 0 ; v < n ; ++v) {
            auto colors = x.color_list(v);
            for (int j = 0 ; j < m ; ++j)
                if (colors.empty() || (colors.size() == 1 && colors[0] == j))
                    domain[v].push_back(j);
            if (domain[v].empty())
                return false;
        }
        auto arcs = x.carrier().arcs();
        vector<std::size_t> pick(n, 0);
        while (true) {
            bool ok = true;
            for (auto [a, b] : arcs)
                if (! (out[domain[a][pick[a]]] >> domain[b][pick[b]] & 1u)) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
            int p = n - 1;
            while (p >= 0 && ++pick[p] == domain[p].size())
                pick[p--] = 0;
            if (p < 0)
                return false;
        }
    }

    auto is_map(const ColoredGraph & x, const Digraph & h, const vector<int> & f) -> bool
    {
        if (int(f.size()) != x.size())
            return false;
        for (int v = 0 ; v < x.size() ; ++v) {
            if (f[v] < 0 || f[v] >= h.size())
                return false;
            auto colors = x.color_list(v);
            if (! colors.empty() && (colors.size() != 1 || colors[0] != f[v]))
                return false;
        }
        for (auto [a, b] : x.carrier().arcs())
            if (! h.has_arc(f[a], f[b]))
                return false;
        return true;
    }

    auto dedupe(vector<ColoredGraph> graphs) -> vector<ColoredGraph>
    {
        std::set<vector<std::uint64_t> > seen;
        vector<ColoredGraph> result;
        for (auto & g : graphs)
            if (seen.insert(canonical_form(g).key).second)
                result.push_back(std::move(g));
        return result;
    }

    // Every graph on n vertices, one per isomorphism class.
    auto all_templates(int n, bool symmetric, bool loops = true) -> vector<Digraph>
    {
        vector<Arc> slots;
        for (int u = 0 ; u < n ; ++u)
            for (int v = symmetric ? u : 0 ; v < n ; ++v)
                if (loops || u != v)
                    slots.emplace_back(u, v);
        vector<ColoredGraph> graphs;
        for (unsigned mask = 0 ; mask < 1u << slots.size() ; ++mask) {
            vector<Arc> arcs;
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if (mask >> i & 1u)
                    arcs.push_back(slots[i]);
            graphs.push_back(ColoredGraph::uncolored(Digraph("t" + std::to_string(n) + "_" + std::to_string(mask), n, arcs, symmetric), 0));
        }
        vector<Digraph> result;
        for (auto & g : dedupe(std::move(graphs)))
            result.push_back(g.carrier());
        return result;
    }

    // Loopless coloured graphs on n vertices with each colour set empty or a singleton.
    auto singly_colored(int template_size, int n, bool symmetric) -> vector<ColoredGraph>
    {
        vector<Arc> slots;
        for (int u = 0 ; u < n ; ++u)
            for (int v = symmetric ? u + 1 : 0 ; v < n ; ++v)
                if (u != v)
                    slots.emplace_back(u, v);
        std::set<vector<std::uint64_t> > seen;
        vector<ColoredGraph> result;
        for (unsigned mask = 0 ; mask < 1u << slots.size() ; ++mask) {
            vector<Arc> arcs;
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if (mask >> i & 1u)
                    arcs.push_back(slots[i]);
            Digraph carrier("x", n, arcs, symmetric);
            vector<int> digit(n, 0);
            while (true) {
                vector<vector<int> > colors(n);
                for (int v = 0 ; v < n ; ++v)
                    if (digit[v] > 0)
                        colors[v] = { digit[v] - 1 };
                ColoredGraph x(carrier, template_size, colors);
                if (seen.insert(canonical_form(x).key).second)
                    result.push_back(std::move(x));
                int p = n - 1;
                while (p >= 0 && ++digit[p] == template_size + 1)
                    digit[p--] = 0;
                if (p < 0)
                    break;
            }
        }
        return result;
    }

    auto criterion1() -> Outcome
    {
        Outcome o;
        int graphs = 0, with_nu = 0;
        for (int n = 1 ; n <= 7 ; ++n)
            for (auto & h : connected_bipartite_graphs(n)) {
                ++graphs;
                bool criterion = bandelt_3nu_criterion(h).holds;
                auto nu = find_nu_polymorphism(h, 3);
                with_nu += nu.found();
                o.require(criterion == nu.found(), "disagreement on " + h.name());
                if (nu.found())
                    o.require(verify_nu_witness(h, *nu.witness).valid, "invalid witness for " + h.name());
            }
        if (o.pass)
            o.detail = std::to_string(graphs) + " graphs, " + std::to_string(with_nu) + " with a 3-NU, 0 disagreements";
        return o;
    }

    auto criterion2() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(20240601);
        int instances = 0, feasible = 0;
        for (auto name : { "k2", "p3", "p4", "c4", "c6" }) {
            auto h = by_name(name);
            for (int i = 0 ; i < 120 ; ++i) {
                auto x = random_embed_instance(h, rng, 8, string(name) + "_r" + std::to_string(i));
                auto report = check_lemma2(x, h);
                ++instances;
                feasible += report.direct.found();
                o.require(report.status == CheckStatus::Holds, "disagreement on " + x.name());
                if (report.pulled_back)
                    o.require(is_map(x, h, report.pulled_back->assignment), "bad pulled-back map on " + x.name());
            }
        }
        if (o.pass)
            o.detail = std::to_string(instances) + " instances, " + std::to_string(feasible) + " feasible, all agree";
        return o;
    }

    auto criterion3() -> Outcome
    {
        Outcome o;
        int checks = 0, skipped = 0;
        for (auto & h : templates())
            for (int m : { 3, 4 }) {
                try {
                    auto report = check_orientation_invariance(h, m);
                    ++checks;
                    o.require(report.status == CheckStatus::Holds, h.name() + " m=" + std::to_string(m) + " disagrees");
                }
                catch (const Error & e) {
                    if (e.kind() != ErrorKind::SizeCapExceeded)
                        throw;
                    ++skipped;
                }
            }
        o.require(checks > 0, "nothing checked");
        if (o.pass)
            o.detail = std::to_string(checks) + " template/arity pairs agree, " + std::to_string(skipped) + " over the size cap";
        return o;
    }

    auto criterion4() -> Outcome
    {
        Outcome o;
        for (auto name : { "k2", "p3", "p4", "c4" }) {
            auto report = check_theorem1_forward(by_name(name), 3);
            o.require(report.retraction.found(), string("no retraction for ") + name);
            o.require(report.pulled_back_valid, string("pulled-back table invalid for ") + name);
        }
        auto c6 = check_theorem1_forward(by_name("c6"), 3);
        o.require(! c6.retraction.found(), "retraction found for c6");
        o.require(c6.status == CheckStatus::Holds, "c6 sides disagree");
        if (o.pass)
            o.detail = "retractions for k2 p3 p4 c4; none for c6 (embed of " + std::to_string(c6.embed.size()) + " vertices)";
        return o;
    }

    auto criterion5() -> Outcome
    {
        Outcome o;
        auto arc = load("misc/arc.hg");
        auto family = elementary_obstructions_directed(arc);
        o.require(family.size() == 4, "expected 4 elementary obstructions");
        auto full = verify_duality(arc, family, 3);
        o.require(full.status == DualityStatus::Complete, "full family is " + to_string(full.status));

        vector<ColoredGraph> partial;
        for (auto & x : family)
            if (x.colored_vertex_count() > 0)
                partial.push_back(x);
        auto cut = verify_duality(arc, partial, 3);
        o.require(cut.status == DualityStatus::IncompleteWithinBounds, "family without the path is " + to_string(cut.status));
        auto path = ColoredGraph::uncolored(Digraph::directed("p", 3, { { 0, 1 }, { 1, 2 } }), 2);
        bool witnessed = std::any_of(cut.discrepancies.begin(), cut.discrepancies.end(),
                [&] (auto & d) { return d.kind == DiscrepancyKind::UncoveredObstruction && are_isomorphic(d.x, path); });
        o.require(witnessed, "directed 2-path not among the discrepancies");
        if (o.pass)
            o.detail = "complete over " + std::to_string(full.examined) + " graphs; without the path "
                + std::to_string(cut.discrepancies.size()) + " uncovered obstructions including the directed 2-path";
        return o;
    }

    auto criterion6() -> Outcome
    {
        Outcome o;
        int checked = 0;
        auto check_family = [&] (const Digraph & h, const vector<ColoredGraph> & family) {
            auto target = canonical_template(h);
            for (auto & x : family) {
                ++checked;
                o.require(is_critical_obstruction(x, target).critical, x.name() + " is not critical for " + h.name());
            }
        };
        auto arc = load("misc/arc.hg");
        check_family(arc, elementary_obstructions_directed(arc));
        for (auto & h : templates()) {
            for (auto part : { PartSelector::FromA, PartSelector::FromB }) {
                auto d = orient_bipartition(h, part);
                check_family(d, elementary_obstructions_directed(d));
            }
            check_family(h, elementary_obstructions_bipartite(h, 7));
        }
        if (o.pass)
            o.detail = std::to_string(checked) + " elementary obstructions, all critical";
        return o;
    }

    auto criterion7() -> Outcome
    {
        Outcome o;
        long pairs = 0, feasible = 0;
        auto run = [&] (const vector<Digraph> & hs, const vector<ColoredGraph> & xs) {
            for (auto & h : hs) {
                auto target = canonical_template(h);
                for (auto & x : xs) {
                    ++pairs;
                    auto solver = find_homomorphism(x, target);
                    bool brute = brute_force_exists(x, h);
                    feasible += brute;
                    o.require(solver.found() == brute, "disagreement on " + x.name() + " -> " + h.name());
                    if (solver.found())
                        o.require(is_map(x, h, solver.witness->assignment), "invalid witness on " + x.name() + " -> " + h.name());
                }
            }
        };
        auto xs_for = [] (int t, bool symmetric) {
            vector<ColoredGraph> xs;
            for (int n = 0 ; n <= 3 ; ++n)
                for (auto & x : enumerate_colored_graphs(t, n, symmetric))
                    xs.push_back(x);
            for (auto & x : singly_colored(t, 4, symmetric))
                xs.push_back(x);
            return xs;
        };

        for (int t = 1 ; t <= 4 ; ++t)
            run(all_templates(t, true), xs_for(t, true));
        for (int t = 1 ; t <= 3 ; ++t)
            run(all_templates(t, false), xs_for(t, false));

        auto directed4 = all_templates(4, false, false);
        directed4.push_back(Digraph::directed("dp4loop", 4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 3 } }));
        directed4.push_back(Digraph::directed("dc3loop", 4, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 3, 3 }, { 3, 0 } }));
        run(directed4, xs_for(4, false));

        if (o.pass)
            o.detail = std::to_string(pairs) + " pairs (" + std::to_string(feasible) + " feasible), 0 disagreements";
        return o;
    }

    auto criterion8() -> Outcome
    {
        Outcome o;
        o.require(critical_tree_obstructions(by_name("k2"), 4, 6).empty(), "k2 has critical tree obstructions");

        auto c6 = critical_tree_obstructions(by_name("c6"), 2, 2);
        auto edge = ColoredGraph(Digraph::undirected("e", 2, { { 0, 1 } }), 6, vector<vector<int> >{ { 0 }, { 3 } });
        o.require(std::any_of(c6.begin(), c6.end(), [&] (auto & t) { return are_isomorphic(t.tree, edge); }),
                "c6 lacks the {0},{3} edge");

        int trees = 0;
        for (auto & h : templates())
            for (auto & variant : { h, orient_bipartition(h, PartSelector::FromA) })
                for (auto & t : enumerate_h_trees(variant, 3, 6)) {
                    ++trees;
                    o.require(validate_h_tree(t.tree, variant, t.directed).valid, t.tree.name() + " over " + variant.name() + " is invalid");
                }

        int witnesses = 0;
        for (auto & h : templates())
            for (int m : { 3, 4 }) {
                auto result = find_nu_polymorphism(h, m);
                if (result.found()) {
                    ++witnesses;
                    o.require(verify_nu_witness(h, *result.witness).valid, "NU round trip failed on " + h.name());
                }
            }
        if (o.pass)
            o.detail = std::to_string(trees) + " trees valid, " + std::to_string(c6.size()) + " critical c6 trees, "
                + std::to_string(witnesses) + " NU witnesses verified";
        return o;
    }

    auto run_cli(const vector<string> & args) -> std::pair<int, Json>
    {
        std::ostringstream out, err;
        int code = run_command(args, out, err);
        return { code, Json::parse(out.str()) };
    }

    auto criterion9() -> Outcome
    {
        Outcome o;
        auto c6 = by_name("c6");
        vector<int> identity{ 0, 1, 2, 3, 4, 5 };

        auto g3 = load("misc/c6_apex024.hg");
        auto r3 = absolute_retract_check(g3, c6, identity, 3, 6);
        o.require(! r3.hypothesis_holds, "apex {0,2,4}: hypothesis holds");
        o.require(! r3.retraction.found(), "apex {0,2,4}: retraction found");
        vector<vector<int> > star_colors{ { }, { 0 }, { 2 }, { 4 } };
        auto star = ColoredGraph(Digraph::undirected("s", 4, { { 0, 1 }, { 0, 2 }, { 0, 3 } }), 6, star_colors);
        o.require(std::any_of(r3.failures.begin(), r3.failures.end(), [&] (auto & f) { return are_isomorphic(f.tree.tree, star); }),
                "apex {0,2,4}: 3-leaf star not among the failures");

        auto g2 = load("misc/c6_apex02.hg");
        auto r2 = absolute_retract_check(g2, c6, identity, 2, 6);
        o.require(r2.retraction.found(), "apex {0,2}: no retraction");

        int checked = 0;
        for (auto & j : { to_json(r3, g3, c6), to_json(r2, g2, c6) }) {
            auto again = recheck(j);
            checked += again.checked;
            o.require(again.ok(), "library report fails recheck");
        }
        string embed = "0:0,1:1,2:2,3:3,4:4,5:5";
        for (auto [graph, k] : { std::pair{ "c6_apex024", "3" }, std::pair{ "c6_apex02", "2" } }) {
            auto [code, j] = run_cli({ "archeck", fixtures + "/misc/" + graph + ".hg", fixtures + "/templates/c6.hg",
                "--embed", embed, "--max-leaves", k, "--max-vertices", "6" });
            o.require(code < 2, string(graph) + ": archeck exited with an error");
            auto again = recheck(j);
            checked += again.checked;
            o.require(again.ok() && again.checked > 0, string(graph) + ": CLI report fails recheck");
        }
        if (o.pass)
            o.detail = std::to_string(r3.failures.size()) + " failing trees for apex {0,2,4}, retraction for apex {0,2}, "
                + std::to_string(checked) + " witnesses rechecked";
        return o;
    }
}

auto main(int argc, char * argv[]) -> int
{
    vector<std::function<Outcome ()> > criteria{ criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9 };
    std::set<int> selected;
    for (int i = 1 ; i < argc ; ++i)
        selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (int i = 0 ; i < int(criteria.size()) ; ++i) {
        if (! selected.empty() && ! selected.count(i + 1))
            continue;
        auto started = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        }
        catch (const std::exception & e) {
            o = { false, string("exception: ") + e.what() };
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        failures += ! o.pass;
        std::printf("criterion %d: %s  %s  [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
