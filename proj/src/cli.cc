#include <nuar/cli.hh>
#include <nuar/errors.hh>
#include <nuar/io.hh>
#include <nuar/nu.hh>
#include <nuar/obstructions.hh>
#include <nuar/random_instances.hh>
#include <nuar/report_json.hh>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fs = std::filesystem;

using std::string;
using std::vector;

namespace nuar
{
    using std::to_string;

    auto exit_code_for(const string & status) -> int
    {
        if (status == "found" || status == "holds" || status == "complete")
            return 0;
        if (status == "not-found" || status == "violated" || status == "incomplete")
            return 1;
        return 2;
    }

    namespace
    {
        struct Outcome
        {
            string status;
            Json result = Json::object();
            Json bounds = Json::object();
            string text;
        };

        class Inputs
        {
            private:
                Json _digests = Json::array();

                auto slurp(const string & path) -> string
                {
                    std::ifstream in(path, std::ios::binary);
                    if (! in)
                        throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
                    std::stringstream buffer;
                    buffer << in.rdbuf();
                    return buffer.str();
                }

            public:
                static auto sha256(const string & data) -> string
                {
                    unsigned char digest[EVP_MAX_MD_SIZE];
                    unsigned int length = 0;
                    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
                    std::ostringstream hex;
                    for (unsigned i = 0 ; i < length ; ++i)
                        hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
                    return hex.str();
                }

                auto read(const string & path) -> string
                {
                    auto text = slurp(path);
                    _digests.push_back({ { "path", path }, { "sha256", sha256(text) } });
                    return text;
                }

                auto file(const string & path, std::span<const Digraph> known = { }) -> GraphFile
                {
                    auto text = read(path);
                    try {
                        return parse_graph_file(text, known);
                    }
                    catch (const ParseError & e) {
                        throw ParseError(e.line(), path + ": " + e.what());
                    }
                }

                auto graph(const string & path) -> Digraph
                {
                    auto f = file(path);
                    if (f.graphs.empty())
                        throw Error(ErrorKind::InvalidArgument, "'" + path + "' contains no graph block");
                    return f.graphs.front();
                }

                auto colored(const string & path, const Digraph & h) -> ColoredGraph
                {
                    auto f = file(path, std::span<const Digraph>(&h, 1));
                    if (f.colored.empty())
                        throw Error(ErrorKind::InvalidArgument, "'" + path + "' contains no colored block");
                    return f.colored.front().graph;
                }

                auto digests() const -> const Json & { return _digests; }
        };

        auto parse_embedding(const string & text, const Digraph & h, const Digraph & g) -> vector<int>
        {
            vector<int> embedding(h.size(), -1);
            std::stringstream in(text);
            string item;
            while (std::getline(in, item, ',')) {
                auto colon = item.find(':');
                int a = -1, b = -1;
                try {
                    if (colon == string::npos)
                        throw std::invalid_argument(item);
                    a = std::stoi(item.substr(0, colon));
                    b = std::stoi(item.substr(colon + 1));
                }
                catch (const std::exception &) {
                    throw Error(ErrorKind::InvalidArgument, "embedding entries look like h:g, got '" + item + "'");
                }
                if (a < 0 || a >= h.size() || b < 0 || b >= g.size())
                    throw Error(ErrorKind::InvalidArgument, "embedding entry '" + item + "' out of range", { a, b });
                if (embedding[a] != -1)
                    throw Error(ErrorKind::InvalidArgument, "template vertex " + to_string(a) + " is mapped twice", { a });
                embedding[a] = b;
            }
            for (int a = 0 ; a < h.size() ; ++a)
                if (embedding[a] == -1)
                    throw Error(ErrorKind::InvalidArgument, "template vertex " + to_string(a) + " is not mapped", { a });
            return embedding;
        }

        auto parse_pair(const string & text) -> std::pair<int, int>
        {
            auto comma = text.find(',');
            try {
                if (comma == string::npos)
                    throw std::invalid_argument(text);
                return { std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)) };
            }
            catch (const std::exception &) {
                throw Error(ErrorKind::InvalidArgument, "expected a pair u,v, got '" + text + "'");
            }
        }

        auto list_text(const vector<int> & values) -> string
        {
            string result;
            for (std::size_t i = 0 ; i < values.size() ; ++i)
                result += (i ? " " : "") + to_string(values[i]);
            return result;
        }

        auto colored_file(const Digraph & h, const vector<ColoredGraph> & items) -> string
        {
            GraphFile f;
            f.graphs.push_back(h);
            for (auto & x : items)
                f.colored.push_back(ColoredBlock{ x, h.name() });
            return serialize(f);
        }

        struct Fixture
        {
            string name;
            Digraph graph;
        };

        auto load_fixtures(const string & dir, Inputs & inputs) -> vector<Fixture>
        {
            if (! fs::is_directory(dir))
                throw Error(ErrorKind::InvalidArgument, "'" + dir + "' is not a directory");
            vector<fs::path> paths;
            for (auto & entry : fs::directory_iterator(dir))
                if (entry.is_regular_file() && entry.path().extension() == ".hg")
                    paths.push_back(entry.path());
            std::sort(paths.begin(), paths.end());

            vector<Fixture> fixtures;
            for (auto & p : paths)
                for (auto & g : inputs.file(p.string()).graphs)
                    fixtures.push_back(Fixture{ g.name(), g });
            std::stable_sort(fixtures.begin(), fixtures.end(), [] (auto & a, auto & b) { return a.name < b.name; });
            if (fixtures.empty())
                throw Error(ErrorKind::InvalidArgument, "no graph fixtures in '" + dir + "'");
            return fixtures;
        }

        struct FixtureResult
        {
            Json json;
            bool violated = false;
            string line;
        };

        // Runs check on every fixture concurrently; results keep fixture order.
        template <typename F>
        auto fan_out(const vector<Fixture> & fixtures, F check) -> vector<FixtureResult>
        {
            vector<std::future<FixtureResult> > futures;
            for (std::size_t i = 0 ; i < fixtures.size() ; ++i)
                futures.push_back(std::async(std::launch::async, [&, i] {
                    try {
                        return check(fixtures[i], i);
                    }
                    catch (const Error & e) {
                        FixtureResult r;
                        r.json = { { "fixture", fixtures[i].name }, { "status", "skipped" }, { "reason", to_string(e.kind()) },
                            { "message", e.what() } };
                        r.line = fixtures[i].name + ": skipped (" + e.what() + ")";
                        return r;
                    }
                }));
            vector<FixtureResult> results;
            for (auto & f : futures)
                results.push_back(f.get());
            return results;
        }

        auto verify_lemma2(const vector<Fixture> & fixtures, std::uint64_t seed, int count, int max_vertices) -> Outcome
        {
            auto results = fan_out(fixtures, [&] (const Fixture & fx, std::size_t index) {
                if (! fx.graph.symmetric())
                    throw Error(ErrorKind::PreconditionViolated, "template is not undirected");
                std::mt19937_64 rng(seed * 1000003u + index);
                int feasible = 0, agreements = 0;
                Json violations = Json::array();
                for (int i = 0 ; i < count ; ++i) {
                    auto x = random_embed_instance(fx.graph, rng, max_vertices, fx.name + "_r" + to_string(i));
                    auto report = check_lemma2(x, fx.graph);
                    feasible += report.direct.found();
                    if (report.status == CheckStatus::Holds)
                        ++agreements;
                    else
                        violations.push_back(to_json(report));
                }
                FixtureResult r;
                r.violated = agreements != count;
                r.json = { { "fixture", fx.name }, { "status", r.violated ? "violated" : "holds" }, { "instances", count },
                    { "feasible", feasible }, { "agreements", agreements }, { "violations", violations } };
                r.line = fx.name + ": " + to_string(agreements) + "/" + to_string(count) + " agree, "
                    + to_string(feasible) + " feasible";
                return r;
            });

            Outcome o;
            o.bounds = { { "count", count }, { "seed", seed }, { "max_vertices", max_vertices } };
            bool violated = false;
            o.result["fixtures"] = Json::array();
            for (auto & r : results) {
                violated = violated || r.violated;
                o.result["fixtures"].push_back(r.json);
                o.text += r.line + "\n";
            }
            o.status = violated ? "violated" : "holds";
            return o;
        }

        auto verify_lemma3(const vector<Fixture> & fixtures, const vector<int> & arities, std::size_t size_cap) -> Outcome
        {
            auto results = fan_out(fixtures, [&] (const Fixture & fx, std::size_t) {
                FixtureResult r;
                r.json = { { "fixture", fx.name }, { "arities", Json::array() } };
                r.line = fx.name + ":";
                for (int m : arities) {
                    try {
                        auto report = check_orientation_invariance(fx.graph, m, size_cap);
                        r.violated = r.violated || report.status == CheckStatus::Violated;
                        r.json["arities"].push_back(to_json(report));
                        r.line += " m=" + to_string(m) + " " + (report.undirected.found() ? "nu" : "no-nu") + " "
                            + to_string(report.status);
                    }
                    catch (const Error & e) {
                        if (e.kind() != ErrorKind::SizeCapExceeded)
                            throw;
                        r.json["arities"].push_back({ { "arity", m }, { "status", "skipped" }, { "reason", e.what() } });
                        r.line += " m=" + to_string(m) + " skipped";
                    }
                }
                r.json["status"] = r.violated ? "violated" : "holds";
                return r;
            });

            Outcome o;
            o.bounds = { { "arities", arities }, { "size_cap", size_cap } };
            bool violated = false;
            o.result["fixtures"] = Json::array();
            for (auto & r : results) {
                violated = violated || r.violated;
                o.result["fixtures"].push_back(r.json);
                o.text += r.line + "\n";
            }
            o.status = violated ? "violated" : "holds";
            return o;
        }

        auto verify_forward(const vector<Fixture> & fixtures, int arity, std::size_t size_cap) -> Outcome
        {
            auto results = fan_out(fixtures, [&] (const Fixture & fx, std::size_t) {
                auto report = check_theorem1_forward(fx.graph, arity, size_cap);
                FixtureResult r;
                r.violated = report.status == CheckStatus::Violated;
                r.json = to_json(report);
                r.json["fixture"] = fx.name;
                r.line = fx.name + ": retraction " + (report.retraction.found() ? "found" : "not-found") + ", "
                    + to_string(report.status);
                return r;
            });

            Outcome o;
            o.bounds = { { "arity", arity }, { "size_cap", size_cap } };
            bool violated = false;
            o.result["fixtures"] = Json::array();
            for (auto & r : results) {
                violated = violated || r.violated;
                o.result["fixtures"].push_back(r.json);
                o.text += r.line + "\n";
            }
            o.status = violated ? "violated" : "holds";
            return o;
        }
    }

    auto run_command(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Homomorphisms, near-unanimity polymorphisms and obstructions of small graphs", "nuar" };
        app.require_subcommand(1);
        app.fallthrough();

        string format = "json";
        std::uint64_t seed = 1;
        bool strict = false;
        app.add_option("--format", format, "Report format")->check(CLI::IsMember({ "json", "text" }));
        app.add_option("--seed", seed, "Seed for randomized generators");
        app.add_flag("--strict-leaf-colors", strict, "Forbid two leaves of an H-tree sharing a colour");

        string first, second, embed_text, pair_text, family, fixtures_dir, check;
        int arity = 3, max_length = 7, max_leaves = 3, max_vertices = 8, max_x = 3, count = 100;
        std::size_t size_cap = default_size_cap;
        bool directed = false, critical = false;

        auto hom = app.add_subcommand("hom", "Search for a homomorphism X -> H^c");
        hom->add_option("colored", first, "Coloured graph file")->required();
        hom->add_option("template", second, "Template graph file")->required();

        auto retract = app.add_subcommand("retract", "Search for a retraction of G onto an embedded H");
        retract->add_option("graph", first, "Graph file")->required();
        retract->add_option("template", second, "Template graph file")->required();
        retract->add_option("--embed", embed_text, "Embedding as h:g pairs, comma separated")->required();

        auto nu = app.add_subcommand("nu", "Search for a near-unanimity polymorphism");
        nu->add_option("template", first, "Graph file")->required();
        nu->add_option("--arity", arity, "Arity, at least 3");
        nu->add_option("--size-cap", size_cap, "Largest power graph to build");

        auto interval_cmd = app.add_subcommand("interval", "Vertices on shortest u-v paths");
        interval_cmd->add_option("template", first, "Graph file")->required();
        interval_cmd->add_option("--pair", pair_text, "u,v")->required();

        auto bandelt = app.add_subcommand("bandelt", "Interval criterion for a ternary NU polymorphism");
        bandelt->add_option("template", first, "Graph file")->required();

        auto embed = app.add_subcommand("embed", "Build the H-embed of a coloured graph");
        embed->add_option("colored", first, "Coloured graph file")->required();
        embed->add_option("template", second, "Template graph file")->required();

        auto obstructions = app.add_subcommand("obstructions", "Elementary critical obstructions");
        obstructions->add_option("template", first, "Graph file")->required();
        obstructions->add_flag("--directed", directed, "Orient an undirected graph from its first part and use the directed family");
        obstructions->add_option("--max-length", max_length, "Longest path or cycle in the bipartite family");

        auto trees = app.add_subcommand("trees", "Enumerate H-trees");
        trees->add_option("template", first, "Graph file")->required();
        trees->add_option("--max-leaves", max_leaves, "Leaf bound");
        trees->add_option("--max-vertices", max_vertices, "Vertex bound");
        trees->add_flag("--critical", critical, "Keep only critical obstructions");

        auto duality = app.add_subcommand("duality", "Bounded check of a duality family");
        duality->add_option("template", first, "Graph file")->required();
        duality->add_option("--family", family, "Coloured graph file holding the family")->required();
        duality->add_option("--max-x", max_x, "Largest X to enumerate");

        auto archeck = app.add_subcommand("archeck", "Bounded absolute-retract harness");
        archeck->add_option("graph", first, "Graph file")->required();
        archeck->add_option("template", second, "Template graph file")->required();
        archeck->add_option("--embed", embed_text, "Embedding as h:g pairs, comma separated")->required();
        archeck->add_option("--max-leaves", max_leaves, "Leaf bound");
        archeck->add_option("--max-vertices", max_vertices, "Vertex bound");

        auto verify = app.add_subcommand("verify", "Run a batch check over a fixture directory");
        verify->add_option("check", check, "lemma2, lemma3 or theorem1-forward")->required()
            ->check(CLI::IsMember({ "lemma2", "lemma3", "theorem1-forward" }));
        verify->add_option("--fixtures", fixtures_dir, "Directory of .hg files")->required();
        verify->add_option("--count", count, "Random instances per fixture (lemma2)");
        verify->add_option("--max-vertices", max_vertices, "Largest random instance (lemma2)");
        auto verify_arity = verify->add_option("--arity", arity, "NU arity");
        verify->add_option("--size-cap", size_cap, "Largest power graph to build");

        auto recheck_cmd = app.add_subcommand("recheck", "Re-validate every witness in a JSON report");
        recheck_cmd->add_option("report", first, "Report file")->required();

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        auto started = std::chrono::steady_clock::now();
        Inputs inputs;
        Outcome o;
        string command = app.get_subcommands().front()->get_name();

        try {
            if (*hom) {
                auto h = inputs.graph(second);
                auto x = inputs.colored(first, h);
                auto target = canonical_template(h);
                auto outcome = find_homomorphism(x, target);
                o.status = outcome.found() ? "found" : "not-found";
                o.result = search_json(outcome, x, target);
                if (outcome.found())
                    o.text = "map: " + list_text(outcome.witness->assignment) + "\n";
            }
            else if (*retract) {
                auto g = inputs.graph(first);
                auto h = inputs.graph(second);
                auto embedding = parse_embedding(embed_text, h, g);
                auto g_h = embed_as_colored(g, h, embedding);
                auto outcome = find_homomorphism(g_h, canonical_template(h));
                o.status = outcome.found() ? "found" : "not-found";
                o.result = search_json(outcome, g_h, canonical_template(h));
                o.result["embedding"] = embedding;
                if (outcome.found())
                    o.text = "retraction: " + list_text(outcome.witness->assignment) + "\n";
            }
            else if (*nu) {
                auto h = inputs.graph(first);
                o.bounds = { { "arity", arity }, { "size_cap", size_cap } };
                auto result = find_nu_polymorphism(h, arity, size_cap);
                o.status = result.found() ? "found" : "not-found";
                o.result = to_json(result, h);
                o.text = "search nodes: " + to_string(result.stats.nodes) + "\n";
                if (result.found())
                    o.text += "table: " + list_text(result.witness->table) + "\n";
            }
            else if (*interval_cmd) {
                auto h = inputs.graph(first);
                auto [u, v] = parse_pair(pair_text);
                auto members = interval(h, u, v);
                o.status = "found";
                o.result = { { "pair", { u, v } }, { "interval", members } };
                o.text = "interval: " + list_text(members) + "\n";
            }
            else if (*bandelt) {
                auto h = inputs.graph(first);
                auto report = bandelt_3nu_criterion(h);
                o.status = report.holds ? "holds" : "violated";
                o.result = to_json(report, h);
                o.text = "pairs checked: " + to_string(report.pairs_checked) + "\n";
                if (report.violating_pair)
                    o.text += "violating pair: " + to_string(report.violating_pair->first) + ","
                        + to_string(report.violating_pair->second) + "\n";
            }
            else if (*embed) {
                auto h = inputs.graph(second);
                auto x = inputs.colored(first, h);
                auto e = h_embed(x, h);
                o.status = "found";
                o.result = { { "graph", to_json(e.graph) }, { "embedding", e.embedding }, { "uncolored_vertices", e.uncolored_vertices } };
                o.text = serialize(e.graph);
            }
            else if (*obstructions) {
                auto h = inputs.graph(first);
                vector<ColoredGraph> family;
                Digraph base = h;
                if (directed || ! h.symmetric()) {
                    if (h.symmetric())
                        base = orient_bipartition(h, PartSelector::FromA);
                    family = elementary_obstructions_directed(base);
                }
                else {
                    o.bounds = { { "max_length", max_length } };
                    family = elementary_obstructions_bipartite(h, max_length);
                }
                o.status = "found";
                o.result = { { "template", to_json(base) }, { "family", Json::array() } };
                for (auto & x : family)
                    o.result["family"].push_back(to_json(x));
                o.text = colored_file(base, family);
            }
            else if (*trees) {
                auto h = inputs.graph(first);
                o.bounds = { { "max_leaves", max_leaves }, { "max_vertices", max_vertices }, { "strict_leaf_colors", strict } };
                auto found = critical ? critical_tree_obstructions(h, max_leaves, max_vertices, strict)
                    : enumerate_h_trees(h, max_leaves, max_vertices, strict);
                vector<ColoredGraph> items;
                o.result = { { "critical_only", critical }, { "trees", Json::array() } };
                for (auto & t : found) {
                    items.push_back(t.tree);
                    o.result["trees"].push_back(to_json(t.tree));
                }
                o.status = "found";
                o.text = colored_file(h, items);
            }
            else if (*duality) {
                auto h = inputs.graph(first);
                auto f = inputs.file(family, std::span<const Digraph>(&h, 1));
                vector<ColoredGraph> members;
                for (auto & block : f.colored)
                    members.push_back(block.graph);
                o.bounds = { { "max_x", max_x } };
                auto report = verify_duality(h, members, max_x);
                o.status = report.status == DualityStatus::Complete ? "complete"
                    : report.status == DualityStatus::Violated ? "violated" : "incomplete";
                o.result = to_json(report, h);
                o.text = "examined: " + to_string(report.examined) + "\ndiscrepancies: "
                    + to_string(report.discrepancies.size()) + "\n";
                vector<ColoredGraph> witnesses;
                for (auto & d : report.discrepancies)
                    witnesses.push_back(d.x);
                if (! witnesses.empty())
                    o.text += colored_file(h, witnesses);
            }
            else if (*archeck) {
                auto g = inputs.graph(first);
                auto h = inputs.graph(second);
                auto embedding = parse_embedding(embed_text, h, g);
                o.bounds = { { "max_leaves", max_leaves }, { "max_vertices", max_vertices }, { "strict_leaf_colors", strict } };
                auto report = absolute_retract_check(g, h, embedding, max_leaves, max_vertices, strict);
                o.status = report.retraction.found() ? "found" : "not-found";
                o.result = to_json(report, g, h);
                o.text = "tree obstructions: " + to_string(report.tree_obstructions) + "\nhypothesis: "
                    + (report.hypothesis_holds ? "holds" : "fails") + " within bounds\nretraction: " + o.status
                    + "\nverdict: " + to_string(report.verdict) + "\n";
            }
            else if (*verify) {
                auto fixtures = load_fixtures(fixtures_dir, inputs);
                if (check == "lemma2")
                    o = verify_lemma2(fixtures, seed, count, max_vertices);
                else if (check == "lemma3")
                    o = verify_lemma3(fixtures, verify_arity->count() ? vector<int>{ arity } : vector<int>{ 3, 4 }, size_cap);
                else
                    o = verify_forward(fixtures, arity, size_cap);
                o.result["check"] = check;
            }
            else if (*recheck_cmd) {
                auto text = inputs.read(first);
                Json report;
                try {
                    report = Json::parse(text);
                }
                catch (const Json::parse_error & e) {
                    throw Error(ErrorKind::Parse, "'" + first + "' is not JSON: " + e.what());
                }
                auto result = recheck(report);
                o.status = result.ok() ? "holds" : "violated";
                o.result = { { "checked", result.checked }, { "failures", result.failures } };
                o.text = "witnesses checked: " + to_string(result.checked) + "\n";
                for (auto & f : result.failures)
                    o.text += "failed: " + f + "\n";
            }
        }
        catch (const Error & e) {
            o = Outcome{ };
            o.status = "error";
            o.result = { { "error", to_string(e.kind()) }, { "message", e.what() }, { "witness", e.witness() } };
            err << "nuar " << command << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
        }

        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

        if (format == "json") {
            Json report{ { "command", args }, { "inputs", inputs.digests() }, { "bounds", o.bounds }, { "status", o.status },
                { "result", o.result }, { "timing_ms", elapsed } };
            out << report.dump(2) << "\n";
        }
        else if (o.status != "error") {
            if (o.text.rfind("graph ", 0) == 0)
                out << o.text;
            else
                out << "status: " << o.status << "\n" << o.text;
        }

        return exit_code_for(o.status);
    }
}
