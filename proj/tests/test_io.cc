#include "oracles.hh"

#include <nuar/errors.hh>
#include <nuar/io.hh>

#include <doctest.h>

#include <filesystem>

using namespace nuar;
using std::string;
using std::vector;

namespace
{
    auto parse_error_line(const string & text) -> int
    {
        try {
            (void) parse_graph_file(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    }
}

TEST_CASE("parsing a single graph")
{
    auto file = parse_graph_file("graph k2 undirected\nvertices 2\ne 0 1\nend\n");
    REQUIRE(file.graphs.size() == 1);
    auto & k2 = file.graphs[0];
    CHECK(k2.name() == "k2");
    CHECK(k2.size() == 2);
    CHECK(k2.symmetric());
    CHECK(k2.has_arc(0, 1));
    CHECK(k2.has_arc(1, 0));
    CHECK(file.find_graph("k2") == &k2);
    CHECK(file.find_graph("k3") == nullptr);

    auto arc = parse_graph_file("graph a directed\nvertices 2\ne 0 1\nend\n").graphs.at(0);
    CHECK(arc.has_arc(0, 1));
    CHECK_FALSE(arc.has_arc(1, 0));
}

TEST_CASE("comments, blank lines and multiple colours")
{
    auto file = parse_graph_file(R"(# leading comment
graph k2 undirected   # trailing comment

vertices 2
e 0 1
end

colored x over k2
vertices 2
e 0 1
c 0 0
c 0 1
end
)");
    REQUIRE(file.colored.size() == 1);
    auto & x = file.colored[0];
    CHECK(x.over == "k2");
    CHECK(x.graph.color_list(0) == vector<int>{ 0, 1 });
    CHECK_FALSE(x.graph.is_colored(1));
    CHECK(x.graph.template_size() == 2);
    CHECK(x.graph.carrier().symmetric());
    CHECK(file.find_colored("x") == &x);
}

TEST_CASE("templates from other files")
{
    vector<Digraph> known{ oracle::path(3) };
    auto file = parse_graph_file("colored x over p3\nvertices 1\nc 0 2\nend\n", known);
    CHECK(file.colored.at(0).graph.template_size() == 3);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(parse_error_line("graph k2 undirected\nvertices 2\ne 0 5\nend\n") == 3);
    CHECK(parse_error_line("colored x over nowhere\nvertices 1\nend\n") == 1);
    CHECK(parse_error_line("graph k2 undirected\nvertices 2\ne 0 1\n") > 0);
    CHECK(parse_error_line("graph g sideways\nvertices 1\nend\n") == 1);
    CHECK(parse_error_line("graph g directed\nvertices 1\nc 0 0\nend\n") == 3);
    CHECK(parse_error_line("graph g directed\nvertices 1\nend\ngraph g directed\nvertices 1\nend\n") == 4);
    CHECK(parse_error_line("graph k2 undirected\nvertices 2\nend\ncolored x over k2\nvertices 1\nc 0 2\nend\n") == 6);
    CHECK(parse_error_line("graph g directed\nvertices two\nend\n") == 2);
    CHECK(parse_error_line("e 0 1\n") == 1);

    try {
        (void) parse_graph_file("graph k2 undirected\nvertices 2\ne 0 5\nend\n");
    }
    catch (const ParseError & e) {
        CHECK(string(e.what()).find("line 3") != string::npos);
    }
}

TEST_CASE("fixtures round trip")
{
    vector<Digraph> templates;
    for (auto & entry : std::filesystem::directory_iterator(string(NUAR_FIXTURES) + "/templates"))
        templates.push_back(read_graph_file(entry.path()).graphs.at(0));
    CHECK(templates.size() == 5);

    for (auto dir : { "templates", "misc" })
        for (auto & entry : std::filesystem::directory_iterator(string(NUAR_FIXTURES) + "/" + dir)) {
            CAPTURE(entry.path().string());
            auto file = read_graph_file(entry.path(), templates);
            auto again = parse_graph_file(serialize(file), templates);
            REQUIRE(again.graphs.size() == file.graphs.size());
            REQUIRE(again.colored.size() == file.colored.size());
            for (std::size_t i = 0 ; i < file.graphs.size() ; ++i)
                CHECK(again.graphs[i].same_structure(file.graphs[i]));
            for (std::size_t i = 0 ; i < file.colored.size() ; ++i) {
                CHECK(again.colored[i].over == file.colored[i].over);
                CHECK(oracle::plain(again.colored[i].graph) == oracle::plain(file.colored[i].graph));
            }
            CHECK(serialize(again) == serialize(file));
        }
}

TEST_CASE("random graphs round trip")
{
    std::mt19937_64 rng(7);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 7)(rng);
        bool symmetric = trial % 2;
        auto h = symmetric ? oracle::path(3) : Digraph::directed("h", 3, { { 0, 1 }, { 2, 1 } });
        auto x = oracle::random_colored(rng, n, 3, symmetric);

        GraphFile file;
        file.graphs.push_back(h);
        file.colored.push_back({ x, h.name() });
        auto again = parse_graph_file(serialize(file));
        CHECK(again.graphs.at(0).same_structure(h));
        CHECK(oracle::plain(again.colored.at(0).graph) == oracle::plain(x));
    }
}
