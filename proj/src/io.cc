#include <nuar/errors.hh>
#include <nuar/io.hh>

#include <charconv>
#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace nuar
{
    using std::to_string;

    auto GraphFile::find_graph(string_view name) const -> const Digraph *
    {
        for (auto & g : graphs)
            if (g.name() == name)
                return &g;
        return nullptr;
    }

    auto GraphFile::find_colored(string_view name) const -> const ColoredBlock *
    {
        for (auto & c : colored)
            if (c.graph.name() == name)
                return &c;
        return nullptr;
    }

    namespace
    {
        auto tokenize(string_view line) -> vector<string_view>
        {
            vector<string_view> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    tokens.push_back(line.substr(start, i - start));
            }
            return tokens;
        }

        struct Block
        {
            bool colored = false;
            string name, over;
            bool directed = false;
            int template_size = 0;
            int vertices = -1;
            vector<Arc> arcs;
            vector<std::pair<int, int> > colors;
            int start_line = 0;
        };

        class Parser
        {
            private:
                std::span<const Digraph> _known;
                GraphFile _file;
                std::optional<Block> _block;
                int _line = 0;

                [[noreturn]] auto fail(const string & message) const -> void
                {
                    throw ParseError(_line, "line " + to_string(_line) + ": " + message);
                }

                auto number(string_view token, const char * what) const -> int
                {
                    int value = 0;
                    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                    if (ec != std::errc{ } || end != token.data() + token.size() || value < 0)
                        fail(string{ "expected a non-negative integer for " } + what + ", got '" + string{ token } + "'");
                    return value;
                }

                auto vertex(string_view token) const -> int
                {
                    int v = number(token, "a vertex");
                    if (_block->vertices < 0)
                        fail("'vertices' must come before edges and colours");
                    if (v >= _block->vertices)
                        fail("vertex " + to_string(v) + " out of range for " + to_string(_block->vertices) + " vertices");
                    return v;
                }

                auto lookup_template(string_view name) const -> const Digraph *
                {
                    if (auto g = _file.find_graph(name))
                        return g;
                    for (auto & g : _known)
                        if (g.name() == name)
                            return &g;
                    return nullptr;
                }

                auto name_taken(string_view name) const -> bool
                {
                    return _file.find_graph(name) || _file.find_colored(name);
                }

                auto open(const vector<string_view> & t) -> void
                {
                    Block b;
                    b.start_line = _line;
                    if (t[0] == "graph") {
                        if (t.size() != 3 || (t[2] != "directed" && t[2] != "undirected"))
                            fail("expected 'graph <name> directed|undirected'");
                        b.name = t[1];
                        b.directed = t[2] == "directed";
                    }
                    else {
                        if (t.size() != 4 || t[2] != "over")
                            fail("expected 'colored <name> over <graph>'");
                        b.colored = true;
                        b.name = t[1];
                        b.over = t[3];
                        auto h = lookup_template(b.over);
                        if (! h)
                            fail("unknown template '" + b.over + "'");
                        b.directed = ! h->symmetric();
                        b.template_size = h->size();
                    }
                    if (name_taken(b.name))
                        fail("duplicate block name '" + b.name + "'");
                    _block = std::move(b);
                }

                auto close() -> void
                {
                    auto & b = *_block;
                    if (b.vertices < 0)
                        fail("block '" + b.name + "' has no 'vertices' line");
                    Digraph carrier(b.name, b.vertices, b.arcs, ! b.directed);
                    if (! b.colored)
                        _file.graphs.push_back(std::move(carrier));
                    else {
                        vector<ColorSet> colors(b.vertices, ColorSet(b.template_size));
                        for (auto [v, h] : b.colors)
                            colors[v].set(h);
                        _file.colored.push_back(ColoredBlock{ ColoredGraph(std::move(carrier), b.template_size, std::move(colors)), b.over });
                    }
                    _block.reset();
                }

            public:
                explicit Parser(std::span<const Digraph> known) : _known(known) { }

                auto line(string_view text) -> void
                {
                    ++_line;
                    if (auto hash = text.find('#') ; hash != string_view::npos)
                        text = text.substr(0, hash);
                    auto t = tokenize(text);
                    if (t.empty())
                        return;

                    if (! _block) {
                        if (t[0] != "graph" && t[0] != "colored")
                            fail("expected 'graph' or 'colored', got '" + string{ t[0] } + "'");
                        open(t);
                        return;
                    }

                    auto & b = *_block;
                    if (t[0] == "vertices") {
                        if (t.size() != 2)
                            fail("expected 'vertices <n>'");
                        if (b.vertices >= 0)
                            fail("repeated 'vertices' line");
                        b.vertices = number(t[1], "the vertex count");
                    }
                    else if (t[0] == "e") {
                        if (t.size() != 3)
                            fail("expected 'e <u> <v>'");
                        b.arcs.emplace_back(vertex(t[1]), vertex(t[2]));
                    }
                    else if (t[0] == "c") {
                        if (! b.colored)
                            fail("colour line in a block without a template");
                        if (t.size() != 3)
                            fail("expected 'c <v> <h>'");
                        int v = vertex(t[1]);
                        int h = number(t[2], "a colour");
                        if (h >= b.template_size)
                            fail("colour " + to_string(h) + " out of range for template '" + b.over + "'");
                        b.colors.emplace_back(v, h);
                    }
                    else if (t[0] == "end") {
                        if (t.size() != 1)
                            fail("expected 'end'");
                        close();
                    }
                    else
                        fail("unknown directive '" + string{ t[0] } + "'");
                }

                auto finish() -> GraphFile
                {
                    if (_block) {
                        ++_line;
                        fail("block '" + _block->name + "' is missing 'end'");
                    }
                    return std::move(_file);
                }
        };
    }

    auto parse_graph_file(string_view text, std::span<const Digraph> known) -> GraphFile
    {
        Parser parser(known);
        while (! text.empty()) {
            auto newline = text.find('\n');
            parser.line(text.substr(0, newline));
            text = newline == string_view::npos ? string_view{ } : text.substr(newline + 1);
        }
        return parser.finish();
    }

    auto read_graph_file(const std::filesystem::path & path, std::span<const Digraph> known) -> GraphFile
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error(ErrorKind::InvalidArgument, "cannot read '" + path.string() + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            return parse_graph_file(buffer.str(), known);
        }
        catch (const ParseError & e) {
            throw ParseError(e.line(), path.string() + ": " + e.what());
        }
    }

    namespace
    {
        auto edge_lines(const Digraph & g) -> string
        {
            string result;
            auto edges = g.symmetric() ? g.undirected_edges() : vector<Arc>(g.arcs().begin(), g.arcs().end());
            for (auto [u, v] : edges)
                result += "e " + to_string(u) + " " + to_string(v) + "\n";
            return result;
        }
    }

    auto serialize(const Digraph & g) -> string
    {
        return "graph " + g.name() + (g.symmetric() ? " undirected\n" : " directed\n")
            + "vertices " + to_string(g.size()) + "\n" + edge_lines(g) + "end\n";
    }

    auto serialize(const ColoredGraph & x, string_view over) -> string
    {
        string result = "colored " + x.name() + " over " + string{ over } + "\n"
            + "vertices " + to_string(x.size()) + "\n" + edge_lines(x.carrier());
        for (int v = 0 ; v < x.size() ; ++v)
            for (int h : x.color_list(v))
                result += "c " + to_string(v) + " " + to_string(h) + "\n";
        return result + "end\n";
    }

    auto serialize(const GraphFile & file) -> string
    {
        string result;
        for (auto & g : file.graphs)
            result += (result.empty() ? "" : "\n") + serialize(g);
        for (auto & c : file.colored)
            result += (result.empty() ? "" : "\n") + serialize(c.graph, c.over);
        return result;
    }
}
