#ifndef NUAR_GUARD_IO_HH
#define NUAR_GUARD_IO_HH 1

#include <nuar/colored.hh>
#include <nuar/graph.hh>

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nuar
{
    struct ColoredBlock
    {
        ColoredGraph graph;
        std::string over;     // name of the template graph
    };

    /// The blocks of a graph file, in order of appearance within each kind.
    struct GraphFile
    {
        std::vector<Digraph> graphs;
        std::vector<ColoredBlock> colored;

        [[nodiscard]] auto find_graph(std::string_view name) const -> const Digraph *;
        [[nodiscard]] auto find_colored(std::string_view name) const -> const ColoredBlock *;
    };

    /// Parses the line-oriented graph format. A colored block's template is
    /// looked up among earlier graph blocks of the same file, then in known.
    /// Throws ParseError carrying the offending line number.
    [[nodiscard]] auto parse_graph_file(std::string_view text, std::span<const Digraph> known = { }) -> GraphFile;

    /// Reads and parses a file; ParseError messages are prefixed by the path.
    [[nodiscard]] auto read_graph_file(const std::filesystem::path & path, std::span<const Digraph> known = { }) -> GraphFile;

    /// Canonical text: graph blocks first, then colored blocks; undirected
    /// edges once with u <= v, arcs and colours in ascending order.
    [[nodiscard]] auto serialize(const GraphFile & file) -> std::string;
    [[nodiscard]] auto serialize(const Digraph & g) -> std::string;
    [[nodiscard]] auto serialize(const ColoredGraph & x, std::string_view over) -> std::string;
}

#endif
