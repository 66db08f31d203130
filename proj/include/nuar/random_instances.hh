#ifndef NUAR_GUARD_RANDOM_INSTANCES_HH
#define NUAR_GUARD_RANDOM_INSTANCES_HH 1

#include <nuar/colored.hh>
#include <nuar/graph.hh>

#include <random>
#include <string>

namespace nuar
{
    /// A random undirected h-coloured graph meeting the H-embed requirements:
    /// at most one colour per vertex, and coloured neighbours only when their
    /// colours are adjacent in h. Between 1 and max_vertices vertices.
    [[nodiscard]] auto random_embed_instance(const Digraph & h, std::mt19937_64 & rng, int max_vertices,
            std::string name = "R") -> ColoredGraph;
}

#endif
