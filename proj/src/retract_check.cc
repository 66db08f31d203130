#include <nuar/errors.hh>
#include <nuar/obstructions.hh>

using std::span;
using std::string;
using std::vector;

namespace nuar
{
    auto to_string(RetractVerdict verdict) -> string
    {
        switch (verdict) {
            case RetractVerdict::Consistent:              return "consistent";
            case RetractVerdict::CandidateCounterexample: return "candidate-counterexample";
            case RetractVerdict::Violated:                return "violated";
        }
        return "?";
    }

    auto absolute_retract_check(const Digraph & g, const Digraph & h, span<const int> embedding,
            int max_leaves, int max_vertices, bool strict_leaf_colors) -> AbsoluteRetractReport
    {
        if (! g.symmetric() || ! classify(g).bipartite)
            throw Error(ErrorKind::NotBipartite, "'" + g.name() + "' is not an undirected bipartite graph");

        AbsoluteRetractReport report;
        report.max_leaves = max_leaves;
        report.max_vertices = max_vertices;
        report.g_h = embed_as_colored(g, h, embedding);
        auto target = canonical_template(h);

        for (auto & t : enumerate_h_trees(h, max_leaves, max_vertices, strict_leaf_colors)) {
            ++report.trees_examined;
            if (! is_obstruction(t.tree, target))
                continue;
            ++report.tree_obstructions;
            bool critical = is_critical_obstruction(t.tree, target).critical;
            if (critical)
                ++report.critical_tree_obstructions;
            auto into_g = find_homomorphism(t.tree, report.g_h);
            if (into_g.found())
                report.failures.push_back(TreeFailure{ t, *into_g.witness, critical });
        }
        report.hypothesis_holds = report.failures.empty();

        for (int f = 0 ; f < int(report.failures.size()) ; ++f) {
            auto & failure = report.failures[f];
            auto & tree = failure.tree.tree;
            for (int u = 0 ; u < tree.size() ; ++u) {
                int image = failure.into_g.assignment[u];
                if (tree.is_colored(u) || tree.carrier().degree(u) < 2 || ! report.g_h.is_colored(image))
                    continue;
                SplitCheck split;
                split.failure = f;
                split.vertex = u;
                split.color = int(report.g_h.colors(image).find_first());
                split.pieces = split_tree_at(failure.tree, u, split.color, h);
                for (int p = 0 ; p < int(split.pieces.size()) && split.obstructing_piece == -1 ; ++p)
                    if (is_obstruction(split.pieces[p].tree.tree, target))
                        split.obstructing_piece = p;
                report.splits.push_back(std::move(split));
            }
        }

        report.retraction = find_retraction(g, h, embedding);
        if (report.retraction.found() && ! report.hypothesis_holds)
            report.verdict = RetractVerdict::Violated;
        else if (! report.retraction.found() && report.hypothesis_holds)
            report.verdict = RetractVerdict::CandidateCounterexample;
        else
            report.verdict = RetractVerdict::Consistent;
        return report;
    }
}
