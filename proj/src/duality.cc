#include <nuar/canonical.hh>
#include <nuar/errors.hh>
#include <nuar/obstructions.hh>

#include <set>

using std::span;
using std::string;
using std::vector;

namespace nuar
{
    using std::to_string;

    auto to_string(DualityStatus status) -> string
    {
        switch (status) {
            case DualityStatus::Complete:               return "complete";
            case DualityStatus::IncompleteWithinBounds: return "incomplete-within-bounds";
            case DualityStatus::Violated:               return "violated";
        }
        return "?";
    }

    auto enumerate_colored_graphs(int template_size, int vertices, bool symmetric) -> vector<ColoredGraph>
    {
        if (vertices < 0 || template_size < 0 || template_size > 16)
            throw Error(ErrorKind::InvalidArgument, "enumeration bounds out of range");

        vector<Arc> slots;
        for (int a = 0 ; a < vertices ; ++a)
            for (int b = 0 ; b < vertices ; ++b)
                if (symmetric ? a < b : a != b)
                    slots.emplace_back(a, b);
        if (slots.size() >= 63)
            throw Error(ErrorKind::SizeCapExceeded, "too many vertices to enumerate");

        vector<ColoredGraph> result;
        std::set<vector<std::uint64_t> > seen;
        unsigned long subsets = 1ul << template_size;
        for (unsigned long mask = 0 ; mask < (1ul << slots.size()) ; ++mask) {
            vector<Arc> arcs;
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if (mask & (1ul << i))
                    arcs.push_back(slots[i]);
            Digraph carrier("X", vertices, std::move(arcs), symmetric);

            vector<unsigned long> colouring(vertices, 0);
            while (true) {
                vector<ColorSet> colors;
                for (unsigned long c : colouring)
                    colors.emplace_back(template_size, c);
                ColoredGraph x(carrier, template_size, std::move(colors));
                if (seen.insert(canonical_form(x).key).second)
                    result.push_back(x.with_name("X" + to_string(vertices) + "_" + to_string(result.size())));

                int p = vertices - 1;
                while (p >= 0 && ++colouring[p] == subsets)
                    colouring[p--] = 0;
                if (p < 0)
                    break;
            }
        }
        return result;
    }

    auto verify_duality(const Digraph & h, span<const ColoredGraph> family, int max_x_vertices) -> DualityReport
    {
        auto target = canonical_template(h);
        for (std::size_t i = 0 ; i < family.size() ; ++i)
            if (find_homomorphism(family[i], target).found())
                throw Error(ErrorKind::FamilyMemberFeasible, "family member " + to_string(i) + " ('" + family[i].name()
                        + "') maps to the template", { int(i) });

        DualityReport report;
        report.max_x_vertices = max_x_vertices;
        bool violated = false;

        for (int n = 0 ; n <= max_x_vertices ; ++n)
            for (auto & x : enumerate_colored_graphs(h.size(), n, h.symmetric())) {
                ++report.examined;
                auto feasibility = find_homomorphism(x, target);

                int member = -1;
                std::optional<Homomorphism> member_map;
                for (std::size_t i = 0 ; i < family.size() && member == -1 ; ++i) {
                    auto hit = find_homomorphism(family[i], x);
                    if (hit.found()) {
                        member = int(i);
                        member_map = hit.witness;
                    }
                }

                if (! feasibility.found() && member == -1)
                    report.discrepancies.push_back(Discrepancy{ DiscrepancyKind::UncoveredObstruction, x, std::nullopt, -1, std::nullopt });
                else if (feasibility.found() && member != -1) {
                    report.discrepancies.push_back(Discrepancy{ DiscrepancyKind::CoveredFeasible, x, feasibility.witness, member, member_map });
                    violated = true;
                }
            }

        if (violated)
            report.status = DualityStatus::Violated;
        else if (! report.discrepancies.empty())
            report.status = DualityStatus::IncompleteWithinBounds;
        return report;
    }
}
