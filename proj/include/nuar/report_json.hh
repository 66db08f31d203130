#ifndef NUAR_GUARD_REPORT_JSON_HH
#define NUAR_GUARD_REPORT_JSON_HH 1

#include <nuar/colored.hh>
#include <nuar/graph.hh>
#include <nuar/homomorphism.hh>
#include <nuar/nu.hh>
#include <nuar/obstructions.hh>

#include <json.hpp>

#include <string>
#include <vector>

namespace nuar
{
    using Json = nlohmann::ordered_json;

    [[nodiscard]] auto to_json(const Digraph & g) -> Json;
    [[nodiscard]] auto to_json(const ColoredGraph & x) -> Json;
    [[nodiscard]] auto digraph_from_json(const Json & j) -> Digraph;
    [[nodiscard]] auto colored_from_json(const Json & j) -> ColoredGraph;

    /// A replayable homomorphism claim: both structures and the map.
    [[nodiscard]] auto homomorphism_json(const ColoredGraph & source, const ColoredGraph & target, const Homomorphism & map) -> Json;

    /// The outcome of a search, with the witness in replayable form when found.
    [[nodiscard]] auto search_json(const SearchOutcome & outcome, const ColoredGraph & source, const ColoredGraph & target) -> Json;

    [[nodiscard]] auto nu_witness_json(const Digraph & base, const NuWitness & w) -> Json;
    [[nodiscard]] auto to_json(const NuSearchResult & result, const Digraph & base) -> Json;

    [[nodiscard]] auto to_json(const IntervalReport & report, const Digraph & h) -> Json;
    [[nodiscard]] auto to_json(const TreeValidation & validation) -> Json;
    [[nodiscard]] auto to_json(const Lemma2Report & report) -> Json;
    [[nodiscard]] auto to_json(const OrientationReport & report) -> Json;
    [[nodiscard]] auto to_json(const ForwardReport & report) -> Json;
    [[nodiscard]] auto to_json(const DualityReport & report, const Digraph & h) -> Json;
    [[nodiscard]] auto to_json(const AbsoluteRetractReport & report, const Digraph & g, const Digraph & h) -> Json;

    struct RecheckResult
    {
        int checked = 0;
        std::vector<std::string> failures;

        [[nodiscard]] auto ok() const -> bool { return failures.empty(); }
    };

    /// Walks a report and re-validates every embedded homomorphism, NU table
    /// and interval violation using only the independent checkers.
    [[nodiscard]] auto recheck(const Json & report) -> RecheckResult;
}

#endif
