#ifndef NUAR_GUARD_NU_HH
#define NUAR_GUARD_NU_HH 1

#include <nuar/colored.hh>
#include <nuar/graph.hh>
#include <nuar/homomorphism.hh>

#include <optional>
#include <string>
#include <vector>

namespace nuar
{
    /// The full table of a k-ary operation on the vertices of a graph with
    /// base_size vertices, indexed by encode_tuple.
    struct NuWitness
    {
        int base_size = 0;
        int arity = 0;
        std::vector<int> table;

        [[nodiscard]] auto operator() (std::span<const int> tuple) const -> int { return table[encode_tuple(tuple, base_size)]; }
    };

    enum class NuViolationKind
    {
        TableShape,
        NearUnanimity,
        Edge
    };

    struct NuViolation
    {
        NuViolationKind kind;
        std::vector<int> tuple;          // the offending tuple, or the tail of the offending product arc
        std::vector<int> other_tuple;    // head of the offending product arc
        std::string message;
    };

    struct NuVerification
    {
        bool valid = false;
        std::optional<NuViolation> violation;
    };

    /// Checks the near-unanimity identities on every tuple and edge
    /// preservation on every arc of the power, by exhaustive scan.
    [[nodiscard]] auto verify_nu_witness(const Digraph & h, const NuWitness & w) -> NuVerification;

    /// K: the power h^arity, with each tuple that is constant except in at most
    /// one coordinate coloured with its repeated value. Needs arity >= 3.
    [[nodiscard]] auto build_nu_instance(const Digraph & h, int arity, std::size_t size_cap = default_size_cap) -> ColoredGraph;

    struct NuSearchResult
    {
        std::optional<NuWitness> witness;
        SearchStats stats;

        [[nodiscard]] auto found() const -> bool { return witness.has_value(); }
    };

    /// Decides whether h has an NU polymorphism of the given arity by searching
    /// for a homomorphism from build_nu_instance(h, arity) to h^c. A returned
    /// witness has already passed verify_nu_witness.
    [[nodiscard]] auto find_nu_polymorphism(const Digraph & h, int arity, std::size_t size_cap = default_size_cap) -> NuSearchResult;

    /// Vertices on some shortest u-v path. Throws Unreachable if there is none.
    [[nodiscard]] auto interval(const Digraph & h, int u, int v) -> std::vector<int>;

    struct IntervalReport
    {
        bool holds = true;
        std::optional<Arc> violating_pair;
        std::vector<int> violating_neighbours;
        int pairs_checked = 0;
    };

    /// The interval characterisation of bipartite graphs with a ternary NU
    /// polymorphism: for every u, v at distance at least 3, the neighbours of u
    /// inside I(u, v) have a common neighbour in I(u, v) other than u.
    [[nodiscard]] auto bandelt_3nu_criterion(const Digraph & h) -> IntervalReport;

    enum class CheckStatus
    {
        Holds,
        Violated
    };

    [[nodiscard]] auto to_string(CheckStatus status) -> std::string;

    struct Lemma2Report
    {
        CheckStatus status = CheckStatus::Holds;
        ColoredGraph instance;
        Digraph base;
        HEmbedding embed;
        SearchOutcome direct;          // instance -> base^c
        SearchOutcome retraction;      // embed.graph retracts onto base
        std::optional<Homomorphism> pulled_back;   // instance -> base^c rebuilt from the retraction
        bool pulled_back_valid = false;
    };

    /// Decides "g maps to h^c" and "h is a retract of the H-embed of g"
    /// independently and compares. Throws PreconditionViolated when g does not
    /// meet the H-embed requirements.
    [[nodiscard]] auto check_lemma2(const ColoredGraph & g, const Digraph & h) -> Lemma2Report;

    struct OrientationReport
    {
        CheckStatus status = CheckStatus::Holds;
        int arity = 0;
        Digraph base, a_to_b, b_to_a;
        NuSearchResult undirected, from_a, from_b;
    };

    /// NU existence on h and on both orientations of its bipartition.
    [[nodiscard]] auto check_orientation_invariance(const Digraph & h, int arity, std::size_t size_cap = default_size_cap) -> OrientationReport;

    struct ForwardReport
    {
        CheckStatus status = CheckStatus::Holds;
        int arity = 0;
        Digraph base;
        int instance_size = 0;
        int instance_colored = 0;
        Digraph embed;                  // K^ with the template in its first block
        SearchOutcome retraction;
        NuSearchResult direct;
        std::optional<NuWitness> pulled_back;   // NU table rebuilt from the retraction
        bool pulled_back_valid = false;
    };

    /// Builds K, takes its H-embed, and asks for a retraction onto h; compares
    /// the answer with a direct NU search.
    [[nodiscard]] auto check_theorem1_forward(const Digraph & h, int arity, std::size_t size_cap = default_size_cap) -> ForwardReport;
}

#endif
