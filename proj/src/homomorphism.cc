#include <nuar/errors.hh>
#include <nuar/homomorphism.hh>

#include <algorithm>
#include <bit>
#include <cstdint>

using std::optional;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace nuar
{
    using std::to_string;

    auto homomorphism_violation(const ColoredGraph & source, const ColoredGraph & target, span<const int> assignment)
        -> optional<string>
    {
        if (int(assignment.size()) != source.size())
            return "map has " + to_string(assignment.size()) + " entries for " + to_string(source.size()) + " vertices";
        if (source.template_size() != target.template_size())
            return string{ "structures are coloured over different templates" };

        for (int v = 0 ; v < source.size() ; ++v)
            if (assignment[v] < 0 || assignment[v] >= target.size())
                return "vertex " + to_string(v) + " is mapped outside the target";

        for (auto [a, b] : source.carrier().arcs())
            if (! target.carrier().has_arc(assignment[a], assignment[b]))
                return "arc " + to_string(a) + "->" + to_string(b) + " goes to non-arc "
                    + to_string(assignment[a]) + "->" + to_string(assignment[b]);

        for (int v = 0 ; v < source.size() ; ++v)
            for (int h = 0 ; h < source.template_size() ; ++h)
                if (source.has_color(v, h) && ! target.has_color(assignment[v], h))
                    return "vertex " + to_string(v) + " has colour " + to_string(h) + " but its image "
                        + to_string(assignment[v]) + " does not";

        return std::nullopt;
    }

    auto is_homomorphism(const ColoredGraph & source, const ColoredGraph & target, span<const int> assignment) -> bool
    {
        return ! homomorphism_violation(source, target, assignment);
    }

    auto is_graph_homomorphism(const Digraph & source, const Digraph & target, span<const int> assignment) -> bool
    {
        if (int(assignment.size()) != source.size())
            return false;
        for (int v : assignment)
            if (v < 0 || v >= target.size())
                return false;
        for (auto [a, b] : source.arcs())
            if (! target.has_arc(assignment[a], assignment[b]))
                return false;
        return true;
    }

    namespace
    {
        class Searcher
        {
            private:
                const ColoredGraph & _source;
                const ColoredGraph & _target;
                int _source_size, _target_size, _words;

                vector<uint64_t> _target_out, _target_in;
                vector<vector<int> > _source_out, _source_in;
                vector<uint64_t> _domains;

                vector<int> _queue;
                vector<char> _queued;

                auto row(vector<uint64_t> & table, int v) -> uint64_t * { return table.data() + std::size_t(v) * _words; }

                auto set_bit(uint64_t * bits, int i) -> void { bits[i / 64] |= uint64_t{ 1 } << (i % 64); }

                auto popcount(const uint64_t * bits) const -> int
                {
                    int result = 0;
                    for (int w = 0 ; w < _words ; ++w)
                        result += std::popcount(bits[w]);
                    return result;
                }

                template <typename F>
                auto for_each_bit(const uint64_t * bits, F && f) const -> void
                {
                    for (int w = 0 ; w < _words ; ++w)
                        for (uint64_t word = bits[w] ; word ; word &= word - 1)
                            f(w * 64 + std::countr_zero(word));
                }

                auto enqueue(int v) -> void
                {
                    if (! _queued[v]) {
                        _queued[v] = 1;
                        _queue.push_back(v);
                    }
                }

                // Restrict every neighbour's domain to the values supported by
                // the current domain of v, for each incident arc constraint.
                auto revise_neighbours(int v, vector<uint64_t> & support) -> bool
                {
                    for (int direction = 0 ; direction < 2 ; ++direction) {
                        auto & neighbours = direction == 0 ? _source_out[v] : _source_in[v];
                        if (neighbours.empty())
                            continue;
                        auto & rows = direction == 0 ? _target_out : _target_in;

                        std::fill(support.begin(), support.end(), 0);
                        for_each_bit(row(_domains, v), [&] (int t) {
                            const uint64_t * r = row(rows, t);
                            for (int w = 0 ; w < _words ; ++w)
                                support[w] |= r[w];
                        });

                        for (int u : neighbours) {
                            uint64_t * d = row(_domains, u);
                            bool changed = false, empty = true;
                            for (int w = 0 ; w < _words ; ++w) {
                                uint64_t revised = d[w] & support[w];
                                if (revised != d[w]) {
                                    d[w] = revised;
                                    changed = true;
                                }
                                if (revised)
                                    empty = false;
                            }
                            if (changed) {
                                ++stats.propagations;
                                if (empty)
                                    return false;
                                enqueue(u);
                            }
                        }
                    }
                    return true;
                }

                auto propagate() -> bool
                {
                    vector<uint64_t> support(_words);
                    std::size_t head = 0;
                    bool ok = true;
                    while (ok && head < _queue.size()) {
                        int v = _queue[head++];
                        _queued[v] = 0;
                        ok = revise_neighbours(v, support);
                    }
                    for (std::size_t i = head ; i < _queue.size() ; ++i)
                        _queued[_queue[i]] = 0;
                    _queue.clear();
                    return ok;
                }

                auto select_branch_vertex() const -> int
                {
                    int best = -1, best_size = 0;
                    for (int v = 0 ; v < _source_size ; ++v) {
                        int size = popcount(_domains.data() + std::size_t(v) * _words);
                        if (size > 1 && (best == -1 || size < best_size)) {
                            best = v;
                            best_size = size;
                            if (size == 2)
                                break;
                        }
                    }
                    return best;
                }

                auto search() -> bool
                {
                    ++stats.nodes;
                    int v = select_branch_vertex();
                    if (v == -1)
                        return true;

                    vector<uint64_t> saved = _domains;
                    vector<int> values;
                    for_each_bit(row(_domains, v), [&] (int t) { values.push_back(t); });

                    for (int t : values) {
                        uint64_t * d = row(_domains, v);
                        std::fill(d, d + _words, 0);
                        set_bit(d, t);
                        enqueue(v);
                        if (propagate() && search())
                            return true;
                        _domains = saved;
                    }
                    return false;
                }

            public:
                SearchStats stats;

                Searcher(const ColoredGraph & source, const ColoredGraph & target) :
                    _source(source),
                    _target(target),
                    _source_size(source.size()),
                    _target_size(target.size()),
                    _words(std::max(1, (target.size() + 63) / 64)),
                    _target_out(std::size_t(_target_size) * _words, 0),
                    _target_in(std::size_t(_target_size) * _words, 0),
                    _source_out(_source_size),
                    _source_in(_source_size),
                    _domains(std::size_t(_source_size) * _words, 0),
                    _queued(_source_size, 0)
                {
                    for (auto [a, b] : _target.carrier().arcs()) {
                        set_bit(row(_target_out, a), b);
                        set_bit(row(_target_in, b), a);
                    }
                    for (auto [a, b] : _source.carrier().arcs())
                        if (a != b) {
                            _source_out[a].push_back(b);
                            _source_in[b].push_back(a);
                        }
                }

                auto run() -> optional<Homomorphism>
                {
                    if (_source_size == 0)
                        return Homomorphism{ };

                    for (int v = 0 ; v < _source_size ; ++v) {
                        uint64_t * d = row(_domains, v);
                        bool looped = _source.carrier().has_arc(v, v);
                        for (int t = 0 ; t < _target_size ; ++t) {
                            if (looped && ! _target.carrier().has_arc(t, t))
                                continue;
                            if ((_source.colors(v) & ~_target.colors(t)).any())
                                continue;
                            set_bit(d, t);
                        }
                        if (popcount(d) == 0)
                            return std::nullopt;
                        enqueue(v);
                    }

                    if (! propagate() || ! search())
                        return std::nullopt;

                    Homomorphism result;
                    for (int v = 0 ; v < _source_size ; ++v) {
                        const uint64_t * d = _domains.data() + std::size_t(v) * _words;
                        for_each_bit(d, [&] (int t) { result.assignment.push_back(t); });
                    }
                    return result;
                }
        };

        auto check_templates(const ColoredGraph & x, const ColoredGraph & target) -> void
        {
            if (x.template_size() != target.template_size())
                throw Error(ErrorKind::TemplateMismatch, "source is coloured over " + to_string(x.template_size())
                        + " template vertices, target over " + to_string(target.template_size()));
        }
    }

    auto find_homomorphism(const ColoredGraph & x, const ColoredGraph & target) -> SearchOutcome
    {
        check_templates(x, target);

        Searcher searcher(x, target);
        SearchOutcome outcome;
        outcome.witness = searcher.run();
        outcome.stats = searcher.stats;
        outcome.status = outcome.witness ? SearchStatus::Found : SearchStatus::NoHomomorphism;
        return outcome;
    }

    auto brute_force_homomorphism(const ColoredGraph & x, const ColoredGraph & target) -> optional<Homomorphism>
    {
        check_templates(x, target);
        if (x.size() == 0)
            return Homomorphism{ };
        if (target.size() == 0)
            return std::nullopt;

        vector<int> assignment(x.size(), 0);
        while (true) {
            if (is_homomorphism(x, target, assignment))
                return Homomorphism{ assignment };
            int p = x.size() - 1;
            while (p >= 0 && ++assignment[p] == target.size())
                assignment[p--] = 0;
            if (p < 0)
                return std::nullopt;
        }
    }

    auto is_obstruction(const ColoredGraph & x, const ColoredGraph & target) -> bool
    {
        return ! find_homomorphism(x, target).found();
    }

    auto find_retraction(const Digraph & g, const Digraph & h, span<const int> embedding) -> SearchOutcome
    {
        return find_homomorphism(embed_as_colored(g, h, embedding), canonical_template(h));
    }

    auto is_critical_obstruction(const ColoredGraph & x, const ColoredGraph & target) -> CriticalityVerdict
    {
        CriticalityVerdict verdict;
        auto outcome = find_homomorphism(x, target);
        if (outcome.found()) {
            verdict.feasibility_witness = outcome.witness;
            return verdict;
        }

        for (auto & delta : maximal_proper_substructures(x))
            if (is_obstruction(apply_delta(x, delta), target)) {
                verdict.obstructing_delta = delta;
                return verdict;
            }

        verdict.critical = true;
        return verdict;
    }

    auto minimize_to_critical(const ColoredGraph & x, const ColoredGraph & target, vector<int> * kept_vertices) -> ColoredGraph
    {
        if (! is_obstruction(x, target))
            throw Error(ErrorKind::NotAnObstruction, "'" + x.name() + "' admits a homomorphism to the target");

        ColoredGraph current = x;
        vector<int> original(x.size());
        for (int v = 0 ; v < x.size() ; ++v)
            original[v] = v;

        bool changed = true;
        while (changed) {
            changed = false;
            auto deltas = maximal_proper_substructures(current);
            // vertex removals renumber, so do them from the top down
            std::stable_partition(deltas.begin(), deltas.end(),
                    [] (const SubstructureDelta & d) { return d.kind != DeltaKind::RemoveIsolatedVertex; });
            std::reverse(std::find_if(deltas.begin(), deltas.end(),
                        [] (const SubstructureDelta & d) { return d.kind == DeltaKind::RemoveIsolatedVertex; }), deltas.end());

            for (auto & delta : deltas) {
                auto candidate = apply_delta(current, delta);
                if (is_obstruction(candidate, target)) {
                    current = std::move(candidate);
                    if (delta.kind == DeltaKind::RemoveIsolatedVertex)
                        original.erase(original.begin() + delta.vertex);
                    changed = true;
                }
            }
        }

        if (kept_vertices)
            *kept_vertices = original;
        return current;
    }
}
