#include <nuar/canonical.hh>

#include <algorithm>
#include <map>

using std::uint64_t;
using std::vector;

namespace nuar
{
    namespace
    {
        auto refine(const ColoredGraph & x) -> vector<int>
        {
            auto & g = x.carrier();
            int n = x.size();

            auto rank_by = [n] (const vector<vector<int> > & signatures) {
                std::map<vector<int>, int> ranks;
                for (auto & s : signatures)
                    ranks.emplace(s, 0);
                int next = 0;
                for (auto & [s, r] : ranks)
                    r = next++;
                vector<int> result(n);
                for (int v = 0 ; v < n ; ++v)
                    result[v] = ranks[signatures[v]];
                return std::pair{ result, next };
            };

            vector<vector<int> > signatures(n);
            for (int v = 0 ; v < n ; ++v) {
                signatures[v] = { g.has_arc(v, v) ? 1 : 0, g.out_degree(v), g.in_degree(v) };
                for (int h : x.color_list(v))
                    signatures[v].push_back(h);
                // keep colour lists of different lengths from colliding with degrees
                signatures[v].insert(signatures[v].begin() + 3, int(x.colors(v).count()));
            }
            auto [cell, cells] = rank_by(signatures);

            while (true) {
                for (int v = 0 ; v < n ; ++v) {
                    vector<int> out, in;
                    for (int w : g.out_neighbours(v))
                        out.push_back(cell[w]);
                    for (int w : g.in_neighbours(v))
                        in.push_back(cell[w]);
                    std::sort(out.begin(), out.end());
                    std::sort(in.begin(), in.end());
                    signatures[v] = { cell[v], -1 };
                    signatures[v].insert(signatures[v].end(), out.begin(), out.end());
                    signatures[v].push_back(-1);
                    signatures[v].insert(signatures[v].end(), in.begin(), in.end());
                }
                auto [refined, refined_cells] = rank_by(signatures);
                if (refined_cells == cells)
                    return cell;
                cell = std::move(refined);
                cells = refined_cells;
            }
        }

        auto encode(const ColoredGraph & x, const vector<int> & order) -> vector<uint64_t>
        {
            auto & g = x.carrier();
            int n = x.size();
            vector<uint64_t> key{ uint64_t(n), uint64_t(g.symmetric()), uint64_t(x.template_size()) };

            uint64_t word = 0;
            int used = 0;
            auto push_bit = [&] (bool bit) {
                word = (word << 1) | uint64_t(bit);
                if (++used == 64) {
                    key.push_back(word);
                    word = 0;
                    used = 0;
                }
            };

            for (int i = 0 ; i < n ; ++i) {
                for (int h = 0 ; h < x.template_size() ; ++h)
                    push_bit(x.has_color(order[i], h));
                for (int j = 0 ; j < n ; ++j)
                    push_bit(g.has_arc(order[i], order[j]));
            }
            if (used > 0)
                key.push_back(word << (64 - used));
            return key;
        }
    }

    auto canonical_form(const ColoredGraph & x) -> CanonicalForm
    {
        auto cell = refine(x);
        int cell_count = x.size() == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
        vector<vector<int> > cells(cell_count);
        for (int v = 0 ; v < x.size() ; ++v)
            cells[cell[v]].push_back(v);

        CanonicalForm best;
        bool first = true;
        while (true) {
            vector<int> order;
            for (auto & c : cells)
                order.insert(order.end(), c.begin(), c.end());
            auto key = encode(x, order);
            if (first || key < best.key) {
                best.key = std::move(key);
                best.order = std::move(order);
                first = false;
            }

            int c = cell_count - 1;
            while (c >= 0 && ! std::next_permutation(cells[c].begin(), cells[c].end()))
                --c;
            if (c < 0)
                break;
        }
        return best;
    }

    auto canonical_relabel(const ColoredGraph & x) -> ColoredGraph
    {
        auto form = canonical_form(x);
        vector<int> position(x.size());
        for (int i = 0 ; i < x.size() ; ++i)
            position[form.order[i]] = i;

        vector<Arc> arcs;
        for (auto [u, v] : x.carrier().arcs())
            arcs.emplace_back(position[u], position[v]);
        vector<ColorSet> colors;
        for (int i = 0 ; i < x.size() ; ++i)
            colors.push_back(x.colors(form.order[i]));
        return ColoredGraph(Digraph(x.name(), x.size(), std::move(arcs), x.carrier().symmetric()), x.template_size(), std::move(colors));
    }

    auto are_isomorphic(const ColoredGraph & a, const ColoredGraph & b) -> bool
    {
        return a.size() == b.size() && canonical_form(a).key == canonical_form(b).key;
    }
}
