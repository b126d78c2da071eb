#include "autonet/dot.hpp"

#include <map>
#include <utility>

namespace autonet {

void write_transition_graph_dot(std::ostream& os, const Network& f, const DotOptions& options,
                                const Guard& guard) {
    const ComponentDecomposition comp = components(f, guard);
    const std::uint64_t states = f.state_count();

    // flags: bit 0 = arc lo->hi, bit 1 = arc hi->lo
    std::map<std::pair<state_t, state_t>, int> edges;
    auto add_arc = [&](state_t from, state_t to) {
        if (from == to) return;
        const auto key = std::make_pair(std::min(from, to), std::max(from, to));
        edges[key] |= from < to ? 1 : 2;
    };

    for (std::uint64_t xi = 0; xi < states; ++xi) {
        const auto x = static_cast<state_t>(xi);
        if (options.full_arcs) {
            const NodeSet d = delta_index(f, x, f.apply_index(x));
            const std::uint32_t dm = d.mask();
            std::uint32_t sub = 0;
            do {
                state_t z = x;
                NodeSet::from_mask(sub).for_each_node(
                    [&](int i) { z = f.with_digit(z, i, f.digit(f.apply_index(x), i)); });
                add_arc(x, z);
                sub = (sub - dm) & dm;
            } while (sub != 0);
        } else {
            for (int i = 1; i <= f.n(); ++i) add_arc(x, f.update_index(x, NodeSet::singleton(i)));
        }
    }

    std::vector<bool> gray(states, false);
    for (state_t u : comp.unreachable_fixed) gray[u] = true;

    os << "digraph transition_graph {\n";
    os << "  node [shape=box];\n";
    for (std::uint64_t x = 0; x < states; ++x) {
        os << "  \"" << f.format_state(static_cast<state_t>(x)) << "\"";
        if (gray[x]) os << " [color=gray, fontcolor=gray]";
        os << ";\n";
    }
    for (const auto& [key, flags] : edges) {
        os << "  \"" << f.format_state(key.first) << "\" -> \"" << f.format_state(key.second) << "\"";
        if (flags == 3)
            os << " [dir=both]";
        else if (flags == 2)
            os << " [dir=back]";
        os << ";\n";
    }
    os << "}\n";
}

}  // namespace autonet
