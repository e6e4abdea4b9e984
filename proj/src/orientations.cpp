#include "zonocone/orientations.hpp"

#include <stdexcept>

#include "zonocone/rational.hpp"

namespace zonocone {

static bool acyclic_directed(int n, const std::vector<std::vector<int>>& out_adj) {
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : out_adj[u]) ++indeg[v];
    std::vector<int> stack;
    for (int u = 0; u < n; ++u)
        if (indeg[u] == 0) stack.push_back(u);
    int seen = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++seen;
        for (int v : out_adj[u])
            if (--indeg[v] == 0) stack.push_back(v);
    }
    return seen == n;
}

bool is_acyclic(const Graph& g, OrientBits o) {
    std::vector<std::vector<int>> adj(g.n);
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edges[k];
        if (o >> k & 1)
            adj[j].push_back(i);
        else
            adj[i].push_back(j);
    }
    return acyclic_directed(g.n, adj);
}

std::vector<OrientBits> enumerate_acyclic(const Graph& g, std::uint64_t max_patterns) {
    int m = g.edge_count();
    if (m >= 63 || (std::uint64_t{1} << m) > max_patterns)
        throw effort_cap_error("orientation enumeration cap exceeded: 2^" + std::to_string(m) +
                               " patterns");
    std::vector<OrientBits> out;
    for (OrientBits b = 0; b < (OrientBits{1} << m); ++b)
        if (is_acyclic(g, b)) out.push_back(b);
    return out;
}

std::vector<std::pair<int, OrientBits>> flip_neighbors(const Graph& g, OrientBits o) {
    std::vector<std::pair<int, OrientBits>> out;
    for (int k = 0; k < g.edge_count(); ++k) {
        OrientBits o2 = o ^ (OrientBits{1} << k);
        if (is_acyclic(g, o2)) out.emplace_back(k, o2);
    }
    return out;
}

std::vector<long> vertex_point(const Graph& g, OrientBits o) {
    std::vector<long> v(g.n, 0);
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edges[k];
        ++v[(o >> k & 1) ? i : j];
    }
    return v;
}

std::optional<OrientBits> induce_orientation(const Graph& g, OrientBits o, const Contraction& c) {
    const Graph& cg = c.graph;
    OrientBits bits = 0;
    std::uint64_t assigned = 0;
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edges[k];
        int a = c.block_of[i], b = c.block_of[j];
        if (a == b) continue;
        int ck = cg.edge_index(a, b);
        int src = (o >> k & 1) ? c.block_of[j] : c.block_of[i];
        OrientBits want = (src == std::min(a, b)) ? 0 : 1;
        if (assigned >> ck & 1) {
            if ((bits >> ck & 1) != want) return std::nullopt;
        } else {
            assigned |= OrientBits{1} << ck;
            bits |= want << ck;
        }
    }
    if (!is_acyclic(cg, bits)) return std::nullopt;
    return bits;
}

}  // namespace zonocone
