#include "zonocone/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zonocone {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n(vertex_count) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> dedup;
    for (auto [i, j] : edge_list) {
        if (i == j) throw std::invalid_argument("loop edge");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n) throw std::invalid_argument("edge endpoint out of range");
        dedup.insert({i, j});
    }
    edges.assign(dedup.begin(), dedup.end());
}

int Graph::edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
    if (it == edges.end() || *it != std::make_pair(i, j)) return -1;
    return static_cast<int>(it - edges.begin());
}

static std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (auto [i, j] : g.edges) adj[i][j] = adj[j][i] = true;
    return adj;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<std::array<int, 3>> out;
    for (auto [i, j] : g.edges)
        for (int k = j + 1; k < g.n; ++k)
            if (adj[i][k] && adj[j][k]) out.push_back({i, j, k});
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive enumeration over vertex subsets with pruning; graphs of
// interest stay below ~12 vertices.
static void count_cliques_rec(const std::vector<std::vector<bool>>& adj, int n, int from,
                              std::vector<int>& cur, long& count) {
    for (int v = from; v < n; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!adj[u][v]) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(v);
        if (cur.size() >= 2) ++count;
        count_cliques_rec(adj, n, v + 1, cur, count);
        cur.pop_back();
    }
}

long clique_count(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> cur;
    long count = 0;
    count_cliques_rec(adj, g.n, 0, cur, count);
    return count;
}

bool is_triangle_free(const Graph& g) { return triangles(g).empty(); }

bool is_k4_free(const Graph& g) {
    auto adj = adjacency(g);
    for (auto [i, j, k] : triangles(g))
        for (int l = k + 1; l < g.n; ++l)
            if (adj[i][l] && adj[j][l] && adj[k][l]) return false;
    return true;
}

Contraction contract(const Graph& g, const VertexPartition& p) {
    std::vector<int> block_of(g.n, -1);
    for (const auto& b : p.blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        for (int v : b) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("block vertex out of range");
            if (block_of[v] != -1) throw std::invalid_argument("blocks not disjoint");
            block_of[v] = 0;  // mark
        }
    }
    // completed partition, blocks ordered by minimum element
    std::vector<std::vector<int>> blocks = p.blocks;
    for (int v = 0; v < g.n; ++v)
        if (block_of[v] == -1) blocks.push_back({v});
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int idx = 0; idx < static_cast<int>(blocks.size()); ++idx)
        for (int v : blocks[idx]) block_of[v] = idx;

    std::vector<std::pair<int, int>> es;
    for (auto [i, j] : g.edges)
        if (block_of[i] != block_of[j]) es.emplace_back(block_of[i], block_of[j]);
    Contraction c;
    c.graph = Graph(static_cast<int>(blocks.size()), std::move(es));
    c.block_of = std::move(block_of);
    return c;
}

Contraction contract_edge(const Graph& g, int edge_idx) {
    auto [i, j] = g.edges.at(edge_idx);
    return contract(g, VertexPartition{{{i, j}}});
}

Graph restrict_to(const Graph& g, const VertexPartition& p) {
    std::vector<int> block_of(g.n, -1);
    int idx = 0;
    for (const auto& b : p.blocks) {
        for (int v : b) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("block vertex out of range");
            if (block_of[v] != -1) throw std::invalid_argument("blocks not disjoint");
            block_of[v] = idx;
        }
        ++idx;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [i, j] : g.edges)
        if (block_of[i] != -1 && block_of[i] == block_of[j]) es.emplace_back(i, j);
    return Graph(g.n, std::move(es));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> adj(g.n);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v : adj[u])
                if (comp[v] == -1) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    auto g = path_graph(n);
    auto es = g.edges;
    es.emplace_back(0, n - 1);
    return Graph(n, std::move(es));
}

Graph bi_triangle_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

Graph cyc3_graph(int n) {
    if (n < 4) throw std::invalid_argument("cyc3 needs n >= 4");
    // path on 1..n-2, apexes 0 and n-1 joined to all of it, plus edge {0, n-1}
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i + 1 <= n - 2; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    for (int i = 1; i <= n - 2; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(i, n - 1);
    }
    return Graph(n, std::move(es));
}

Graph wedge_k4_graph(int n) {
    if (n < 4) throw std::invalid_argument("wedge_k4 needs n >= 4");
    std::vector<std::pair<int, int>> es{{0, 1}, {0, 2}, {1, 2}};
    for (int k = 3; k < n; ++k)
        for (int a : {0, 1, 2}) es.emplace_back(a, k);
    return Graph(n, std::move(es));
}

Graph parse_graph_text(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> es;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) continue;
            continue;  // blank or comment-only line before header
        }
        int i, j;
        if (ls >> i >> j) es.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("graph text: missing vertex count");
    return Graph(n, std::move(es));
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << g.n << "\n";
    for (auto [i, j] : g.edges) os << i << " " << j << "\n";
    return os.str();
}

Graph graph_from_name(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    auto arg = [&]() -> int {
        if (colon == std::string::npos)
            throw std::invalid_argument("generator '" + head + "' needs :n");
        return std::stoi(name.substr(colon + 1));
    };
    if (head == "bitriangle") return bi_triangle_graph();
    if (head == "complete") return complete_graph(arg());
    if (head == "path") return path_graph(arg());
    if (head == "cycle") return cycle_graph(arg());
    if (head == "cyc3") return cyc3_graph(arg());
    if (head == "wedge_k4") return wedge_k4_graph(arg());
    throw std::invalid_argument("unknown graph generator: '" + name + "'");
}

}  // namespace zonocone
