#include "exactlab/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace exactlab {

namespace {

/// Lengths of the branches hanging off `center`, each measured in edges.
std::vector<int> branch_lengths(const std::vector<std::vector<int>>& adj, int center) {
    std::vector<int> lengths;
    for (int next : adj[center]) {
        int len = 1;
        int prev = center;
        int cur = next;
        while (static_cast<int>(adj[cur].size()) == 2) {
            const int forward = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = forward;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace

GraphType classify_graph(const Quiver& q) {
    const int n = q.vertex_count;
    if (n <= 0) return {false, "empty"};

    std::set<std::pair<int, int>> seen_edges;
    std::vector<std::vector<int>> adj(n);
    for (const Arrow& a : q.arrows) {
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            return {false, "arrow endpoint out of range"};
        if (a.source == a.target) return {false, "loop"};
        const auto edge = std::minmax(a.source, a.target);
        if (!seen_edges.insert({edge.first, edge.second}).second)
            return {false, "multiple edge"};
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }

    // Connectivity.
    std::vector<bool> visited(n, false);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = true;
    int reached = 1;
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = true;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached < n) return {false, "disconnected"};
    if (static_cast<int>(q.arrows.size()) != n - 1) return {false, "cyclic"};

    int max_degree = 0;
    int branch_vertex = -1;
    int branch_count = 0;
    for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(adj[v].size());
        max_degree = std::max(max_degree, d);
        if (d >= 3) {
            branch_vertex = v;
            ++branch_count;
        }
    }

    if (max_degree <= 2) return {true, "A" + std::to_string(n)};
    if (branch_count > 1) return {false, "tree with several branch vertices"};
    if (max_degree > 3) return {false, "tree with a degree-" + std::to_string(max_degree) + " vertex"};

    const std::vector<int> b = branch_lengths(adj, branch_vertex);  // sorted, size 3
    if (b[0] == 1 && b[1] == 1) return {true, "D" + std::to_string(n)};
    if (b[0] == 1 && b[1] == 2 && b[2] >= 2 && b[2] <= 4) return {true, "E" + std::to_string(n)};
    return {false, "affine or wider tree"};
}

Quiver kronecker_quiver() {
    Quiver q;
    q.vertex_count = 2;
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return q;
}

Quiver linear_quiver(int n) {
    Quiver q;
    q.vertex_count = n;
    for (int i = 0; i + 1 < n; ++i)
        q.arrows.push_back({"a" + std::to_string(i), i, i + 1});
    return q;
}

Quiver opposite(const Quiver& q) {
    Quiver out = q;
    for (Arrow& a : out.arrows) std::swap(a.source, a.target);
    return out;
}

std::vector<int> topological_order(const Quiver& q) {
    std::vector<int> indegree(q.vertex_count, 0);
    for (const Arrow& a : q.arrows) ++indegree[a.target];
    std::vector<int> order;
    std::set<int> ready;
    for (int v = 0; v < q.vertex_count; ++v)
        if (indegree[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        const int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (const Arrow& a : q.arrows)
            if (a.source == v && --indegree[a.target] == 0) ready.insert(a.target);
    }
    if (static_cast<int>(order.size()) != q.vertex_count)
        throw std::invalid_argument("quiver has an oriented cycle");
    return order;
}

}  // namespace exactlab
