#ifndef SNARKDESIGN_GRAPH_HPP
#define SNARKDESIGN_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snarkdesign {

struct LoopEdge : std::runtime_error {
    explicit LoopEdge(int v)
        : std::runtime_error("loop edge at vertex " + std::to_string(v)) {}
};
struct DuplicateEdge : std::runtime_error {
    DuplicateEdge(int u, int v)
        : std::runtime_error("duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}") {}
};
struct VertexOutOfRange : std::runtime_error {
    explicit VertexOutOfRange(int v)
        : std::runtime_error("vertex out of range: " + std::to_string(v)) {}
};
struct OddVertexCount : std::runtime_error {
    OddVertexCount() : std::runtime_error("perfect matching needs an even vertex count") {}
};
struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph with a sorted, normalized edge list.
// Immutable after construction; safe to share across threads.
class LabeledGraph {
public:
    using Edge = std::pair<int, int>;  // always (min, max)

    LabeledGraph(int vertex_count, std::vector<Edge> edges)
        : n_(vertex_count) {
        if (n_ <= 0) throw VertexOutOfRange(n_);
        for (auto& [u, v] : edges) {
            if (u == v) throw LoopEdge(u);
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw VertexOutOfRange(u < 0 ? u : v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end()) throw DuplicateEdge(dup->first, dup->second);
        edges_ = std::move(edges);
        adj_.resize(n_);
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    bool operator==(const LabeledGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline LabeledGraph make_graph(int vertex_count, std::vector<LabeledGraph::Edge> edges) {
    return LabeledGraph(vertex_count, std::move(edges));
}

inline std::vector<int> degree_profile(const LabeledGraph& g) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

inline bool is_regular(const LabeledGraph& g, int d) {
    auto deg = degree_profile(g);
    return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

inline bool is_connected(const LabeledGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// Bridges via iterative low-link DFS.
inline std::vector<LabeledGraph::Edge> find_bridges(const LabeledGraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<LabeledGraph::Edge> bridges;
    int timer = 0;
    // frame: (vertex, parent, neighbor cursor)
    struct Frame { int v, parent; size_t i; };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.i < nb.size()) {
                int w = nb[f.i++];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[f.v]);
                    if (low[f.v] > disc[p]) {
                        bridges.push_back({std::min(p, f.v), std::max(p, f.v)});
                    }
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

// Shortest cycle length, or nullopt for forests. BFS from every root; a
// non-tree edge at frontier depth d closes a cycle of length
// dist[u] + dist[v] + 1, minimized over roots.
inline std::optional<int> girth(const LabeledGraph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// Visits every perfect matching exactly once; backtracks over the
// lowest-index unmatched vertex. Returns false from the visitor to stop.
inline void for_each_perfect_matching(
    const LabeledGraph& g,
    const std::function<bool(const std::vector<LabeledGraph::Edge>&)>& visit) {
    int n = g.vertex_count();
    if (n % 2 != 0) throw OddVertexCount();
    std::vector<char> matched(n, 0);
    std::vector<LabeledGraph::Edge> current;
    bool stop = false;
    std::function<void()> rec = [&]() {
        if (stop) return;
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!matched[v]) {
                u = v;
                break;
            }
        if (u == -1) {
            if (!visit(current)) stop = true;
            return;
        }
        matched[u] = 1;
        for (int w : g.neighbors(u)) {
            if (matched[w] || w < u) continue;
            matched[w] = 1;
            current.push_back({u, w});
            rec();
            current.pop_back();
            matched[w] = 0;
            if (stop) break;
        }
        matched[u] = 0;
    };
    rec();
}

inline std::vector<std::vector<LabeledGraph::Edge>>
enumerate_perfect_matchings(const LabeledGraph& g) {
    std::vector<std::vector<LabeledGraph::Edge>> out;
    for_each_perfect_matching(g, [&](const auto& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Chromatic index of a cubic graph: 3 iff some perfect matching leaves a
// 2-regular remainder whose cycles are all even; otherwise 4 (Vizing).
inline int chromatic_index_cubic(const LabeledGraph& g) {
    if (!is_regular(g, 3)) throw PreconditionViolated("graph is not 3-regular");
    if (!is_connected(g)) throw PreconditionViolated("graph is not connected");
    if (!find_bridges(g).empty()) throw PreconditionViolated("graph has a bridge");
    int n = g.vertex_count();
    bool class1 = false;
    for_each_perfect_matching(g, [&](const std::vector<LabeledGraph::Edge>& m) {
        std::vector<char> inm(n * n, 0);
        for (auto [u, v] : m) inm[u * n + v] = inm[v * n + u] = 1;
        // walk the 2-regular remainder; every cycle must be even
        std::vector<char> seen(n, 0);
        bool all_even = true;
        for (int s = 0; s < n && all_even; ++s) {
            if (seen[s]) continue;
            int prev = -1, cur = s, len = 0;
            do {
                seen[cur] = 1;
                ++len;
                int nxt = -1;
                for (int w : g.neighbors(cur))
                    if (w != prev && !inm[cur * n + w]) {
                        nxt = w;
                        break;
                    }
                prev = cur;
                cur = nxt;
            } while (cur != s && cur != -1);
            if (len % 2 != 0) all_even = false;
        }
        if (all_even) {
            class1 = true;
            return false;
        }
        return true;
    });
    return class1 ? 3 : 4;
}

namespace detail {

// Per-vertex invariant: sorted BFS distance profile, iteratively refined
// with neighbor classes. Cubic graphs defeat plain degree refinement, so
// distance profiles do the initial discrimination.
inline std::vector<std::uint64_t> vertex_invariants(const LabeledGraph& g) {
    int n = g.vertex_count();
    auto hash_combine = [](std::uint64_t h, std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    std::vector<std::uint64_t> inv(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        std::sort(dist.begin(), dist.end());
        std::uint64_t h = 1469598103934665603ULL;
        for (int d : dist) h = hash_combine(h, static_cast<std::uint64_t>(d + 2));
        inv[s] = h;
    }
    // refinement rounds: fold in the sorted multiset of neighbor invariants
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for (int w : g.neighbors(v)) nb.push_back(inv[w]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = inv[v];
            for (auto x : nb) h = hash_combine(h, x);
            next[v] = h;
        }
        inv = std::move(next);
    }
    return inv;
}

}  // namespace detail

// Edge-preserving vertex bijection test, with optional witness (maps
// g-vertices to h-vertices). Invariant refinement first, then backtracking.
inline bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h,
                           std::vector<int>* witness = nullptr) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edges().size() != h.edges().size()) return false;
    auto ig = detail::vertex_invariants(g);
    auto ih = detail::vertex_invariants(h);
    {
        auto sg = ig, sh = ih;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    // order g-vertices: rarest invariant class first, then by connectivity
    // to already-placed vertices
    std::map<std::uint64_t, int> freq;
    for (auto x : ig) ++freq[x];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[ig[a]] != freq[ig[b]]) return freq[ig[a]] < freq[ig[b]];
        return a < b;
    });
    std::vector<int> map_gh(n, -1), map_hg(n, -1);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (map_hg[w] != -1 || ih[w] != ig[v]) continue;
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (map_gh[u] != -1 && !h.has_edge(w, map_gh[u])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // also require non-adjacency to be preserved among placed
                for (int u = 0; u < n && ok; ++u)
                    if (map_gh[u] != -1 && !g.has_edge(v, u) && h.has_edge(w, map_gh[u]))
                        ok = false;
            }
            if (!ok) continue;
            map_gh[v] = w;
            map_hg[w] = v;
            if (rec(idx + 1)) return true;
            map_gh[v] = -1;
            map_hg[w] = -1;
        }
        return false;
    };
    if (!rec(0)) return false;
    if (witness) *witness = map_gh;
    return true;
}

}  // namespace snarkdesign

#endif
