#ifndef SNARKDESIGN_HOST_HPP
#define SNARKDESIGN_HOST_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snarkdesign {

struct MalformedLayout : std::runtime_error {
    explicit MalformedLayout(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownVertex : std::runtime_error {
    explicit UnknownVertex(int v)
        : std::runtime_error("vertex outside host domain: " + std::to_string(v)) {}
};
struct NotAHostEdge : std::runtime_error {
    NotAHostEdge(int u, int v)
        : std::runtime_error("not a host edge: {" + std::to_string(u) + "," +
                             std::to_string(v) + "}") {}
};

// Partition layout for a complete multipartite host. Two schemes cover
// everything in the design data: residue classes over a prefix, and
// stripes over a prefix with one tail segment as the last part.
struct PartitionLayout {
    std::string id;
    int vertex_count = 0;
    std::vector<int> part_of;    // vertex -> part index
    std::vector<int> part_sizes;

    static PartitionLayout residue_classes(std::string id, int n, int modulus) {
        if (modulus <= 0 || n % modulus != 0)
            throw MalformedLayout("residue layout needs modulus dividing n");
        PartitionLayout l;
        l.id = std::move(id);
        l.vertex_count = n;
        l.part_of.resize(n);
        l.part_sizes.assign(modulus, 0);
        for (int v = 0; v < n; ++v) {
            l.part_of[v] = v % modulus;
            ++l.part_sizes[v % modulus];
        }
        return l;
    }

    // stripes of `stripe` parts over [0, prefix), tail [prefix, prefix+tail)
    // as one extra part
    static PartitionLayout striped_plus_tail(std::string id, int stripe, int prefix,
                                             int tail) {
        if (stripe <= 0 || prefix % stripe != 0 || tail <= 0)
            throw MalformedLayout("bad striped-plus-tail layout");
        PartitionLayout l;
        l.id = std::move(id);
        l.vertex_count = prefix + tail;
        l.part_of.resize(l.vertex_count);
        l.part_sizes.assign(stripe + 1, 0);
        for (int v = 0; v < prefix; ++v) {
            l.part_of[v] = v % stripe;
            ++l.part_sizes[v % stripe];
        }
        for (int v = prefix; v < l.vertex_count; ++v) {
            l.part_of[v] = stripe;
            ++l.part_sizes[stripe];
        }
        return l;
    }
};

// The five multipartite hosts used by the design data.
inline std::optional<PartitionLayout> builtin_layout(const std::string& id) {
    if (id == "k12x3") return PartitionLayout::residue_classes("k12x3", 36, 3);
    if (id == "k24x4") return PartitionLayout::residue_classes("k24x4", 96, 4);
    if (id == "k24-24-15")
        return PartitionLayout::striped_plus_tail("k24-24-15", 2, 48, 15);
    if (id == "k72-72-63")
        return PartitionLayout::striped_plus_tail("k72-72-63", 2, 144, 63);
    if (id == "k24x3-21")
        return PartitionLayout::striped_plus_tail("k24x3-21", 3, 72, 21);
    return std::nullopt;
}

// Complete graph (optionally with a distinguished "infinity" vertex, stored
// internally as vertex n-1) or complete multipartite graph with a layout.
// Dense edge indexing: triangular arithmetic for complete hosts, a
// precomputed table for multipartite ones.
class HostGraph {
public:
    enum class Kind { Complete, Multipartite };

    static HostGraph complete(int n, bool infinity) {
        if (n < 1) throw MalformedLayout("complete host needs n >= 1");
        HostGraph h;
        h.kind_ = Kind::Complete;
        h.n_ = n;
        h.infinity_ = infinity;
        h.edge_count_ = static_cast<std::int64_t>(n) * (n - 1) / 2;
        return h;
    }

    static HostGraph multipartite(PartitionLayout layout) {
        HostGraph h;
        h.kind_ = Kind::Multipartite;
        h.n_ = layout.vertex_count;
        h.layout_ = std::move(layout);
        h.index_.assign(static_cast<size_t>(h.n_) * h.n_, -1);
        std::int64_t next = 0;
        for (int u = 0; u < h.n_; ++u)
            for (int v = u + 1; v < h.n_; ++v)
                if (h.layout_->part_of[u] != h.layout_->part_of[v]) {
                    h.index_[static_cast<size_t>(u) * h.n_ + v] = next;
                    h.index_[static_cast<size_t>(v) * h.n_ + u] = next;
                    h.rev_.push_back({u, v});
                    ++next;
                }
        h.edge_count_ = next;
        return h;
    }

    Kind kind() const { return kind_; }
    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }
    bool has_infinity() const { return infinity_; }
    int infinity_vertex() const { return n_ - 1; }
    const std::optional<PartitionLayout>& layout() const { return layout_; }

    bool in_domain(int v) const { return v >= 0 && v < n_; }

    bool contains_edge(int u, int v) const {
        if (!in_domain(u)) throw UnknownVertex(u);
        if (!in_domain(v)) throw UnknownVertex(v);
        if (u == v) return false;
        if (kind_ == Kind::Complete) return true;
        return layout_->part_of[u] != layout_->part_of[v];
    }

    // bijection host edges -> [0, edge_count)
    std::int64_t edge_index(int u, int v) const {
        if (!contains_edge(u, v)) throw NotAHostEdge(u, v);
        if (u > v) std::swap(u, v);
        if (kind_ == Kind::Complete) {
            // edges (0,1),(0,2),...,(0,n-1),(1,2),... row-major
            std::int64_t row = static_cast<std::int64_t>(u) * n_ -
                               static_cast<std::int64_t>(u) * (u + 1) / 2;
            return row + (v - u - 1);
        }
        return index_[static_cast<size_t>(u) * n_ + v];
    }

    // inverse of edge_index
    std::pair<int, int> edge_at(std::int64_t idx) const {
        if (kind_ == Kind::Complete) {
            int u = 0;
            std::int64_t rem = idx;
            while (rem >= n_ - 1 - u) {
                rem -= n_ - 1 - u;
                ++u;
            }
            return {u, u + 1 + static_cast<int>(rem)};
        }
        return rev_.at(static_cast<size_t>(idx));
    }

private:
    Kind kind_ = Kind::Complete;
    int n_ = 0;
    bool infinity_ = false;
    std::int64_t edge_count_ = 0;
    std::optional<PartitionLayout> layout_;
    std::vector<std::int64_t> index_;
    std::vector<std::pair<int, int>> rev_;
};

inline HostGraph make_complete(int n, bool infinity) { return HostGraph::complete(n, infinity); }
inline HostGraph make_multipartite(PartitionLayout layout) {
    return HostGraph::multipartite(std::move(layout));
}

}  // namespace snarkdesign

#endif
