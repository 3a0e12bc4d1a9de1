#ifndef SNARKDESIGN_DESIGN_HPP
#define SNARKDESIGN_DESIGN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkdesign/graph.hpp"
#include "snarkdesign/host.hpp"

namespace snarkdesign {

struct SegmentOverlap : std::runtime_error {
    explicit SegmentOverlap(const std::string& w) : std::runtime_error(w) {}
};
struct DomainNotCovered : std::runtime_error {
    explicit DomainNotCovered(const std::string& w) : std::runtime_error(w) {}
};
struct RepeatedVertex : std::runtime_error {
    explicit RepeatedVertex(int v)
        : std::runtime_error("repeated vertex in block tuple: " + std::to_string(v)) {}
};

// Host-vertex permutation given by modular segments plus fixed points:
// x in [base, base+length) maps to base + ((x - base + step) mod length).
class PiecewiseModularMap {
public:
    struct Segment {
        int base;
        int length;
        int step;
    };

    PiecewiseModularMap(std::vector<Segment> segments, std::vector<int> fixed_points,
                        int domain_size)
        : segments_(std::move(segments)), fixed_(std::move(fixed_points)),
          domain_size_(domain_size) {
        std::vector<char> covered(domain_size_, 0);
        for (const auto& s : segments_) {
            if (s.length <= 0 || s.base < 0 || s.base + s.length > domain_size_)
                throw DomainNotCovered("segment outside domain");
            for (int x = s.base; x < s.base + s.length; ++x) {
                if (covered[x]) throw SegmentOverlap("vertex " + std::to_string(x) +
                                                     " covered twice");
                covered[x] = 1;
            }
        }
        for (int x : fixed_) {
            if (x < 0 || x >= domain_size_)
                throw DomainNotCovered("fixed point outside domain");
            if (covered[x]) throw SegmentOverlap("fixed point " + std::to_string(x) +
                                                 " inside a segment");
            covered[x] = 1;
        }
        for (int x = 0; x < domain_size_; ++x)
            if (!covered[x]) throw DomainNotCovered("vertex " + std::to_string(x) +
                                                    " not covered");
        order_ = 1;
        for (const auto& s : segments_) {
            int st = ((s.step % s.length) + s.length) % s.length;
            int o = st == 0 ? 1 : s.length / std::gcd(st, s.length);
            order_ = std::lcm(order_, o);
        }
    }

    int apply(int x) const {
        for (const auto& s : segments_)
            if (x >= s.base && x < s.base + s.length)
                return s.base + (((x - s.base + s.step) % s.length) + s.length) % s.length;
        return x;  // fixed point (coverage was validated at construction)
    }

    int order() const { return order_; }
    int domain_size() const { return domain_size_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<int>& fixed_points() const { return fixed_; }

private:
    std::vector<Segment> segments_;
    std::vector<int> fixed_;
    int domain_size_;
    int order_;
};

inline PiecewiseModularMap make_map(std::vector<PiecewiseModularMap::Segment> segments,
                                    std::vector<int> fixed_points, const HostGraph& host) {
    return PiecewiseModularMap(std::move(segments), std::move(fixed_points),
                               host.vertex_count());
}

// True iff the map is a host automorphism: a domain bijection preserving
// the edge relation. Parts of a multipartite host may be permuted.
inline bool validate_automorphism(const PiecewiseModularMap& map, const HostGraph& host) {
    int n = host.vertex_count();
    if (map.domain_size() != n) return false;
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
        int y = map.apply(x);
        if (y < 0 || y >= n || hit[y]) return false;
        hit[y] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (host.contains_edge(u, v) != host.contains_edge(map.apply(u), map.apply(v)))
                return false;
    return true;
}

struct BaseBlock {
    std::vector<int> tuple;  // 24 distinct host vertices, one per snark vertex
    std::string map_name;
};

struct DesignRecord {
    std::string id;
    int snark_index = 0;  // 1..38
    HostGraph host;
    std::map<std::string, PiecewiseModularMap> maps;
    std::vector<BaseBlock> blocks;
};

// Places a labeled copy of the snark on the host: snark vertex i occupies
// tuple position i. Throws if the tuple repeats a vertex or any snark edge
// lands inside a multipartite part.
inline std::vector<std::pair<int, int>> place_block(const LabeledGraph& snark,
                                                    const std::vector<int>& tuple,
                                                    const HostGraph& host) {
    if (static_cast<int>(tuple.size()) != snark.vertex_count())
        throw PreconditionViolated("tuple size does not match snark order");
    std::vector<char> seen(host.vertex_count(), 0);
    for (int v : tuple) {
        if (!host.in_domain(v)) throw UnknownVertex(v);
        if (seen[v]) throw RepeatedVertex(v);
        seen[v] = 1;
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(snark.edges().size());
    for (auto [i, j] : snark.edges()) {
        int u = tuple[i], v = tuple[j];
        if (!host.contains_edge(u, v)) throw NotAHostEdge(u, v);
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    return out;
}

struct OrbitError : std::runtime_error {
    int power;
    OrbitError(int power, const std::string& cause)
        : std::runtime_error("placement failed at orbit power " + std::to_string(power) +
                             ": " + cause),
          power(power) {}
};

// Applies powers of the block's map to the base tuple and places every
// translate. Each developed block is validated by re-placement rather than
// trusting edge preservation of the map alone.
inline std::vector<std::vector<std::pair<int, int>>>
develop_orbit(const BaseBlock& block, const PiecewiseModularMap& map,
              const LabeledGraph& snark, const HostGraph& host) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> tuple = block.tuple;
    for (int t = 0; t < map.order(); ++t) {
        try {
            out.push_back(place_block(snark, tuple, host));
        } catch (const std::exception& e) {
            throw OrbitError(t, e.what());
        }
        for (int& v : tuple) v = map.apply(v);
    }
    return out;
}

struct VerificationReport {
    bool pass = false;
    std::int64_t developed_block_count = 0;
    std::map<int, std::int64_t> coverage_histogram;  // multiplicity -> edge count
    std::vector<std::pair<std::pair<int, int>, int>> violations;  // (edge, multiplicity)
    std::string failure_cause;

    static constexpr int kMaxViolations = 50;
};

// Exact decomposition check: develops every orbit, counts per-edge coverage
// in a dense array, passes iff every host edge is covered exactly once.
inline VerificationReport verify_design(const DesignRecord& record,
                                        const LabeledGraph& snark) {
    VerificationReport rep;
    std::int64_t planned = 0;
    for (const auto& b : record.blocks) {
        auto it = record.maps.find(b.map_name);
        if (it == record.maps.end()) {
            rep.failure_cause = "unknown map: " + b.map_name;
            return rep;
        }
        planned += it->second.order();
    }
    if (planned * 36 != record.host.edge_count()) {
        rep.failure_cause = "edge-count balance violated: " + std::to_string(planned) +
                            " developed blocks x 36 != " +
                            std::to_string(record.host.edge_count()) + " host edges";
        return rep;
    }
    for (const auto& [name, map] : record.maps) {
        if (!validate_automorphism(map, record.host)) {
            rep.failure_cause = "map " + name + " is not a host automorphism";
            return rep;
        }
    }
    std::vector<std::int32_t> coverage(record.host.edge_count(), 0);
    try {
        for (const auto& b : record.blocks) {
            const auto& map = record.maps.at(b.map_name);
            for (const auto& edges : develop_orbit(b, map, snark, record.host)) {
                ++rep.developed_block_count;
                for (auto [u, v] : edges) ++coverage[record.host.edge_index(u, v)];
            }
        }
    } catch (const std::exception& e) {
        rep.failure_cause = e.what();
        return rep;
    }
    for (std::int64_t i = 0; i < record.host.edge_count(); ++i) {
        ++rep.coverage_histogram[coverage[i]];
        if (coverage[i] != 1 &&
            static_cast<int>(rep.violations.size()) < VerificationReport::kMaxViolations)
            rep.violations.push_back({record.host.edge_at(i), coverage[i]});
    }
    rep.pass = rep.coverage_histogram.size() == 1 && rep.coverage_histogram.count(1) == 1;
    return rep;
}

}  // namespace snarkdesign

#endif
