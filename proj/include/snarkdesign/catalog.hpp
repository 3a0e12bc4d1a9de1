#ifndef SNARKDESIGN_CATALOG_HPP
#define SNARKDESIGN_CATALOG_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkdesign/formats.hpp"
#include "snarkdesign/graph.hpp"

namespace snarkdesign {

struct UnknownId : std::runtime_error {
    explicit UnknownId(const std::string& id) : std::runtime_error("unknown id: " + id) {}
};
struct NotConnected : std::runtime_error {
    NotConnected() : std::runtime_error("graph is not connected") {}
};

struct SnarkReport {
    bool cubic = false;
    bool connected = false;
    bool bridgeless = false;
    std::optional<int> girth;
    std::optional<int> chromatic_index;
    std::optional<std::array<LabeledGraph::Edge, 3>> reducing_3cut;
    bool is_nontrivial_snark = false;
};

// A component of a 3-cut counts as non-trivial when it contains a cycle,
// i.e. its edge count is at least its vertex count.
inline std::optional<std::array<LabeledGraph::Edge, 3>>
has_reducing_3cut(const LabeledGraph& g) {
    if (!is_connected(g)) throw NotConnected();
    int n = g.vertex_count();
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<int> comp(n);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                // flood fill avoiding the three deleted edges
                std::fill(comp.begin(), comp.end(), -1);
                int ncomp = 0;
                for (int s = 0; s < n; ++s) {
                    if (comp[s] != -1) continue;
                    std::vector<int> stack{s};
                    comp[s] = ncomp;
                    while (!stack.empty()) {
                        int v = stack.back();
                        stack.pop_back();
                        for (int w : g.neighbors(v)) {
                            auto e = LabeledGraph::Edge{std::min(v, w), std::max(v, w)};
                            if (e == edges[a] || e == edges[b] || e == edges[c]) continue;
                            if (comp[w] == -1) {
                                comp[w] = ncomp;
                                stack.push_back(w);
                            }
                        }
                    }
                    ++ncomp;
                }
                if (ncomp < 2) continue;
                std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0);
                for (int v = 0; v < n; ++v) ++vcount[comp[v]];
                for (int e = 0; e < m; ++e) {
                    if (e == a || e == b || e == c) continue;
                    if (comp[edges[e].first] == comp[edges[e].second])
                        ++ecount[comp[edges[e].first]];
                }
                bool all_cyclic = true;
                for (int k = 0; k < ncomp; ++k)
                    if (ecount[k] < vcount[k]) all_cyclic = false;
                if (all_cyclic)
                    return std::array<LabeledGraph::Edge, 3>{edges[a], edges[b], edges[c]};
            }
    return std::nullopt;
}

inline SnarkReport snark_report(const LabeledGraph& g) {
    SnarkReport r;
    r.cubic = is_regular(g, 3);
    r.connected = is_connected(g);
    r.bridgeless = find_bridges(g).empty();
    r.girth = girth(g);
    if (r.cubic && r.connected && r.bridgeless)
        r.chromatic_index = chromatic_index_cubic(g);
    if (r.connected) r.reducing_3cut = has_reducing_3cut(g);
    r.is_nontrivial_snark = r.cubic && r.connected && r.bridgeless &&
                            r.chromatic_index == 4 && r.girth && *r.girth >= 5 &&
                            !r.reducing_3cut.has_value();
    return r;
}

// The 38 snarks loaded from data/catalog/g01.graph .. g38.graph.
class Catalog {
public:
    static Catalog load(const std::string& dir) {
        namespace fs = std::filesystem;
        Catalog cat;
        for (int k = 1; k <= 38; ++k) {
            char name[16];
            std::snprintf(name, sizeof name, "g%02d.graph", k);
            fs::path p = fs::path(dir) / name;
            if (!fs::exists(p))
                throw std::runtime_error("catalog file missing: " + p.string());
            cat.graphs_.push_back(parse_graph_file(p.string()).graph);
        }
        return cat;
    }

    const LabeledGraph& get_graph(int index) const {
        if (index < 1 || index > static_cast<int>(graphs_.size()))
            throw UnknownId("G" + std::to_string(index));
        return graphs_[index - 1];
    }

    int size() const { return static_cast<int>(graphs_.size()); }

    // test seam: catalogs assembled from in-memory graphs
    static Catalog from_graphs(std::vector<LabeledGraph> graphs) {
        Catalog cat;
        cat.graphs_ = std::move(graphs);
        return cat;
    }

private:
    Catalog() = default;
    std::vector<LabeledGraph> graphs_;
};

struct CatalogIntegrityReport {
    bool pass = false;
    std::string first_failure;  // empty on pass
};

// Every catalog entry must certify as a 24-vertex non-trivial snark and all
// pairs must be non-isomorphic.
inline CatalogIntegrityReport catalog_integrity(const Catalog& cat) {
    CatalogIntegrityReport rep;
    for (int k = 1; k <= cat.size(); ++k) {
        const auto& g = cat.get_graph(k);
        if (g.vertex_count() != 24 || g.edges().size() != 36) {
            rep.first_failure = "G" + std::to_string(k) + ": wrong size";
            return rep;
        }
        auto r = snark_report(g);
        if (!r.is_nontrivial_snark) {
            rep.first_failure = "G" + std::to_string(k) + ": not a non-trivial snark";
            if (!r.cubic) rep.first_failure += " (not cubic)";
            else if (!r.connected) rep.first_failure += " (not connected)";
            else if (!r.bridgeless) rep.first_failure += " (has a bridge)";
            else if (r.chromatic_index != 4) rep.first_failure += " (chromatic index 3)";
            else if (!r.girth || *r.girth < 5) rep.first_failure += " (girth < 5)";
            else rep.first_failure += " (reducing 3-cut)";
            return rep;
        }
    }
    for (int a = 1; a <= cat.size(); ++a)
        for (int b = a + 1; b <= cat.size(); ++b)
            if (are_isomorphic(cat.get_graph(a), cat.get_graph(b))) {
                rep.first_failure = "duplicate pair (G" + std::to_string(a) + ",G" +
                                    std::to_string(b) + ")";
                return rep;
            }
    rep.pass = true;
    return rep;
}

}  // namespace snarkdesign

#endif
