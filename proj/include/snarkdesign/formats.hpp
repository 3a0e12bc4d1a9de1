#ifndef SNARKDESIGN_FORMATS_HPP
#define SNARKDESIGN_FORMATS_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "snarkdesign/design.hpp"
#include "snarkdesign/graph.hpp"
#include "snarkdesign/host.hpp"

namespace snarkdesign {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

}  // namespace detail

// Graph file: `graph <id> <vertex_count>` then `e <u> <v>` per edge,
// 0-based, u < v, ascending.
struct GraphFile {
    std::string id;
    LabeledGraph graph;
};

inline GraphFile parse_graph(std::istream& in) {
    std::string line, id;
    int lineno = 0, n = -1;
    std::vector<LabeledGraph::Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "graph") {
            if (n != -1) throw ParseError(lineno, "duplicate graph header");
            if (tok.size() != 3) throw ParseError(lineno, "expected: graph <id> <n>");
            id = tok[1];
            n = std::stoi(tok[2]);
        } else if (tok[0] == "e") {
            if (n == -1) throw ParseError(lineno, "edge before graph header");
            if (tok.size() != 3) throw ParseError(lineno, "expected: e <u> <v>");
            int u = std::stoi(tok[1]), v = std::stoi(tok[2]);
            if (u >= v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
            if (!edges.empty() && edges.back() >= LabeledGraph::Edge{u, v})
                throw ParseError(lineno, "edges must be in ascending order");
            edges.push_back({u, v});
        } else {
            throw ParseError(lineno, "unknown directive: " + tok[0]);
        }
    }
    if (n == -1) throw ParseError(lineno, "missing graph header");
    try {
        return {id, LabeledGraph(n, std::move(edges))};
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

inline GraphFile parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

inline std::string emit_graph(const GraphFile& gf) {
    std::ostringstream out;
    out << "graph " << gf.id << ' ' << gf.graph.vertex_count() << '\n';
    for (auto [u, v] : gf.graph.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

// Design file grammar (line-oriented, '#' comments):
//   design <id>
//   snark G<k>
//   host complete <n> [inf] | host multipartite <layout-id>
//   map <name> segments (<base>,<len>,<step>)[,...] [fix inf]
//   block <mapname> <v1> ... <v24>          (token `inf` allowed)
inline DesignRecord parse_design(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::string id;
    int snark_index = 0;
    std::optional<HostGraph> host;
    bool host_inf = false;
    std::map<std::string, PiecewiseModularMap> maps;
    std::vector<BaseBlock> blocks;

    auto parse_vertex = [&](const std::string& tok) -> int {
        if (tok == "inf") {
            if (!host_inf) throw ParseError(lineno, "token inf on a host without inf");
            return host->infinity_vertex();
        }
        return std::stoi(tok);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokenize(line);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "design") {
                if (tok.size() != 2) throw ParseError(lineno, "expected: design <id>");
                id = tok[1];
            } else if (tok[0] == "snark") {
                if (tok.size() != 2 || tok[1].size() < 2 || tok[1][0] != 'G')
                    throw ParseError(lineno, "expected: snark G<k>");
                snark_index = std::stoi(tok[1].substr(1));
                if (snark_index < 1 || snark_index > 38)
                    throw ParseError(lineno, "snark index out of range 1..38");
            } else if (tok[0] == "host") {
                if (tok.size() >= 3 && tok[1] == "complete") {
                    host_inf = tok.size() > 3 && tok[3] == "inf";
                    host = make_complete(std::stoi(tok[2]), host_inf);
                } else if (tok.size() == 3 && tok[1] == "multipartite") {
                    auto layout = builtin_layout(tok[2]);
                    if (!layout) throw ParseError(lineno, "unknown layout: " + tok[2]);
                    host = make_multipartite(*layout);
                } else {
                    throw ParseError(lineno, "bad host declaration");
                }
            } else if (tok[0] == "map") {
                if (!host) throw ParseError(lineno, "map before host");
                if (tok.size() < 4 || tok[2] != "segments")
                    throw ParseError(lineno, "expected: map <name> segments (...)");
                std::vector<PiecewiseModularMap::Segment> segs;
                std::string spec = tok[3];
                size_t pos = 0;
                while (pos < spec.size()) {
                    if (spec[pos] != '(') throw ParseError(lineno, "expected '('");
                    size_t close = spec.find(')', pos);
                    if (close == std::string::npos) throw ParseError(lineno, "missing ')'");
                    std::string body = spec.substr(pos + 1, close - pos - 1);
                    int b, l, s;
                    if (sscanf(body.c_str(), "%d,%d,%d", &b, &l, &s) != 3)
                        throw ParseError(lineno, "bad segment: " + body);
                    segs.push_back({b, l, s});
                    pos = close + 1;
                    if (pos < spec.size() && spec[pos] == ',') ++pos;
                }
                std::vector<int> fixed;
                if (tok.size() > 4) {
                    if (tok.size() == 6 && tok[4] == "fix" && tok[5] == "inf")
                        fixed.push_back(host->infinity_vertex());
                    else
                        throw ParseError(lineno, "expected optional trailer: fix inf");
                }
                maps.emplace(tok[1], make_map(std::move(segs), std::move(fixed), *host));
            } else if (tok[0] == "block") {
                if (!host) throw ParseError(lineno, "block before host");
                if (tok.size() != 26)
                    throw ParseError(lineno, "block needs a map name and 24 vertices");
                BaseBlock b;
                b.map_name = tok[1];
                if (!maps.count(b.map_name))
                    throw ParseError(lineno, "unknown map: " + b.map_name);
                for (size_t i = 2; i < tok.size(); ++i)
                    b.tuple.push_back(parse_vertex(tok[i]));
                blocks.push_back(std::move(b));
            } else {
                throw ParseError(lineno, "unknown directive: " + tok[0]);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!host) throw ParseError(lineno, "missing host declaration");
    if (snark_index == 0) throw ParseError(lineno, "missing snark declaration");
    if (blocks.empty()) throw ParseError(lineno, "design has no blocks");
    return DesignRecord{id, snark_index, *host, std::move(maps), std::move(blocks)};
}

inline DesignRecord parse_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_design(in);
}

inline std::string emit_design(const DesignRecord& r) {
    std::ostringstream out;
    out << "design " << r.id << '\n';
    out << "snark G" << r.snark_index << '\n';
    if (r.host.kind() == HostGraph::Kind::Complete) {
        out << "host complete " << r.host.vertex_count();
        if (r.host.has_infinity()) out << " inf";
        out << '\n';
    } else {
        out << "host multipartite " << r.host.layout()->id << '\n';
    }
    for (const auto& [name, map] : r.maps) {
        out << "map " << name << " segments ";
        bool first = true;
        for (const auto& s : map.segments()) {
            if (!first) out << ',';
            out << '(' << s.base << ',' << s.length << ',' << s.step << ')';
            first = false;
        }
        if (!map.fixed_points().empty()) out << " fix inf";
        out << '\n';
    }
    auto vertex_token = [&](int v) -> std::string {
        if (r.host.has_infinity() && v == r.host.infinity_vertex()) return "inf";
        return std::to_string(v);
    };
    for (const auto& b : r.blocks) {
        out << "block " << b.map_name;
        for (int v : b.tuple) out << ' ' << vertex_token(v);
        out << '\n';
    }
    return out.str();
}

inline nlohmann::json report_to_json(const VerificationReport& rep, std::int64_t edge_count) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [mult, count] : rep.coverage_histogram)
        hist[std::to_string(mult)] = count;
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& [edge, mult] : rep.violations)
        viol.push_back({{"edge", {edge.first, edge.second}}, {"multiplicity", mult}});
    nlohmann::json j = {{"pass", rep.pass},
                        {"blocks", rep.developed_block_count},
                        {"edges", edge_count},
                        {"histogram", hist},
                        {"violations", viol}};
    if (!rep.failure_cause.empty()) j["cause"] = rep.failure_cause;
    return j;
}

inline std::string emit_report(const VerificationReport& rep, std::int64_t edge_count,
                               bool machine) {
    if (machine) return report_to_json(rep, edge_count).dump(2) + "\n";
    std::ostringstream out;
    out << (rep.pass ? "PASS" : "FAIL") << ": " << rep.developed_block_count
        << " blocks developed over " << edge_count << " host edges\n";
    for (const auto& [mult, count] : rep.coverage_histogram)
        out << "  multiplicity " << mult << ": " << count << " edges\n";
    if (!rep.failure_cause.empty()) out << "  cause: " << rep.failure_cause << '\n';
    for (const auto& [edge, mult] : rep.violations)
        out << "  violation: edge {" << edge.first << ',' << edge.second
            << "} covered " << mult << " times\n";
    return out.str();
}

}  // namespace snarkdesign

#endif
