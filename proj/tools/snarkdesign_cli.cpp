// Command-line front end: catalog certification, design verification,
// spectrum arithmetic, base-block search, and the combined ledger report.
//
// Exit codes: 0 = pass, 1 = verification/check failure, 2 = usage/IO error.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "snarkdesign/catalog.hpp"
#include "snarkdesign/design.hpp"
#include "snarkdesign/formats.hpp"
#include "snarkdesign/search.hpp"
#include "snarkdesign/spectrum.hpp"

namespace fs = std::filesystem;
using namespace snarkdesign;

namespace {

struct VerifyOutcome {
    std::string path;
    std::string id;
    int snark_index;
    std::string host_id;
    VerificationReport report;
    std::int64_t edge_count;
};

std::string host_id_of(const DesignRecord& r) {
    if (r.host.kind() == HostGraph::Kind::Multipartite) return r.host.layout()->id;
    return "k" + std::to_string(r.host.vertex_count());
}

VerifyOutcome verify_one(const std::string& path, const Catalog& cat) {
    auto rec = parse_design_file(path);
    auto rep = verify_design(rec, cat.get_graph(rec.snark_index));
    return {path, rec.id, rec.snark_index, host_id_of(rec), std::move(rep),
            rec.host.edge_count()};
}

std::vector<std::string> design_files_under(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".design")
            files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<VerifyOutcome> verify_parallel(const std::vector<std::string>& files,
                                           const Catalog& cat, int jobs) {
    std::vector<VerifyOutcome> out(files.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1))
            out[i] = verify_one(files[i], cat);
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    return out;
}

PiecewiseModularMap parse_plan_map(const std::string& spec, const HostGraph& host) {
    // "(base,len,step)[,(...)][;fixinf]" e.g. "(0,135,3);fixinf"
    std::string segpart = spec;
    std::vector<int> fixed;
    auto semi = spec.find(';');
    if (semi != std::string::npos) {
        segpart = spec.substr(0, semi);
        if (spec.substr(semi + 1) == "fixinf")
            fixed.push_back(host.infinity_vertex());
        else
            throw std::runtime_error("bad map trailer in plan: " + spec);
    }
    std::vector<PiecewiseModularMap::Segment> segs;
    size_t pos = 0;
    while (pos < segpart.size()) {
        if (segpart[pos] != '(') throw std::runtime_error("bad plan map: " + spec);
        size_t close = segpart.find(')', pos);
        if (close == std::string::npos) throw std::runtime_error("bad plan map: " + spec);
        int b, l, s;
        if (sscanf(segpart.substr(pos + 1, close - pos - 1).c_str(), "%d,%d,%d", &b, &l,
                   &s) != 3)
            throw std::runtime_error("bad segment in plan: " + spec);
        segs.push_back({b, l, s});
        pos = close + 1;
        if (pos < segpart.size() && segpart[pos] == ',') ++pos;
    }
    return make_map(std::move(segs), std::move(fixed), host);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"G-design toolkit for 24-vertex snarks: catalog certification, "
                 "decomposition verification, spectrum arithmetic, block search"};
    app.require_subcommand(1);

    std::string data_dir = "data";
    std::string format = "human";
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    app.add_option("--data", data_dir, "data directory (catalog + designs)");
    app.add_option("--format", format, "report rendering: human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--jobs", jobs, "worker threads for verify-all and search");

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
    auto* catalog_check = catalog_cmd->add_subcommand("check", "certify all 38 snarks");

    auto* verify_cmd = app.add_subcommand("verify", "verify one design file");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "design file")->required();

    auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every design under a directory");
    std::string verify_dir;
    verify_all_cmd->add_option("dir", verify_dir, "directory of .design files")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "necessary congruence conditions");
    int sv = 0, se = 0, sd = 0;
    spectrum_cmd->add_option("--v", sv, "vertices of the decomposing graph")->required();
    spectrum_cmd->add_option("--e", se, "edges")->required();
    spectrum_cmd->add_option("--d", sd, "regularity degree")->required();

    auto* search_cmd = app.add_subcommand("search", "local search for base blocks");
    std::string snark_opt, host_opt, emit_path;
    std::vector<std::string> plan_opt;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long long budget = 1000000;
    search_cmd->add_option("--snark", snark_opt, "snark id, e.g. G1")->required();
    search_cmd->add_option("--host", host_opt,
                           "layout id or 'complete:N[:inf]'")->required();
    search_cmd->add_option("--plan", plan_opt,
                           "map per base block, e.g. '(0,36,3)' (repeatable)")
        ->required();
    search_cmd->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { seed = s; seed_set = true; },
        "root RNG seed (required)");
    search_cmd->add_option("--budget", budget, "move-evaluation limit");
    search_cmd->add_option("--emit", emit_path, "write found solution as a design file");

    // let the global --data/--format/--jobs options appear after the
    // subcommand name as well as before it
    for (auto* sc : {catalog_cmd, catalog_check, verify_cmd, verify_all_cmd,
                     spectrum_cmd, search_cmd})
        sc->fallthrough();

    auto* report_cmd = app.add_subcommand("report", "ingredient ledger + theorem check");
    std::string report_dir;
    report_cmd->add_option("dir", report_dir, "directory of .design files")->required();
    report_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool machine = format == "machine";

    try {
        if (*catalog_check) {
            auto cat = Catalog::load(data_dir + "/catalog");
            auto rep = catalog_integrity(cat);
            if (machine) {
                nlohmann::json j = {{"pass", rep.pass}};
                if (!rep.pass) j["first_failure"] = rep.first_failure;
                std::cout << j.dump(2) << '\n';
            } else if (rep.pass) {
                std::cout << "catalog check: all 38 graphs certified, 703 pairs "
                             "non-isomorphic\n";
            } else {
                std::cout << "catalog check FAILED: " << rep.first_failure << '\n';
            }
            return rep.pass ? 0 : 1;
        }

        if (*verify_cmd) {
            auto cat = Catalog::load(data_dir + "/catalog");
            auto out = verify_one(verify_path, cat);
            std::cout << (machine ? report_to_json(out.report, out.edge_count).dump(2) + "\n"
                                  : out.id + ": " +
                                        emit_report(out.report, out.edge_count, false));
            return out.report.pass ? 0 : 1;
        }

        if (*verify_all_cmd) {
            auto cat = Catalog::load(data_dir + "/catalog");
            auto files = design_files_under(verify_dir);
            if (files.empty()) {
                std::cerr << "no .design files under " << verify_dir << '\n';
                return 2;
            }
            auto outcomes = verify_parallel(files, cat, jobs);
            int failures = 0;
            for (const auto& o : outcomes)
                if (!o.report.pass) {
                    ++failures;
                    std::cout << "FAIL " << o.path << '\n'
                              << emit_report(o.report, o.edge_count, false);
                }
            if (machine) {
                nlohmann::json j = {{"pass", failures == 0},
                                    {"records", outcomes.size()},
                                    {"failures", failures}};
                std::cout << j.dump(2) << '\n';
            } else if (failures == 0) {
                std::cout << outcomes.size() << " records verified\n";
            } else {
                std::cout << failures << " of " << outcomes.size() << " records failed\n";
            }
            return failures == 0 ? 0 : 1;
        }

        if (*spectrum_cmd) {
            auto s = admissible_residues({sv, se, sd});
            if (machine) {
                nlohmann::json j = {{"modulus", s.modulus},
                                    {"residues", s.residues}};
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "mod " << s.modulus << ":";
                for (int r : s.residues) std::cout << ' ' << r;
                std::cout << '\n';
                if (sv == 20 && se == 30 && sd == 3)
                    std::cout << "caveat: n = 16 satisfies the divisibility conditions "
                                 "but admits no such design (known small-order "
                                 "exception)\n";
            }
            return 0;
        }

        if (*search_cmd) {
            if (!seed_set) {
                std::cerr << "search requires --seed (no silent nondeterminism)\n";
                return 2;
            }
            auto cat = Catalog::load(data_dir + "/catalog");
            if (snark_opt.size() < 2 || snark_opt[0] != 'G') {
                std::cerr << "bad snark id: " << snark_opt << '\n';
                return 2;
            }
            SearchSpec spec;
            spec.snark_index = std::stoi(snark_opt.substr(1));
            if (auto layout = builtin_layout(host_opt)) {
                spec.host = make_multipartite(*layout);
            } else if (host_opt.rfind("complete:", 0) == 0) {
                auto rest = host_opt.substr(9);
                bool inf = rest.size() > 4 && rest.substr(rest.size() - 4) == ":inf";
                if (inf) rest = rest.substr(0, rest.size() - 4);
                spec.host = make_complete(std::stoi(rest), inf);
            } else {
                std::cerr << "unknown host: " << host_opt << '\n';
                return 2;
            }
            for (const auto& p : plan_opt)
                spec.action_plan.push_back(parse_plan_map(p, spec.host));
            spec.budget = budget;
            spec.seed = seed;
            auto res = search(spec, cat.get_graph(spec.snark_index), jobs);
            if (res.found) {
                std::cout << "found verifying solution after " << res.evaluations
                          << " evaluations\n";
                if (!emit_path.empty()) {
                    auto rec = record_from_candidate(spec, res.best,
                                                     snark_opt + "-" + host_opt + "-found");
                    std::ofstream out(emit_path);
                    out << emit_design(rec);
                    std::cout << "wrote " << emit_path << '\n';
                }
                return 0;
            }
            std::cout << "exhausted budget (" << res.evaluations
                      << " evaluations), best cost " << res.best_cost << '\n';
            return 1;
        }

        if (*report_cmd) {
            auto cat = Catalog::load(data_dir + "/catalog");
            auto files = design_files_under(report_dir);
            auto outcomes = verify_parallel(files, cat, jobs);
            VerificationDb db;
            for (const auto& o : outcomes)
                db[{o.snark_index, o.host_id}] = o.report.pass;
            auto rep = theorem_check(db);
            if (machine) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : rep.rows) {
                    nlohmann::json slots;
                    for (const auto& [host, st] : row.slots)
                        slots[host] = st == IngredientStatus::Verified ? "Verified"
                                      : st == IngredientStatus::Missing ? "Missing"
                                                                        : "Failed";
                    rows.push_back({{"snark", "G" + std::to_string(row.snark_index)},
                                    {"slots", slots}});
                }
                nlohmann::json j = {{"pass", rep.pass},
                                    {"spectrum_ok", rep.spectrum_ok},
                                    {"rows", rows},
                                    {"failures", rep.failures}};
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "snark";
                for (const auto& h : ingredient_hosts()) std::cout << '\t' << h;
                std::cout << '\n';
                for (const auto& row : rep.rows) {
                    std::cout << 'G' << row.snark_index;
                    for (const auto& h : ingredient_hosts()) {
                        auto st = row.slots.at(h);
                        std::cout << '\t'
                                  << (st == IngredientStatus::Verified ? "ok"
                                      : st == IngredientStatus::Missing ? "MISSING"
                                                                        : "FAILED");
                    }
                    std::cout << '\n';
                }
                std::cout << "spectrum (24,36,3): "
                          << (rep.spectrum_ok ? "1, 64 (mod 72)" : "MISMATCH") << '\n';
                std::cout << (rep.pass ? "theorem check: PASS\n" : "theorem check: FAIL\n");
                for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
            }
            return rep.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
