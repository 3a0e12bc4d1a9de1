#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "snarkdesign/catalog.hpp"
#include "snarkdesign/formats.hpp"
#include "snarkdesign/search.hpp"

using namespace snarkdesign;

namespace {

const Catalog& catalog() {
    static Catalog cat = Catalog::load(std::string(SNARKDESIGN_DATA_DIR) + "/catalog");
    return cat;
}

DesignRecord load_design(const std::string& rel) {
    return parse_design_file(std::string(SNARKDESIGN_DATA_DIR) + "/designs/" + rel);
}

// search spec + candidate reconstructed from a shipped record
std::pair<SearchSpec, Candidate> from_record(const DesignRecord& rec) {
    SearchSpec spec;
    spec.snark_index = rec.snark_index;
    spec.host = rec.host;
    Candidate c;
    for (const auto& b : rec.blocks) {
        spec.action_plan.push_back(rec.maps.at(b.map_name));
        c.tuples.push_back(b.tuple);
    }
    spec.seed = 1;
    spec.budget = 1;
    return {spec, c};
}

}  // namespace

TEST_CASE("cost is zero exactly on verifying candidates") {
    auto rec = load_design("k12x3/g01.design");
    auto [spec, c] = from_record(rec);
    const auto& g = catalog().get_graph(rec.snark_index);
    spec.validate();
    CHECK(cost_of(c, spec, g) == 0);

    // any mutated shipped K_73 solution costs at least 1
    auto rec73 = load_design("k73/g01.design");
    auto [spec73, c73] = from_record(rec73);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        auto mutated = c73;
        auto mv = propose_move(mutated, spec73.host, rng);
        mutated.tuples[mv.block][mv.coord] = mv.vertex;
        CHECK(cost_of(mutated, spec73, g) >= 1);
    }
}

TEST_CASE("same-part placements are penalized") {
    auto rec = load_design("k12x3/g01.design");
    auto [spec, c] = from_record(rec);
    const auto& g = catalog().get_graph(1);
    // force tuple[0] and tuple[1] into the same residue class: snark edge
    // {0,1} becomes illegal in every orbit translate
    auto bad = c;
    int v0 = bad.tuples[0][0];
    int target = (v0 + 3) % 36;
    auto& t = bad.tuples[0];
    if (std::find(t.begin(), t.end(), target) != t.end())
        *std::find(t.begin(), t.end(), target) = (target + 6) % 36 == v0 ? (target + 9) % 36
                                                                         : (target + 6) % 36;
    t[1] = target;
    CHECK(cost_of(bad, spec, g) >= 36);
}

TEST_CASE("propose_move keeps candidates well-formed") {
    auto rec = load_design("k12x3/g01.design");
    auto [spec, c] = from_record(rec);
    std::mt19937_64 rng(53);
    for (int i = 0; i < 10000; ++i) {
        auto mv = propose_move(c, spec.host, rng);
        auto before = c.tuples[mv.block];
        c.tuples[mv.block][mv.coord] = mv.vertex;
        // exactly one coordinate differs and all stay distinct
        int diffs = 0;
        for (size_t j = 0; j < before.size(); ++j)
            if (before[j] != c.tuples[mv.block][j]) ++diffs;
        REQUIRE(diffs == 1);
        std::set<int> uniq(c.tuples[mv.block].begin(), c.tuples[mv.block].end());
        REQUIRE(uniq.size() == 24);
    }
}

TEST_CASE("incremental cost equals full recomputation") {
    auto rec = load_design("k24-24-15/g02.design");
    auto [spec, c] = from_record(rec);
    const auto& g = catalog().get_graph(rec.snark_index);
    SearchState state(spec, g, c);
    std::mt19937_64 rng(59);
    for (int i = 0; i < 1000; ++i) {
        auto mv = propose_move(state.candidate(), spec.host, rng);
        state.apply(mv.block, mv.coord, mv.vertex);
        REQUIRE(state.cost() == cost_of(state.candidate(), spec, g));
    }
}

TEST_CASE("move then inverse move restores the cost") {
    auto rec = load_design("k12x3/g03.design");
    auto [spec, c] = from_record(rec);
    const auto& g = catalog().get_graph(rec.snark_index);
    SearchState state(spec, g, c);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        long long before = state.cost();
        auto mv = propose_move(state.candidate(), spec.host, rng);
        int old = state.candidate().tuples[mv.block][mv.coord];
        state.apply(mv.block, mv.coord, mv.vertex);
        state.apply(mv.block, mv.coord, old);
        REQUIRE(state.cost() == before);
    }
}

TEST_CASE("impossible orbit plans are rejected") {
    SearchSpec spec;
    spec.snark_index = 1;
    spec.host = make_multipartite(*builtin_layout("k12x3"));
    spec.action_plan.push_back(make_map({{0, 36, 3}}, {}, spec.host));
    spec.action_plan.push_back(make_map({{0, 36, 3}}, {}, spec.host));  // 24 x 36 != 432
    CHECK_THROWS_AS(spec.validate(), BalanceViolated);
}

TEST_CASE("search is deterministic for a fixed seed and one worker") {
    auto rec = load_design("k12x3/g01.design");
    auto [spec, solution] = from_record(rec);
    const auto& g = catalog().get_graph(1);
    // corrupt one coordinate so a short run does some work
    auto corrupted = solution;
    corrupted.tuples[0][5] = (corrupted.tuples[0][5] + 7) % 36;
    spec.initial = corrupted;
    spec.budget = 5000;
    spec.seed = 12345;
    auto a = search(spec, g, 1);
    auto b = search(spec, g, 1);
    CHECK(a.found == b.found);
    CHECK(a.best_cost == b.best_cost);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.best.tuples == b.best.tuples);
}

TEST_CASE("search started at a solution returns it verified") {
    auto rec = load_design("k12x3/g02.design");
    auto [spec, solution] = from_record(rec);
    spec.initial = solution;
    spec.budget = 100;
    spec.seed = 7;
    auto res = search(spec, catalog().get_graph(2), 1);
    REQUIRE(res.found);
    CHECK(res.report.pass);
    CHECK(res.best_cost == 0);
}

TEST_CASE("repair of a corrupted solution (single seed smoke)") {
    auto rec = load_design("k12x3/g01.design");
    auto [spec, solution] = from_record(rec);
    const auto& g = catalog().get_graph(1);
    std::mt19937_64 rng(67);
    auto corrupted = solution;
    for (int i = 0; i < 3; ++i) {
        auto mv = propose_move(corrupted, spec.host, rng);
        corrupted.tuples[mv.block][mv.coord] = mv.vertex;
    }
    REQUIRE(cost_of(corrupted, spec, g) > 0);
    spec.initial = corrupted;
    spec.budget = 1000000;
    spec.seed = 101;
    auto res = search(spec, g, 1);
    CHECK(res.found);
    if (res.found) {
        auto out = record_from_candidate(spec, res.best, "repaired");
        CHECK(verify_design(out, g).pass);
    }
}
