#ifndef SNARKDESIGN_SEARCH_HPP
#define SNARKDESIGN_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "snarkdesign/design.hpp"

namespace snarkdesign {

struct BalanceViolated : std::runtime_error {
    explicit BalanceViolated(const std::string& w) : std::runtime_error(w) {}
};

// SplitMix64; used to derive per-worker seeds from the root seed so that
// parallel restarts consume disjoint, reproducible streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 worker_rng(std::uint64_t root_seed, int worker) {
    std::uint64_t s = root_seed;
    std::uint64_t v = 0;
    for (int i = 0; i <= worker; ++i) v = splitmix64(s);
    return std::mt19937_64(v);
}

struct AnnealSchedule {
    double initial_temperature = 3.0;
    double cooling = 0.9995;      // applied per accepted batch
    int batch = 100;              // accepted moves per cooling step
    long long restart_threshold = 100000;  // consecutive non-improving moves
};

struct Candidate {
    std::vector<std::vector<int>> tuples;  // one 24-tuple per planned base block
};

struct SearchSpec {
    int snark_index = 0;
    HostGraph host;
    std::vector<PiecewiseModularMap> action_plan;  // one map per base block
    long long budget = 0;  // move-evaluation limit
    std::uint64_t seed = 0;
    AnnealSchedule schedule;
    std::optional<Candidate> initial;

    void validate() const {
        long long planned = 0;
        for (const auto& m : action_plan) planned += m.order();
        if (planned * 36 != host.edge_count())
            throw BalanceViolated("orbit plan develops " + std::to_string(planned) +
                                  " blocks x 36 edges but host has " +
                                  std::to_string(host.edge_count()) + " edges");
        for (const auto& m : action_plan)
            if (!validate_automorphism(m, host))
                throw BalanceViolated("action plan contains a non-automorphism");
    }
};

// Illegal placements (snark edges landing inside a multipartite part) are
// penalized rather than excluded from the move set; the penalty weight
// equals the block size.
constexpr long long kIllegalPenalty = 36;

// Incremental cost bookkeeping for one candidate: dense per-edge coverage,
// surplus cost, and the illegal-placement count.
class SearchState {
public:
    SearchState(const SearchSpec& spec, const LabeledGraph& snark, Candidate c)
        : spec_(&spec), snark_(&snark), candidate_(std::move(c)),
          coverage_(spec.host.edge_count(), 0) {
        for (size_t b = 0; b < candidate_.tuples.size(); ++b) add_block(b, +1);
    }

    long long cost() const { return surplus_ + kIllegalPenalty * illegal_; }
    const Candidate& candidate() const { return candidate_; }

    // replace candidate_.tuples[block][coord] with v, updating cost
    void apply(size_t block, int coord, int v) {
        add_block(block, -1);
        candidate_.tuples[block][coord] = v;
        add_block(block, +1);
    }

    // exchange two positions within a block, updating cost; evaluated as one
    // move so coordinated two-coordinate changes face a single delta
    void swap(size_t block, int i, int j) {
        add_block(block, -1);
        std::swap(candidate_.tuples[block][i], candidate_.tuples[block][j]);
        add_block(block, +1);
    }

private:
    void add_block(size_t block, int sign) {
        const auto& map = spec_->action_plan[block];
        const auto& host = spec_->host;
        std::vector<int> tuple = candidate_.tuples[block];
        for (int t = 0; t < map.order(); ++t) {
            for (auto [i, j] : snark_->edges()) {
                int u = tuple[i], v = tuple[j];
                if (!host.contains_edge(u, v)) {
                    illegal_ += sign;
                    continue;
                }
                auto idx = host.edge_index(u, v);
                if (sign > 0) {
                    if (coverage_[idx] >= 1) ++surplus_;
                    ++coverage_[idx];
                } else {
                    --coverage_[idx];
                    if (coverage_[idx] >= 1) --surplus_;
                }
            }
            for (int& x : tuple) x = map.apply(x);
        }
    }

    const SearchSpec* spec_;
    const LabeledGraph* snark_;
    Candidate candidate_;
    std::vector<std::int32_t> coverage_;
    long long surplus_ = 0;
    long long illegal_ = 0;
};

inline long long cost_of(const Candidate& c, const SearchSpec& spec,
                         const LabeledGraph& snark) {
    return SearchState(spec, snark, c).cost();
}

struct Move {
    size_t block;
    int coord;
    int vertex;
};

// Uniform coordinate replacement: pick a block, a position, and a host
// vertex not already used in that tuple.
template <typename Rng>
Move propose_move(const Candidate& c, const HostGraph& host, Rng& rng) {
    std::uniform_int_distribution<size_t> pick_block(0, c.tuples.size() - 1);
    size_t b = pick_block(rng);
    const auto& tuple = c.tuples[b];
    std::uniform_int_distribution<int> pick_coord(0, static_cast<int>(tuple.size()) - 1);
    int coord = pick_coord(rng);
    std::uniform_int_distribution<int> pick_vertex(0, host.vertex_count() - 1);
    int v;
    do {
        v = pick_vertex(rng);
    } while (std::find(tuple.begin(), tuple.end(), v) != tuple.end());
    return {b, coord, v};
}

template <typename Rng>
Candidate random_candidate(const SearchSpec& spec, Rng& rng) {
    Candidate c;
    std::vector<int> domain(spec.host.vertex_count());
    std::iota(domain.begin(), domain.end(), 0);
    for (size_t b = 0; b < spec.action_plan.size(); ++b) {
        std::shuffle(domain.begin(), domain.end(), rng);
        c.tuples.push_back({domain.begin(), domain.begin() + 24});
    }
    return c;
}

struct SearchResult {
    bool found = false;
    Candidate best;
    long long best_cost = 0;
    long long evaluations = 0;
    VerificationReport report;  // populated on success
};

inline DesignRecord record_from_candidate(const SearchSpec& spec, const Candidate& c,
                                          const std::string& id) {
    DesignRecord rec;
    rec.id = id;
    rec.snark_index = spec.snark_index;
    rec.host = spec.host;
    for (size_t b = 0; b < spec.action_plan.size(); ++b) {
        std::string name = "m" + std::to_string(b);
        rec.maps.emplace(name, spec.action_plan[b]);
        rec.blocks.push_back({c.tuples[b], name});
    }
    return rec;
}

namespace detail {

// One annealing run (restarts included) with its own RNG stream.
inline SearchResult search_worker(const SearchSpec& spec, const LabeledGraph& snark,
                                  std::mt19937_64 rng, long long budget,
                                  const std::atomic<bool>* stop = nullptr) {
    SearchResult res;
    const auto& sched = spec.schedule;
    bool first_start = true;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // the temperature belongs to the whole run: restarts reseed the candidate
    // but the geometric cooling keeps progressing, so late restarts behave as
    // near-greedy descents from the best basin found so far
    double temp = sched.initial_temperature;
    while (res.evaluations < budget && !(stop && stop->load())) {
        // first run starts from the supplied candidate (or a random one);
        // later restarts basin-hop: kick the best candidate seen so far in a
        // few coordinates and re-anneal, rather than discarding all progress
        Candidate start;
        if (first_start) {
            start = spec.initial ? *spec.initial : random_candidate(spec, rng);
        } else {
            start = res.best;
            for (int k = 0; k < 3; ++k) {
                Move kick = propose_move(start, spec.host, rng);
                start.tuples[kick.block][kick.coord] = kick.vertex;
            }
        }
        first_start = false;
        SearchState state(spec, snark, start);
        int accepted_in_batch = 0;
        long long non_improving = 0;
        long long local_best = state.cost();
        if (res.evaluations == 0 || local_best < res.best_cost) {
            res.best_cost = local_best;
            res.best = state.candidate();
        }
        while (res.evaluations < budget && !(stop && stop->load())) {
            if (state.cost() == 0) {
                // never trust the incremental cost: re-check from scratch
                auto rec = record_from_candidate(spec, state.candidate(), "search");
                auto rep = verify_design(rec, snark);
                if (rep.pass) {
                    res.found = true;
                    res.best = state.candidate();
                    res.best_cost = 0;
                    res.report = std::move(rep);
                    return res;
                }
            }
            long long before = state.cost();
            // mix of coordinate replacements and within-block position swaps;
            // swaps let the chain cross two-coordinate barriers in one step
            bool is_swap = unit(rng) < 0.25;
            size_t swap_block = 0;
            int swap_i = 0, swap_j = 0;
            Move mv{};
            int old_vertex = 0;
            if (is_swap) {
                std::uniform_int_distribution<size_t> pick_block(
                    0, state.candidate().tuples.size() - 1);
                swap_block = pick_block(rng);
                int len = static_cast<int>(state.candidate().tuples[swap_block].size());
                std::uniform_int_distribution<int> pick(0, len - 1);
                swap_i = pick(rng);
                do {
                    swap_j = pick(rng);
                } while (swap_j == swap_i);
                state.swap(swap_block, swap_i, swap_j);
            } else {
                mv = propose_move(state.candidate(), spec.host, rng);
                old_vertex = state.candidate().tuples[mv.block][mv.coord];
                state.apply(mv.block, mv.coord, mv.vertex);
            }
            long long delta = state.cost() - before;
            ++res.evaluations;
            bool accept = delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temp);
            if (!accept) {
                if (is_swap)
                    state.swap(swap_block, swap_i, swap_j);
                else
                    state.apply(mv.block, mv.coord, old_vertex);
            } else if (++accepted_in_batch >= sched.batch) {
                temp *= sched.cooling;
                accepted_in_batch = 0;
            }
            if (state.cost() < local_best) {
                local_best = state.cost();
                non_improving = 0;
                if (local_best < res.best_cost) {
                    res.best_cost = local_best;
                    res.best = state.candidate();
                }
            } else if (++non_improving >= sched.restart_threshold) {
                break;  // restart
            }
        }
    }
    return res;
}

}  // namespace detail

// Simulated annealing with restarts. Deterministic for jobs == 1 and a
// fixed seed. Returns either a verified solution or the best candidate seen
// (Exhausted) for resume.
inline SearchResult search(const SearchSpec& spec, const LabeledGraph& snark,
                           int jobs = 1) {
    spec.validate();
    if (jobs <= 1)
        return detail::search_worker(spec, snark, worker_rng(spec.seed, 0), spec.budget);
    std::atomic<bool> stop{false};
    std::vector<SearchResult> results(jobs);
    std::vector<std::thread> threads;
    long long share = spec.budget / jobs;
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w]() {
            results[w] = detail::search_worker(spec, snark, worker_rng(spec.seed, w),
                                               share, &stop);
            if (results[w].found) stop.store(true);
        });
    }
    for (auto& t : threads) t.join();
    SearchResult best = results[0];
    for (int w = 1; w < jobs; ++w) {
        best.evaluations += results[w].evaluations;
        if (results[w].found || (!best.found && results[w].best_cost < best.best_cost)) {
            auto evals = best.evaluations;
            best = results[w];
            best.evaluations = evals;
        }
    }
    return best;
}

}  // namespace snarkdesign

#endif
