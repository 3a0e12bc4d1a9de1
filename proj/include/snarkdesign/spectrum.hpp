#ifndef SNARKDESIGN_SPECTRUM_HPP
#define SNARKDESIGN_SPECTRUM_HPP

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkdesign/design.hpp"

namespace snarkdesign {

struct InconsistentParams : std::runtime_error {
    explicit InconsistentParams(const std::string& w) : std::runtime_error(w) {}
};

struct DesignParams {
    int v;  // vertices of the decomposing graph
    int e;  // edges
    int d;  // regularity degree
};

struct ResidueSpectrum {
    int modulus;
    std::set<int> residues;

    bool admits(long long n) const {
        long long r = n % modulus;
        if (r < 0) r += modulus;
        return residues.count(static_cast<int>(r)) > 0;
    }
};

// Necessary conditions for a design of order n: d | n-1 (vertex degrees
// consumed d at a time) and 2e | n(n-1) (edge count divisible by block
// size). The residue set is computed modulo L = lcm(2e, d) and then the
// modulus is minimized: the smallest divisor m of L such that membership
// depends only on n mod m.
inline ResidueSpectrum admissible_residues(const DesignParams& p) {
    if (p.v <= 0 || p.e <= 0 || p.d <= 0 || 2 * p.e != p.d * p.v)
        throw InconsistentParams("need 2e = d*v with positive parameters");
    const long long L = std::lcm(2 * p.e, p.d);
    std::vector<char> member(L, 0);
    for (long long n = 0; n < L; ++n) {
        // representative n of its class mod L: both conditions are
        // class functions mod L
        bool deg_ok = ((n - 1) % p.d + p.d) % p.d == 0;
        bool edge_ok = (n * (n - 1)) % (2 * p.e) == 0;
        member[n] = deg_ok && edge_ok;
    }
    int best_m = static_cast<int>(L);
    for (int m = 1; m <= L; ++m) {
        if (L % m != 0) continue;
        bool uniform = true;
        for (int r = 0; r < m && uniform; ++r) {
            char first = member[r];
            for (long long n = r; n < L; n += m)
                if (member[n] != first) {
                    uniform = false;
                    break;
                }
        }
        if (uniform) {
            best_m = m;
            break;
        }
    }
    ResidueSpectrum s;
    s.modulus = best_m;
    for (int r = 0; r < best_m; ++r)
        if (member[r]) s.residues.insert(r);
    return s;
}

enum class IngredientStatus { Verified, Missing, Failed };

// Ingredient slots in paper order: the four complete-host designs followed
// by the five multipartite decompositions.
inline const std::vector<std::string>& ingredient_hosts() {
    static const std::vector<std::string> hosts = {
        "k64", "k73", "k136", "k145",
        "k12x3", "k24-24-15", "k72-72-63", "k24x4", "k24x3-21"};
    return hosts;
}

struct IngredientLedgerRow {
    int snark_index;
    std::map<std::string, IngredientStatus> slots;  // host id -> status
    bool all_verified() const {
        if (slots.size() != ingredient_hosts().size()) return false;
        for (const auto& [_, st] : slots)
            if (st != IngredientStatus::Verified) return false;
        return true;
    }
};

// db: verification outcome per (snark, host-id) pair
using VerificationDb = std::map<std::pair<int, std::string>, bool>;

inline IngredientLedgerRow ingredient_status(int snark_index, const VerificationDb& db) {
    IngredientLedgerRow row;
    row.snark_index = snark_index;
    for (const auto& host : ingredient_hosts()) {
        auto it = db.find({snark_index, host});
        if (it == db.end())
            row.slots[host] = IngredientStatus::Missing;
        else
            row.slots[host] = it->second ? IngredientStatus::Verified
                                         : IngredientStatus::Failed;
    }
    return row;
}

struct TheoremCheckReport {
    bool pass = false;
    bool spectrum_ok = false;
    std::vector<IngredientLedgerRow> rows;
    std::vector<std::string> failures;  // "G<k>/<host>: Missing|Failed"
};

// Passes iff all 38 ledger rows are fully verified and the residue
// arithmetic for (24, 36, 3) yields {1, 64} mod 72.
inline TheoremCheckReport theorem_check(const VerificationDb& db) {
    TheoremCheckReport rep;
    auto s = admissible_residues({24, 36, 3});
    rep.spectrum_ok = s.modulus == 72 && s.residues == std::set<int>{1, 64};
    if (!rep.spectrum_ok) rep.failures.push_back("spectrum mismatch for (24,36,3)");
    for (int k = 1; k <= 38; ++k) {
        auto row = ingredient_status(k, db);
        for (const auto& [host, st] : row.slots) {
            if (st == IngredientStatus::Missing)
                rep.failures.push_back("G" + std::to_string(k) + "/" + host + ": Missing");
            else if (st == IngredientStatus::Failed)
                rep.failures.push_back("G" + std::to_string(k) + "/" + host + ": Failed");
        }
        rep.rows.push_back(std::move(row));
    }
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace snarkdesign

#endif
