#pragma once

#include <string>
#include <vector>

namespace kron {

struct CheckRecord {
    std::string suite;
    std::string item;
    bool ok = true;
    std::string detail;
};

struct SweepBounds {
    // |lambda|, |nu| <= max_size and s <= max_s for the co-Pieri sweeps
    int max_size = 5;
    int max_s = 5;
    // |nu| bound for maximal-depth triples
    int max_depth_nu = 7;
    // r for the u_t s_k identity and the cellular count
    int thm33_r = 3;
    int bell_r = 3;
    // worker threads; 0 means hardware concurrency
    int workers = 0;
};

// Latticed class counts against the character oracle on applicable triples.
std::vector<CheckRecord> check_oracle_equivalence(const SweepBounds& b);
// Tableau count, classical LR and the oracle on maximal-depth triples.
std::vector<CheckRecord> check_maximal_depth(const SweepBounds& b);
// u_t s_k identity for every path of length r and every defined swap.
std::vector<CheckRecord> check_thm33(int r);
// sum_nu |Std_r(nu)|^2 against Bell(2r) from the Bell triangle.
std::vector<CheckRecord> check_cellular_count(int r);
// |SStd0(mu)| = sum_tau K(tau, mu) |Latt0(tau)| on co-Pieri triples.
std::vector<CheckRecord> check_cor614(const SweepBounds& b);

// Runs every suite; records are sorted by suite and item.
std::vector<CheckRecord> run_verify(const SweepBounds& b);

} // namespace kron
