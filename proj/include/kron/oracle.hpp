#pragma once

#include "kron/bigint.hpp"
#include "kron/partitions.hpp"

#include <optional>
#include <vector>

namespace kron {

using char_value = __int128;

struct CycleType {
    Partition rho;
    bigint class_size;
};

bigint factorial(int n);

// n! / z_rho
bigint class_size(const Partition& rho);

// chi^lambda(rho) by the Murnaghan-Nakayama rule. Memoized per thread; the
// memo is cleared when it grows past a fixed bound.
char_value mn_character(const Partition& lambda, const Partition& rho);

// g(lambda, nu, mu) for three partitions of the same n.
bigint kronecker(const Partition& lambda, const Partition& nu, const Partition& mu);

struct StableResult {
    bigint value;
    int onset_n = 0;
    bool capped = false;
    // g at n = first_n, first_n + 1, ...
    int first_n = 0;
    std::vector<bigint> series;
};

// g(lambda_[n], nu_[n], mu_[n]) from n0 = max(|x| + x_1) upward. Stops at
// the first value repeated at two consecutive n >= |lambda| + |nu| + |mu|, or
// sets `capped` once n passes n_cap (default n0 + |lambda| + |nu| + |mu| + 8).
StableResult stable_kronecker_series(const Partition& lambda, const Partition& nu, const Partition& mu,
                                     std::optional<int> n_cap = std::nullopt);

// As stable_kronecker_series, but throws budget_exceeded when capped.
StableResult stable_kronecker_oracle(const Partition& lambda, const Partition& nu, const Partition& mu,
                                     std::optional<int> n_cap = std::nullopt);

// Right side of Dvir's recursion for g(lambda_n, nu_n, mu_n).
bigint dvir_step(const Partition& lambda_n, const Partition& nu_n, const Partition& mu_n);

// Partitions of n obtained from mu by adding a horizontal strip.
std::vector<Partition> p_set(int n, const Partition& mu);

void clear_character_memo();

} // namespace kron
