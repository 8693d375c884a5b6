#pragma once

#include "kron/partitions.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace kron {

// One integral step (-e_remove, +e_add); row 0 means "remove/add nothing".
struct Step {
    int remove = 0;
    int add = 0;

    enum class Kind { move_up, dummy, move_down };
    Kind kind() const
    {
        return remove > add ? Kind::move_up : (remove == add ? Kind::dummy : Kind::move_down);
    }
    friend bool operator==(const Step&, const Step&) = default;
};

inline Step a_step(int i) { return {0, i}; }
inline Step r_step(int i) { return {i, 0}; }
inline Step d_step(int i) { return {i, i}; }

// Total order: move-ups < dummies < move-downs, refined within each kind.
std::strong_ordering step_compare(const Step& a, const Step& b);

struct StepLess {
    bool operator()(const Step& a, const Step& b) const { return step_compare(a, b) < 0; }
};

// `-i+j`
std::string to_string(const Step& s);
// `a(i)`, `r(i)`, `d(i)`, `m↑(i,j)` or `m↓(i,j)`
std::string step_name(const Step& s);
Step parse_step(std::string_view text);

enum class Parity { integral, half };

// Integral shape: itself and every single-box removal. Half shape: itself and
// every single-box addition.
std::vector<Partition> successors(const Partition& shape, Parity level_parity);

class KroneckerTableau {
public:
    KroneckerTableau() = default;
    // Throws not_a_partition if some intermediate shape is invalid.
    KroneckerTableau(Partition start, std::vector<Step> steps);

    const Partition& start() const { return start_; }
    const std::vector<Step>& steps() const { return steps_; }
    int s() const { return static_cast<int>(steps_.size()); }
    const Step& step(int k) const { return steps_[static_cast<std::size_t>(k - 1)]; }

    // t(k) for 0 <= k <= s
    const Partition& shape(int k) const { return integral_[static_cast<std::size_t>(k)]; }
    // t(k - 1/2) for 1 <= k <= s, the shape after the removal half of step k
    const Partition& half_shape(int k) const { return half_[static_cast<std::size_t>(k - 1)]; }
    const Partition& end() const { return integral_.back(); }

    friend bool operator==(const KroneckerTableau& a, const KroneckerTableau& b)
    {
        return a.start_ == b.start_ && a.steps_ == b.steps_;
    }

private:
    Partition start_;
    std::vector<Step> steps_;
    std::vector<Partition> integral_;
    std::vector<Partition> half_;
};

// Builds the tableau if every intermediate shape is a partition.
std::optional<KroneckerTableau> make_tableau(const Partition& start, const std::vector<Step>& steps);

// Space separated `-i+j` steps; with shapes, each step is followed by `[t(k)]`.
std::string to_string(const KroneckerTableau& t, bool with_shapes = false);

// Std_s(nu \ lambda) in lexicographic order of step sequences.
std::vector<KroneckerTableau> enumerate_std(const Partition& lambda, const Partition& nu, int s);

// Std^0: paths outside the Dvir radical. Pruned during the search, equal to
// filtering enumerate_std by is_dvir.
std::vector<KroneckerTableau> enumerate_std0(const Partition& lambda, const Partition& nu, int s);

// Std^+: paths avoiding DR^i for i >= 1 (d(0) steps allowed).
std::vector<KroneckerTableau> enumerate_std_plus(const Partition& lambda, const Partition& nu, int s);

// Least i with t in DR^i, or nullopt when t is in Std^0.
std::optional<int> is_dvir(const KroneckerTableau& t);

// Exchanges integral steps k and k+1 (1 <= k <= s-1).
std::optional<KroneckerTableau> swap_adjacent(const KroneckerTableau& t, int k);

// Defined when t(k-1/2) +u-> t(k) -u-> t(k+1/2) with u > 0; replaces the round
// trip through row u by one through the new row L = len(t(k-1/2)) + 1.
std::optional<KroneckerTableau> error_path(const KroneckerTableau& t, int k);

// Recomputes every shape from scratch; independent of the constructor.
bool revalidate(const KroneckerTableau& t);

} // namespace kron
