#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kron {

// Weakly decreasing sequence of positive integers. Trailing zeros are never
// stored; part(i) reads rows beyond the length as 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Strips trailing zeros; throws not_a_partition on negative or increasing parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-indexed row length, 0 outside 1..length()
    int part(int i) const
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Arbitrary finite sequence of non-negative integers (weights of frames).
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) {}
    explicit Composition(std::vector<int> p);
    Composition(const Partition& p) : parts(p.parts()) {}

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const
    {
        return (i >= 1 && i <= length()) ? parts[static_cast<std::size_t>(i - 1)] : 0;
    }
    bool is_partition() const;
    friend bool operator==(const Composition&, const Composition&) = default;
};

struct SkewShape {
    Partition outer;
    Partition inner;
};

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

// Accepts `6,2`, `[6,2]`, `(6,2)`, and `0`, `[]` or `` for the empty partition.
Partition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);

// [lambda]_a, the sum of the first a parts
int partial_sum(const Partition& lambda, int a);

// The size-graded order: smaller size dominates, equal sizes compare partial sums.
bool dominates(const Partition& lambda, const Partition& mu);

// lambda_[n] = (n - |lambda|, lambda_1, lambda_2, ...)
Partition pad(const Partition& lambda, int n);

// Drops the first row; inverse of pad.
Partition strip_first(const Partition& lambda);

bool contains(const Partition& outer, const Partition& inner);

Partition intersect(const Partition& lambda, const Partition& nu);

// (|lambda - (lambda cap nu)|, |nu - (lambda cap nu)|)
std::pair<int, int> skew_diff_size(const Partition& lambda, const Partition& nu);

bool is_horizontal(const SkewShape& shape);
bool is_horizontal(const Partition& outer, const Partition& inner);

// Throws undefined_value when both partitions have at most one row.
int minmax(const Partition& lambda, const Partition& nu);

bool is_copieri(const Partition& lambda, const Partition& nu, int s);
bool is_maximal_depth(const Partition& lambda, const Partition& nu, int s);

// max skew size <= s <= |lambda| + |nu|
bool within_murnaghan_bounds(const Partition& lambda, const Partition& nu, int s);

// All partitions of k in reverse lexicographic order, optionally with at most
// max_len parts.
std::vector<Partition> partitions_of(int k, std::optional<int> max_len = std::nullopt);

// Shape with a box removed from / added to row i (1-indexed), if still a partition.
std::optional<Partition> remove_box(const Partition& p, int row);
std::optional<Partition> add_box(const Partition& p, int row);

} // namespace kron
