#pragma once

#include <stdexcept>
#include <string>

namespace kron {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_a_partition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct size_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct shape_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct rank_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// minmax of two partitions with at most one row each
struct undefined_value : std::domain_error {
    using std::domain_error::domain_error;
};

// stable_kronecker on a triple that is neither co-Pieri nor of maximal depth
struct not_applicable : std::domain_error {
    using std::domain_error::domain_error;
};

struct swap_undefined : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_dvir : std::domain_error {
    using std::domain_error::domain_error;
};

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a character sum that does not divide n! exactly; always a bug
struct non_integral : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace kron
