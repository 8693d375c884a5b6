#pragma once

#include "kron/branching.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kron {

// Integer polynomial in the indeterminate n; c[i] is the coefficient of n^i.
class Poly {
public:
    Poly() = default;
    Poly(long long constant);
    static Poly monomial(long long coeff, int degree);

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long evaluate(long long n) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<long long> c_;
};

std::string to_string(const Poly& p);

// Set partition of {1..r} (southern, unbarred) and {1'..r'} (northern,
// barred). Point codes: unbarred i is i-1, barred i is r+i-1. Stored as the
// restricted growth string of block labels over the codes, which is canonical.
class Diagram {
public:
    Diagram() = default;
    // blocks of point codes; throws if they do not partition 0..2r-1
    Diagram(int r, const std::vector<std::vector<int>>& blocks);

    static Diagram identity(int r);
    static int south(int i) { return i - 1; }
    static int north(int r, int i) { return r + i - 1; }

    int rank() const { return r_; }
    // blocks sorted by least code, each sorted ascending
    std::vector<std::vector<int>> blocks() const;
    int block_of(int code) const { return label_[static_cast<std::size_t>(code)]; }
    bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

    // vertical flip exchanging barred and unbarred points
    Diagram star() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram& a, const Diagram& b)
    {
        if (a.r_ != b.r_)
            return a.r_ <=> b.r_;
        return a.label_ <=> b.label_;
    }

    static Diagram from_labels(int r, const std::vector<int>& labels);

private:
    int r_ = 0;
    std::vector<std::uint8_t> label_;
};

// `{1,2'}{2}{1'}`
std::string to_string(const Diagram& d);
Diagram parse_diagram(int r, std::string_view text);

// x above y; returns the reduced diagram and the number of closed middle components.
std::pair<Diagram, int> multiply(const Diagram& x, const Diagram& y);

class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(int r) : r_(r) {}
    AlgebraElement(const Diagram& d, Poly coeff = 1);

    static AlgebraElement identity(int r) { return AlgebraElement(Diagram::identity(r)); }
    static AlgebraElement zero(int r) { return AlgebraElement(r); }

    int rank() const { return r_; }
    const std::map<Diagram, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const Diagram& d) const;

    void add_term(const Diagram& d, const Poly& coeff);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Poly& p, const AlgebraElement& a);
    AlgebraElement star() const;
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    int r_ = 0;
    std::map<Diagram, Poly> terms_;
};

// `poly * diagram` lines
std::string to_string(const AlgebraElement& a);

enum class Generator { s, p, p_half };

// s: transposition of k and k+1; p: isolates k and k'; p_half: the block
// {k, k+1, k', (k+1)'}.
Diagram generator(Generator kind, int k, int r);

// e_k^{(l)} = p_{k-l+1} ... p_k
AlgebraElement e_integral(int k, int l, int r);
// e_{k+1/2}^{(l)} = p_{k-l+3/2} ... p_{k+1/2}
AlgebraElement e_half(int k, int l, int r);
// s_{l,k} = s_l ... s_{k-1} for l < k, its inverse for l > k
AlgebraElement s_range(int l, int k, int r);
// sum_{i=0}^{shape_row - 1} s_{[shape]_row - i, [shape]_row}; 1 for row 0
AlgebraElement m_sum(const Partition& shape, int row, int r);

enum class Direction { up, down };
enum class Half { first, second };

// Branching coefficient for the step t(k) -> t(k+1/2) (first half) or
// t(k+1/2) -> t(k+1) (second half), 0 <= k < s, inside P_r(n).
AlgebraElement branching_coeff(const KroneckerTableau& t, int k, Direction dir, Half half, int r);

// For t starting at the empty partition: u_t puts later steps on the left,
// d_t puts earlier steps on the left.
AlgebraElement murphy_u(const KroneckerTableau& t);
AlgebraElement murphy_d(const KroneckerTableau& t);

// (u_t) s_{k,k+1} == u_{t swapped} + u_{e_k(t)} - u_{e_k(t swapped)}
bool verify_thm33(const KroneckerTableau& t, int k);

// a(1)^{lambda_1} a(2)^{lambda_2} ... from the empty partition
KroneckerTableau maximal_tableau(const Partition& lambda);
KroneckerTableau concatenate(const KroneckerTableau& first, const KroneckerTableau& second);

// Blocks of d meeting both {r-s+1..r} and {1'..r', 1..r-s}.
int cross_blocks(const Diagram& d, int s);

// Every diagram of u_{t^lambda o t} has at most s-1 cross blocks.
bool dvir_diagram_check(const Partition& lambda, const Partition& nu, int s, const KroneckerTableau& t);

} // namespace kron
