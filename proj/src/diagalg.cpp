#include "kron/diagalg.hpp"

#include "kron/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kron {

namespace {

long long checked_add(long long a, long long b)
{
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("polynomial coefficient overflow");
    return out;
}

long long checked_mul(long long a, long long b)
{
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("polynomial coefficient overflow");
    return out;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x)
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

} // namespace

Poly::Poly(long long constant)
{
    if (constant != 0)
        c_.push_back(constant);
}

Poly Poly::monomial(long long coeff, int degree)
{
    Poly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
        p.c_.back() = coeff;
    }
    return p;
}

long long Poly::evaluate(long long n) const
{
    long long v = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        v = checked_add(checked_mul(v, n), c_[i]);
    return v;
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = checked_add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    return *this += -o;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& x : p.c_)
        x = checked_mul(x, -1);
    return p;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly p;
    if (a.is_zero() || b.is_zero())
        return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            p.c_[i + j] = checked_add(p.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    p.trim();
    return p;
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        long long x = c[i];
        if (x == 0)
            continue;
        bool first = out.empty();
        if (!first)
            out += x < 0 ? " - " : " + ";
        else if (x < 0)
            out += "-";
        long long mag = x < 0 ? -x : x;
        if (mag != 1 || i == 0)
            out += std::to_string(mag);
        if (i >= 1)
            out += "n";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

Diagram Diagram::from_labels(int r, const std::vector<int>& labels)
{
    if (static_cast<int>(labels.size()) != 2 * r)
        throw rank_mismatch("label vector does not have 2r entries");
    Diagram d;
    d.r_ = r;
    d.label_.resize(labels.size());
    std::vector<int> remap;
    std::vector<int> seen_label;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find(seen_label.begin(), seen_label.end(), labels[i]);
        std::size_t id = static_cast<std::size_t>(it - seen_label.begin());
        if (it == seen_label.end())
            seen_label.push_back(labels[i]);
        d.label_[i] = static_cast<std::uint8_t>(id);
    }
    return d;
}

Diagram::Diagram(int r, const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> labels(static_cast<std::size_t>(2 * r), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("empty block");
        for (int code : blocks[b]) {
            if (code < 0 || code >= 2 * r || labels[static_cast<std::size_t>(code)] != -1)
                throw std::invalid_argument("blocks do not partition the 2r points");
            labels[static_cast<std::size_t>(code)] = static_cast<int>(b);
        }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        throw std::invalid_argument("blocks do not cover the 2r points");
    *this = from_labels(r, labels);
}

Diagram Diagram::identity(int r)
{
    std::vector<int> labels(static_cast<std::size_t>(2 * r));
    for (int i = 0; i < r; ++i) {
        labels[static_cast<std::size_t>(i)] = i;
        labels[static_cast<std::size_t>(r + i)] = i;
    }
    return from_labels(r, labels);
}

std::vector<std::vector<int>> Diagram::blocks() const
{
    int count = label_.empty() ? 0 : *std::max_element(label_.begin(), label_.end()) + 1;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < label_.size(); ++i)
        out[label_[i]].push_back(static_cast<int>(i));
    return out;
}

Diagram Diagram::star() const
{
    std::vector<int> labels(label_.size());
    for (int i = 0; i < r_; ++i) {
        labels[static_cast<std::size_t>(i)] = label_[static_cast<std::size_t>(r_ + i)];
        labels[static_cast<std::size_t>(r_ + i)] = label_[static_cast<std::size_t>(i)];
    }
    return from_labels(r_, labels);
}

std::string to_string(const Diagram& d)
{
    std::string out;
    int r = d.rank();
    for (const auto& block : d.blocks()) {
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ",";
            int code = block[i];
            out += code < r ? std::to_string(code + 1) : std::to_string(code - r + 1) + "'";
        }
        out += "}";
    }
    return out;
}

Diagram parse_diagram(int r, std::string_view text)
{
    std::vector<std::vector<int>> blocks;
    std::size_t i = 0;
    auto bad = [&] { return parse_error("bad diagram '" + std::string(text) + "'"); };
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        if (text[i] != '{')
            throw bad();
        ++i;
        std::vector<int> block;
        while (true) {
            int v = 0;
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9')
                v = 10 * v + (text[i++] - '0');
            if (i == start || v < 1 || v > r)
                throw bad();
            bool barred = i < text.size() && text[i] == '\'';
            if (barred)
                ++i;
            block.push_back(barred ? Diagram::north(r, v) : Diagram::south(v));
            if (i >= text.size())
                throw bad();
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == '}') {
                ++i;
                break;
            }
            throw bad();
        }
        blocks.push_back(std::move(block));
    }
    try {
        return Diagram(r, blocks);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::pair<Diagram, int> multiply(const Diagram& x, const Diagram& y)
{
    if (x.rank() != y.rank())
        throw rank_mismatch("multiplying diagrams of different rank");
    const int r = x.rank();
    // nodes: top 0..r-1, middle r..2r-1, bottom 2r..3r-1
    UnionFind uf(3 * r);
    std::vector<int> first(static_cast<std::size_t>(2 * r + 1), -1);
    for (int i = 0; i < 2 * r; ++i) {
        int node = i < r ? r + i : i - r; // x: south -> middle, north -> top
        auto& f = first[static_cast<std::size_t>(x.block_of(i))];
        if (f < 0)
            f = node;
        else
            uf.unite(node, f);
    }
    std::fill(first.begin(), first.end(), -1);
    for (int i = 0; i < 2 * r; ++i) {
        int node = i < r ? 2 * r + i : i; // y: south -> bottom, north -> middle
        auto& f = first[static_cast<std::size_t>(y.block_of(i))];
        if (f < 0)
            f = node;
        else
            uf.unite(node, f);
    }
    std::vector<int> labels(static_cast<std::size_t>(2 * r));
    std::vector<bool> outer_root(static_cast<std::size_t>(3 * r), false);
    for (int i = 0; i < r; ++i) {
        labels[static_cast<std::size_t>(i)] = uf.find(2 * r + i);
        labels[static_cast<std::size_t>(r + i)] = uf.find(i);
        outer_root[static_cast<std::size_t>(uf.find(2 * r + i))] = true;
        outer_root[static_cast<std::size_t>(uf.find(i))] = true;
    }
    int loops = 0;
    std::vector<bool> counted(static_cast<std::size_t>(3 * r), false);
    for (int m = r; m < 2 * r; ++m) {
        int root = uf.find(m);
        if (!outer_root[static_cast<std::size_t>(root)] && !counted[static_cast<std::size_t>(root)]) {
            counted[static_cast<std::size_t>(root)] = true;
            ++loops;
        }
    }
    return {Diagram::from_labels(r, labels), loops};
}

AlgebraElement::AlgebraElement(const Diagram& d, Poly coeff) : r_(d.rank())
{
    add_term(d, coeff);
}

Poly AlgebraElement::coeff(const Diagram& d) const
{
    auto it = terms_.find(d);
    return it == terms_.end() ? Poly() : it->second;
}

void AlgebraElement::add_term(const Diagram& d, const Poly& coeff)
{
    if (d.rank() != r_)
        throw rank_mismatch("adding a diagram of different rank");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    if (o.r_ != r_)
        throw rank_mismatch("adding elements of different rank");
    for (const auto& [d, c] : o.terms_)
        add_term(d, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    if (o.r_ != r_)
        throw rank_mismatch("subtracting elements of different rank");
    for (const auto& [d, c] : o.terms_)
        add_term(d, -c);
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.r_ != b.r_)
        throw rank_mismatch("multiplying elements of different rank");
    AlgebraElement out(a.r_);
    for (const auto& [x, cx] : a.terms_) {
        for (const auto& [y, cy] : b.terms_) {
            auto [d, loops] = multiply(x, y);
            out.add_term(d, cx * cy * Poly::monomial(1, loops));
        }
    }
    return out;
}

AlgebraElement operator*(const Poly& p, const AlgebraElement& a)
{
    AlgebraElement out(a.r_);
    for (const auto& [d, c] : a.terms_)
        out.add_term(d, p * c);
    return out;
}

AlgebraElement AlgebraElement::star() const
{
    AlgebraElement out(r_);
    for (const auto& [d, c] : terms_)
        out.add_term(d.star(), c);
    return out;
}

std::string to_string(const AlgebraElement& a)
{
    if (a.is_zero())
        return "0\n";
    std::string out;
    for (const auto& [d, c] : a.terms())
        out += to_string(c) + " * " + to_string(d) + "\n";
    return out;
}

Diagram generator(Generator kind, int k, int r)
{
    int hi = kind == Generator::p ? r : r - 1;
    if (k < 1 || k > hi)
        throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." + std::to_string(hi));
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= r; ++i) {
        if (i == k || (i == k + 1 && kind != Generator::p))
            continue;
        blocks.push_back({Diagram::south(i), Diagram::north(r, i)});
    }
    switch (kind) {
    case Generator::s:
        blocks.push_back({Diagram::south(k), Diagram::north(r, k + 1)});
        blocks.push_back({Diagram::south(k + 1), Diagram::north(r, k)});
        break;
    case Generator::p:
        blocks.push_back({Diagram::south(k)});
        blocks.push_back({Diagram::north(r, k)});
        break;
    case Generator::p_half:
        blocks.push_back({Diagram::south(k), Diagram::south(k + 1), Diagram::north(r, k), Diagram::north(r, k + 1)});
        break;
    }
    return Diagram(r, blocks);
}

AlgebraElement e_integral(int k, int l, int r)
{
    if (k == 0 || l == 0)
        return AlgebraElement::identity(r);
    if (l < 0 || l > k || k > r)
        throw std::out_of_range("e_k^(l) needs 0 <= l <= k <= r");
    AlgebraElement out = AlgebraElement::identity(r);
    for (int j = k - l + 1; j <= k; ++j)
        out = out * AlgebraElement(generator(Generator::p, j, r));
    return out;
}

AlgebraElement e_half(int k, int l, int r)
{
    if (k == 0 || l == 0)
        return AlgebraElement::identity(r);
    if (l < 0 || l > k || k + 1 > r)
        throw std::out_of_range("e_{k+1/2}^(l) needs 0 <= l <= k < r");
    AlgebraElement out = AlgebraElement::identity(r);
    for (int j = k - l + 1; j <= k; ++j)
        out = out * AlgebraElement(generator(Generator::p_half, j, r));
    return out;
}

AlgebraElement s_range(int l, int k, int r)
{
    if (l < 0 || k < 0)
        return AlgebraElement::zero(r);
    if (l == 0 || k == 0 || l == k)
        return AlgebraElement::identity(r);
    if (l > r || k > r)
        throw std::out_of_range("s_{l,k} index beyond r");
    AlgebraElement out = AlgebraElement::identity(r);
    if (l < k) {
        for (int j = l; j <= k - 1; ++j)
            out = out * AlgebraElement(generator(Generator::s, j, r));
    } else {
        for (int j = l - 1; j >= k; --j)
            out = out * AlgebraElement(generator(Generator::s, j, r));
    }
    return out;
}

AlgebraElement m_sum(const Partition& shape, int row, int r)
{
    if (row == 0)
        return AlgebraElement::identity(r);
    int top = partial_sum(shape, row);
    AlgebraElement out(r);
    for (int i = 0; i < shape.part(row); ++i)
        out += s_range(top - i, top, r);
    return out;
}

AlgebraElement branching_coeff(const KroneckerTableau& t, int k, Direction dir, Half half, int r)
{
    if (k < 0 || k >= t.s())
        throw std::out_of_range("branching coefficient level outside the path");
    const Partition& lam = t.shape(k);
    const Partition& mu = t.half_shape(k + 1);
    const Partition& nu = t.shape(k + 1);
    int a = t.step(k + 1).remove;
    int b = t.step(k + 1).add;
    if (dir == Direction::up) {
        if (half == Half::first)
            return e_half(k, k - mu.size(), r) * s_range(lam.size(), partial_sum(lam, a), r);
        return e_integral(k + 1, k + 1 - nu.size(), r) * m_sum(nu, b, r) * s_range(partial_sum(nu, b), nu.size(), r);
    }
    if (half == Half::first)
        return e_integral(k, k - lam.size(), r) * m_sum(lam, a, r) * s_range(partial_sum(lam, a), lam.size(), r);
    return e_half(k, k - mu.size(), r) * s_range(nu.size(), partial_sum(nu, b), r);
}

AlgebraElement murphy_u(const KroneckerTableau& t)
{
    if (!t.start().empty())
        throw std::invalid_argument("Murphy elements need a path from the empty partition");
    int r = t.s();
    AlgebraElement acc = AlgebraElement::identity(r);
    for (int k = 0; k < r; ++k) {
        acc = branching_coeff(t, k, Direction::up, Half::first, r) * acc;
        acc = branching_coeff(t, k, Direction::up, Half::second, r) * acc;
    }
    return acc;
}

AlgebraElement murphy_d(const KroneckerTableau& t)
{
    if (!t.start().empty())
        throw std::invalid_argument("Murphy elements need a path from the empty partition");
    int r = t.s();
    AlgebraElement acc = AlgebraElement::identity(r);
    for (int k = 0; k < r; ++k) {
        acc = acc * branching_coeff(t, k, Direction::down, Half::first, r);
        acc = acc * branching_coeff(t, k, Direction::down, Half::second, r);
    }
    return acc;
}

bool verify_thm33(const KroneckerTableau& t, int k)
{
    auto swapped = swap_adjacent(t, k);
    if (!swapped)
        throw swap_undefined("the swap at " + std::to_string(k) + " does not exist");
    int r = t.s();
    AlgebraElement lhs = murphy_u(t) * AlgebraElement(generator(Generator::s, k, r));
    AlgebraElement rhs = murphy_u(*swapped);
    if (auto e = error_path(t, k))
        rhs += murphy_u(*e);
    if (auto e = error_path(*swapped, k))
        rhs -= murphy_u(*e);
    return lhs == rhs;
}

KroneckerTableau maximal_tableau(const Partition& lambda)
{
    std::vector<Step> steps;
    for (int i = 1; i <= lambda.length(); ++i)
        steps.insert(steps.end(), static_cast<std::size_t>(lambda.part(i)), a_step(i));
    return KroneckerTableau(Partition{}, steps);
}

KroneckerTableau concatenate(const KroneckerTableau& first, const KroneckerTableau& second)
{
    if (first.end() != second.start())
        throw shape_mismatch("paths do not meet");
    std::vector<Step> steps = first.steps();
    steps.insert(steps.end(), second.steps().begin(), second.steps().end());
    return KroneckerTableau(first.start(), steps);
}

int cross_blocks(const Diagram& d, int s)
{
    int r = d.rank();
    int count = 0;
    for (const auto& block : d.blocks()) {
        bool tail = false;
        bool rest = false;
        for (int code : block) {
            if (code >= r - s && code < r)
                tail = true;
            else
                rest = true;
        }
        if (tail && rest)
            ++count;
    }
    return count;
}

bool dvir_diagram_check(const Partition& lambda, const Partition& nu, int s, const KroneckerTableau& t)
{
    if (t.start() != lambda || t.end() != nu || t.s() != s)
        throw shape_mismatch("path does not belong to Std_s(nu \\ lambda)");
    if (!is_dvir(t))
        throw not_dvir("path is not in the Dvir radical");
    AlgebraElement u = murphy_u(concatenate(maximal_tableau(lambda), t));
    for (const auto& [d, c] : u.terms())
        if (cross_blocks(d, s) > s - 1)
            return false;
    return true;
}

} // namespace kron
