#include "kron/partitions.hpp"

#include "kron/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace kron {

namespace {

std::vector<int> parse_ints(std::string_view text)
{
    std::string_view s = text;
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
            v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
            v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
        char close = s.front() == '[' ? ']' : ')';
        if (s.back() != close)
            throw parse_error("unbalanced brackets in '" + std::string(text) + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<int> out;
    if (s.empty())
        return out;
    while (true) {
        auto comma = s.find(',');
        std::string_view tok = trim(s.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw parse_error("bad integer '" + std::string(tok) + "' in '" + std::string(text) + "'");
        if (value < 0)
            throw parse_error("negative part in '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        s = s.substr(comma + 1);
    }
    return out;
}

void partitions_rec(int k, int max_part, int len_left, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (k == 0) {
        out.emplace_back(cur);
        return;
    }
    if (len_left == 0)
        return;
    for (int p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(k - p, p, len_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw not_a_partition("not a partition: " + to_string(Composition(parts_)));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::vector<int> p) : parts(std::move(p))
{
    for (int x : parts)
        if (x < 0)
            throw not_a_partition("negative part in composition");
}

int Composition::size() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Composition::is_partition() const
{
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            return false;
    return true;
}

std::string to_string(const Composition& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(c.parts[i]);
    }
    return s + ")";
}

std::string to_string(const Partition& p)
{
    return to_string(Composition(p));
}

Partition parse_partition(std::string_view text)
{
    auto v = parse_ints(text);
    if (v.size() == 1 && v[0] == 0)
        return {};
    try {
        return Partition(std::move(v));
    } catch (const not_a_partition&) {
        throw parse_error("not a partition: '" + std::string(text) + "'");
    }
}

Composition parse_composition(std::string_view text)
{
    auto v = parse_ints(text);
    if (v.size() == 1 && v[0] == 0)
        return {};
    return Composition(std::move(v));
}

int partial_sum(const Partition& lambda, int a)
{
    int s = 0;
    for (int i = 1; i <= std::min(a, lambda.length()); ++i)
        s += lambda.part(i);
    return s;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        return lambda.size() < mu.size();
    int len = std::max(lambda.length(), mu.length());
    for (int a = 1; a <= len; ++a)
        if (partial_sum(lambda, a) < partial_sum(mu, a))
            return false;
    return true;
}

Partition pad(const Partition& lambda, int n)
{
    int first = n - lambda.size();
    if (first < lambda.part(1))
        throw not_a_partition("pad: " + std::to_string(n) + " - |" + to_string(lambda) + "| is below the first part");
    std::vector<int> v{first};
    v.insert(v.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(v));
}

Partition strip_first(const Partition& lambda)
{
    if (lambda.empty())
        return {};
    return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

Partition intersect(const Partition& lambda, const Partition& nu)
{
    std::vector<int> v;
    int len = std::min(lambda.length(), nu.length());
    for (int i = 1; i <= len; ++i)
        v.push_back(std::min(lambda.part(i), nu.part(i)));
    return Partition(std::move(v));
}

std::pair<int, int> skew_diff_size(const Partition& lambda, const Partition& nu)
{
    int common = intersect(lambda, nu).size();
    return {lambda.size() - common, nu.size() - common};
}

bool is_horizontal(const Partition& outer, const Partition& inner)
{
    for (int i = 2; i <= outer.length(); ++i)
        if (outer.part(i) > inner.part(i) && inner.part(i - 1) < outer.part(i))
            return false;
    return true;
}

bool is_horizontal(const SkewShape& shape)
{
    return is_horizontal(shape.outer, shape.inner);
}

int minmax(const Partition& lambda, const Partition& nu)
{
    int len = std::max(lambda.length(), nu.length());
    if (len < 2)
        throw undefined_value("minmax needs a partition with at least two rows");
    int best = 0;
    for (int i = 2; i <= len; ++i) {
        int v = std::min(lambda.part(i - 1), nu.part(i - 1)) - std::max(lambda.part(i), nu.part(i));
        best = (i == 2) ? v : std::min(best, v);
    }
    return best;
}

bool is_copieri(const Partition& lambda, const Partition& nu, int s)
{
    if (s == 1)
        return true;
    if (s < 1)
        return false;
    if (std::max(lambda.length(), nu.length()) < 2)
        return true;
    auto [a, b] = skew_diff_size(lambda, nu);
    return s <= std::max(a, b) + minmax(lambda, nu);
}

bool is_maximal_depth(const Partition& lambda, const Partition& nu, int s)
{
    return contains(nu, lambda) && nu.size() == lambda.size() + s;
}

bool within_murnaghan_bounds(const Partition& lambda, const Partition& nu, int s)
{
    auto [a, b] = skew_diff_size(lambda, nu);
    return std::max(a, b) <= s && s <= lambda.size() + nu.size();
}

std::vector<Partition> partitions_of(int k, std::optional<int> max_len)
{
    std::vector<Partition> out;
    if (k < 0)
        return out;
    std::vector<int> cur;
    partitions_rec(k, k, max_len.value_or(k), cur, out);
    return out;
}

std::optional<Partition> remove_box(const Partition& p, int row)
{
    if (row < 1 || row > p.length() || p.part(row) <= p.part(row + 1))
        return std::nullopt;
    std::vector<int> v = p.parts();
    --v[static_cast<std::size_t>(row - 1)];
    return Partition(std::move(v));
}

std::optional<Partition> add_box(const Partition& p, int row)
{
    if (row < 1 || row > p.length() + 1 || (row > 1 && p.part(row - 1) <= p.part(row)))
        return std::nullopt;
    std::vector<int> v = p.parts();
    if (row == p.length() + 1)
        v.push_back(1);
    else
        ++v[static_cast<std::size_t>(row - 1)];
    return Partition(std::move(v));
}

} // namespace kron
