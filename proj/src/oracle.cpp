#include "kron/oracle.hpp"

#include "kron/errors.hpp"
#include "kron/tableaux.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace kron {

namespace {

constexpr int max_character_n = 56;
constexpr std::size_t memo_limit = 1u << 22;

thread_local std::unordered_map<std::string, char_value> character_memo;

// Classes of S_n with their sizes, and full character vectors of the shapes
// seen so far at this n.
struct CharacterTable {
    std::vector<Partition> classes;
    std::vector<bigint> sizes;
    std::vector<char_value> small_sizes;
    std::vector<bool> size_fits;
    std::map<Partition, std::vector<char_value>> rows;
};

thread_local std::map<int, CharacterTable> tables;

bigint to_bigint(char_value v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    bigint hi = static_cast<unsigned long long>(u >> 64);
    bigint out = (hi << 64) + static_cast<unsigned long long>(u);
    return neg ? bigint(-out) : out;
}

// only for non-negative values below 2^126
char_value to_int128(const bigint& v)
{
    bigint mask = (bigint(1) << 64) - 1;
    auto lo = static_cast<unsigned long long>(v & mask);
    auto hi = static_cast<unsigned long long>(v >> 64);
    return static_cast<char_value>((static_cast<unsigned __int128>(hi) << 64) | lo);
}

// beta[i] = lambda_{i+1} + (len - 1 - i), strictly decreasing
std::vector<int> beta_set(const std::vector<int>& parts)
{
    std::vector<int> beta(parts.size());
    int len = static_cast<int>(parts.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
    return beta;
}

std::vector<int> from_beta(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts(beta.size());
    for (int i = 0; i < len; ++i)
        parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return parts;
}

std::string memo_key(const std::vector<int>& parts, const std::vector<int>& rho, std::size_t from)
{
    std::string key;
    key.reserve(parts.size() + rho.size() - from + 1);
    for (int p : parts)
        key.push_back(static_cast<char>(p));
    key.push_back(static_cast<char>(0));
    for (std::size_t i = from; i < rho.size(); ++i)
        key.push_back(static_cast<char>(rho[i]));
    return key;
}

char_value character(const std::vector<int>& parts, const std::vector<int>& rho, std::size_t from)
{
    if (from == rho.size())
        return parts.empty() ? 1 : 0;
    std::string key = memo_key(parts, rho, from);
    if (auto it = character_memo.find(key); it != character_memo.end())
        return it->second;

    int h = rho[from];
    std::vector<int> beta = beta_set(parts);
    char_value total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - h;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++between;
        std::vector<int> moved = beta;
        moved[i] = target;
        char_value sub = character(from_beta(moved), rho, from + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    if (character_memo.size() > memo_limit)
        character_memo.clear();
    character_memo.emplace(std::move(key), total);
    return total;
}

} // namespace

bigint factorial(int n)
{
    bigint f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

bigint class_size(const Partition& rho)
{
    std::map<int, int> mult;
    for (int p : rho.parts())
        ++mult[p];
    bigint z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i)
            z *= part;
        z *= factorial(m);
    }
    return factorial(rho.size()) / z;
}

char_value mn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw size_mismatch("character needs |lambda| = |rho|");
    if (lambda.size() > max_character_n)
        throw budget_exceeded("character values are exact only up to n = " + std::to_string(max_character_n));
    return character(lambda.parts(), rho.parts(), 0);
}

void clear_character_memo()
{
    character_memo.clear();
    tables.clear();
}

namespace {

CharacterTable& table_for(int n)
{
    auto it = tables.find(n);
    if (it != tables.end())
        return it->second;
    if (tables.size() > 64)
        tables.clear();
    CharacterTable t;
    t.classes = partitions_of(n);
    for (const Partition& rho : t.classes) {
        bigint c = class_size(rho);
        bool fits = c < (bigint(1) << 100);
        t.sizes.push_back(c);
        t.size_fits.push_back(fits);
        t.small_sizes.push_back(fits ? to_int128(c) : 0);
    }
    return tables.emplace(n, std::move(t)).first->second;
}

const std::vector<char_value>& row_for(CharacterTable& t, const Partition& lambda)
{
    auto it = t.rows.find(lambda);
    if (it != t.rows.end())
        return it->second;
    std::vector<char_value> row;
    row.reserve(t.classes.size());
    for (const Partition& rho : t.classes)
        row.push_back(mn_character(lambda, rho));
    return t.rows.emplace(lambda, std::move(row)).first->second;
}

} // namespace

bigint kronecker(const Partition& lambda, const Partition& nu, const Partition& mu)
{
    int n = lambda.size();
    if (nu.size() != n || mu.size() != n)
        throw size_mismatch("kronecker needs three partitions of the same size");
    CharacterTable& t = table_for(n);
    const auto& ra = row_for(t, lambda);
    const auto& rb = row_for(t, nu);
    const auto& rc = row_for(t, mu);
    bigint sum = 0;
    char_value fast = 0;
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        char_value a = ra[i], b = rb[i], c = rc[i];
        if (a == 0 || b == 0 || c == 0)
            continue;
        char_value term = 0;
        char_value next = 0;
        bool ok = t.size_fits[i] && !__builtin_mul_overflow(a, b, &term) && !__builtin_mul_overflow(term, c, &term) &&
                  !__builtin_mul_overflow(term, t.small_sizes[i], &term) && !__builtin_add_overflow(fast, term, &next);
        if (ok)
            fast = next;
        else
            sum += t.sizes[i] * to_bigint(a) * to_bigint(b) * to_bigint(c);
    }
    sum += to_bigint(fast);
    bigint nf = factorial(n);
    if (sum % nf != 0)
        throw non_integral("character sum is not divisible by n!");
    bigint g = sum / nf;
    if (g < 0)
        throw non_integral("negative Kronecker coefficient");
    return g;
}

StableResult stable_kronecker_series(const Partition& lambda, const Partition& nu, const Partition& mu,
                                     std::optional<int> n_cap)
{
    int n0 = std::max({lambda.size() + lambda.part(1), nu.size() + nu.part(1), mu.size() + mu.part(1)});
    int floor_n = lambda.size() + nu.size() + mu.size();
    int cap = n_cap.value_or(n0 + floor_n + 8);
    StableResult res;
    res.first_n = n0;
    for (int n = n0; n <= cap; ++n) {
        res.series.push_back(kronecker(pad(lambda, n), pad(nu, n), pad(mu, n)));
        std::size_t last = res.series.size() - 1;
        if (last >= 1 && n - 1 >= floor_n && res.series[last] == res.series[last - 1]) {
            res.value = res.series[last];
            std::size_t on = last;
            while (on > 0 && res.series[on - 1] == res.value)
                --on;
            res.onset_n = n0 + static_cast<int>(on);
            return res;
        }
    }
    res.capped = true;
    if (!res.series.empty())
        res.value = res.series.back();
    res.onset_n = -1;
    return res;
}

StableResult stable_kronecker_oracle(const Partition& lambda, const Partition& nu, const Partition& mu,
                                     std::optional<int> n_cap)
{
    StableResult res = stable_kronecker_series(lambda, nu, mu, n_cap);
    if (res.capped)
        throw budget_exceeded("no two consecutive agreeing values up to the n cap");
    return res;
}

std::vector<Partition> p_set(int n, const Partition& mu)
{
    std::vector<Partition> out;
    int s = mu.size();
    if (n < s)
        return out;
    int len = mu.length();
    std::vector<int> tail(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == len) {
            int first = n - used;
            if (first < mu.part(1))
                return;
            std::vector<int> v{first};
            v.insert(v.end(), tail.begin(), tail.end());
            out.emplace_back(std::move(v));
            return;
        }
        // tail[i] is beta_{i+2}, between mu_{i+2} and mu_{i+1}
        for (int b = mu.part(i + 1); b >= mu.part(i + 2); --b) {
            tail[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, used + b);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bigint dvir_step(const Partition& lambda_n, const Partition& nu_n, const Partition& mu_n)
{
    int n = lambda_n.size();
    if (nu_n.size() != n || mu_n.size() != n)
        throw size_mismatch("dvir_step needs three partitions of the same size");
    Partition mu = strip_first(mu_n);
    int s = mu.size();
    Partition common = intersect(lambda_n, nu_n);
    auto small = partitions_of(s);

    bigint skew_terms = 0;
    for (const Partition& alpha : partitions_of(n - s)) {
        if (!contains(common, alpha))
            continue;
        for (const Partition& tau : small) {
            bigint c1 = classical_lr(alpha, lambda_n, tau);
            if (c1 == 0)
                continue;
            for (const Partition& sigma : small) {
                bigint c2 = classical_lr(alpha, nu_n, sigma);
                if (c2 == 0)
                    continue;
                skew_terms += c1 * c2 * kronecker(tau, sigma, mu);
            }
        }
    }
    bigint higher = 0;
    for (const Partition& beta : p_set(n, mu))
        if (beta != mu_n)
            higher += kronecker(lambda_n, nu_n, beta);
    return skew_terms - higher;
}

} // namespace kron
