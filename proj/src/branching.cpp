#include "kron/branching.hpp"

#include "kron/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace kron {

namespace {

std::tuple<int, int, int> order_key(const Step& s)
{
    switch (s.kind()) {
    case Step::Kind::move_up:
        return {0, s.add, -s.remove};
    case Step::Kind::dummy:
        return {1, -s.remove, 0};
    case Step::Kind::move_down:
        break;
    }
    return {2, -s.remove, s.add};
}

std::optional<Partition> apply_remove(const Partition& p, int row)
{
    return row == 0 ? std::optional<Partition>(p) : remove_box(p, row);
}

std::optional<Partition> apply_add(const Partition& p, int row)
{
    return row == 0 ? std::optional<Partition>(p) : add_box(p, row);
}

int l1_distance(const Partition& a, const Partition& b)
{
    int len = std::max(a.length(), b.length());
    int d = 0;
    for (int i = 1; i <= len; ++i)
        d += std::abs(a.part(i) - b.part(i));
    return d;
}

// Removal budget per row for Std^0; row 0 is handled separately.
struct SearchLimits {
    bool forbid_d0 = false;
    bool limit_rows = false;
};

class StdSearch {
public:
    StdSearch(const Partition& lambda, const Partition& nu, int s, SearchLimits lim)
        : lambda_(lambda), nu_(nu), s_(s), lim_(lim)
    {
    }

    std::vector<KroneckerTableau> run()
    {
        if (s_ < 0)
            return {};
        removed_.assign(static_cast<std::size_t>(lambda_.length() + 2), 0);
        dfs(lambda_, 0);
        return std::move(out_);
    }

private:
    void dfs(const Partition& cur, int level)
    {
        int left = s_ - level;
        if (l1_distance(cur, nu_) > 2 * left)
            return;
        if (left == 0) {
            out_.push_back(KroneckerTableau(lambda_, path_));
            return;
        }
        std::vector<std::pair<Step, Partition>> moves;
        for (int i = 0; i <= cur.length(); ++i) {
            if (lim_.limit_rows && i > 0 && removed_count(i) >= lambda_.part(i))
                continue;
            auto half = apply_remove(cur, i);
            if (!half)
                continue;
            for (int j = 0; j <= half->length() + 1; ++j) {
                if (lim_.forbid_d0 && i == 0 && j == 0)
                    continue;
                auto next = apply_add(*half, j);
                if (next)
                    moves.push_back({Step{i, j}, std::move(*next)});
            }
        }
        std::sort(moves.begin(), moves.end(),
                  [](const auto& a, const auto& b) { return step_compare(a.first, b.first) < 0; });
        for (auto& [st, next] : moves) {
            path_.push_back(st);
            if (st.remove > 0)
                ++removed_count(st.remove);
            dfs(next, level + 1);
            if (st.remove > 0)
                --removed_count(st.remove);
            path_.pop_back();
        }
    }

    int& removed_count(int row)
    {
        if (static_cast<std::size_t>(row) >= removed_.size())
            removed_.resize(static_cast<std::size_t>(row) + 1, 0);
        return removed_[static_cast<std::size_t>(row)];
    }

    Partition lambda_;
    Partition nu_;
    int s_;
    SearchLimits lim_;
    std::vector<Step> path_;
    std::vector<int> removed_;
    std::vector<KroneckerTableau> out_;
};

} // namespace

std::strong_ordering step_compare(const Step& a, const Step& b)
{
    return order_key(a) <=> order_key(b);
}

std::string to_string(const Step& s)
{
    return "-" + std::to_string(s.remove) + "+" + std::to_string(s.add);
}

std::string step_name(const Step& s)
{
    if (s.remove == 0 && s.add > 0)
        return "a(" + std::to_string(s.add) + ")";
    if (s.add == 0 && s.remove > 0)
        return "r(" + std::to_string(s.remove) + ")";
    if (s.remove == s.add)
        return "d(" + std::to_string(s.remove) + ")";
    std::string arrow = s.remove > s.add ? "m↑" : "m↓";
    return arrow + "(" + std::to_string(s.remove) + "," + std::to_string(s.add) + ")";
}

Step parse_step(std::string_view text)
{
    auto bad = [&] { return parse_error("bad step '" + std::string(text) + "', expected -i+j"); };
    if (text.size() < 4 || text[0] != '-')
        throw bad();
    auto plus = text.find('+');
    if (plus == std::string_view::npos)
        throw bad();
    auto num = [&](std::string_view v) {
        if (v.empty())
            throw bad();
        int x = 0;
        for (char ch : v) {
            if (ch < '0' || ch > '9')
                throw bad();
            x = 10 * x + (ch - '0');
        }
        return x;
    };
    return Step{num(text.substr(1, plus - 1)), num(text.substr(plus + 1))};
}

std::vector<Partition> successors(const Partition& shape, Parity level_parity)
{
    std::vector<Partition> out{shape};
    if (level_parity == Parity::integral) {
        for (int i = 1; i <= shape.length(); ++i)
            if (auto p = remove_box(shape, i))
                out.push_back(*p);
    } else {
        for (int j = 1; j <= shape.length() + 1; ++j)
            if (auto p = add_box(shape, j))
                out.push_back(*p);
    }
    return out;
}

KroneckerTableau::KroneckerTableau(Partition start, std::vector<Step> steps)
    : start_(std::move(start)), steps_(std::move(steps))
{
    integral_.reserve(steps_.size() + 1);
    half_.reserve(steps_.size());
    integral_.push_back(start_);
    for (const Step& st : steps_) {
        auto half = apply_remove(integral_.back(), st.remove);
        if (!half)
            throw not_a_partition("step " + to_string(st) + " cannot remove from " + to_string(integral_.back()));
        auto next = apply_add(*half, st.add);
        if (!next)
            throw not_a_partition("step " + to_string(st) + " cannot add to " + to_string(*half));
        half_.push_back(std::move(*half));
        integral_.push_back(std::move(*next));
    }
}

std::optional<KroneckerTableau> make_tableau(const Partition& start, const std::vector<Step>& steps)
{
    Partition cur = start;
    for (const Step& st : steps) {
        auto half = apply_remove(cur, st.remove);
        if (!half)
            return std::nullopt;
        auto next = apply_add(*half, st.add);
        if (!next)
            return std::nullopt;
        cur = std::move(*next);
    }
    return KroneckerTableau(start, steps);
}

std::string to_string(const KroneckerTableau& t, bool with_shapes)
{
    std::string out;
    for (int k = 1; k <= t.s(); ++k) {
        if (k > 1)
            out += ' ';
        out += to_string(t.step(k));
        if (with_shapes)
            out += to_string(t.shape(k));
    }
    return out;
}

std::vector<KroneckerTableau> enumerate_std(const Partition& lambda, const Partition& nu, int s)
{
    return StdSearch(lambda, nu, s, {}).run();
}

std::vector<KroneckerTableau> enumerate_std0(const Partition& lambda, const Partition& nu, int s)
{
    return StdSearch(lambda, nu, s, {true, true}).run();
}

std::vector<KroneckerTableau> enumerate_std_plus(const Partition& lambda, const Partition& nu, int s)
{
    return StdSearch(lambda, nu, s, {false, true}).run();
}

std::optional<int> is_dvir(const KroneckerTableau& t)
{
    std::vector<int> removed(static_cast<std::size_t>(t.start().length() + t.s() + 2), 0);
    bool has_d0 = false;
    for (const Step& st : t.steps()) {
        if (st.remove == 0 && st.add == 0)
            has_d0 = true;
        if (st.remove > 0) {
            if (static_cast<std::size_t>(st.remove) >= removed.size())
                removed.resize(static_cast<std::size_t>(st.remove) + 1, 0);
            ++removed[static_cast<std::size_t>(st.remove)];
        }
    }
    if (has_d0)
        return 0;
    for (std::size_t i = 1; i < removed.size(); ++i)
        if (removed[i] > t.start().part(static_cast<int>(i)))
            return static_cast<int>(i);
    return std::nullopt;
}

std::optional<KroneckerTableau> swap_adjacent(const KroneckerTableau& t, int k)
{
    if (k < 1 || k > t.s() - 1)
        throw std::out_of_range("swap index " + std::to_string(k) + " outside 1.." + std::to_string(t.s() - 1));
    std::vector<Step> steps = t.steps();
    std::swap(steps[static_cast<std::size_t>(k - 1)], steps[static_cast<std::size_t>(k)]);
    return make_tableau(t.start(), steps);
}

std::optional<KroneckerTableau> error_path(const KroneckerTableau& t, int k)
{
    if (k < 1 || k > t.s())
        throw std::out_of_range("error path index " + std::to_string(k) + " outside 1.." + std::to_string(t.s()));
    if (k == t.s())
        return std::nullopt;
    int u = t.step(k).add;
    if (u == 0 || t.step(k + 1).remove != u)
        return std::nullopt;
    int L = t.half_shape(k).length() + 1;
    std::vector<Step> steps = t.steps();
    steps[static_cast<std::size_t>(k - 1)].add = L;
    steps[static_cast<std::size_t>(k)].remove = L;
    return make_tableau(t.start(), steps);
}

bool revalidate(const KroneckerTableau& t)
{
    auto valid = [](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < 0 || (i > 0 && v[i] > v[i - 1]))
                return false;
        return true;
    };
    std::vector<int> cur = t.start().parts();
    auto touch = [&](int row, int delta) {
        if (row == 0)
            return;
        if (static_cast<std::size_t>(row) > cur.size())
            cur.resize(static_cast<std::size_t>(row), 0);
        cur[static_cast<std::size_t>(row - 1)] += delta;
    };
    for (int k = 1; k <= t.s(); ++k) {
        touch(t.step(k).remove, -1);
        if (!valid(cur))
            return false;
        if (Partition(cur) != t.half_shape(k))
            return false;
        touch(t.step(k).add, +1);
        if (!valid(cur))
            return false;
        if (Partition(cur) != t.shape(k))
            return false;
    }
    return true;
}

} // namespace kron
