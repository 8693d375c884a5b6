#include "kron/tableaux.hpp"

#include "kron/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace kron {

namespace {

std::string step_key(const KroneckerTableau& t)
{
    std::string key;
    key.reserve(2 * static_cast<std::size_t>(t.s()));
    for (const Step& st : t.steps()) {
        key.push_back(static_cast<char>(st.remove));
        key.push_back(static_cast<char>(st.add));
    }
    return key;
}

std::vector<int> boundaries(const Composition& mu)
{
    std::vector<int> out{0};
    for (int p : mu.parts)
        out.push_back(out.back() + p);
    return out;
}

} // namespace

std::vector<Step> ReadingWord::steps() const
{
    std::vector<Step> out;
    for (const auto& col : columns)
        out.push_back(col.first);
    return out;
}

std::vector<int> ReadingWord::frames() const
{
    std::vector<int> out;
    for (const auto& col : columns)
        out.push_back(col.second);
    return out;
}

std::vector<int> frames_of(const Composition& mu)
{
    std::vector<int> out;
    for (int c = 1; c <= mu.length(); ++c)
        out.insert(out.end(), static_cast<std::size_t>(mu.part(c)), c);
    return out;
}

std::vector<SemistandardClass> mu_classes(const Partition& lambda, const Partition& nu, const Composition& mu)
{
    return mu_classes(enumerate_std0(lambda, nu, mu.size()), mu);
}

std::vector<SemistandardClass> mu_classes(const std::vector<KroneckerTableau>& std0, const Composition& mu)
{
    std::vector<SemistandardClass> out;
    if (std0.empty())
        return out;
    const int s = std0.front().s();
    if (mu.size() != s)
        throw size_mismatch("weight " + to_string(mu) + " does not have size " + std::to_string(s));

    std::vector<bool> allowed(static_cast<std::size_t>(std::max(s, 1)), true);
    for (int b : boundaries(mu))
        if (b >= 1 && b <= s - 1)
            allowed[static_cast<std::size_t>(b)] = false;

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(std0.size() * 2);
    for (std::size_t i = 0; i < std0.size(); ++i)
        index.emplace(step_key(std0[i]), i);

    std::vector<int> comp(std0.size(), -1);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t seed = 0; seed < std0.size(); ++seed) {
        if (comp[seed] >= 0)
            continue;
        int id = static_cast<int>(groups.size());
        groups.emplace_back();
        std::deque<std::size_t> queue{seed};
        comp[seed] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            groups.back().push_back(cur);
            for (int k = 1; k <= s - 1; ++k) {
                if (!allowed[static_cast<std::size_t>(k)])
                    continue;
                auto swapped = swap_adjacent(std0[cur], k);
                if (!swapped)
                    continue;
                auto it = index.find(step_key(*swapped));
                if (it == index.end() || comp[it->second] >= 0)
                    continue;
                comp[it->second] = id;
                queue.push_back(it->second);
            }
        }
    }

    auto bounds = boundaries(mu);
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        SemistandardClass cls;
        cls.weight = mu;
        for (std::size_t i : g)
            cls.members.push_back(std0[i]);
        for (int b : bounds)
            cls.boundary_shapes.push_back(cls.members.front().shape(b));
        out.push_back(std::move(cls));
    }
    return out;
}

bool is_semistandard(const SemistandardClass& cls)
{
    const auto& b = cls.boundary_shapes;
    for (std::size_t c = 1; c < b.size(); ++c) {
        Partition common = intersect(b[c - 1], b[c]);
        if (!is_horizontal(b[c], common) || !is_horizontal(b[c - 1], common))
            return false;
    }
    return true;
}

ReadingWord reading_word(const KroneckerTableau& t, const Composition& mu)
{
    auto frames = frames_of(mu);
    if (static_cast<int>(frames.size()) != t.s())
        throw size_mismatch("weight " + to_string(mu) + " does not match path length");
    ReadingWord w;
    for (int k = 1; k <= t.s(); ++k)
        w.columns.push_back({t.step(k), frames[static_cast<std::size_t>(k - 1)]});
    std::stable_sort(w.columns.begin(), w.columns.end(), [](const auto& x, const auto& y) {
        auto ord = step_compare(x.first, y.first);
        if (ord != 0)
            return ord < 0;
        return x.second > y.second;
    });
    return w;
}

ReadingWord reading_word(const SemistandardClass& cls)
{
    if (cls.members.empty())
        throw std::invalid_argument("reading word of an empty class");
    return reading_word(cls.members.front(), cls.weight);
}

std::vector<bool> good_terms(const std::vector<int>& word)
{
    std::vector<bool> good(word.size(), false);
    std::map<int, int> good_count;
    for (std::size_t i = 0; i < word.size(); ++i) {
        int v = word[i];
        bool g = v == 1 || good_count[v - 1] > good_count[v];
        good[i] = g;
        if (g)
            ++good_count[v];
    }
    return good;
}

bool is_lattice(const std::vector<int>& word)
{
    auto good = good_terms(word);
    return std::all_of(good.begin(), good.end(), [](bool b) { return b; });
}

ClassCounts count_classes(const std::vector<SemistandardClass>& classes)
{
    ClassCounts c;
    for (const auto& cls : classes) {
        if (!is_semistandard(cls))
            continue;
        ++c.sstd;
        if (is_lattice(reading_word(cls).frames()))
            ++c.latt;
    }
    return c;
}

bigint count_sstd(const Partition& lambda, const Partition& nu, const Composition& mu)
{
    return count_classes(mu_classes(lambda, nu, mu)).sstd;
}

bigint count_latticed(const Partition& lambda, const Partition& nu, const Partition& mu)
{
    return count_classes(mu_classes(lambda, nu, Composition(mu))).latt;
}

bool tableau_rule_applies(const Partition& lambda, const Partition& nu, int s)
{
    return is_copieri(lambda, nu, s) || is_maximal_depth(lambda, nu, s);
}

bigint stable_kronecker(const Partition& lambda, const Partition& nu, const Partition& mu)
{
    int s = mu.size();
    if (!within_murnaghan_bounds(lambda, nu, s))
        return 0;
    if (!tableau_rule_applies(lambda, nu, s))
        throw not_applicable("(" + to_string(lambda) + ", " + to_string(nu) + ", " + std::to_string(s) +
                             ") is neither co-Pieri nor of maximal depth");
    return count_latticed(lambda, nu, mu);
}

namespace {

// Fills the skew shape in reading order (rows top to bottom, right to left),
// keeping the word read so far a lattice word.
class LrFiller {
public:
    LrFiller(const Partition& inner, const Partition& outer, const Partition& weight)
        : inner_(inner), outer_(outer), weight_(weight)
    {
        rows_ = outer.length();
        fill_.assign(static_cast<std::size_t>(rows_ + 1), std::vector<int>(static_cast<std::size_t>(outer.part(1) + 2), 0));
        used_.assign(static_cast<std::size_t>(weight.length() + 2), 0);
    }

    bigint run()
    {
        count_ = 0;
        next(1, outer_.part(1));
        return count_;
    }

private:
    void next(int row, int col)
    {
        while (row <= rows_ && col <= inner_.part(row)) {
            ++row;
            col = outer_.part(row);
        }
        if (row > rows_) {
            ++count_;
            return;
        }
        int hi = weight_.length();
        if (col < outer_.part(row))
            hi = std::min(hi, at(row, col + 1));
        int lo = 1;
        if (row > 1 && col > inner_.part(row - 1))
            lo = at(row - 1, col) + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used_[static_cast<std::size_t>(v)] >= weight_.part(v))
                continue;
            if (v > 1 && used_[static_cast<std::size_t>(v)] + 1 > used_[static_cast<std::size_t>(v - 1)])
                continue;
            ++used_[static_cast<std::size_t>(v)];
            at(row, col) = v;
            next(row, col - 1);
            at(row, col) = 0;
            --used_[static_cast<std::size_t>(v)];
        }
    }

    int& at(int row, int col) { return fill_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }

    Partition inner_;
    Partition outer_;
    Partition weight_;
    int rows_ = 0;
    std::vector<std::vector<int>> fill_;
    std::vector<int> used_;
    bigint count_;
};

// Horizontal strips of the given size added to shape, all rows bounded by the
// row above in the old shape.
void horizontal_strips(const std::vector<int>& shape, int size, const Partition& cap, std::size_t row,
                       std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (size == 0) {
        out.push_back(cur);
        return;
    }
    if (row >= static_cast<std::size_t>(cap.length()))
        return;
    int old = row < shape.size() ? shape[row] : 0;
    int limit = cap.part(static_cast<int>(row) + 1);
    if (row > 0)
        limit = std::min(limit, row - 1 < shape.size() ? shape[row - 1] : 0);
    for (int add = std::min(size, limit - old); add >= 0; --add) {
        if (cur.size() <= row)
            cur.resize(row + 1, 0);
        cur[row] = old + add;
        horizontal_strips(shape, size - add, cap, row + 1, cur, out);
        cur[row] = old;
    }
}

} // namespace

bigint classical_lr(const Partition& lambda, const Partition& nu, const Partition& mu)
{
    if (!contains(nu, lambda) || nu.size() != lambda.size() + mu.size())
        throw shape_mismatch("classical_lr needs lambda inside nu and |nu| = |lambda| + |mu|");
    return LrFiller(lambda, nu, mu).run();
}

bigint ssyt_count(const Partition& tau, const Composition& mu)
{
    if (tau.size() != mu.size())
        return 0;
    // shapes filled with entries 1..c, keyed by shape
    std::map<std::vector<int>, bigint> layer{{std::vector<int>{}, bigint(1)}};
    for (int c = 1; c <= mu.length(); ++c) {
        std::map<std::vector<int>, bigint> next;
        for (const auto& [shape, ways] : layer) {
            std::vector<std::vector<int>> grown;
            std::vector<int> cur = shape;
            horizontal_strips(shape, mu.part(c), tau, 0, cur, grown);
            for (auto& g : grown) {
                while (!g.empty() && g.back() == 0)
                    g.pop_back();
                next[g] += ways;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(tau.parts());
    return it == layer.end() ? bigint(0) : it->second;
}

std::string to_string(const TreeOp& op)
{
    std::string s(1, op.kind);
    s += std::to_string(op.c);
    if (op.kind == 'r' && op.m != 1)
        s += "^" + std::to_string(op.m);
    return s;
}

namespace {

int first_deficit(const PairOfPartitions& p, int len)
{
    for (int c = 2; c <= len; ++c)
        if (p.sharp.part(c) < p.full.part(c))
            return c;
    return 0;
}

void normalize(PairOfPartitions& p, int len)
{
    p.sharp.parts.resize(static_cast<std::size_t>(len), 0);
    p.full.parts.resize(static_cast<std::size_t>(len), 0);
    p.sharp.parts[0] = p.full.parts[0];
}

PairOfPartitions apply_op(const PairOfPartitions& p, const TreeOp& op, int len)
{
    PairOfPartitions q = p;
    auto c = static_cast<std::size_t>(op.c - 1);
    if (op.kind == 'r') {
        q.full.parts[c - 1] += op.m;
        q.full.parts[c] -= op.m;
    } else {
        ++q.sharp.parts[c];
        if (q.sharp.parts[c] > q.sharp.parts[c - 1]) {
            q = PairOfPartitions{};
            q.null = true;
            return q;
        }
    }
    normalize(q, len);
    return q;
}

PairOfPartitions root_pair(const Partition& mu)
{
    PairOfPartitions p;
    p.sharp.parts = {mu.part(1)};
    p.full = Composition(mu);
    normalize(p, std::max(mu.length(), 1));
    return p;
}

void grow(JamesNode& node, int len)
{
    if (node.label.null)
        return;
    int c = first_deficit(node.label, len);
    if (c == 0)
        return;
    TreeOp r{'r', c, node.label.full.part(c) - node.label.sharp.part(c)};
    TreeOp a{'a', c, 1};
    for (const TreeOp& op : {r, a}) {
        JamesNode child;
        child.label = apply_op(node.label, op, len);
        grow(child, len);
        node.children.emplace_back(op, std::move(child));
    }
}

void collect(const JamesNode& node, std::vector<TreeOp>& path, std::vector<JamesTerminal>& out)
{
    if (node.terminal()) {
        out.push_back({Partition(node.label.full.parts), path});
        return;
    }
    for (const auto& [op, child] : node.children) {
        path.push_back(op);
        collect(child, path, out);
        path.pop_back();
    }
}

std::vector<int> good_counts(const std::vector<int>& word)
{
    auto good = good_terms(word);
    std::vector<int> count;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!good[i])
            continue;
        auto v = static_cast<std::size_t>(word[i]);
        if (count.size() <= v)
            count.resize(v + 1, 0);
        ++count[v];
    }
    return count;
}

int good_count_of(const std::vector<int>& counts, int c)
{
    return static_cast<std::size_t>(c) < counts.size() ? counts[static_cast<std::size_t>(c)] : 0;
}

} // namespace

JamesNode james_tree(const Partition& mu)
{
    JamesNode root;
    root.label = root_pair(mu);
    grow(root, std::max(mu.length(), 1));
    return root;
}

std::vector<JamesTerminal> james_terminals(const Partition& mu)
{
    std::vector<JamesTerminal> out;
    std::vector<TreeOp> path;
    collect(james_tree(mu), path, out);
    return out;
}

bool in_s(const std::vector<int>& word, const Composition& sharp)
{
    auto counts = good_counts(word);
    for (int i = 1; i <= sharp.length(); ++i)
        if (good_count_of(counts, i) < sharp.part(i))
            return false;
    return true;
}

std::vector<int> r_map(const std::vector<int>& word, int c)
{
    auto good = good_terms(word);
    std::vector<int> out = word;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == c && !good[i])
            out[i] = c - 1;
    return out;
}

std::optional<std::vector<int>> r_map_inverse(const std::vector<int>& word, const PairOfPartitions& before, int c)
{
    int m = before.full.part(c) - before.sharp.part(c);
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == c - 1)
            slots.push_back(i);
    if (m < 0 || m > static_cast<int>(slots.size()))
        return std::nullopt;

    Composition bumped = before.sharp;
    if (bumped.length() < c)
        bumped.parts.resize(static_cast<std::size_t>(c), 0);
    ++bumped.parts[static_cast<std::size_t>(c - 1)];

    std::optional<std::vector<int>> found;
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == m) {
            std::vector<int> cand = word;
            for (std::size_t i : pick)
                cand[i] = c;
            if (r_map(cand, c) != word || !in_s(cand, before.sharp) || in_s(cand, bumped))
                return;
            if (found)
                throw std::logic_error("R_c preimage is not unique");
            found = std::move(cand);
            return;
        }
        for (std::size_t j = from; j < slots.size(); ++j) {
            pick.push_back(slots[j]);
            self(self, j + 1);
            pick.pop_back();
        }
    };
    search(search, 0);
    return found;
}

Decomposition decompose_word(const std::vector<int>& word, const Partition& mu)
{
    int len = std::max(mu.length(), 1);
    PairOfPartitions cur = root_pair(mu);
    std::vector<int> w = word;
    Decomposition out;
    while (true) {
        int c = first_deficit(cur, len);
        if (c == 0)
            break;
        TreeOp op;
        if (good_count_of(good_counts(w), c) >= cur.sharp.part(c) + 1) {
            op = TreeOp{'a', c, 1};
        } else {
            op = TreeOp{'r', c, cur.full.part(c) - cur.sharp.part(c)};
            w = r_map(w, c);
        }
        cur = apply_op(cur, op, len);
        if (cur.null)
            throw std::logic_error("word walked into an empty vertex of the tree");
        out.terminal.path.push_back(op);
    }
    out.terminal.tau = Partition(cur.full.parts);
    out.lattice_word = std::move(w);
    return out;
}

std::vector<int> compose_word(const std::vector<int>& lattice_word, const Partition& mu, const std::vector<TreeOp>& path)
{
    int len = std::max(mu.length(), 1);
    std::vector<PairOfPartitions> pairs{root_pair(mu)};
    for (const TreeOp& op : path)
        pairs.push_back(apply_op(pairs.back(), op, len));
    std::vector<int> w = lattice_word;
    for (std::size_t i = path.size(); i-- > 0;) {
        if (path[i].kind != 'r')
            continue;
        auto pre = r_map_inverse(w, pairs[i], path[i].c);
        if (!pre)
            throw std::invalid_argument("word has no preimage along the given tree path");
        w = std::move(*pre);
    }
    return w;
}

} // namespace kron
