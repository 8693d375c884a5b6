#include "kron/verify.hpp"

#include "kron/branching.hpp"
#include "kron/diagalg.hpp"
#include "kron/oracle.hpp"
#include "kron/partitions.hpp"
#include "kron/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace kron {

namespace {

std::vector<Partition> partitions_up_to(int k)
{
    std::vector<Partition> out;
    for (int m = 0; m <= k; ++m)
        for (auto& p : partitions_of(m))
            out.push_back(std::move(p));
    return out;
}

std::string triple_name(const Partition& a, const Partition& b, const Partition& c)
{
    return to_string(a) + " " + to_string(b) + " " + to_string(c);
}

std::string str(const bigint& v)
{
    return v.str();
}

// Runs job(i) for i in [0, count) on a pool and concatenates the records in
// index order, so the output does not depend on scheduling.
std::vector<CheckRecord> fan_out(std::size_t count, int workers,
                                 const std::function<std::vector<CheckRecord>(std::size_t)>& job)
{
    std::vector<std::vector<CheckRecord>> slots(count);
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    auto n = static_cast<unsigned>(workers > 0 ? workers : static_cast<int>(hw));
    n = std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            slots[i] = job(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n; ++w)
        pool.emplace_back(run);
    run();
    for (auto& th : pool)
        th.join();
    std::vector<CheckRecord> out;
    for (auto& s : slots)
        out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return out;
}

std::vector<std::pair<Partition, Partition>> pairs_up_to(int k)
{
    std::vector<std::pair<Partition, Partition>> out;
    auto all = partitions_up_to(k);
    for (const auto& a : all)
        for (const auto& b : all)
            out.emplace_back(a, b);
    return out;
}

} // namespace

std::vector<CheckRecord> check_oracle_equivalence(const SweepBounds& b)
{
    auto pairs = pairs_up_to(b.max_size);
    return fan_out(pairs.size(), b.workers, [&](std::size_t i) {
        const auto& [lambda, nu] = pairs[i];
        std::vector<CheckRecord> out;
        for (int s = 0; s <= b.max_s; ++s) {
            if (!within_murnaghan_bounds(lambda, nu, s) || !tableau_rule_applies(lambda, nu, s))
                continue;
            auto std0 = enumerate_std0(lambda, nu, s);
            for (const Partition& mu : partitions_of(s)) {
                bigint latt = count_classes(mu_classes(std0, Composition(mu))).latt;
                bigint oracle = stable_kronecker_oracle(lambda, nu, mu).value;
                out.push_back({"oracle_equivalence", triple_name(lambda, nu, mu), latt == oracle,
                               "latt=" + str(latt) + " oracle=" + str(oracle)});
            }
        }
        return out;
    });
}

std::vector<CheckRecord> check_maximal_depth(const SweepBounds& b)
{
    std::vector<std::pair<Partition, Partition>> pairs;
    auto all = partitions_up_to(b.max_depth_nu);
    for (const auto& nu : all)
        for (const auto& lambda : all)
            if (contains(nu, lambda))
                pairs.emplace_back(lambda, nu);
    return fan_out(pairs.size(), b.workers, [&](std::size_t i) {
        const auto& [lambda, nu] = pairs[i];
        std::vector<CheckRecord> out;
        int s = nu.size() - lambda.size();
        for (const Partition& mu : partitions_of(s)) {
            bigint tab = stable_kronecker(lambda, nu, mu);
            bigint lr = classical_lr(lambda, nu, mu);
            bigint oracle = stable_kronecker_oracle(lambda, nu, mu).value;
            out.push_back({"maximal_depth", triple_name(lambda, nu, mu), tab == lr && lr == oracle,
                           "tableaux=" + str(tab) + " lr=" + str(lr) + " oracle=" + str(oracle)});
        }
        return out;
    });
}

std::vector<CheckRecord> check_thm33(int r)
{
    std::vector<KroneckerTableau> paths;
    for (const Partition& nu : partitions_up_to(r))
        for (auto& t : enumerate_std(Partition{}, nu, r))
            paths.push_back(std::move(t));
    return fan_out(paths.size(), 0, [&](std::size_t i) {
        std::vector<CheckRecord> out;
        const auto& t = paths[i];
        for (int k = 1; k <= r - 1; ++k) {
            if (!swap_adjacent(t, k))
                continue;
            bool ok = verify_thm33(t, k);
            out.push_back({"thm33", "r=" + std::to_string(r) + " t=" + to_string(t) + " k=" + std::to_string(k), ok,
                           ok ? "" : "identity fails"});
        }
        return out;
    });
}

std::vector<CheckRecord> check_cellular_count(int r)
{
    // Bell triangle
    std::vector<bigint> row{1};
    std::vector<bigint> bell{1};
    for (int i = 1; i <= 2 * r; ++i) {
        std::vector<bigint> next{row.back()};
        for (const bigint& x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
        bell.push_back(row.front());
    }
    std::vector<CheckRecord> out;
    for (int k = 1; k <= r; ++k) {
        bigint total = 0;
        for (const Partition& nu : partitions_up_to(k)) {
            bigint c = enumerate_std(Partition{}, nu, k).size();
            total += c * c;
        }
        out.push_back({"cellular_count", "r=" + std::to_string(k), total == bell[static_cast<std::size_t>(2 * k)],
                       "sum=" + str(total) + " bell=" + str(bell[static_cast<std::size_t>(2 * k)])});
    }
    return out;
}

std::vector<CheckRecord> check_cor614(const SweepBounds& b)
{
    auto pairs = pairs_up_to(b.max_size);
    return fan_out(pairs.size(), b.workers, [&](std::size_t i) {
        const auto& [lambda, nu] = pairs[i];
        std::vector<CheckRecord> out;
        for (int s = 1; s <= b.max_s; ++s) {
            if (!is_copieri(lambda, nu, s))
                continue;
            auto std0 = enumerate_std0(lambda, nu, s);
            auto shapes = partitions_of(s);
            std::vector<bigint> latt;
            std::vector<bigint> sstd;
            for (const Partition& tau : shapes) {
                auto counts = count_classes(mu_classes(std0, Composition(tau)));
                latt.push_back(counts.latt);
                sstd.push_back(counts.sstd);
            }
            for (std::size_t m = 0; m < shapes.size(); ++m) {
                bigint rhs = 0;
                for (std::size_t t = 0; t < shapes.size(); ++t)
                    rhs += ssyt_count(shapes[t], Composition(shapes[m])) * latt[t];
                out.push_back({"cor614", triple_name(lambda, nu, shapes[m]), sstd[m] == rhs,
                               "sstd=" + str(sstd[m]) + " sum=" + str(rhs)});
            }
        }
        return out;
    });
}

std::vector<CheckRecord> run_verify(const SweepBounds& b)
{
    std::vector<CheckRecord> out;
    auto append = [&](std::vector<CheckRecord> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(check_cellular_count(b.bell_r));
    for (int r = 1; r <= b.thm33_r; ++r)
        append(check_thm33(r));
    append(check_oracle_equivalence(b));
    append(check_maximal_depth(b));
    append(check_cor614(b));
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckRecord& x, const CheckRecord& y) { return x.suite < y.suite; });
    return out;
}

} // namespace kron
