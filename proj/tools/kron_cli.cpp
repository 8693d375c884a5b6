#include "kron/branching.hpp"
#include "kron/errors.hpp"
#include "kron/oracle.hpp"
#include "kron/partitions.hpp"
#include "kron/tableaux.hpp"
#include "kron/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::json;
using namespace kron;

namespace {

enum exit_code { ok = 0, verify_failed = 1, bad_input = 2, not_applicable_code = 3 };

struct Options {
    std::string lambda, nu, mu;
    std::string emit = "text";
    bool verbose = false;
    bool fallback_oracle = false;
    bool report_onset = false;
    std::optional<int> n_cap;
    std::optional<int> max_size;
    std::optional<int> max_s;
    std::optional<int> thm33_r;
    int workers = 0;
};

json parts_json(const std::vector<int>& parts)
{
    return json(parts);
}

std::string tsv_parts(const std::vector<int>& parts)
{
    return parts.empty() ? "0" : to_string(Composition(parts)).substr(1, to_string(Composition(parts)).size() - 2);
}

int cmd_coeff(const Options& o)
{
    Partition lambda = parse_partition(o.lambda);
    Partition nu = parse_partition(o.nu);
    Partition mu = parse_partition(o.mu);
    bigint value;
    std::string source = "tableaux";
    std::optional<int> onset;
    try {
        value = stable_kronecker(lambda, nu, mu);
    } catch (const not_applicable& e) {
        if (!o.fallback_oracle) {
            std::cerr << "not applicable: " << e.what() << "\n";
            return not_applicable_code;
        }
        StableResult r = stable_kronecker_oracle(lambda, nu, mu, o.n_cap);
        value = r.value;
        source = "oracle";
        onset = r.onset_n;
    }
    if (o.emit == "json") {
        json j{{"lambda", parts_json(lambda.parts())},
               {"nu", parts_json(nu.parts())},
               {"mu", parts_json(mu.parts())},
               {"value", value.str()},
               {"source", source}};
        if (onset)
            j["onset_n"] = *onset;
        std::cout << j.dump(2) << "\n";
    } else if (o.emit == "tsv") {
        std::cout << tsv_parts(lambda.parts()) << "\t" << tsv_parts(nu.parts()) << "\t" << tsv_parts(mu.parts())
                  << "\t" << value << "\t" << source << "\n";
    } else {
        std::cout << value;
        if (source != "tableaux")
            std::cout << " (" << source << ")";
        std::cout << "\n";
    }
    return ok;
}

int cmd_tableaux(const Options& o)
{
    Partition lambda = parse_partition(o.lambda);
    Partition nu = parse_partition(o.nu);
    Composition mu = parse_composition(o.mu);
    int s = mu.size();
    bool copieri = is_copieri(lambda, nu, s);
    bool maximal = is_maximal_depth(lambda, nu, s);
    auto classes = mu_classes(lambda, nu, mu);
    bool weight_is_partition = mu.is_partition();

    bigint sstd = 0, latt = 0;
    json jclasses = json::array();
    std::string text;
    int index = 0;
    for (const auto& cls : classes) {
        ++index;
        bool semi = is_semistandard(cls);
        ReadingWord w = reading_word(cls);
        bool lattice = semi && weight_is_partition && is_lattice(w.frames());
        sstd += semi ? 1 : 0;
        latt += lattice ? 1 : 0;
        json jc;
        std::vector<std::string> steps;
        for (const Step& st : w.steps())
            steps.push_back(to_string(st));
        jc["word_steps"] = steps;
        jc["word_frames"] = w.frames();
        jc["semistandard"] = semi;
        jc["lattice"] = lattice;
        jc["size"] = cls.members.size();
        if (o.verbose) {
            std::vector<std::string> members;
            for (const auto& t : cls.members)
                members.push_back(to_string(t, true));
            jc["members"] = members;
        }
        jclasses.push_back(jc);

        text += "class " + std::to_string(index) + " size " + std::to_string(cls.members.size()) +
                (semi ? " semistandard" : " not-semistandard") + (lattice ? " lattice" : "") + "\n  word  ";
        for (const auto& [st, f] : w.columns)
            text += " " + step_name(st);
        text += "\n  frames";
        for (const auto& [st, f] : w.columns)
            text += " " + std::to_string(f);
        text += "\n";
        if (o.verbose)
            for (const auto& t : cls.members)
                text += "  " + to_string(t, true) + "\n";
    }

    if (o.emit == "json") {
        json j{{"lambda", parts_json(lambda.parts())},
               {"nu", parts_json(nu.parts())},
               {"mu", parts_json(mu.parts)},
               {"copieri", copieri},
               {"maximal_depth", maximal},
               {"sstd", sstd.str()},
               {"latt", weight_is_partition ? json(latt.str()) : json(nullptr)},
               {"classes", jclasses}};
        std::cout << j.dump(2) << "\n";
    } else if (o.emit == "tsv") {
        std::cout << "class\tsize\tsemistandard\tlattice\tword_steps\tword_frames\n";
        for (std::size_t i = 0; i < jclasses.size(); ++i) {
            const auto& jc = jclasses[i];
            std::string steps, frames;
            for (const auto& st : jc["word_steps"])
                steps += (steps.empty() ? "" : " ") + st.get<std::string>();
            for (const auto& f : jc["word_frames"])
                frames += (frames.empty() ? "" : " ") + std::to_string(f.get<int>());
            std::cout << i + 1 << "\t" << jc["size"].get<std::size_t>() << "\t" << jc["semistandard"].get<bool>()
                      << "\t" << jc["lattice"].get<bool>() << "\t" << steps << "\t" << frames << "\n";
        }
    } else {
        std::cout << "lambda " << to_string(lambda) << " nu " << to_string(nu) << " mu " << to_string(mu)
                  << " co-Pieri " << (copieri ? "yes" : "no") << " maximal-depth " << (maximal ? "yes" : "no")
                  << "\n"
                  << text << "semistandard " << sstd;
        if (weight_is_partition)
            std::cout << " latticed " << latt;
        std::cout << "\n";
    }
    return ok;
}

int cmd_classify(const Options& o)
{
    Partition lambda = parse_partition(o.lambda);
    Partition nu = parse_partition(o.nu);
    Partition mu = parse_partition(o.mu);
    int s = mu.size();
    auto [a, b] = skew_diff_size(lambda, nu);
    std::optional<int> mm;
    if (std::max(lambda.length(), nu.length()) >= 2)
        mm = minmax(lambda, nu);
    bool copieri = is_copieri(lambda, nu, s);
    bool maximal = is_maximal_depth(lambda, nu, s);
    bool bounds = within_murnaghan_bounds(lambda, nu, s);
    if (o.emit == "json") {
        json j{{"lambda", parts_json(lambda.parts())},
               {"nu", parts_json(nu.parts())},
               {"mu", parts_json(mu.parts())},
               {"s", s},
               {"skew_sizes", {a, b}},
               {"minmax", mm ? json(*mm) : json(nullptr)},
               {"copieri", copieri},
               {"maximal_depth", maximal},
               {"within_bounds", bounds},
               {"tableau_rule", copieri || maximal}};
        std::cout << j.dump(2) << "\n";
    } else if (o.emit == "tsv") {
        std::cout << s << "\t" << a << "\t" << b << "\t" << (mm ? std::to_string(*mm) : "-") << "\t" << copieri
                  << "\t" << maximal << "\t" << bounds << "\n";
    } else {
        std::cout << "s " << s << "\nskew sizes " << a << " " << b << "\nminmax "
                  << (mm ? std::to_string(*mm) : "undefined") << "\nco-Pieri " << (copieri ? "yes" : "no")
                  << "\nmaximal depth " << (maximal ? "yes" : "no") << "\nwithin bounds " << (bounds ? "yes" : "no")
                  << "\n";
    }
    return ok;
}

int cmd_oracle(const Options& o)
{
    Partition lambda = parse_partition(o.lambda);
    Partition nu = parse_partition(o.nu);
    Partition mu = parse_partition(o.mu);
    StableResult r = stable_kronecker_series(lambda, nu, mu, o.n_cap);
    if (o.emit == "json") {
        json j{{"value", r.value.str()}, {"onset_n", r.capped ? json(nullptr) : json(r.onset_n)}, {"capped", r.capped}};
        if (o.report_onset) {
            std::vector<std::string> series;
            for (const auto& v : r.series)
                series.push_back(v.str());
            j["first_n"] = r.first_n;
            j["series"] = series;
        }
        std::cout << j.dump(2) << "\n";
    } else if (o.emit == "tsv") {
        std::cout << r.value << "\t" << (r.capped ? "-" : std::to_string(r.onset_n)) << "\t" << r.capped << "\n";
    } else {
        std::cout << r.value << (r.capped ? " (capped, not stable)" : "") << "\n";
        if (o.report_onset) {
            if (!r.capped)
                std::cout << "onset n " << r.onset_n << "\n";
            for (std::size_t i = 0; i < r.series.size(); ++i)
                std::cout << "  n=" << r.first_n + static_cast<int>(i) << " " << r.series[i] << "\n";
        }
    }
    return r.capped ? verify_failed : ok;
}

int cmd_lr(const Options& o)
{
    Partition lambda = parse_partition(o.lambda);
    Partition nu = parse_partition(o.nu);
    Partition mu = parse_partition(o.mu);
    bigint c = classical_lr(lambda, nu, mu);
    if (o.emit == "json")
        std::cout << json{{"value", c.str()}}.dump(2) << "\n";
    else
        std::cout << c << "\n";
    return ok;
}

int cmd_verify(const Options& o)
{
    SweepBounds b;
    if (o.max_size) {
        b.max_size = *o.max_size;
        b.max_depth_nu = *o.max_size;
    }
    if (o.max_s)
        b.max_s = *o.max_s;
    if (o.thm33_r) {
        b.thm33_r = *o.thm33_r;
        b.bell_r = *o.thm33_r;
    }
    b.workers = o.workers;
    auto records = run_verify(b);
    std::size_t failed = 0;
    json failures = json::array();
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
    for (const auto& r : records) {
        auto& [pass, total] = per_suite[r.suite];
        ++total;
        if (r.ok) {
            ++pass;
            continue;
        }
        ++failed;
        failures.push_back({{"suite", r.suite}, {"item", r.item}, {"detail", r.detail}});
    }
    if (o.emit == "json") {
        json suites = json::object();
        for (const auto& [name, c] : per_suite)
            suites[name] = {{"passed", c.first}, {"checked", c.second}};
        std::cout << json{{"ok", failed == 0}, {"suites", suites}, {"failures", failures}}.dump(2) << "\n";
    } else if (o.emit == "tsv") {
        for (const auto& r : records)
            if (o.verbose || !r.ok)
                std::cout << r.suite << "\t" << r.item << "\t" << (r.ok ? "pass" : "FAIL") << "\t" << r.detail << "\n";
    } else {
        for (const auto& [name, c] : per_suite)
            std::cout << name << ": " << c.first << "/" << c.second << " passed\n";
        for (const auto& r : records)
            if (o.verbose || !r.ok)
                std::cout << (r.ok ? "  pass " : "  FAIL ") << r.suite << " " << r.item << " " << r.detail << "\n";
    }
    return failed == 0 ? ok : verify_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stable Kronecker coefficients from Kronecker tableaux"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "json", "tsv"}));
        sub->add_flag("--verbose", o.verbose, "more detail");
    };
    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("lambda", o.lambda, "partition, e.g. 6,2 or [6,2]; empty is 0 or []")->required();
        sub->add_option("nu", o.nu, "partition")->required();
        sub->add_option("mu", o.mu, "partition (a composition for tableaux)")->required();
    };

    auto* coeff = app.add_subcommand("coeff", "stable Kronecker coefficient by the tableau rule");
    add_triple(coeff);
    add_common(coeff);
    coeff->add_flag("--fallback-oracle", o.fallback_oracle, "use the character oracle when the rule does not apply");
    coeff->add_option("--n-cap", o.n_cap, "largest n tried by the oracle");

    auto* tab = app.add_subcommand("tableaux", "list the semistandard classes and reading words");
    add_triple(tab);
    add_common(tab);

    auto* cls = app.add_subcommand("classify", "co-Pieri and maximal-depth tests for a triple");
    add_triple(cls);
    add_common(cls);

    auto* orc = app.add_subcommand("oracle", "stable coefficient from symmetric group characters");
    add_triple(orc);
    add_common(orc);
    orc->add_option("--n-cap", o.n_cap, "largest n tried");
    orc->add_flag("--report-onset", o.report_onset, "print the onset and the computed series");

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c(lambda, nu, mu)");
    add_triple(lr);
    add_common(lr);

    auto* ver = app.add_subcommand("verify", "run the property sweeps");
    add_common(ver);
    ver->add_option("--max-size", o.max_size, "bound on |lambda| and |nu|");
    ver->add_option("--max-s", o.max_s, "bound on s = |mu|");
    ver->add_option("--thm33-r", o.thm33_r, "largest r for the u_t s_k identity and cellular checks");
    ver->add_option("--workers", o.workers, "worker threads, 0 for all cores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (*coeff)
            return cmd_coeff(o);
        if (*tab)
            return cmd_tableaux(o);
        if (*cls)
            return cmd_classify(o);
        if (*orc)
            return cmd_oracle(o);
        if (*lr)
            return cmd_lr(o);
        if (*ver)
            return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verify_failed;
    }
    return ok;
}
