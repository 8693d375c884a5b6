#pragma once

#include "kron/bigint.hpp"
#include "kron/branching.hpp"
#include "kron/partitions.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kron {

// An equivalence class [t]_mu of Std^0 under swaps inside weight frames.
struct SemistandardClass {
    Composition weight;
    std::vector<KroneckerTableau> members;
    // t([mu]_0), t([mu]_1), ..., t([mu]_l); equal for all members
    std::vector<Partition> boundary_shapes;
};

struct ReadingWord {
    std::vector<std::pair<Step, int>> columns;

    std::vector<Step> steps() const;
    std::vector<int> frames() const;
    friend bool operator==(const ReadingWord&, const ReadingWord&) = default;
};

// frame[k-1] = c with [mu]_{c-1} < k <= [mu]_c
std::vector<int> frames_of(const Composition& mu);

std::vector<SemistandardClass> mu_classes(const Partition& lambda, const Partition& nu, const Composition& mu);
// Same, reusing an already enumerated Std^0_s(nu \ lambda).
std::vector<SemistandardClass> mu_classes(const std::vector<KroneckerTableau>& std0, const Composition& mu);

bool is_semistandard(const SemistandardClass& cls);

ReadingWord reading_word(const KroneckerTableau& t, const Composition& mu);
ReadingWord reading_word(const SemistandardClass& cls);

// good[i] tells whether term i is good in the left-to-right scan.
std::vector<bool> good_terms(const std::vector<int>& word);
bool is_lattice(const std::vector<int>& word);

struct ClassCounts {
    bigint sstd = 0;
    bigint latt = 0;
};

ClassCounts count_classes(const std::vector<SemistandardClass>& classes);
bigint count_sstd(const Partition& lambda, const Partition& nu, const Composition& mu);
bigint count_latticed(const Partition& lambda, const Partition& nu, const Partition& mu);

// The tableau rule applies to co-Pieri triples and triples of maximal depth.
bool tableau_rule_applies(const Partition& lambda, const Partition& nu, int s);

// Stable Kronecker coefficient by counting latticed classes. Returns 0 outside
// max skew <= |mu| <= |lambda| + |nu|; throws not_applicable if the triple is
// neither co-Pieri nor of maximal depth.
bigint stable_kronecker(const Partition& lambda, const Partition& nu, const Partition& mu);

// c(lambda, nu, mu): skew tableaux of shape nu - lambda and weight mu whose
// right-to-left row reading word is a lattice word.
bigint classical_lr(const Partition& lambda, const Partition& nu, const Partition& mu);

// Kostka number: semistandard tableaux of shape tau and weight mu.
bigint ssyt_count(const Partition& tau, const Composition& mu);

// Label (tau#, tau) of the tree T(mu); `full` may be a composition. A null
// pair stands for (empty, empty).
struct PairOfPartitions {
    Composition sharp;
    Composition full;
    bool null = false;
    friend bool operator==(const PairOfPartitions&, const PairOfPartitions&) = default;
};

// Edge operator: a_c, or r_c^m moving m boxes from row c to row c-1.
struct TreeOp {
    char kind = 'a';
    int c = 2;
    int m = 1;
    friend bool operator==(const TreeOp&, const TreeOp&) = default;
};

std::string to_string(const TreeOp& op);

struct JamesNode {
    PairOfPartitions label;
    std::vector<std::pair<TreeOp, JamesNode>> children;
    bool terminal() const { return !label.null && children.empty(); }
};

JamesNode james_tree(const Partition& mu);

struct JamesTerminal {
    Partition tau;
    // operators from the root down, first applied first
    std::vector<TreeOp> path;
};

std::vector<JamesTerminal> james_terminals(const Partition& mu);

// Words of type mu having at least sharp_i good i's for every i.
bool in_s(const std::vector<int>& word, const Composition& sharp);

// R_c: every bad c becomes c-1.
std::vector<int> r_map(const std::vector<int>& word, int c);

// Preimage of `word` under R_c within s(sharp, full) \ s(a_c(sharp), full),
// where (sharp, full) is the pair before the r_c edge.
std::optional<std::vector<int>> r_map_inverse(const std::vector<int>& word, const PairOfPartitions& before, int c);

// Walks T(mu) from the root: a_c when the word has enough good c's, else R_c.
struct Decomposition {
    JamesTerminal terminal;
    std::vector<int> lattice_word;
};

Decomposition decompose_word(const std::vector<int>& word, const Partition& mu);

// Inverse of decompose_word along a fixed root-to-terminal path.
std::vector<int> compose_word(const std::vector<int>& lattice_word, const Partition& mu,
                              const std::vector<TreeOp>& path);

} // namespace kron
