#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace groth {

// Permutation of [n] in one-line notation, 1-based: w(i) = entries[i-1].
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);
    static Permutation longest(int n);  // w_0 = n n-1 ... 1

    // Compact digit string for n <= 9 ("12365847"), comma-separated otherwise.
    // Mixed or malformed input throws std::invalid_argument.
    static Permutation parse(const std::string& text);
    std::string to_string() const;

    int size() const { return static_cast<int>(vals_.size()); }
    int operator()(int i) const { return vals_[i - 1]; }  // 1-based
    const std::vector<int>& entries() const { return vals_; }

    Permutation inverse() const;
    int length() const;  // Coxeter length = #inversions
    bool is_identity() const;
    bool is_longest() const;

    // w * s_i: swap values at positions i, i+1 (1 <= i < n).
    Permutation times_s(int i) const;
    // Extend to S_m by fixed points (m >= n).
    Permutation embed(int m) const;

    // Smallest/largest i with w(i) < w(i+1); nullopt iff w = w_0.
    std::optional<int> smallest_ascent() const;
    std::optional<int> largest_ascent() const;

    // Lexicographic rank among S_n, in [0, n!).  n <= 20.
    uint64_t lex_rank() const;
    static Permutation lex_unrank(int n, uint64_t rank);

    bool operator==(const Permutation& o) const { return vals_ == o.vals_; }
    bool operator<(const Permutation& o) const { return vals_ < o.vals_; }

private:
    std::vector<int> vals_;
};

struct PermutationHash {
    size_t operator()(const Permutation& w) const;
};

// True iff some subsequence of w is order-isomorphic to p.
bool contains_pattern(const Permutation& w, const Permutation& p);

// Strong Bruhat order via rank-matrix dominance:
// u <= w  iff  #{k<=i : u(k)<=j} >= #{k<=i : w(k)<=j} for all i,j.
bool bruhat_leq(const Permutation& u, const Permutation& w);

std::vector<Permutation> all_permutations(int n);

uint64_t factorial(int n);

}  // namespace groth
