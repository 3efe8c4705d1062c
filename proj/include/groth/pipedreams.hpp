#pragma once

#include "groth/oracle.hpp"

namespace groth {

// Crossing set in [n] x [n]; cell (i,k) carries letter i+k-1.
struct PipeDream {
    int n = 0;
    std::vector<Cell> cells;  // sorted

    WeakComposition weight() const;
    int size() const { return static_cast<int>(cells.size()); }

    std::string to_text() const;  // n lines, '+' crossing, '.' empty
    static PipeDream from_text(const std::string& text);
    std::string to_json_string() const;  // {"n":_, "cells":[[i,k],...]}
    static PipeDream from_json_string(const std::string& json);

    bool operator==(const PipeDream& o) const = default;
    bool operator<(const PipeDream& o) const;
};

// Letters i+k-1 read right to left within each row, top row first.
std::vector<int> pipe_word(const PipeDream& p);

// 0-Hecke product: fold u -> u s_i when that lengthens, else absorb.
// Letters must satisfy 1 <= letter < ambient_n.
Permutation demazure_product(const std::vector<int>& word, int ambient_n);

// True iff the word is reduced, i.e. the fold never absorbs a letter.
bool is_reduced_word(const std::vector<int>& word, int ambient_n);

// All P with delta(P) = w and wt(P) = gamma.  Cells range over the staircase
// {(i,k) : i+k <= n} by default; full_grid searches all of [n] x [n] (the
// Demazure product is then taken in S_{2n}).
std::vector<PipeDream> enumerate_pipes_with_weight(const Permutation& w,
                                                   const WeakComposition& gamma,
                                                   bool full_grid = false);

struct PipeEnumeration {
    std::vector<PipeDream> dreams;
    bool complete = true;
    uint64_t steps = 0;
};

PipeEnumeration enumerate_pipes_with_weight_budgeted(const Permutation& w,
                                                     const WeakComposition& gamma, bool full_grid,
                                                     uint64_t max_steps);

// All P with delta(P) = w and #P <= size_bound (default: no bound beyond the
// cell supply).  Exponential in the grid without the Bruhat prune; intended
// for small n and for the staircase-sufficiency test.
std::vector<PipeDream> enumerate_pipes(const Permutation& w, int size_bound = -1,
                                       bool full_grid = false);

// G_w = sum over P of (-1)^{#P - l(w)} x^{wt(P)}, restricted to #P <= degree_bound.
IntPolynomial grothendieck_via_pipes(const Permutation& w, int degree_bound = -1);

// Minimal slice #P = l(w): the reduced pipe dreams, which generate S_w.
IntPolynomial schubert_via_pipes(const Permutation& w);

}  // namespace groth
