#pragma once

#include <compare>
#include <string>
#include <vector>

#include "groth/permutation.hpp"

namespace groth {

// Grid cell, 1-based; (1,1) is the northwest corner.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Sequence of n non-negative integers.
class WeakComposition {
public:
    explicit WeakComposition(std::vector<int> parts);
    static WeakComposition zeros(int n);
    static WeakComposition parse(const std::string& text);  // comma-separated

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i - 1]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }
    int sum() const;

    bool weakly_decreasing() const;
    // Zero entries are ignored, e.g. (3,3,0,5,0,5) qualifies.
    bool nonzero_parts_weakly_increasing() const;

    WeakComposition exchanged(int i) const;  // swap parts i, i+1
    WeakComposition padded(int n) const;     // right-pad with zeros to length n

    std::string to_string() const;

    bool operator==(const WeakComposition& o) const { return parts_ == o.parts_; }
    bool operator<(const WeakComposition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

struct WeakCompositionHash {
    size_t operator()(const WeakComposition& a) const;
};

// Finite cell set within [n] x [n].
class Diagram {
public:
    Diagram(int grid_size, std::vector<Cell> cells);
    static Diagram empty(int grid_size);

    int grid_size() const { return n_; }
    const std::vector<Cell>& cells() const { return cells_; }  // sorted
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(Cell c) const;

    WeakComposition weight() const;  // boxes per row
    bool is_nw_hook_closed() const;
    bool is_sw_hook_closed() const;

    // n lines of n characters, 'O' = box, '.' = empty.
    std::string to_text() const;
    static Diagram from_text(const std::string& text);

    bool operator==(const Diagram& o) const { return n_ == o.n_ && cells_ == o.cells_; }
    bool operator<(const Diagram& o) const;

private:
    int n_;
    std::vector<Cell> cells_;
};

// D(w) = {(i,j) : w(i) > j and w^{-1}(j) > i}; has l(w) cells.
Diagram rothe_diagram(const Permutation& w);

// D(alpha): row i holds columns 1..alpha_i.  Throws if a part exceeds the grid.
Diagram key_diagram(const WeakComposition& alpha);

// Minimal SW-hook-closed superset:
// {(i,j) : (i,j+k) in D and (i-k',j) in D for some k,k' >= 0}.
Diagram sw_hook_closure(const Diagram& d);

}  // namespace groth
