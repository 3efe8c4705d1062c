#pragma once

#include "groth/oracle.hpp"

namespace groth {

enum class BoxLabel : uint8_t { Solid, Ghost };

// Which moves a closure admits:
//   Plain   - Kohnert moves only (every box stays solid)
//   RY      - Kohnert + K-Kohnert on rightmost solid boxes
//   Ghost   - RY plus ghost Kohnert / ghost K-Kohnert on rightmost ghost boxes
//   Relaxed - Ghost, but ghost moves apply to any ghost box, not just rightmost
enum class Ruleset { Plain, RY, Ghost, Relaxed };

enum class MoveKind { Kohnert, KKohnert, GhostKohnert, GhostKKohnert };

std::string ruleset_name(Ruleset r);
Ruleset parse_ruleset(const std::string& name);

// Diagram whose boxes carry a solid/ghost mark.  Canonical form: cells sorted
// by (row, col); equality and hashing are structural.
class LabeledDiagram {
public:
    LabeledDiagram(int grid_size, std::vector<std::pair<Cell, BoxLabel>> cells);
    static LabeledDiagram all_solid(const Diagram& d);

    int grid_size() const { return n_; }
    const std::vector<std::pair<Cell, BoxLabel>>& cells() const { return cells_; }
    int box_count() const { return static_cast<int>(cells_.size()); }
    std::optional<BoxLabel> label_at(Cell c) const;
    bool all_boxes_solid() const;

    WeakComposition weight() const;  // boxes per row, both labels
    Diagram solid_cells() const;
    Diagram ghost_cells() const;
    Diagram underlying() const;  // all boxes, labels dropped

    // n lines of n characters: 'O' solid, 'G' ghost, '.' empty.
    std::string to_text() const;
    static LabeledDiagram from_text(const std::string& text);
    std::string to_json_string() const;  // {"n":_, "cells":[{"r":_,"c":_,"label":"O"|"G"}]}
    static LabeledDiagram from_json_string(const std::string& json);

    bool operator==(const LabeledDiagram& o) const { return n_ == o.n_ && cells_ == o.cells_; }
    bool operator<(const LabeledDiagram& o) const;

private:
    int n_;
    std::vector<std::pair<Cell, BoxLabel>> cells_;
};

struct LabeledDiagramHash {
    size_t operator()(const LabeledDiagram& d) const;
};

struct KohnertMove {
    Cell source;
    Cell target;  // the landing cell (i', j)
    MoveKind kind;
    LabeledDiagram result;
};

// Every move applicable to D under the ruleset, in deterministic order.
std::vector<KohnertMove> legal_moves(const LabeledDiagram& d, Ruleset rules);

struct ClosureResult {
    std::vector<LabeledDiagram> diagrams;  // sorted canonically; includes the seed
    bool complete = true;
};

// BFS fixed point of legal_moves starting from the all-solid seed.
ClosureResult closure(const Diagram& seed, Ruleset rules, size_t max_states = SIZE_MAX);

// |{D in closure(D(w), rules) : wt(D) = gamma}|.
long long closure_weight_count(const Permutation& w, const WeakComposition& gamma, Ruleset rules);

std::map<WeakComposition, long long> weight_histogram(const std::vector<LabeledDiagram>& diagrams);

// Signed generating function sum (-1)^{#D - base_size} x^{wt(D)} over the
// closure of the seed.  base_size is l(w) for Rothe seeds, |alpha| for keys.
IntPolynomial polynomial_via_closure(const Diagram& seed, Ruleset rules, int base_size);

IntPolynomial polynomial_from_diagrams(const std::vector<LabeledDiagram>& diagrams, int base_size,
                                       int num_vars);

IntPolynomial schubert_via_kohnert(const Permutation& w);      // Plain closure of D(w)
IntPolynomial lascoux_via_kkohnert(const WeakComposition& a);  // RY closure of D(alpha)
IntPolynomial grothendieck_via_ghost_moves(const Permutation& w);  // Ghost closure of D(w)

}  // namespace groth
