#pragma once

#include "groth/kohnert.hpp"

namespace groth {

// Filling of a diagram by nonempty subsets of [n].  Entry sets are stored
// sorted descending (figure convention); equality is set equality.
class SetValuedTableau {
public:
    SetValuedTableau(Diagram shape, std::vector<std::vector<int>> values);

    const Diagram& shape() const { return shape_; }
    int grid_size() const { return shape_.grid_size(); }
    // values()[k] belongs to shape().cells()[k]
    const std::vector<std::vector<int>>& values() const { return values_; }
    const std::vector<int>& at(Cell c) const;

    WeakComposition weight() const;  // weight_i = # of i's across all cells
    int entry_count() const;         // #T

    bool rows_and_columns_valid() const;  // conditions (1) and (2)
    bool is_fsvt() const;                 // plus the flag max <= row

    // Grid of cell tokens, single-space separated; '.' marks absent cells.
    std::string to_text() const;
    static SetValuedTableau from_text(const std::string& text);
    std::string to_json_string() const;
    static SetValuedTableau from_json_string(const std::string& json);

    bool operator==(const SetValuedTableau& o) const = default;
    bool operator<(const SetValuedTableau& o) const;

private:
    Diagram shape_;
    std::vector<std::vector<int>> values_;
};

// Single-valued filling with weakly decreasing rows, strictly increasing columns.
class Tableau {
public:
    Tableau(Diagram shape, std::vector<int> values);

    const Diagram& shape() const { return shape_; }
    const std::vector<int>& values() const { return values_; }
    int at(Cell c) const;
    bool is_valid() const;

    std::string to_text() const;

    bool operator==(const Tableau& o) const = default;

private:
    Diagram shape_;
    std::vector<int> values_;
};

// All flagged set-valued tableaux on D: rows weakly decrease as sets, columns
// strictly increase, and max f(r,c) <= r.
std::vector<SetValuedTableau> enumerate_fsvt(const Diagram& d);

// G_w = sum over FSVT(D(w)) of (-1)^{#T - l(w)} x^{wt(T)}; w must avoid 321.
IntPolynomial grothendieck_via_fsvt(const Permutation& w);

// Row counts of the SW hook closure of D(w) and of D(w) itself.
// Requires w 321-avoiding; both row-count vectors then have weakly
// increasing nonzero parts.
std::pair<WeakComposition, WeakComposition> alpha_beta(const Permutation& w);

// Extend T over D(w) to the hook closure, filling added cells (r,c) with {r}.
SetValuedTableau phi(const SetValuedTableau& t, const Permutation& w);

// Column compaction: delete grid columns empty in the underlying shape.
struct CompactedTableau {
    SetValuedTableau tableau;
    std::vector<int> column_map;  // column_map[k-1] = original column of new column k
};
CompactedTableau rho(const SetValuedTableau& t, const Permutation& w);
SetValuedTableau rho_inverse(const CompactedTableau& ct, const Permutation& w);

Tableau max_tableau(const SetValuedTableau& t);  // M(T): cellwise maxima

// Left key via the column-scanning algorithm.  The shape must be a key
// diagram D(alpha) with the nonzero parts of alpha weakly increasing.
Tableau left_key(const SetValuedTableau& t);

// Conditions (1),(2) plus the left-key flag K_-(T)(r,c) <= r.
bool is_svkt(const SetValuedTableau& t, const WeakComposition& alpha);

std::vector<SetValuedTableau> enumerate_svkt(const WeakComposition& alpha);

// L_alpha as the signed sum over SVKT(D(alpha)) (enumerated without the
// FSVT flag, filtered by the left-key condition).
IntPolynomial lascoux_via_svkt(const WeakComposition& alpha);

// Same sum over FSVT(D(alpha)); the two sets coincide for key shapes.
IntPolynomial lascoux_via_fsvt(const WeakComposition& alpha);

// Column encoding of T: O marks (max entry, column) pairs, G the rest.
std::pair<Diagram, Diagram> encode_tableau(const SetValuedTableau& t);
SetValuedTableau decode_tableau(const Diagram& o, const Diagram& g, const Diagram& shape);

// Weight-preserving bijection FSVT(D(alpha)) -> KKoh(D(alpha)) and inverse.
LabeledDiagram phi_alpha(const SetValuedTableau& t);
SetValuedTableau phi_alpha_inverse(const LabeledDiagram& d, const WeakComposition& alpha);

// The composite bijection FSVT(D(w)) -> KKoh(D(w)) for 321-avoiding w, with
// every intermediate stage exposed for tracing.
struct BijectionStages {
    SetValuedTableau input;
    SetValuedTableau extended;      // phi
    CompactedTableau compacted;     // rho
    Diagram encoded_o, encoded_g;   // pair encoding of the compacted tableau
    LabeledDiagram key_image;       // phi_alpha
    LabeledDiagram image;           // final diagram over D(w)'s grid
};
BijectionStages bijection_apply(const Permutation& w, const SetValuedTableau& t);

// The full map on all of FSVT(D(w)).
std::vector<std::pair<SetValuedTableau, LabeledDiagram>> bijection_f(const Permutation& w);

}  // namespace groth
