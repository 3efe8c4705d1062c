#pragma once

#include <iosfwd>

#include "groth/kohnert.hpp"
#include "groth/pipedreams.hpp"
#include "groth/tableaux.hpp"

namespace groth {

// Counting/equality rules the sweep engine can cross-validate against the
// divided-difference oracle.
enum class Conjecture {
    KKohGrothendieck,       // per-weight KKoh counts of D(w) vs g_{w,gamma}
    GhostKKohGrothendieck,  // ghost-move closure counts vs g_{w,gamma}
    RelaxedKKohBound,       // relaxed closure counts weakly overcount g_{w,gamma}
    PipesSchubert,          // minimal pipe dreams generate S_w
    PipesGrothendieck,      // signed pipe dream sum equals G_w
    KohnertSchubert,        // Kohnert closure generates S_w
    KKohLascoux,            // KKoh counts of D(alpha) vs Lascoux coefficients
    FsvtKKohBijection,      // f: FSVT(D(w)) -> KKoh(D(w)) bijective, weight-preserving
    FsvtGrothendieck,       // signed FSVT sum equals G_w (321-avoiding)
    KKohGhostKeysEqual,     // KKoh(D(alpha)) = ghost closure of D(alpha) as sets
};

std::string conjecture_name(Conjecture c);
Conjecture parse_conjecture(const std::string& name);
bool conjecture_over_compositions(Conjecture c);

struct Sampling {
    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Exhaustive;
    int count = 0;       // random mode: number of subjects
    uint64_t seed = 0;   // random mode: generator seed
};

struct SweepOptions {
    int n = 4;               // S_n, or composition length
    Sampling sampling;
    int jobs = 1;
    int parts_bound = 3;     // composition sweeps: parts in [0, parts_bound]
    size_t max_states = SIZE_MAX;  // closure budget per case
};

struct CheckCase {
    std::string subject;   // permutation or composition
    std::string gamma;     // weight, or "-" for per-subject cases
    std::string expected;
    std::string got;
    bool ok = false;
};

struct CheckReport {
    Conjecture conjecture;
    std::string scope;
    bool complete = true;
    bool violations_expected = false;  // known-false range (e.g. KKoh rule at n >= 8)
    double elapsed_seconds = 0.0;
    uint64_t seed = 0;
    bool used_sampling = false;
    std::vector<CheckCase> cases;
    std::vector<size_t> violations;  // indices into cases

    // 0 = clean, 1 = unexpected violation, 3 = incomplete (budget).
    int exit_code() const;
    std::string to_json_string(bool include_cases) const;
};

// Runs every in-scope case of the conjecture against the oracle.  Violations
// are streamed to `eager` (if given) as they are found.
CheckReport sweep(Conjecture c, const SweepOptions& options, std::ostream* eager = nullptr);

// The S_8 weight class where the solid/ghost move count drops below the pipe
// dream count, with the full per-label diagram lists for display.
struct CounterexampleWitness {
    Permutation w;
    WeakComposition gamma;
    long long pipes_count = 0;  // 3
    long long ry_count = 0;     // 2
    long long ghost_count = 0;  // 3
    std::vector<PipeDream> pipe_dreams;
    std::vector<LabeledDiagram> ry_diagrams;
    std::vector<LabeledDiagram> ghost_diagrams;
    bool matches_known = false;
    double elapsed_seconds = 0.0;
};
CounterexampleWitness counterexample_witness();

// The vexillary permutation whose KKoh counts undercount; the witnessing
// weight is discovered by scanning the support in lex order.
struct VexillaryWitness {
    Permutation w;
    WeakComposition gamma;        // first undercounted weight
    long long ry_count = 0;
    long long pipes_count = 0;    // g_{w,gamma}
    int mismatched_weights = 0;   // how many weights disagree in total
    bool found = false;
};
VexillaryWitness vexillary_witness();

// The S_8 weight class where the relaxed ghost rule overcounts (8 vs 7).
struct RelaxedOvercountWitness {
    Permutation w;
    WeakComposition gamma;
    long long relaxed_count = 0;
    long long ghost_count = 0;
    long long pipes_count = 0;
    bool matches_known = false;
};
RelaxedOvercountWitness relaxed_overcount_witness();

// Optional long-running scan: no w in S_8 with l(w) <= max_length violates the
// KKoh count rule.  Returns the number of violations found (expected 0).
long long minimality_scan(int max_length = 4, int jobs = 1, std::ostream* progress = nullptr);

}  // namespace groth
