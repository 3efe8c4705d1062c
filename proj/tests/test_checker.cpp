#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "groth/checker.hpp"

using namespace groth;

TEST_CASE("conjecture names round-trip") {
    for (Conjecture c : {Conjecture::KKohGrothendieck, Conjecture::GhostKKohGrothendieck,
                         Conjecture::RelaxedKKohBound, Conjecture::PipesSchubert,
                         Conjecture::PipesGrothendieck, Conjecture::KohnertSchubert,
                         Conjecture::KKohLascoux, Conjecture::FsvtKKohBijection,
                         Conjecture::FsvtGrothendieck, Conjecture::KKohGhostKeysEqual})
        CHECK(parse_conjecture(conjecture_name(c)) == c);
    CHECK_THROWS_AS(parse_conjecture("nope"), std::invalid_argument);
}

TEST_CASE("small exhaustive sweeps are clean") {
    SweepOptions opt;
    opt.n = 4;
    for (Conjecture c : {Conjecture::KKohGrothendieck, Conjecture::GhostKKohGrothendieck,
                         Conjecture::RelaxedKKohBound, Conjecture::PipesSchubert,
                         Conjecture::PipesGrothendieck, Conjecture::KohnertSchubert,
                         Conjecture::FsvtKKohBijection, Conjecture::FsvtGrothendieck}) {
        CheckReport r = sweep(c, opt);
        CHECK(r.violations.empty());
        CHECK(r.complete);
        CHECK(r.exit_code() == 0);
        CHECK(r.cases.size() > 0);
    }

    opt.n = 3;
    opt.parts_bound = 2;
    for (Conjecture c : {Conjecture::KKohLascoux, Conjecture::KKohGhostKeysEqual}) {
        CheckReport r = sweep(c, opt);
        CHECK(r.violations.empty());
        CHECK(r.exit_code() == 0);
        CHECK(r.cases.size() > 0);
    }
}

TEST_CASE("sampled sweeps are deterministic given the seed") {
    SweepOptions opt;
    opt.n = 5;
    opt.sampling.mode = Sampling::Mode::Random;
    opt.sampling.count = 10;
    opt.sampling.seed = 42;
    CheckReport a = sweep(Conjecture::KohnertSchubert, opt);
    CheckReport b = sweep(Conjecture::KohnertSchubert, opt);
    REQUIRE(a.cases.size() == b.cases.size());
    for (size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].subject == b.cases[i].subject);
        CHECK(a.cases[i].gamma == b.cases[i].gamma);
        CHECK(a.cases[i].got == b.cases[i].got);
    }
    CHECK(a.scope == b.scope);

    opt.jobs = 2;
    CheckReport c = sweep(Conjecture::KohnertSchubert, opt);
    REQUIRE(c.cases.size() == a.cases.size());
    for (size_t i = 0; i < a.cases.size(); ++i) CHECK(a.cases[i].subject == c.cases[i].subject);
}

TEST_CASE("violations stream eagerly and budget marks reports incomplete") {
    SweepOptions opt;
    opt.n = 3;
    opt.max_states = 2;
    std::ostringstream eager;
    CheckReport r = sweep(Conjecture::KKohGrothendieck, opt, &eager);
    CHECK_FALSE(r.complete);
    CHECK(r.exit_code() == 3);
    // truncated closures miss weights, so the stream saw the mismatches
    CHECK(eager.str().find("violation:") != std::string::npos);
}

TEST_CASE("counterexample witness reproduces the published counts") {
    CounterexampleWitness wit = counterexample_witness();
    CHECK(wit.pipes_count == 3);
    CHECK(wit.ry_count == 2);
    CHECK(wit.ghost_count == 3);
    CHECK(wit.matches_known);
    CHECK(wit.ry_diagrams.size() == 2);
    CHECK(wit.ghost_diagrams.size() == 3);
    // the two solid/ghost-rule diagrams appear among the three ghost-rule ones
    for (const LabeledDiagram& d : wit.ry_diagrams)
        CHECK(std::find(wit.ghost_diagrams.begin(), wit.ghost_diagrams.end(), d) !=
              wit.ghost_diagrams.end());
}

TEST_CASE("relaxed overcount witness") {
    RelaxedOvercountWitness wit = relaxed_overcount_witness();
    CHECK(wit.relaxed_count == 8);
    CHECK(wit.ghost_count == 7);
    CHECK(wit.pipes_count == 7);
    CHECK(wit.matches_known);
}

TEST_CASE("vexillary witness discovery") {
    VexillaryWitness wit = vexillary_witness();
    REQUIRE(wit.found);
    // Discovered and frozen: the lex-first undercounted weight for 12375846.
    // Independently confirmed: pipe dream enumeration also counts 7 here.
    CHECK(wit.gamma == WeakComposition({1, 3, 2, 1, 0, 0, 0, 0}));
    CHECK(wit.ry_count == 6);
    CHECK(wit.pipes_count == 7);
    CHECK(wit.mismatched_weights == 112);
    CHECK(static_cast<long long>(
              enumerate_pipes_with_weight(wit.w, wit.gamma).size()) == wit.pipes_count);
}

TEST_CASE("report json shape") {
    SweepOptions opt;
    opt.n = 3;
    CheckReport r = sweep(Conjecture::PipesSchubert, opt);
    std::string js = r.to_json_string(false);
    CHECK(js.find("\"conjecture\":\"pipes-schubert\"") != std::string::npos);
    CHECK(js.find("\"num_violations\":0") != std::string::npos);
}
