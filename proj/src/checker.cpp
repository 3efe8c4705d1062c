#include "groth/checker.hpp"

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace groth {

std::string conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::KKohGrothendieck: return "kkoh-grothendieck";
        case Conjecture::GhostKKohGrothendieck: return "ghost-kkoh-grothendieck";
        case Conjecture::RelaxedKKohBound: return "relaxed-kkoh-bound";
        case Conjecture::PipesSchubert: return "pipes-schubert";
        case Conjecture::PipesGrothendieck: return "pipes-grothendieck";
        case Conjecture::KohnertSchubert: return "kohnert-schubert";
        case Conjecture::KKohLascoux: return "kkoh-lascoux";
        case Conjecture::FsvtKKohBijection: return "fsvt-kkoh-bijection";
        case Conjecture::FsvtGrothendieck: return "fsvt-grothendieck";
        case Conjecture::KKohGhostKeysEqual: return "kkoh-ghost-keys-equal";
    }
    throw std::logic_error("unknown conjecture");
}

Conjecture parse_conjecture(const std::string& name) {
    for (Conjecture c : {Conjecture::KKohGrothendieck, Conjecture::GhostKKohGrothendieck,
                         Conjecture::RelaxedKKohBound, Conjecture::PipesSchubert,
                         Conjecture::PipesGrothendieck, Conjecture::KohnertSchubert,
                         Conjecture::KKohLascoux, Conjecture::FsvtKKohBijection,
                         Conjecture::FsvtGrothendieck, Conjecture::KKohGhostKeysEqual})
        if (conjecture_name(c) == name) return c;
    throw std::invalid_argument("unknown conjecture: " + name);
}

bool conjecture_over_compositions(Conjecture c) {
    return c == Conjecture::KKohLascoux || c == Conjecture::KKohGhostKeysEqual;
}

int CheckReport::exit_code() const {
    if (!complete) return 3;
    if (!violations.empty() && !violations_expected) return 1;
    return 0;
}

std::string CheckReport::to_json_string(bool include_cases) const {
    nlohmann::json doc;
    doc["conjecture"] = conjecture_name(conjecture);
    doc["scope"] = scope;
    doc["complete"] = complete;
    doc["violations_expected"] = violations_expected;
    doc["elapsed_seconds"] = elapsed_seconds;
    if (used_sampling) doc["seed"] = seed;
    doc["num_cases"] = cases.size();
    doc["num_violations"] = violations.size();
    auto case_json = [](const CheckCase& cc) {
        nlohmann::json e;
        e["subject"] = cc.subject;
        e["gamma"] = cc.gamma;
        e["expected"] = cc.expected;
        e["got"] = cc.got;
        e["ok"] = cc.ok;
        return e;
    };
    nlohmann::json viols = nlohmann::json::array();
    for (size_t idx : violations) viols.push_back(case_json(cases[idx]));
    doc["violations"] = std::move(viols);
    if (include_cases) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckCase& cc : cases) arr.push_back(case_json(cc));
        doc["cases"] = std::move(arr);
    }
    return doc.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string coeff_str(const Coeff& c) { return c.str(); }

// Per-weight comparison of an oracle polynomial (absolute coefficients)
// against a closure histogram; keys run over the union of supports.
void compare_counts(const IntPolynomial& oracle_poly,
                    const std::map<WeakComposition, long long>& counts, const std::string& subject,
                    bool bound_only, std::vector<CheckCase>& out) {
    std::set<WeakComposition> keys;
    for (const auto& [e, c] : oracle_poly.terms()) keys.insert(WeakComposition(e));
    for (const auto& [k, v] : counts) keys.insert(k);
    for (const WeakComposition& k : keys) {
        Coeff g = abs(oracle_poly.coefficient(k));
        auto it = counts.find(k);
        Coeff got = it == counts.end() ? 0 : it->second;
        bool ok = bound_only ? got >= g : got == g;
        out.push_back({subject, k.to_string(), coeff_str(g), coeff_str(got), ok});
    }
}

// Signed per-weight comparison of two polynomials.
void compare_polynomials(const IntPolynomial& expected, const IntPolynomial& got,
                         const std::string& subject, std::vector<CheckCase>& out) {
    std::set<WeakComposition> keys;
    for (const auto& [e, c] : expected.terms()) keys.insert(WeakComposition(e));
    for (const auto& [e, c] : got.terms()) keys.insert(WeakComposition(e));
    for (const WeakComposition& k : keys) {
        Coeff a = expected.coefficient(k);
        Coeff b = got.coefficient(k);
        out.push_back({subject, k.to_string(), coeff_str(a), coeff_str(b), a == b});
    }
}

std::map<WeakComposition, long long> closure_histogram(const Diagram& seed, Ruleset rules,
                                                       size_t max_states, bool& complete) {
    ClosureResult res = closure(seed, rules, max_states);
    if (!res.complete) complete = false;
    return weight_histogram(res.diagrams);
}

std::vector<CheckCase> run_permutation_subject(Conjecture c, const Permutation& w,
                                               PolynomialOracle& oracle, size_t max_states,
                                               bool& complete) {
    std::vector<CheckCase> out;
    std::string subject = w.to_string();
    switch (c) {
        case Conjecture::KKohGrothendieck:
            compare_counts(oracle.grothendieck(w),
                           closure_histogram(rothe_diagram(w), Ruleset::RY, max_states, complete),
                           subject, false, out);
            break;
        case Conjecture::GhostKKohGrothendieck:
            compare_counts(oracle.grothendieck(w),
                           closure_histogram(rothe_diagram(w), Ruleset::Ghost, max_states, complete),
                           subject, false, out);
            break;
        case Conjecture::RelaxedKKohBound:
            compare_counts(
                oracle.grothendieck(w),
                closure_histogram(rothe_diagram(w), Ruleset::Relaxed, max_states, complete),
                subject, true, out);
            break;
        case Conjecture::PipesSchubert:
            compare_polynomials(oracle.schubert(w), schubert_via_pipes(w), subject, out);
            break;
        case Conjecture::PipesGrothendieck:
            compare_polynomials(oracle.grothendieck(w), grothendieck_via_pipes(w), subject, out);
            break;
        case Conjecture::KohnertSchubert:
            compare_polynomials(oracle.schubert(w), schubert_via_kohnert(w), subject, out);
            break;
        case Conjecture::FsvtGrothendieck:
            compare_polynomials(oracle.grothendieck(w), grothendieck_via_fsvt(w), subject, out);
            break;
        case Conjecture::FsvtKKohBijection: {
            auto pairs = bijection_f(w);
            std::set<LabeledDiagram> image;
            bool weight_ok = true;
            for (const auto& [t, d] : pairs) {
                if (!(d.weight() == t.weight().padded(w.size()))) weight_ok = false;
                image.insert(d);
            }
            bool injective = image.size() == pairs.size();
            auto reach = closure(rothe_diagram(w), Ruleset::RY, max_states);
            if (!reach.complete) complete = false;
            std::set<LabeledDiagram> target(reach.diagrams.begin(), reach.diagrams.end());
            bool onto = image == target;
            std::string got = weight_ok && injective && onto
                                  ? "bijection"
                                  : std::string(weight_ok ? "" : "weight-broken ") +
                                        (injective ? "" : "not-injective ") +
                                        (onto ? "" : "not-onto");
            out.push_back({subject, "-", "bijection", got, got == "bijection"});
            break;
        }
        default:
            throw std::logic_error("composition conjecture passed a permutation");
    }
    return out;
}

std::vector<CheckCase> run_composition_subject(Conjecture c, const WeakComposition& alpha,
                                               PolynomialOracle& oracle, size_t max_states,
                                               bool& complete) {
    std::vector<CheckCase> out;
    std::string subject = alpha.to_string();
    switch (c) {
        case Conjecture::KKohLascoux:
            compare_counts(oracle.lascoux(alpha),
                           closure_histogram(key_diagram(alpha), Ruleset::RY, max_states, complete),
                           subject, false, out);
            break;
        case Conjecture::KKohGhostKeysEqual: {
            auto ry = closure(key_diagram(alpha), Ruleset::RY, max_states);
            auto ghost = closure(key_diagram(alpha), Ruleset::Ghost, max_states);
            if (!ry.complete || !ghost.complete) complete = false;
            bool equal = ry.diagrams == ghost.diagrams;
            out.push_back({subject, "-", "equal-sets",
                           equal ? "equal-sets"
                                 : "differ (" + std::to_string(ry.diagrams.size()) + " vs " +
                                       std::to_string(ghost.diagrams.size()) + ")",
                           equal});
            break;
        }
        default:
            throw std::logic_error("permutation conjecture passed a composition");
    }
    return out;
}

// Deterministic distinct sampling of ranks in [0, limit).
std::vector<uint64_t> sample_ranks(uint64_t limit, int count, uint64_t seed) {
    if (static_cast<uint64_t>(count) >= limit) {
        std::vector<uint64_t> all(limit);
        for (uint64_t i = 0; i < limit; ++i) all[i] = i;
        return all;
    }
    // splitmix64 stream with rejection; independent of std library distributions.
    uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    uint64_t bound = UINT64_MAX - UINT64_MAX % limit;
    std::set<uint64_t> picked;
    while (picked.size() < static_cast<size_t>(count)) {
        uint64_t r = next();
        if (r < bound) picked.insert(r % limit);
    }
    return {picked.begin(), picked.end()};
}

std::vector<WeakComposition> composition_subjects(int n, int parts_bound, const Sampling& s) {
    uint64_t base = static_cast<uint64_t>(parts_bound) + 1;
    uint64_t limit = 1;
    for (int i = 0; i < n; ++i) limit *= base;
    auto decode = [&](uint64_t code) {
        std::vector<int> parts(static_cast<size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            parts[static_cast<size_t>(i)] = static_cast<int>(code % base);
            code /= base;
        }
        return WeakComposition(std::move(parts));
    };
    std::vector<WeakComposition> out;
    if (s.mode == Sampling::Mode::Exhaustive) {
        for (uint64_t code = 0; code < limit; ++code) out.push_back(decode(code));
    } else {
        for (uint64_t code : sample_ranks(limit, s.count, s.seed)) out.push_back(decode(code));
    }
    return out;
}

std::vector<Permutation> permutation_subjects(int n, const Sampling& s, bool only_321_avoiding) {
    std::vector<Permutation> out;
    if (s.mode == Sampling::Mode::Exhaustive) {
        for (const Permutation& w : all_permutations(n))
            if (!only_321_avoiding || !contains_pattern(w, Permutation({3, 2, 1})))
                out.push_back(w);
    } else {
        for (uint64_t rank : sample_ranks(factorial(n), s.count, s.seed)) {
            Permutation w = Permutation::lex_unrank(n, rank);
            if (!only_321_avoiding || !contains_pattern(w, Permutation({3, 2, 1})))
                out.push_back(w);
        }
    }
    return out;
}

}  // namespace

CheckReport sweep(Conjecture c, const SweepOptions& options, std::ostream* eager) {
    auto start = Clock::now();
    CheckReport report;
    report.conjecture = c;
    report.used_sampling = options.sampling.mode == Sampling::Mode::Random;
    report.seed = options.sampling.seed;
    // The solid/ghost counting rule is known to fail from S_8 on.
    report.violations_expected = c == Conjecture::KKohGrothendieck && options.n >= 8;

    bool fsvt_only = c == Conjecture::FsvtKKohBijection || c == Conjecture::FsvtGrothendieck;
    std::string domain;
    std::vector<Permutation> perms;
    std::vector<WeakComposition> comps;
    if (conjecture_over_compositions(c)) {
        comps = composition_subjects(options.n, options.parts_bound, options.sampling);
        domain = "compositions n=" + std::to_string(options.n) +
                 " parts<=" + std::to_string(options.parts_bound);
    } else {
        perms = permutation_subjects(options.n, options.sampling, fsvt_only);
        domain = (fsvt_only ? "321-avoiding S_" : "S_") + std::to_string(options.n);
    }
    size_t num_subjects = conjecture_over_compositions(c) ? comps.size() : perms.size();
    report.scope = domain + (report.used_sampling
                                 ? " random k=" + std::to_string(options.sampling.count) +
                                       " seed=" + std::to_string(options.sampling.seed)
                                 : " exhaustive");

    std::vector<std::vector<CheckCase>> results(num_subjects);
    std::atomic<size_t> cursor{0};
    std::atomic<bool> complete{true};
    std::mutex eager_mutex;

    auto worker = [&]() {
        PolynomialOracle oracle;
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= num_subjects) break;
            bool subject_complete = true;
            std::vector<CheckCase> cases =
                conjecture_over_compositions(c)
                    ? run_composition_subject(c, comps[i], oracle, options.max_states,
                                              subject_complete)
                    : run_permutation_subject(c, perms[i], oracle, options.max_states,
                                              subject_complete);
            if (!subject_complete) complete.store(false);
            if (eager) {
                std::lock_guard<std::mutex> lock(eager_mutex);
                for (const CheckCase& cc : cases)
                    if (!cc.ok)
                        *eager << "violation: " << conjecture_name(c) << " subject=" << cc.subject
                               << " gamma=" << cc.gamma << " expected=" << cc.expected
                               << " got=" << cc.got << "\n";
            }
            results[i] = std::move(cases);
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    report.complete = complete.load();
    for (auto& cases : results)
        for (auto& cc : cases) {
            if (!cc.ok) report.violations.push_back(report.cases.size());
            report.cases.push_back(std::move(cc));
        }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

CounterexampleWitness counterexample_witness() {
    auto start = Clock::now();
    CounterexampleWitness out{Permutation::parse("12365847"),
                              WeakComposition({3, 3, 3, 2, 0, 0, 0, 0})};
    out.pipe_dreams = enumerate_pipes_with_weight(out.w, out.gamma);
    out.pipes_count = static_cast<long long>(out.pipe_dreams.size());

    for (const LabeledDiagram& d : closure(rothe_diagram(out.w), Ruleset::RY).diagrams)
        if (d.weight() == out.gamma) out.ry_diagrams.push_back(d);
    for (const LabeledDiagram& d : closure(rothe_diagram(out.w), Ruleset::Ghost).diagrams)
        if (d.weight() == out.gamma) out.ghost_diagrams.push_back(d);
    out.ry_count = static_cast<long long>(out.ry_diagrams.size());
    out.ghost_count = static_cast<long long>(out.ghost_diagrams.size());
    out.matches_known = out.pipes_count == 3 && out.ry_count == 2 && out.ghost_count == 3;
    out.elapsed_seconds = seconds_since(start);
    return out;
}

VexillaryWitness vexillary_witness() {
    VexillaryWitness out{Permutation::parse("12375846"), WeakComposition::zeros(8)};
    PolynomialOracle oracle;
    const IntPolynomial& g = oracle.grothendieck(out.w);
    auto counts = weight_histogram(closure(rothe_diagram(out.w), Ruleset::RY).diagrams);
    std::set<WeakComposition> keys;
    for (const auto& [e, c] : g.terms()) keys.insert(WeakComposition(e));
    for (const auto& [k, v] : counts) keys.insert(k);
    for (const WeakComposition& k : keys) {
        long long expect = static_cast<long long>(abs(g.coefficient(k)));
        long long got = counts.count(k) ? counts.at(k) : 0;
        if (expect != got) {
            if (!out.found) {
                out.found = true;
                out.gamma = k;
                out.ry_count = got;
                out.pipes_count = expect;
            }
            ++out.mismatched_weights;
        }
    }
    return out;
}

RelaxedOvercountWitness relaxed_overcount_witness() {
    RelaxedOvercountWitness out{Permutation::parse("12385746"),
                                WeakComposition({1, 4, 1, 2, 0, 0, 0, 0})};
    out.relaxed_count = closure_weight_count(out.w, out.gamma, Ruleset::Relaxed);
    out.ghost_count = closure_weight_count(out.w, out.gamma, Ruleset::Ghost);
    out.pipes_count =
        static_cast<long long>(enumerate_pipes_with_weight(out.w, out.gamma).size());
    out.matches_known = out.relaxed_count == 8 && out.pipes_count == 7 && out.ghost_count == 7;
    return out;
}

long long minimality_scan(int max_length, int jobs, std::ostream* progress) {
    std::vector<Permutation> subjects;
    for (const Permutation& w : all_permutations(8))
        if (w.length() <= max_length) subjects.push_back(w);
    if (progress) *progress << "scanning " << subjects.size() << " permutations of S_8 with l(w) <= "
                            << max_length << "\n";

    std::atomic<size_t> cursor{0};
    std::atomic<long long> violations{0};
    std::mutex progress_mutex;
    auto worker = [&]() {
        PolynomialOracle oracle;
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= subjects.size()) break;
            const Permutation& w = subjects[i];
            const IntPolynomial& g = oracle.grothendieck(w);
            auto counts = weight_histogram(closure(rothe_diagram(w), Ruleset::RY).diagrams);
            std::set<WeakComposition> keys;
            for (const auto& [e, c] : g.terms()) keys.insert(WeakComposition(e));
            for (const auto& [k, v] : counts) keys.insert(k);
            for (const WeakComposition& k : keys) {
                long long expect = static_cast<long long>(abs(g.coefficient(k)));
                long long got = counts.count(k) ? counts.at(k) : 0;
                if (expect != got) {
                    ++violations;
                    if (progress) {
                        std::lock_guard<std::mutex> lock(progress_mutex);
                        *progress << "violation at w=" << w.to_string() << " gamma=" << k.to_string()
                                  << " expected=" << expect << " got=" << got << "\n";
                    }
                }
            }
            if (progress && (i + 1) % 50 == 0) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                *progress << (i + 1) << "/" << subjects.size() << " scanned\n";
            }
        }
    };
    int j = std::max(1, jobs);
    if (j == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < j; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return violations.load();
}

}  // namespace groth
