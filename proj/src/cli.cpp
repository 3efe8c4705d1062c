#include "groth/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "groth/checker.hpp"

namespace groth::cli {

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3;

struct Budget {
    uint64_t states = UINT64_MAX;
};

std::string diagram_json(const Diagram& d) {
    nlohmann::json doc;
    doc["n"] = d.grid_size();
    nlohmann::json arr = nlohmann::json::array();
    for (const Cell& c : d.cells()) arr.push_back({c.row, c.col});
    doc["cells"] = std::move(arr);
    return doc.dump();
}

Diagram diagram_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<Cell> cells;
    for (const auto& c : doc.at("cells")) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return Diagram(doc.at("n").get<int>(), std::move(cells));
}

// Output ordering for closures: lexicographic by weight, then canonical form.
void sort_for_output(std::vector<LabeledDiagram>& diagrams) {
    std::sort(diagrams.begin(), diagrams.end(), [](const LabeledDiagram& a, const LabeledDiagram& b) {
        WeakComposition wa = a.weight(), wb = b.weight();
        if (!(wa == wb)) return wa < wb;
        return a < b;
    });
}

int signed_unit(int parity) { return parity % 2 == 0 ? 1 : -1; }

void print_coefficient(const IntPolynomial& f, const WeakComposition& gamma, int base_degree,
                       const std::string& format, std::ostream& out) {
    WeakComposition padded = gamma.padded(f.num_vars());
    Coeff c = f.coefficient(padded);
    Coeff a = abs(c);
    int sign = signed_unit(padded.sum() - base_degree);
    if (format == "json") {
        nlohmann::json doc;
        doc["gamma"] = padded.to_string();
        doc["abs"] = a.str();
        doc["sign"] = sign;
        doc["coefficient"] = c.str();
        out << doc.dump() << "\n";
    } else {
        out << "abs=" << a.str() << " sign=" << (sign > 0 ? "+1" : "-1") << " coefficient=" << c.str()
            << "\n";
    }
}

struct BudgetExceeded {};

IntPolynomial closure_polynomial(const Diagram& seed, Ruleset rules, int base, const Budget& budget) {
    ClosureResult res = closure(seed, rules, budget.states);
    if (!res.complete) throw BudgetExceeded{};
    return polynomial_from_diagrams(res.diagrams, base, seed.grid_size());
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert, Grothendieck, and Lascoux polynomials by multiple combinatorial rules"};
    app.name("groth");

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "Compute a polynomial by a chosen rule");
    std::string kind, arg, method = "recursion", coeff_str;
    compute->add_option("kind", kind, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"schubert", "grothendieck", "lascoux"}));
    compute->add_option("arg", arg, "Permutation (schubert/grothendieck) or composition (lascoux)")
        ->required();
    compute->add_option("--method", method,
                        "schubert: recursion|pipes|plain; grothendieck: recursion|pipes|ghost|"
                        "relaxed|ry|fsvt; lascoux: recursion|ry|ghost|svkt|fsvt");
    compute->add_option("--coeff", coeff_str, "Print only the coefficient of x^gamma");
    uint64_t compute_budget = UINT64_MAX;
    compute->add_option("--budget", compute_budget, "Max closure states");

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate pipe dreams or move closures");
    std::string enum_what, enum_perm, enum_alpha, enum_weight, enum_ruleset = "ry";
    bool full_grid = false;
    enumerate->add_option("what", enum_what, "pipes or closure")
        ->required()
        ->check(CLI::IsMember({"pipes", "closure"}));
    enumerate->add_option("--perm", enum_perm, "Permutation (Rothe diagram seed)");
    enumerate->add_option("--alpha", enum_alpha, "Composition (key diagram seed)");
    enumerate->add_option("--weight", enum_weight, "Restrict to this weight");
    enumerate->add_option("--ruleset", enum_ruleset, "plain|ry|ghost|relaxed")
        ->check(CLI::IsMember({"plain", "ry", "ghost", "relaxed"}));
    enumerate->add_flag("--full-grid", full_grid, "Search the full grid, not the staircase");
    uint64_t enum_budget = UINT64_MAX;
    enumerate->add_option("--budget", enum_budget, "Max states / search steps");

    // ---- check ----
    auto* check = app.add_subcommand("check", "Verify rules against the oracle");
    std::string check_what, conjecture;
    int check_n = 5, sample = 0, jobs = 1, parts_bound = 3;
    uint64_t seed = 0;
    bool minimality = false, with_cases = false;
    check->add_option("what", check_what, "counterexample or sweep")
        ->required()
        ->check(CLI::IsMember({"counterexample", "sweep"}));
    check->add_option("--conjecture", conjecture,
                      "kkoh-grothendieck|ghost-kkoh-grothendieck|relaxed-kkoh-bound|pipes-schubert|"
                      "pipes-grothendieck|kohnert-schubert|kkoh-lascoux|fsvt-kkoh-bijection|"
                      "fsvt-grothendieck|kkoh-ghost-keys-equal");
    check->add_option("--n", check_n, "Symmetric group / composition length");
    check->add_option("--sample", sample, "Random subjects instead of exhaustive");
    check->add_option("--seed", seed, "Sampling seed");
    check->add_option("--jobs", jobs, "Worker threads");
    check->add_option("--parts-bound", parts_bound, "Composition sweeps: max part");
    uint64_t check_budget = UINT64_MAX;
    check->add_option("--budget", check_budget, "Max closure states per case");
    check->add_flag("--minimality", minimality, "Also scan S_8 up to length 4 (slow)");
    check->add_flag("--with-cases", with_cases, "Include every case in JSON output");

    // ---- bijection ----
    auto* bijection = app.add_subcommand("bijection", "Trace the tableau-to-diagram bijection");
    std::string bij_perm, tableau_json, tableau_file;
    int bij_index = -1;
    bijection->add_option("--perm", bij_perm, "321-avoiding permutation")->required();
    bijection->add_option("--tableau-json", tableau_json, "Tableau as inline JSON");
    bijection->add_option("--tableau-file", tableau_file, "Tableau JSON file ('-' = stdin)");
    bijection->add_option("--index", bij_index, "Trace the k-th tableau (0-based)");

    // ---- render ----
    auto* render = app.add_subcommand("render", "Convert artifacts between text and JSON");
    std::string r_kind, r_from = "text", r_to = "json", r_in;
    render->add_option("--kind", r_kind, "diagram|labeled|pipedream|tableau|polynomial")
        ->required()
        ->check(CLI::IsMember({"diagram", "labeled", "pipedream", "tableau", "polynomial"}));
    render->add_option("--from", r_from)->check(CLI::IsMember({"text", "json"}));
    render->add_option("--to", r_to)->check(CLI::IsMember({"text", "json"}));
    render->add_option("--in", r_in, "Input file (default stdin)");
    int r_num_vars = 0;
    render->add_option("--num-vars", r_num_vars, "Polynomial text parsing: number of variables");

    app.require_subcommand(1);
    for (CLI::App* sub : {compute, enumerate, check, bijection, render}) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("groth");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Budget budget;
        if (compute->parsed()) {
            budget.states = compute_budget;
            IntPolynomial f(1);
            int base_degree = 0;
            if (kind == "lascoux") {
                WeakComposition alpha = WeakComposition::parse(arg);
                base_degree = alpha.sum();
                PolynomialOracle oracle;
                if (method == "recursion")
                    f = oracle.lascoux(alpha);
                else if (method == "ry")
                    f = closure_polynomial(key_diagram(alpha), Ruleset::RY, alpha.sum(), budget);
                else if (method == "ghost")
                    f = closure_polynomial(key_diagram(alpha), Ruleset::Ghost, alpha.sum(), budget);
                else if (method == "svkt")
                    f = lascoux_via_svkt(alpha);
                else if (method == "fsvt")
                    f = lascoux_via_fsvt(alpha);
                else
                    throw std::invalid_argument("method not available for lascoux: " + method);
            } else {
                Permutation w = Permutation::parse(arg);
                PolynomialOracle oracle;
                if (kind == "schubert") {
                    base_degree = w.length();
                    if (method == "recursion")
                        f = oracle.schubert(w);
                    else if (method == "pipes")
                        f = schubert_via_pipes(w);
                    else if (method == "plain")
                        f = closure_polynomial(rothe_diagram(w), Ruleset::Plain, w.length(), budget);
                    else
                        throw std::invalid_argument("method not available for schubert: " + method);
                } else {
                    base_degree = w.length();
                    if (method == "recursion")
                        f = oracle.grothendieck(w);
                    else if (method == "pipes")
                        f = grothendieck_via_pipes(w);
                    else if (method == "ghost")
                        f = closure_polynomial(rothe_diagram(w), Ruleset::Ghost, w.length(), budget);
                    else if (method == "relaxed")
                        f = closure_polynomial(rothe_diagram(w), Ruleset::Relaxed, w.length(),
                                               budget);
                    else if (method == "ry")
                        f = closure_polynomial(rothe_diagram(w), Ruleset::RY, w.length(), budget);
                    else if (method == "fsvt")
                        f = grothendieck_via_fsvt(w);
                    else
                        throw std::invalid_argument("method not available for grothendieck: " +
                                                    method);
                }
            }
            if (!coeff_str.empty()) {
                print_coefficient(f, WeakComposition::parse(coeff_str), base_degree, format, out);
            } else if (format == "json") {
                out << f.to_json_string() << "\n";
            } else {
                out << f.to_text() << "\n";
            }
            return kOk;
        }

        if (enumerate->parsed()) {
            budget.states = enum_budget;
            if (enum_what == "pipes") {
                if (enum_perm.empty() || enum_weight.empty())
                    throw std::invalid_argument("enumerate pipes requires --perm and --weight");
                Permutation w = Permutation::parse(enum_perm);
                WeakComposition gamma = WeakComposition::parse(enum_weight).padded(w.size());
                auto res = enumerate_pipes_with_weight_budgeted(w, gamma, full_grid, budget.states);
                for (const PipeDream& p : res.dreams) {
                    if (format == "json")
                        out << p.to_json_string() << "\n";
                    else
                        out << p.to_text() << "\n";
                }
                if (format == "text") out << "count: " << res.dreams.size() << "\n";
                if (!res.complete) {
                    err << "partial output: search budget exceeded\n";
                    return kBudget;
                }
                return kOk;
            }
            // closure
            Diagram seed = Diagram::empty(0);
            if (!enum_perm.empty() && enum_alpha.empty())
                seed = rothe_diagram(Permutation::parse(enum_perm));
            else if (enum_perm.empty() && !enum_alpha.empty())
                seed = key_diagram(WeakComposition::parse(enum_alpha));
            else
                throw std::invalid_argument("enumerate closure requires exactly one of --perm/--alpha");
            ClosureResult res = closure(seed, parse_ruleset(enum_ruleset), budget.states);
            std::vector<LabeledDiagram> diagrams = res.diagrams;
            if (!enum_weight.empty()) {
                WeakComposition gamma = WeakComposition::parse(enum_weight).padded(seed.grid_size());
                std::erase_if(diagrams, [&](const LabeledDiagram& d) { return !(d.weight() == gamma); });
            }
            sort_for_output(diagrams);
            for (const LabeledDiagram& d : diagrams) {
                if (format == "json")
                    out << d.to_json_string() << "\n";
                else
                    out << d.to_text() << "\n";
            }
            if (format == "text") out << "count: " << diagrams.size() << "\n";
            if (!res.complete) {
                err << "partial output: closure budget exceeded\n";
                return kBudget;
            }
            return kOk;
        }

        if (check->parsed()) {
            if (check_what == "counterexample") {
                CounterexampleWitness main_wit = counterexample_witness();
                VexillaryWitness vex = vexillary_witness();
                RelaxedOvercountWitness relaxed = relaxed_overcount_witness();
                bool all_known = main_wit.matches_known && vex.found &&
                                 vex.ry_count < vex.pipes_count && relaxed.matches_known;
                long long minimality_violations = -1;
                if (minimality) minimality_violations = minimality_scan(4, jobs, &err);

                if (format == "json") {
                    nlohmann::json doc;
                    doc["w"] = main_wit.w.to_string();
                    doc["gamma"] = main_wit.gamma.to_string();
                    doc["pipes_count"] = main_wit.pipes_count;
                    doc["kkoh_count"] = main_wit.ry_count;
                    doc["ghost_kkoh_count"] = main_wit.ghost_count;
                    doc["kkoh_diagrams"] = nlohmann::json::array();
                    for (const auto& d : main_wit.ry_diagrams)
                        doc["kkoh_diagrams"].push_back(nlohmann::json::parse(d.to_json_string()));
                    doc["ghost_kkoh_diagrams"] = nlohmann::json::array();
                    for (const auto& d : main_wit.ghost_diagrams)
                        doc["ghost_kkoh_diagrams"].push_back(
                            nlohmann::json::parse(d.to_json_string()));
                    doc["vexillary"] = {{"w", vex.w.to_string()},
                                        {"gamma", vex.gamma.to_string()},
                                        {"kkoh_count", vex.ry_count},
                                        {"pipes_count", vex.pipes_count},
                                        {"mismatched_weights", vex.mismatched_weights}};
                    doc["relaxed_overcount"] = {{"w", relaxed.w.to_string()},
                                                {"gamma", relaxed.gamma.to_string()},
                                                {"relaxed_count", relaxed.relaxed_count},
                                                {"pipes_count", relaxed.pipes_count}};
                    doc["matches_known"] = all_known;
                    if (minimality) doc["minimality_violations"] = minimality_violations;
                    out << doc.dump() << "\n";
                } else {
                    out << "w = " << main_wit.w.to_string()
                        << ", gamma = " << main_wit.gamma.to_string() << "\n";
                    out << "pipe dreams (g): " << main_wit.pipes_count << "\n";
                    out << "solid/ghost move rule: " << main_wit.ry_count << "\n";
                    out << "ghost move rule: " << main_wit.ghost_count << "\n\n";
                    out << "solid/ghost rule diagrams:\n";
                    for (const auto& d : main_wit.ry_diagrams) out << d.to_text() << "\n";
                    out << "ghost rule diagrams:\n";
                    for (const auto& d : main_wit.ghost_diagrams) out << d.to_text() << "\n";
                    out << "vexillary case w = " << vex.w.to_string() << ": first undercount at "
                        << vex.gamma.to_string() << " (" << vex.ry_count << " < " << vex.pipes_count
                        << "), " << vex.mismatched_weights << " weights undercounted\n";
                    out << "relaxed overcount w = " << relaxed.w.to_string() << " gamma "
                        << relaxed.gamma.to_string() << ": " << relaxed.relaxed_count << " > g = "
                        << relaxed.pipes_count << "\n";
                    if (minimality)
                        out << "minimality scan violations: " << minimality_violations << "\n";
                    out << (all_known ? "status: matches known values\n"
                                      : "status: MISMATCH with known values\n");
                }
                if (minimality && minimality_violations != 0) return kViolation;
                return all_known ? kOk : kViolation;
            }
            // sweep
            if (conjecture.empty())
                throw std::invalid_argument("check sweep requires --conjecture");
            SweepOptions opt;
            opt.n = check_n;
            opt.jobs = jobs;
            opt.parts_bound = parts_bound;
            opt.max_states = check_budget;
            if (sample > 0) {
                opt.sampling.mode = Sampling::Mode::Random;
                opt.sampling.count = sample;
                opt.sampling.seed = seed;
            }
            CheckReport report = sweep(parse_conjecture(conjecture), opt, &err);
            if (format == "json") {
                out << report.to_json_string(with_cases) << "\n";
            } else {
                out << "conjecture: " << conjecture_name(report.conjecture) << "\n";
                out << "scope: " << report.scope << "\n";
                out << "cases: " << report.cases.size() << "\n";
                out << "violations: " << report.violations.size()
                    << (report.violations_expected ? " (expected in this range)" : "") << "\n";
                out << "complete: " << (report.complete ? "yes" : "no") << "\n";
                out << "elapsed_seconds: " << report.elapsed_seconds << "\n";
            }
            return report.exit_code();
        }

        if (bijection->parsed()) {
            Permutation w = Permutation::parse(bij_perm);
            auto trace_one = [&](const SetValuedTableau& t) {
                BijectionStages stages = bijection_apply(w, t);
                if (format == "json") {
                    nlohmann::json doc;
                    doc["input"] = nlohmann::json::parse(stages.input.to_json_string());
                    doc["extended"] = nlohmann::json::parse(stages.extended.to_json_string());
                    doc["compacted"] =
                        nlohmann::json::parse(stages.compacted.tableau.to_json_string());
                    doc["column_map"] = stages.compacted.column_map;
                    doc["encoded_o"] = nlohmann::json::parse(diagram_json(stages.encoded_o));
                    doc["encoded_g"] = nlohmann::json::parse(diagram_json(stages.encoded_g));
                    doc["key_image"] = nlohmann::json::parse(stages.key_image.to_json_string());
                    doc["image"] = nlohmann::json::parse(stages.image.to_json_string());
                    out << doc.dump() << "\n";
                } else {
                    out << "input tableau:\n" << stages.input.to_text();
                    out << "extended to the hook closure:\n" << stages.extended.to_text();
                    out << "columns compacted (map:";
                    for (int c : stages.compacted.column_map) out << " " << c;
                    out << "):\n" << stages.compacted.tableau.to_text();
                    out << "pair encoding, maxima:\n" << stages.encoded_o.to_text();
                    out << "pair encoding, lower entries:\n" << stages.encoded_g.to_text();
                    out << "labeled diagram over the key shape:\n" << stages.key_image.to_text();
                    out << "image in the move closure of D(w):\n" << stages.image.to_text();
                }
            };
            if (!tableau_json.empty()) {
                trace_one(SetValuedTableau::from_json_string(tableau_json));
            } else if (!tableau_file.empty()) {
                trace_one(SetValuedTableau::from_json_string(read_input(tableau_file)));
            } else if (bij_index >= 0) {
                auto domain = enumerate_fsvt(rothe_diagram(w));
                if (bij_index >= static_cast<int>(domain.size()))
                    throw std::invalid_argument("tableau index out of range (domain size " +
                                                std::to_string(domain.size()) + ")");
                trace_one(domain[static_cast<size_t>(bij_index)]);
            } else {
                for (const auto& [t, d] : bijection_f(w)) {
                    if (format == "json") {
                        nlohmann::json doc;
                        doc["tableau"] = nlohmann::json::parse(t.to_json_string());
                        doc["image"] = nlohmann::json::parse(d.to_json_string());
                        out << doc.dump() << "\n";
                    } else {
                        out << t.to_text() << "maps to\n" << d.to_text() << "\n";
                    }
                }
            }
            return kOk;
        }

        if (render->parsed()) {
            std::string input = read_input(r_in);
            std::string result;
            if (r_kind == "diagram") {
                Diagram d = r_from == "text" ? Diagram::from_text(input) : diagram_from_json(input);
                result = r_to == "text" ? d.to_text() : diagram_json(d) + "\n";
            } else if (r_kind == "labeled") {
                LabeledDiagram d = r_from == "text" ? LabeledDiagram::from_text(input)
                                                    : LabeledDiagram::from_json_string(input);
                result = r_to == "text" ? d.to_text() : d.to_json_string() + "\n";
            } else if (r_kind == "pipedream") {
                PipeDream p = r_from == "text" ? PipeDream::from_text(input)
                                               : PipeDream::from_json_string(input);
                result = r_to == "text" ? p.to_text() : p.to_json_string() + "\n";
            } else if (r_kind == "tableau") {
                SetValuedTableau t = r_from == "text" ? SetValuedTableau::from_text(input)
                                                      : SetValuedTableau::from_json_string(input);
                result = r_to == "text" ? t.to_text() : t.to_json_string() + "\n";
            } else {
                IntPolynomial f = r_from == "text"
                                      ? IntPolynomial::from_text(input, r_num_vars)
                                      : IntPolynomial::from_json_string(input);
                result = r_to == "text" ? f.to_text() + "\n" : f.to_json_string() + "\n";
            }
            out << result;
            return kOk;
        }
    } catch (const BudgetExceeded&) {
        err << "partial output: budget exceeded\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace groth::cli
