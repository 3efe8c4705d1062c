#include "groth/kohnert.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <stdexcept>
#include <unordered_set>

namespace groth {

std::string ruleset_name(Ruleset r) {
    switch (r) {
        case Ruleset::Plain: return "plain";
        case Ruleset::RY: return "ry";
        case Ruleset::Ghost: return "ghost";
        case Ruleset::Relaxed: return "relaxed";
    }
    throw std::logic_error("unknown ruleset");
}

Ruleset parse_ruleset(const std::string& name) {
    if (name == "plain") return Ruleset::Plain;
    if (name == "ry") return Ruleset::RY;
    if (name == "ghost") return Ruleset::Ghost;
    if (name == "relaxed") return Ruleset::Relaxed;
    throw std::invalid_argument("unknown ruleset: " + name);
}

LabeledDiagram::LabeledDiagram(int grid_size, std::vector<std::pair<Cell, BoxLabel>> cells)
    : n_(grid_size), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < cells_.size(); ++i) {
        const Cell& c = cells_[i].first;
        if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > n_)
            throw std::invalid_argument("cell outside grid");
        if (i > 0 && cells_[i].first == cells_[i - 1].first)
            throw std::invalid_argument("duplicate cell");
    }
}

LabeledDiagram LabeledDiagram::all_solid(const Diagram& d) {
    std::vector<std::pair<Cell, BoxLabel>> cells;
    cells.reserve(d.cells().size());
    for (const Cell& c : d.cells()) cells.emplace_back(c, BoxLabel::Solid);
    return LabeledDiagram(d.grid_size(), std::move(cells));
}

std::optional<BoxLabel> LabeledDiagram::label_at(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                               [](const auto& e, const Cell& x) { return e.first < x; });
    if (it != cells_.end() && it->first == c) return it->second;
    return std::nullopt;
}

bool LabeledDiagram::all_boxes_solid() const {
    for (const auto& [c, l] : cells_)
        if (l != BoxLabel::Solid) return false;
    return true;
}

WeakComposition LabeledDiagram::weight() const {
    std::vector<int> parts(static_cast<size_t>(std::max(n_, 1)), 0);
    for (const auto& [c, l] : cells_) ++parts[static_cast<size_t>(c.row - 1)];
    return WeakComposition(std::move(parts));
}

Diagram LabeledDiagram::solid_cells() const {
    std::vector<Cell> cells;
    for (const auto& [c, l] : cells_)
        if (l == BoxLabel::Solid) cells.push_back(c);
    return Diagram(n_, std::move(cells));
}

Diagram LabeledDiagram::ghost_cells() const {
    std::vector<Cell> cells;
    for (const auto& [c, l] : cells_)
        if (l == BoxLabel::Ghost) cells.push_back(c);
    return Diagram(n_, std::move(cells));
}

Diagram LabeledDiagram::underlying() const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const auto& [c, l] : cells_) cells.push_back(c);
    return Diagram(n_, std::move(cells));
}

std::string LabeledDiagram::to_text() const {
    std::string out;
    size_t idx = 0;
    for (int r = 1; r <= n_; ++r) {
        for (int c = 1; c <= n_; ++c) {
            char ch = '.';
            if (idx < cells_.size() && cells_[idx].first == Cell{r, c}) {
                ch = cells_[idx].second == BoxLabel::Solid ? 'O' : 'G';
                ++idx;
            }
            out += ch;
        }
        out += '\n';
    }
    return out;
}

LabeledDiagram LabeledDiagram::from_text(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('\n', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    int n = static_cast<int>(lines.size());
    std::vector<std::pair<Cell, BoxLabel>> cells;
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(lines[r - 1].size()) != n)
            throw std::invalid_argument("labeled diagram text must be an n x n grid");
        for (int c = 1; c <= n; ++c) {
            char ch = lines[r - 1][c - 1];
            if (ch == 'O')
                cells.push_back({{r, c}, BoxLabel::Solid});
            else if (ch == 'G')
                cells.push_back({{r, c}, BoxLabel::Ghost});
            else if (ch != '.')
                throw std::invalid_argument("labeled diagram characters must be 'O', 'G' or '.'");
        }
    }
    return LabeledDiagram(n, std::move(cells));
}

std::string LabeledDiagram::to_json_string() const {
    nlohmann::json doc;
    doc["n"] = n_;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [c, l] : cells_) {
        nlohmann::json e;
        e["r"] = c.row;
        e["c"] = c.col;
        e["label"] = l == BoxLabel::Solid ? "O" : "G";
        arr.push_back(std::move(e));
    }
    doc["cells"] = std::move(arr);
    return doc.dump();
}

LabeledDiagram LabeledDiagram::from_json_string(const std::string& json) {
    nlohmann::json doc = nlohmann::json::parse(json);
    int n = doc.at("n").get<int>();
    std::vector<std::pair<Cell, BoxLabel>> cells;
    for (const auto& e : doc.at("cells")) {
        std::string label = e.at("label").get<std::string>();
        if (label != "O" && label != "G") throw std::invalid_argument("label must be 'O' or 'G'");
        cells.push_back({{e.at("r").get<int>(), e.at("c").get<int>()},
                         label == "O" ? BoxLabel::Solid : BoxLabel::Ghost});
    }
    return LabeledDiagram(n, std::move(cells));
}

bool LabeledDiagram::operator<(const LabeledDiagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return cells_ < o.cells_;
}

size_t LabeledDiagramHash::operator()(const LabeledDiagram& d) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(d.grid_size()));
    for (const auto& [c, l] : d.cells()) {
        mix(static_cast<uint64_t>(c.row));
        mix(static_cast<uint64_t>(c.col));
        mix(l == BoxLabel::Solid ? 1u : 2u);
    }
    return static_cast<size_t>(h);
}

namespace {

// Dense grid used inside move generation and BFS: one char per cell,
// 0 = empty, 1 = solid, 2 = ghost, row-major.
using Grid = std::string;

constexpr char kEmpty = 0, kSolid = 1, kGhost = 2;

Grid to_grid(const LabeledDiagram& d) {
    int n = d.grid_size();
    Grid g(static_cast<size_t>(n) * static_cast<size_t>(n), kEmpty);
    for (const auto& [c, l] : d.cells())
        g[static_cast<size_t>(c.row - 1) * n + (c.col - 1)] = l == BoxLabel::Solid ? kSolid : kGhost;
    return g;
}

LabeledDiagram from_grid(const Grid& g, int n) {
    std::vector<std::pair<Cell, BoxLabel>> cells;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            char v = g[static_cast<size_t>(r - 1) * n + (c - 1)];
            if (v != kEmpty)
                cells.push_back({{r, c}, v == kSolid ? BoxLabel::Solid : BoxLabel::Ghost});
        }
    return LabeledDiagram(n, std::move(cells));
}

struct RawMove {
    int row, col;      // source box
    int land;          // landing row i'
    MoveKind kind;
};

// Landing row i' = max{r in [i] : (r,j) empty}; the column cells strictly
// between i' and i, together with (i,j), must all carry `label`.
// Returns -1 when the move is not applicable.
int landing_row(const Grid& g, int n, int row, int col, char label) {
    int ip = -1;
    for (int r = row - 1; r >= 1; --r) {
        char v = g[static_cast<size_t>(r - 1) * n + (col - 1)];
        if (v == kEmpty) {
            ip = r;
            break;
        }
        if (v != label) return -1;  // a differently-labeled box blocks the slide
    }
    return ip;
}

void collect_moves(const Grid& g, int n, Ruleset rules, std::vector<RawMove>& out) {
    out.clear();
    for (int r = 1; r <= n; ++r) {
        int rightmost = 0;
        for (int c = n; c >= 1; --c)
            if (g[static_cast<size_t>(r - 1) * n + (c - 1)] != kEmpty) {
                rightmost = c;
                break;
            }
        if (rightmost == 0) continue;
        char label = g[static_cast<size_t>(r - 1) * n + (rightmost - 1)];
        if (label == kSolid) {
            int ip = landing_row(g, n, r, rightmost, kSolid);
            if (ip > 0) {
                out.push_back({r, rightmost, ip, MoveKind::Kohnert});
                if (rules != Ruleset::Plain) out.push_back({r, rightmost, ip, MoveKind::KKohnert});
            }
        } else if (rules == Ruleset::Ghost) {
            int ip = landing_row(g, n, r, rightmost, kGhost);
            if (ip > 0) {
                out.push_back({r, rightmost, ip, MoveKind::GhostKohnert});
                out.push_back({r, rightmost, ip, MoveKind::GhostKKohnert});
            }
        }
    }
    if (rules == Ruleset::Relaxed) {
        // Ghost moves on every ghost box, rightmost or not.
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                if (g[static_cast<size_t>(r - 1) * n + (c - 1)] != kGhost) continue;
                int ip = landing_row(g, n, r, c, kGhost);
                if (ip > 0) {
                    out.push_back({r, c, ip, MoveKind::GhostKohnert});
                    out.push_back({r, c, ip, MoveKind::GhostKKohnert});
                }
            }
    }
}

Grid apply_move(const Grid& g, int n, const RawMove& m) {
    Grid g2 = g;
    size_t src = static_cast<size_t>(m.row - 1) * n + (m.col - 1);
    size_t dst = static_cast<size_t>(m.land - 1) * n + (m.col - 1);
    switch (m.kind) {
        case MoveKind::Kohnert:
            g2[src] = kEmpty;
            g2[dst] = kSolid;
            break;
        case MoveKind::KKohnert:
            g2[src] = kGhost;
            g2[dst] = kSolid;
            break;
        case MoveKind::GhostKohnert:
            g2[src] = kEmpty;
            g2[dst] = kGhost;
            break;
        case MoveKind::GhostKKohnert:
            g2[dst] = kGhost;
            break;
    }
    return g2;
}

}  // namespace

std::vector<KohnertMove> legal_moves(const LabeledDiagram& d, Ruleset rules) {
    int n = d.grid_size();
    Grid g = to_grid(d);
    std::vector<RawMove> raw;
    collect_moves(g, n, rules, raw);
    std::vector<KohnertMove> out;
    out.reserve(raw.size());
    for (const RawMove& m : raw)
        out.push_back({{m.row, m.col}, {m.land, m.col}, m.kind, from_grid(apply_move(g, n, m), n)});
    return out;
}

ClosureResult closure(const Diagram& seed, Ruleset rules, size_t max_states) {
    int n = seed.grid_size();
    Grid start = to_grid(LabeledDiagram::all_solid(seed));
    std::unordered_set<Grid> visited{start};
    std::deque<Grid> frontier{start};
    std::vector<RawMove> raw;
    bool complete = true;
    while (!frontier.empty()) {
        Grid g = std::move(frontier.front());
        frontier.pop_front();
        collect_moves(g, n, rules, raw);
        for (const RawMove& m : raw) {
            Grid g2 = apply_move(g, n, m);
            if (visited.contains(g2)) continue;
            if (visited.size() >= max_states) {
                complete = false;
                break;
            }
            visited.insert(g2);
            frontier.push_back(std::move(g2));
        }
        if (!complete) break;
    }
    ClosureResult result;
    result.complete = complete;
    result.diagrams.reserve(visited.size());
    for (const Grid& g : visited) result.diagrams.push_back(from_grid(g, n));
    std::sort(result.diagrams.begin(), result.diagrams.end());
    return result;
}

long long closure_weight_count(const Permutation& w, const WeakComposition& gamma, Ruleset rules) {
    WeakComposition padded = gamma.padded(w.size());
    long long count = 0;
    for (const LabeledDiagram& d : closure(rothe_diagram(w), rules).diagrams)
        if (d.weight() == padded) ++count;
    return count;
}

std::map<WeakComposition, long long> weight_histogram(const std::vector<LabeledDiagram>& diagrams) {
    std::map<WeakComposition, long long> hist;
    for (const LabeledDiagram& d : diagrams) ++hist[d.weight()];
    return hist;
}

IntPolynomial polynomial_from_diagrams(const std::vector<LabeledDiagram>& diagrams, int base_size,
                                       int num_vars) {
    IntPolynomial f(num_vars);
    for (const LabeledDiagram& d : diagrams) {
        Coeff sign = ((d.box_count() - base_size) % 2 == 0) ? 1 : -1;
        f.add_term(d.weight().parts(), sign);
    }
    return f;
}

IntPolynomial polynomial_via_closure(const Diagram& seed, Ruleset rules, int base_size) {
    ClosureResult res = closure(seed, rules);
    if (!res.complete) throw std::runtime_error("closure exceeded state budget");
    return polynomial_from_diagrams(res.diagrams, base_size, seed.grid_size());
}

IntPolynomial schubert_via_kohnert(const Permutation& w) {
    return polynomial_via_closure(rothe_diagram(w), Ruleset::Plain, w.length());
}

IntPolynomial lascoux_via_kkohnert(const WeakComposition& a) {
    return polynomial_via_closure(key_diagram(a), Ruleset::RY, a.sum());
}

IntPolynomial grothendieck_via_ghost_moves(const Permutation& w) {
    return polynomial_via_closure(rothe_diagram(w), Ruleset::Ghost, w.length());
}

}  // namespace groth
