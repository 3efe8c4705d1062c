#include "groth/pipedreams.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace groth {

WeakComposition PipeDream::weight() const {
    std::vector<int> parts(static_cast<size_t>(n), 0);
    for (const Cell& c : cells) ++parts[static_cast<size_t>(c.row - 1)];
    return WeakComposition(std::move(parts));
}

std::string PipeDream::to_text() const {
    std::string out;
    size_t idx = 0;
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            bool cross = idx < cells.size() && cells[idx].row == r && cells[idx].col == c;
            if (cross) ++idx;
            out += cross ? '+' : '.';
        }
        out += '\n';
    }
    return out;
}

PipeDream PipeDream::from_text(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('\n', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    int n = static_cast<int>(lines.size());
    PipeDream p;
    p.n = n;
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(lines[r - 1].size()) != n)
            throw std::invalid_argument("pipe dream text must be an n x n grid");
        for (int c = 1; c <= n; ++c) {
            char ch = lines[r - 1][c - 1];
            if (ch == '+')
                p.cells.push_back({r, c});
            else if (ch != '.')
                throw std::invalid_argument("pipe dream text characters must be '+' or '.'");
        }
    }
    return p;
}

std::string PipeDream::to_json_string() const {
    nlohmann::json doc;
    doc["n"] = n;
    nlohmann::json arr = nlohmann::json::array();
    for (const Cell& c : cells) arr.push_back({c.row, c.col});
    doc["cells"] = std::move(arr);
    return doc.dump();
}

PipeDream PipeDream::from_json_string(const std::string& json) {
    nlohmann::json doc = nlohmann::json::parse(json);
    PipeDream p;
    p.n = doc.at("n").get<int>();
    for (const auto& c : doc.at("cells")) p.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    std::sort(p.cells.begin(), p.cells.end());
    return p;
}

bool PipeDream::operator<(const PipeDream& o) const {
    if (n != o.n) return n < o.n;
    return cells < o.cells;
}

std::vector<int> pipe_word(const PipeDream& p) {
    std::vector<int> word;
    word.reserve(p.cells.size());
    // cells are sorted by (row, col); within a row, read columns descending
    size_t i = 0;
    while (i < p.cells.size()) {
        size_t j = i;
        while (j < p.cells.size() && p.cells[j].row == p.cells[i].row) ++j;
        for (size_t k = j; k > i; --k)
            word.push_back(p.cells[k - 1].row + p.cells[k - 1].col - 1);
        i = j;
    }
    return word;
}

namespace {

// In-place 0-Hecke append; u given as a value array (0-based storage).
inline void hecke_append_inplace(std::vector<int>& u, int letter) {
    if (u[static_cast<size_t>(letter - 1)] < u[static_cast<size_t>(letter)])
        std::swap(u[static_cast<size_t>(letter - 1)], u[static_cast<size_t>(letter)]);
}

// Rank matrix dominance against a fixed target, early-exit variant used by the
// enumeration prune.  rw[i][j] = #{k <= i : w(k) <= j}, precomputed once.
struct BruhatPruner {
    int n;
    std::vector<std::vector<int>> rw;

    explicit BruhatPruner(const Permutation& w) : n(w.size()) {
        rw.assign(static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(n) + 1, 0));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                rw[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    rw[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + (w(i) <= j ? 1 : 0);
    }

    bool leq(const std::vector<int>& u) const {
        std::vector<int> ru(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
            for (int j = u[static_cast<size_t>(i - 1)]; j <= n; ++j) ++ru[static_cast<size_t>(j)];
            const auto& row = rw[static_cast<size_t>(i)];
            for (int j = 1; j <= n; ++j)
                if (ru[static_cast<size_t>(j)] < row[static_cast<size_t>(j)]) return false;
        }
        return true;
    }
};

int count_inversions(const std::vector<int>& v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv;
}

struct PipeSearch {
    int n;                 // grid size
    int ambient;           // symmetric group the fold lives in
    bool full_grid;
    const std::vector<int>* quota = nullptr;  // per-row crossing counts, or null
    int size_bound;
    std::vector<int> target;  // w embedded in S_ambient
    int target_length;
    BruhatPruner pruner;
    std::vector<Cell> chosen;
    std::vector<PipeDream> out;
    uint64_t max_steps = UINT64_MAX;
    uint64_t steps = 0;
    bool complete = true;

    PipeSearch(const Permutation& w, bool full, int bound)
        : n(w.size()),
          ambient(full ? 2 * w.size() : w.size()),
          full_grid(full),
          size_bound(bound),
          pruner(w.embed(full ? 2 * w.size() : w.size())) {
        target = w.embed(ambient).entries();
        target_length = w.length();
    }

    int row_width(int row) const { return full_grid ? n : n - row; }

    // Crossings still placeable in rows > row.
    int capacity_after(int row) const {
        if (quota) {
            int c = 0;
            for (int r = row + 1; r <= n; ++r) c += (*quota)[static_cast<size_t>(r - 1)];
            return c;
        }
        int c = 0;
        for (int r = row + 1; r <= n; ++r) c += row_width(r);
        return c;
    }

    void run() {
        std::vector<int> u(static_cast<size_t>(ambient));
        for (int i = 0; i < ambient; ++i) u[static_cast<size_t>(i)] = i + 1;
        descend_row(1, u, 0);
    }

    // Reading order: row by row, columns right to left within the row.
    void descend_row(int row, std::vector<int>& u, int placed) {
        if (row > n) {
            if (std::equal(u.begin(), u.end(), target.begin())) {
                PipeDream p;
                p.n = n;
                p.cells = chosen;
                std::sort(p.cells.begin(), p.cells.end());
                out.push_back(std::move(p));
            }
            return;
        }
        int width = row_width(row);
        int need = quota ? (*quota)[static_cast<size_t>(row - 1)] : -1;
        if (need > width) return;
        descend_col(row, width, need, u, placed);
    }

    void descend_col(int row, int col, int remaining_quota, std::vector<int>& u, int placed) {
        if (!complete) return;
        if (++steps > max_steps) {
            complete = false;
            return;
        }
        if (col == 0) {
            if (remaining_quota > 0) return;
            // Remaining rows must be able to close the Bruhat gap.
            int room = capacity_after(row);
            if (size_bound >= 0) room = std::min(room, size_bound - placed);
            if (target_length - count_inversions(u) > room) return;
            descend_row(row + 1, u, placed);
            return;
        }
        // Skip this cell (leave enough columns for the quota).
        if (remaining_quota < 0 || remaining_quota < col)
            descend_col(row, col - 1, remaining_quota, u, placed);
        // Place a crossing here.
        if (remaining_quota != 0 && (size_bound < 0 || placed < size_bound)) {
            int letter = row + col - 1;
            std::vector<int> u2 = u;
            hecke_append_inplace(u2, letter);
            if (pruner.leq(u2)) {
                chosen.push_back({row, col});
                descend_col(row, col - 1, remaining_quota < 0 ? -1 : remaining_quota - 1, u2,
                            placed + 1);
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

Permutation demazure_product(const std::vector<int>& word, int ambient_n) {
    std::vector<int> u(static_cast<size_t>(ambient_n));
    for (int i = 0; i < ambient_n; ++i) u[static_cast<size_t>(i)] = i + 1;
    for (int letter : word) {
        if (letter < 1 || letter >= ambient_n)
            throw std::invalid_argument("letter outside ambient symmetric group");
        hecke_append_inplace(u, letter);
    }
    return Permutation(std::move(u));
}

bool is_reduced_word(const std::vector<int>& word, int ambient_n) {
    std::vector<int> u(static_cast<size_t>(ambient_n));
    for (int i = 0; i < ambient_n; ++i) u[static_cast<size_t>(i)] = i + 1;
    for (int letter : word) {
        if (letter < 1 || letter >= ambient_n)
            throw std::invalid_argument("letter outside ambient symmetric group");
        if (u[static_cast<size_t>(letter - 1)] > u[static_cast<size_t>(letter)]) return false;
        hecke_append_inplace(u, letter);
    }
    return true;
}

std::vector<PipeDream> enumerate_pipes_with_weight(const Permutation& w,
                                                   const WeakComposition& gamma,
                                                   bool full_grid) {
    return enumerate_pipes_with_weight_budgeted(w, gamma, full_grid, UINT64_MAX).dreams;
}

PipeEnumeration enumerate_pipes_with_weight_budgeted(const Permutation& w,
                                                     const WeakComposition& gamma, bool full_grid,
                                                     uint64_t max_steps) {
    if (gamma.size() != w.size())
        throw std::invalid_argument("weight length must match permutation size");
    PipeSearch search(w, full_grid, -1);
    search.max_steps = max_steps;
    std::vector<int> quota = gamma.parts();
    search.quota = &quota;
    search.run();
    std::sort(search.out.begin(), search.out.end());
    return {std::move(search.out), search.complete, search.steps};
}

std::vector<PipeDream> enumerate_pipes(const Permutation& w, int size_bound, bool full_grid) {
    PipeSearch search(w, full_grid, size_bound);
    search.run();
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
}

IntPolynomial grothendieck_via_pipes(const Permutation& w, int degree_bound) {
    int n = w.size();
    IntPolynomial f(n);
    int lw = w.length();
    for (const PipeDream& p : enumerate_pipes(w, degree_bound)) {
        Coeff sign = ((p.size() - lw) % 2 == 0) ? 1 : -1;
        f.add_term(p.weight().parts(), sign);
    }
    return f;
}

IntPolynomial schubert_via_pipes(const Permutation& w) {
    return grothendieck_via_pipes(w, w.length());
}

}  // namespace groth
