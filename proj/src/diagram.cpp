#include "groth/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace groth {

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have length >= 1");
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition parts must be >= 0");
}

WeakComposition WeakComposition::zeros(int n) {
    return WeakComposition(std::vector<int>(static_cast<size_t>(n), 0));
}

WeakComposition WeakComposition::parse(const std::string& text) {
    std::vector<int> v;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in composition");
        v.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return WeakComposition(std::move(v));
}

int WeakComposition::sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool WeakComposition::weakly_decreasing() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i]) return false;
    return true;
}

bool WeakComposition::nonzero_parts_weakly_increasing() const {
    int prev = 0;
    for (int p : parts_) {
        if (p == 0) continue;
        if (p < prev) return false;
        prev = p;
    }
    return true;
}

WeakComposition WeakComposition::exchanged(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("exchange index out of range");
    std::vector<int> v = parts_;
    std::swap(v[i - 1], v[i]);
    return WeakComposition(std::move(v));
}

WeakComposition WeakComposition::padded(int n) const {
    if (n < size()) throw std::invalid_argument("pad target shorter than composition");
    std::vector<int> v = parts_;
    v.resize(static_cast<size_t>(n), 0);
    return WeakComposition(std::move(v));
}

std::string WeakComposition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

size_t WeakCompositionHash::operator()(const WeakComposition& a) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : a.parts()) {
        h ^= static_cast<uint64_t>(x) + 0x100;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

Diagram::Diagram(int grid_size, std::vector<Cell> cells) : n_(grid_size), cells_(std::move(cells)) {
    if (n_ < 0) throw std::invalid_argument("grid size must be >= 0");
    std::sort(cells_.begin(), cells_.end());
    for (size_t i = 0; i < cells_.size(); ++i) {
        const Cell& c = cells_[i];
        if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > n_)
            throw std::invalid_argument("cell outside grid");
        if (i > 0 && cells_[i] == cells_[i - 1]) throw std::invalid_argument("duplicate cell");
    }
}

Diagram Diagram::empty(int grid_size) { return Diagram(grid_size, {}); }

bool Diagram::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

WeakComposition Diagram::weight() const {
    std::vector<int> parts(static_cast<size_t>(std::max(n_, 1)), 0);
    for (const Cell& c : cells_) ++parts[static_cast<size_t>(c.row - 1)];
    return WeakComposition(std::move(parts));
}

bool Diagram::is_nw_hook_closed() const {
    for (const Cell& a : cells_)
        for (const Cell& b : cells_)
            if (b.row < a.row && b.col > a.col && !contains({b.row, a.col})) return false;
    return true;
}

bool Diagram::is_sw_hook_closed() const {
    for (const Cell& a : cells_)
        for (const Cell& b : cells_)
            if (b.row > a.row && b.col > a.col && !contains({b.row, a.col})) return false;
    return true;
}

std::string Diagram::to_text() const {
    std::string out;
    out.reserve(static_cast<size_t>(n_) * (n_ + 1));
    size_t idx = 0;
    for (int r = 1; r <= n_; ++r) {
        for (int c = 1; c <= n_; ++c) {
            bool box = idx < cells_.size() && cells_[idx].row == r && cells_[idx].col == c;
            if (box) ++idx;
            out += box ? 'O' : '.';
        }
        out += '\n';
    }
    return out;
}

Diagram Diagram::from_text(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('\n', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    int n = static_cast<int>(lines.size());
    std::vector<Cell> cells;
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(lines[r - 1].size()) != n)
            throw std::invalid_argument("diagram text must be an n x n grid");
        for (int c = 1; c <= n; ++c) {
            char ch = lines[r - 1][c - 1];
            if (ch == 'O')
                cells.push_back({r, c});
            else if (ch != '.')
                throw std::invalid_argument("diagram text characters must be 'O' or '.'");
        }
    }
    return Diagram(n, std::move(cells));
}

bool Diagram::operator<(const Diagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return cells_ < o.cells_;
}

Diagram rothe_diagram(const Permutation& w) {
    int n = w.size();
    Permutation wi = w.inverse();
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < w(i); ++j)
            if (wi(j) > i) cells.push_back({i, j});
    return Diagram(n, std::move(cells));
}

Diagram key_diagram(const WeakComposition& alpha) {
    int n = alpha.size();
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i) {
        if (alpha[i] > n) throw std::invalid_argument("composition part exceeds grid size");
        for (int j = 1; j <= alpha[i]; ++j) cells.push_back({i, j});
    }
    return Diagram(n, std::move(cells));
}

Diagram sw_hook_closure(const Diagram& d) {
    int n = d.grid_size();
    std::vector<int> max_col_in_row(static_cast<size_t>(n) + 1, 0);
    std::vector<int> min_row_in_col(static_cast<size_t>(n) + 1, n + 1);
    for (const Cell& c : d.cells()) {
        max_col_in_row[static_cast<size_t>(c.row)] =
            std::max(max_col_in_row[static_cast<size_t>(c.row)], c.col);
        min_row_in_col[static_cast<size_t>(c.col)] =
            std::min(min_row_in_col[static_cast<size_t>(c.col)], c.row);
    }
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= max_col_in_row[static_cast<size_t>(i)]; ++j)
            if (min_row_in_col[static_cast<size_t>(j)] <= i) cells.push_back({i, j});
    return Diagram(n, std::move(cells));
}

}  // namespace groth
