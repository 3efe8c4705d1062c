#include "groth/tableaux.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <stdexcept>

namespace groth {

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

}  // namespace

SetValuedTableau::SetValuedTableau(Diagram shape, std::vector<std::vector<int>> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.cells().size())
        throw std::invalid_argument("one value set per shape cell required");
    int n = shape_.grid_size();
    for (auto& v : values_) {
        if (v.empty()) throw std::invalid_argument("entry sets must be nonempty");
        v = sorted_desc(std::move(v));
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > n) throw std::invalid_argument("entry outside [n]");
            if (i > 0 && v[i] == v[i - 1]) throw std::invalid_argument("duplicate entry in cell");
        }
    }
}

const std::vector<int>& SetValuedTableau::at(Cell c) const {
    const auto& cells = shape_.cells();
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || !(*it == c)) throw std::out_of_range("cell not in shape");
    return values_[static_cast<size_t>(it - cells.begin())];
}

WeakComposition SetValuedTableau::weight() const {
    std::vector<int> parts(static_cast<size_t>(std::max(shape_.grid_size(), 1)), 0);
    for (const auto& v : values_)
        for (int x : v) ++parts[static_cast<size_t>(x - 1)];
    return WeakComposition(std::move(parts));
}

int SetValuedTableau::entry_count() const {
    int total = 0;
    for (const auto& v : values_) total += static_cast<int>(v.size());
    return total;
}

bool SetValuedTableau::rows_and_columns_valid() const {
    const auto& cells = shape_.cells();
    for (size_t a = 0; a < cells.size(); ++a)
        for (size_t b = 0; b < cells.size(); ++b) {
            if (a == b) continue;
            const Cell &ca = cells[a], &cb = cells[b];
            // values_ are sorted descending: front() is max, back() is min.
            if (ca.row == cb.row && cb.col > ca.col && values_[a].back() < values_[b].front())
                return false;  // min f(r,c) >= max f(r,c+k) violated
            if (ca.col == cb.col && cb.row > ca.row && values_[a].front() >= values_[b].back())
                return false;  // max f(r,c) < min f(r+k,c) violated
        }
    return true;
}

bool SetValuedTableau::is_fsvt() const {
    const auto& cells = shape_.cells();
    for (size_t i = 0; i < cells.size(); ++i)
        if (values_[i].front() > cells[i].row) return false;
    return rows_and_columns_valid();
}

std::string SetValuedTableau::to_text() const {
    int n = shape_.grid_size();
    std::string out;
    const auto& cells = shape_.cells();
    size_t idx = 0;
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            if (c > 1) out += ' ';
            if (idx < cells.size() && cells[idx] == Cell{r, c}) {
                const auto& v = values_[idx];
                if (v.front() > 9) {
                    out += '{';
                    for (size_t k = 0; k < v.size(); ++k) {
                        if (k) out += ',';
                        out += std::to_string(v[k]);
                    }
                    out += '}';
                } else {
                    for (int x : v) out += static_cast<char>('0' + x);
                }
                ++idx;
            } else {
                out += '.';
            }
        }
        out += '\n';
    }
    return out;
}

SetValuedTableau SetValuedTableau::from_text(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('\n', pos);
        if (next == std::string::npos) next = text.size();
        std::string line = text.substr(pos, next - pos);
        pos = next + 1;
        if (line.empty()) continue;
        std::vector<std::string> toks;
        size_t p = 0;
        while (p < line.size()) {
            size_t q = line.find(' ', p);
            if (q == std::string::npos) q = line.size();
            if (q > p) toks.push_back(line.substr(p, q - p));
            p = q + 1;
        }
        rows.push_back(std::move(toks));
    }
    int n = static_cast<int>(rows.size());
    std::vector<Cell> cells;
    std::vector<std::vector<int>> values;
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r - 1)].size()) != n)
            throw std::invalid_argument("tableau text must have n tokens per line");
        for (int c = 1; c <= n; ++c) {
            const std::string& tok = rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            if (tok == ".") continue;
            std::vector<int> v;
            if (tok.front() == '{') {
                size_t p = 1;
                while (p + 1 <= tok.size() - 1) {
                    size_t q = tok.find(',', p);
                    if (q == std::string::npos) q = tok.size() - 1;
                    v.push_back(std::stoi(tok.substr(p, q - p)));
                    p = q + 1;
                }
            } else {
                for (char ch : tok) {
                    if (ch < '1' || ch > '9')
                        throw std::invalid_argument("tableau cell tokens must be digit runs");
                    v.push_back(ch - '0');
                }
            }
            cells.push_back({r, c});
            values.push_back(std::move(v));
        }
    }
    return SetValuedTableau(Diagram(n, std::move(cells)), std::move(values));
}

std::string SetValuedTableau::to_json_string() const {
    nlohmann::json doc;
    doc["n"] = shape_.grid_size();
    nlohmann::json arr = nlohmann::json::array();
    const auto& cells = shape_.cells();
    for (size_t i = 0; i < cells.size(); ++i) {
        nlohmann::json e;
        e["r"] = cells[i].row;
        e["c"] = cells[i].col;
        e["values"] = values_[i];
        arr.push_back(std::move(e));
    }
    doc["cells"] = std::move(arr);
    return doc.dump();
}

SetValuedTableau SetValuedTableau::from_json_string(const std::string& json) {
    nlohmann::json doc = nlohmann::json::parse(json);
    int n = doc.at("n").get<int>();
    std::vector<Cell> cells;
    std::vector<std::vector<int>> values;
    for (const auto& e : doc.at("cells")) {
        cells.push_back({e.at("r").get<int>(), e.at("c").get<int>()});
        values.push_back(e.at("values").get<std::vector<int>>());
    }
    return SetValuedTableau(Diagram(n, std::move(cells)), std::move(values));
}

bool SetValuedTableau::operator<(const SetValuedTableau& o) const {
    if (!(shape_ == o.shape_)) return shape_ < o.shape_;
    return values_ < o.values_;
}

Tableau::Tableau(Diagram shape, std::vector<int> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.cells().size())
        throw std::invalid_argument("one value per shape cell required");
    for (int v : values_)
        if (v < 1 || v > shape_.grid_size()) throw std::invalid_argument("entry outside [n]");
}

int Tableau::at(Cell c) const {
    const auto& cells = shape_.cells();
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || !(*it == c)) throw std::out_of_range("cell not in shape");
    return values_[static_cast<size_t>(it - cells.begin())];
}

bool Tableau::is_valid() const {
    const auto& cells = shape_.cells();
    for (size_t a = 0; a < cells.size(); ++a)
        for (size_t b = 0; b < cells.size(); ++b) {
            if (a == b) continue;
            const Cell &ca = cells[a], &cb = cells[b];
            if (ca.row == cb.row && cb.col > ca.col && values_[a] < values_[b]) return false;
            if (ca.col == cb.col && cb.row > ca.row && values_[a] >= values_[b]) return false;
        }
    return true;
}

std::string Tableau::to_text() const {
    int n = shape_.grid_size();
    std::string out;
    const auto& cells = shape_.cells();
    size_t idx = 0;
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            if (c > 1) out += ' ';
            if (idx < cells.size() && cells[idx] == Cell{r, c}) {
                out += std::to_string(values_[idx]);
                ++idx;
            } else {
                out += '.';
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

// Shared enumerator for set-valued fillings.  Cells are processed column by
// column left to right, bottom to top within a column, so the nearest west
// and south neighbors are already filled and bound the candidates from above.
// flagged = true adds the FSVT flag max f(r,c) <= r.
std::vector<SetValuedTableau> enumerate_fillings(const Diagram& d, bool flagged) {
    int n = d.grid_size();
    if (n > 31) throw std::invalid_argument("filling enumeration limited to n <= 31");
    std::vector<Cell> order = d.cells();
    std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
        if (a.col != b.col) return a.col < b.col;
        return a.row > b.row;
    });
    size_t m = order.size();

    // Index of nearest west / south neighbor in `order`, or -1.
    std::vector<int> west(m, -1), south(m, -1);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (order[j].row == order[i].row && order[j].col < order[i].col &&
                (west[i] < 0 || order[static_cast<size_t>(west[i])].col < order[j].col))
                west[i] = static_cast<int>(j);
            if (order[j].col == order[i].col && order[j].row > order[i].row &&
                (south[i] < 0 || order[static_cast<size_t>(south[i])].row > order[j].row))
                south[i] = static_cast<int>(j);
        }

    std::vector<SetValuedTableau> out;
    std::vector<std::vector<int>> chosen(m);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == m) {
            // Reorder to the shape's canonical (row, col) cell order.
            const auto& cells = d.cells();
            std::vector<std::vector<int>> values(m);
            for (size_t i = 0; i < m; ++i) {
                auto it = std::lower_bound(cells.begin(), cells.end(), order[i]);
                values[static_cast<size_t>(it - cells.begin())] = chosen[i];
            }
            out.push_back(SetValuedTableau(d, std::move(values)));
            return;
        }
        int ub = flagged ? order[k].row : n;
        // chosen sets are descending: back() is the minimum.
        if (west[k] >= 0) ub = std::min(ub, chosen[static_cast<size_t>(west[k])].back());
        if (south[k] >= 0) ub = std::min(ub, chosen[static_cast<size_t>(south[k])].back() - 1);
        if (ub < 1) return;
        for (uint32_t mask = 1; mask < (1u << ub); ++mask) {
            std::vector<int> v;
            for (int x = ub; x >= 1; --x)
                if (mask & (1u << (x - 1))) v.push_back(x);
            chosen[k] = std::move(v);
            self(self, k + 1);
        }
        chosen[k].clear();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

const Permutation& pattern_321() {
    static const Permutation p({3, 2, 1});
    return p;
}

}  // namespace

std::vector<SetValuedTableau> enumerate_fsvt(const Diagram& d) {
    return enumerate_fillings(d, true);
}

IntPolynomial grothendieck_via_fsvt(const Permutation& w) {
    if (contains_pattern(w, pattern_321()))
        throw std::invalid_argument("grothendieck_via_fsvt requires a 321-avoiding permutation");
    int lw = w.length();
    IntPolynomial f(w.size());
    for (const SetValuedTableau& t : enumerate_fsvt(rothe_diagram(w))) {
        Coeff sign = ((t.entry_count() - lw) % 2 == 0) ? 1 : -1;
        f.add_term(t.weight().parts(), sign);
    }
    return f;
}

std::pair<WeakComposition, WeakComposition> alpha_beta(const Permutation& w) {
    if (contains_pattern(w, pattern_321()))
        throw std::invalid_argument("alpha_beta requires a 321-avoiding permutation");
    Diagram d = rothe_diagram(w);
    WeakComposition alpha = sw_hook_closure(d).weight();
    WeakComposition beta = d.weight();
    std::vector<int> diff(static_cast<size_t>(alpha.size()));
    for (int i = 1; i <= alpha.size(); ++i)
        diff[static_cast<size_t>(i - 1)] = alpha[i] - beta[i];
    if (!alpha.nonzero_parts_weakly_increasing() ||
        !WeakComposition(diff).nonzero_parts_weakly_increasing())
        throw std::logic_error("hook closure row counts not weakly increasing");
    return {alpha, beta};
}

SetValuedTableau phi(const SetValuedTableau& t, const Permutation& w) {
    Diagram d = rothe_diagram(w);
    if (!(t.shape() == d)) throw std::invalid_argument("tableau shape must be D(w)");
    Diagram closed = sw_hook_closure(d);
    std::vector<std::vector<int>> values;
    values.reserve(closed.cells().size());
    for (const Cell& c : closed.cells()) {
        if (d.contains(c))
            values.push_back(t.at(c));
        else
            values.push_back({c.row});
    }
    return SetValuedTableau(closed, std::move(values));
}

CompactedTableau rho(const SetValuedTableau& t, const Permutation& w) {
    Diagram closed = sw_hook_closure(rothe_diagram(w));
    if (!(t.shape() == closed))
        throw std::invalid_argument("tableau shape must be the hook closure of D(w)");
    int n = closed.grid_size();
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (const Cell& c : closed.cells()) used[static_cast<size_t>(c.col)] = 1;
    std::vector<int> column_map;
    std::vector<int> new_col(static_cast<size_t>(n) + 1, 0);
    for (int c = 1; c <= n; ++c)
        if (used[static_cast<size_t>(c)]) {
            column_map.push_back(c);
            new_col[static_cast<size_t>(c)] = static_cast<int>(column_map.size());
        }
    std::vector<Cell> cells;
    for (const Cell& c : closed.cells()) cells.push_back({c.row, new_col[static_cast<size_t>(c.col)]});
    // Compaction preserves (row, col) order, so values carry over directly.
    return {SetValuedTableau(Diagram(n, std::move(cells)), t.values()), std::move(column_map)};
}

SetValuedTableau rho_inverse(const CompactedTableau& ct, const Permutation& w) {
    Diagram closed = sw_hook_closure(rothe_diagram(w));
    std::vector<Cell> cells;
    for (const Cell& c : ct.tableau.shape().cells()) {
        if (c.col < 1 || c.col > static_cast<int>(ct.column_map.size()))
            throw std::invalid_argument("column map does not cover the compacted tableau");
        cells.push_back({c.row, ct.column_map[static_cast<size_t>(c.col - 1)]});
    }
    Diagram target(closed.grid_size(), std::move(cells));
    if (!(target == closed)) throw std::invalid_argument("expansion does not match the closure");
    return SetValuedTableau(std::move(target), ct.tableau.values());
}

Tableau max_tableau(const SetValuedTableau& t) {
    std::vector<int> values;
    values.reserve(t.values().size());
    for (const auto& v : t.values()) values.push_back(v.front());
    return Tableau(t.shape(), std::move(values));
}

namespace {

void require_key_shape_increasing(const Diagram& shape, const char* who) {
    WeakComposition alpha = shape.weight();
    if (!(shape == key_diagram(alpha)))
        throw std::invalid_argument(std::string(who) + ": shape must be a key diagram");
    if (!alpha.nonzero_parts_weakly_increasing())
        throw std::invalid_argument(std::string(who) +
                                    ": nonzero parts of alpha must be weakly increasing");
}

}  // namespace

Tableau left_key(const SetValuedTableau& t) {
    require_key_shape_increasing(t.shape(), "left_key");
    if (!t.rows_and_columns_valid()) throw std::invalid_argument("left_key: malformed tableau");
    Tableau m = max_tableau(t);

    int max_col = 0;
    for (const Cell& c : t.shape().cells()) max_col = std::max(max_col, c.col);

    // Columns of M(T) as (row, value) lists with rows ascending; values then
    // strictly increase down each list.
    std::vector<std::vector<std::pair<int, int>>> full_cols(static_cast<size_t>(max_col));
    for (size_t i = 0; i < t.shape().cells().size(); ++i) {
        const Cell& c = t.shape().cells()[i];
        full_cols[static_cast<size_t>(c.col - 1)].push_back({c.row, m.values()[i]});
    }
    for (auto& col : full_cols) std::sort(col.begin(), col.end());

    std::vector<int> key_values(t.shape().cells().size());
    for (int k = 1; k <= max_col; ++k) {
        auto cols = std::vector<std::vector<std::pair<int, int>>>(full_cols.begin(),
                                                                  full_cols.begin() + k);
        size_t mk = full_cols[static_cast<size_t>(k - 1)].size();
        std::vector<int> ck;
        for (size_t j = 1; j <= mk; ++j) {
            // Start at the southmost entry of column k, then scan leftward
            // taking in each column the smallest entry weakly greater than
            // the running value; record positions for the deletion pass.
            // A column with no weakly greater entry passes the value through.
            std::vector<size_t> sel(static_cast<size_t>(k), SIZE_MAX);
            auto& colk = cols[static_cast<size_t>(k - 1)];
            if (colk.empty()) throw std::invalid_argument("left_key: malformed tableau");
            sel[static_cast<size_t>(k - 1)] = colk.size() - 1;
            int v = colk.back().second;
            for (int ci = k - 2; ci >= 0; --ci) {
                auto& col = cols[static_cast<size_t>(ci)];
                size_t idx = col.size();
                for (size_t q = 0; q < col.size(); ++q)
                    if (col[q].second >= v) {
                        idx = q;
                        break;
                    }
                if (idx == col.size()) continue;
                sel[static_cast<size_t>(ci)] = idx;
                v = col[idx].second;
            }
            if (!ck.empty() && v >= ck.back())
                throw std::logic_error("left_key: column entries not strictly decreasing");
            ck.push_back(v);
            if (j < mk)
                for (int ci = 0; ci < k; ++ci)  // delete weakly south of each selection
                    if (sel[static_cast<size_t>(ci)] != SIZE_MAX)
                        cols[static_cast<size_t>(ci)].resize(sel[static_cast<size_t>(ci)]);
        }
        std::reverse(ck.begin(), ck.end());  // place increasing down the column
        size_t pos = 0;
        for (size_t i = 0; i < t.shape().cells().size(); ++i)
            if (t.shape().cells()[i].col == k) key_values[i] = ck[pos++];
    }
    return Tableau(t.shape(), std::move(key_values));
}

bool is_svkt(const SetValuedTableau& t, const WeakComposition& alpha) {
    if (!(t.shape() == key_diagram(alpha)))
        throw std::invalid_argument("is_svkt: shape must be D(alpha)");
    if (!t.rows_and_columns_valid()) return false;
    Tableau k = left_key(t);
    const auto& cells = t.shape().cells();
    for (size_t i = 0; i < cells.size(); ++i)
        if (k.values()[i] > cells[i].row) return false;
    return true;
}

std::vector<SetValuedTableau> enumerate_svkt(const WeakComposition& alpha) {
    Diagram d = key_diagram(alpha);
    require_key_shape_increasing(d, "enumerate_svkt");
    std::vector<SetValuedTableau> out;
    for (const SetValuedTableau& t : enumerate_fillings(d, false))
        if (is_svkt(t, alpha)) out.push_back(t);
    return out;
}

namespace {

IntPolynomial signed_tableau_sum(const std::vector<SetValuedTableau>& ts, int base, int num_vars) {
    IntPolynomial f(num_vars);
    for (const SetValuedTableau& t : ts) {
        Coeff sign = ((t.entry_count() - base) % 2 == 0) ? 1 : -1;
        f.add_term(t.weight().parts(), sign);
    }
    return f;
}

}  // namespace

IntPolynomial lascoux_via_svkt(const WeakComposition& alpha) {
    return signed_tableau_sum(enumerate_svkt(alpha), alpha.sum(), alpha.size());
}

IntPolynomial lascoux_via_fsvt(const WeakComposition& alpha) {
    return signed_tableau_sum(enumerate_fsvt(key_diagram(alpha)), alpha.sum(), alpha.size());
}

std::pair<Diagram, Diagram> encode_tableau(const SetValuedTableau& t) {
    int n = t.grid_size();
    std::vector<Cell> o_cells, g_cells;
    const auto& cells = t.shape().cells();
    for (size_t i = 0; i < cells.size(); ++i) {
        const auto& v = t.values()[i];
        o_cells.push_back({v.front(), cells[i].col});
        for (size_t k = 1; k < v.size(); ++k) g_cells.push_back({v[k], cells[i].col});
    }
    return {Diagram(n, std::move(o_cells)), Diagram(n, std::move(g_cells))};
}

SetValuedTableau decode_tableau(const Diagram& o, const Diagram& g, const Diagram& shape) {
    int n = shape.grid_size();
    std::vector<std::vector<int>> o_rows(static_cast<size_t>(n) + 1);
    std::vector<std::vector<int>> g_rows(static_cast<size_t>(n) + 1);
    for (const Cell& c : o.cells()) o_rows[static_cast<size_t>(c.col)].push_back(c.row);
    for (const Cell& c : g.cells()) g_rows[static_cast<size_t>(c.col)].push_back(c.row);

    std::vector<std::vector<int>> values(shape.cells().size());
    for (int col = 1; col <= n; ++col) {
        std::vector<size_t> idx;  // shape cells of this column, rows ascending
        for (size_t i = 0; i < shape.cells().size(); ++i)
            if (shape.cells()[i].col == col) idx.push_back(i);
        auto& maxima = o_rows[static_cast<size_t>(col)];
        std::sort(maxima.begin(), maxima.end());
        if (maxima.size() != idx.size())
            throw std::invalid_argument("decode_tableau: one max per shape cell required");
        for (size_t k = 0; k < idx.size(); ++k) values[idx[k]].push_back(maxima[k]);
        for (int v : g_rows[static_cast<size_t>(col)]) {
            // v belongs to the cell whose max is the smallest one above it.
            size_t k = 0;
            while (k < maxima.size() && maxima[k] < v) ++k;
            if (k == maxima.size() || maxima[k] == v)
                throw std::invalid_argument("decode_tableau: entry collides with column maxima");
            values[idx[k]].push_back(v);
        }
    }
    return SetValuedTableau(shape, std::move(values));
}

LabeledDiagram phi_alpha(const SetValuedTableau& t) {
    require_key_shape_increasing(t.shape(), "phi_alpha");
    int n = t.grid_size();
    auto [o, g] = encode_tableau(t);
    std::vector<std::set<int>> s(static_cast<size_t>(n) + 1);
    for (const Cell& c : o.cells()) s[static_cast<size_t>(c.col)].insert(c.row);
    // Walk G upwards in columns, left to right.
    for (int col = 1; col <= n; ++col) {
        std::vector<int> rows;
        for (const Cell& c : g.cells())
            if (c.col == col) rows.push_back(c.row);
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            auto& column = s[static_cast<size_t>(col)];
            auto pick = column.lower_bound(*it);  // minimal i' >= i in S
            if (pick == column.end())
                throw std::logic_error("phi_alpha: no replaceable box weakly below");
            column.erase(pick);
            column.insert(*it);
        }
    }
    std::vector<std::pair<Cell, BoxLabel>> cells;
    auto in_s = [&](Cell c) { return s[static_cast<size_t>(c.col)].contains(c.row); };
    for (const Cell& c : o.cells()) cells.push_back({c, in_s(c) ? BoxLabel::Solid : BoxLabel::Ghost});
    for (const Cell& c : g.cells()) cells.push_back({c, in_s(c) ? BoxLabel::Solid : BoxLabel::Ghost});
    return LabeledDiagram(n, std::move(cells));
}

SetValuedTableau phi_alpha_inverse(const LabeledDiagram& d, const WeakComposition& alpha) {
    Diagram shape = key_diagram(alpha);
    require_key_shape_increasing(shape, "phi_alpha_inverse");
    int n = d.grid_size();
    if (shape.grid_size() != n) throw std::invalid_argument("phi_alpha_inverse: grid size mismatch");
    Diagram o = d.solid_cells(), g = d.ghost_cells();
    std::vector<std::set<int>> s(static_cast<size_t>(n) + 1);
    for (const Cell& c : o.cells()) s[static_cast<size_t>(c.col)].insert(c.row);
    // Walk ghosts down columns, right to left.
    for (int col = n; col >= 1; --col) {
        for (const Cell& c : g.cells()) {
            if (c.col != col) continue;  // cells() sorted by row: top-down within the column
            auto& column = s[static_cast<size_t>(col)];
            auto pick = column.upper_bound(c.row);  // maximal i' <= i in S
            if (pick == column.begin())
                throw std::invalid_argument("phi_alpha_inverse: no replaceable box weakly above");
            --pick;
            column.erase(pick);
            column.insert(c.row);
        }
    }
    std::vector<Cell> new_o, new_g;
    for (int col = 1; col <= n; ++col)
        for (int row : s[static_cast<size_t>(col)]) new_o.push_back({row, col});
    for (const Cell& c : o.cells())
        if (!s[static_cast<size_t>(c.col)].contains(c.row)) new_g.push_back(c);
    for (const Cell& c : g.cells())
        if (!s[static_cast<size_t>(c.col)].contains(c.row)) new_g.push_back(c);
    return decode_tableau(Diagram(n, std::move(new_o)), Diagram(n, std::move(new_g)), shape);
}

BijectionStages bijection_apply(const Permutation& w, const SetValuedTableau& t) {
    if (contains_pattern(w, pattern_321()))
        throw std::invalid_argument("bijection requires a 321-avoiding permutation");
    Diagram d = rothe_diagram(w);
    Diagram closed = sw_hook_closure(d);

    SetValuedTableau extended = phi(t, w);
    CompactedTableau compacted = rho(extended, w);
    auto [o, g] = encode_tableau(compacted.tableau);
    LabeledDiagram key_image = phi_alpha(compacted.tableau);

    // Psi: re-expand columns, then drop the padding cells added by phi.
    std::vector<std::pair<Cell, BoxLabel>> cells;
    for (const auto& [c, l] : key_image.cells()) {
        Cell original{c.row, compacted.column_map[static_cast<size_t>(c.col - 1)]};
        if (closed.contains(original) && !d.contains(original)) {
            if (l != BoxLabel::Solid)
                throw std::logic_error("bijection: padding cell must stay solid");
            continue;
        }
        cells.push_back({original, l});
    }
    LabeledDiagram image(w.size(), std::move(cells));
    return {t, std::move(extended), std::move(compacted), std::move(o), std::move(g),
            std::move(key_image), std::move(image)};
}

std::vector<std::pair<SetValuedTableau, LabeledDiagram>> bijection_f(const Permutation& w) {
    std::vector<std::pair<SetValuedTableau, LabeledDiagram>> out;
    for (const SetValuedTableau& t : enumerate_fsvt(rothe_diagram(w)))
        out.push_back({t, bijection_apply(w, t).image});
    return out;
}

}  // namespace groth
