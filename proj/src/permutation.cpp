#include "groth/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace groth {

namespace {

void validate(const std::vector<int>& v) {
    if (v.empty()) throw std::invalid_argument("permutation must have n >= 1");
    std::vector<char> seen(v.size() + 1, 0);
    for (int x : v) {
        if (x < 1 || x > static_cast<int>(v.size()) || seen[x])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[x] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : vals_(std::move(entries)) {
    validate(vals_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty permutation string");
    std::vector<int> v;
    if (text.find(',') == std::string::npos) {
        // Compact digit form is only valid for n <= 9.
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("compact permutation form allows digits 1-9 only");
            v.push_back(c - '0');
        }
        if (v.size() > 9)
            throw std::invalid_argument("compact form limited to n <= 9; use comma-separated");
    } else {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.empty()) throw std::invalid_argument("empty entry in permutation list");
            v.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::string s;
    if (size() <= 9) {
        for (int x : vals_) s += static_cast<char>('0' + x);
    } else {
        for (size_t i = 0; i < vals_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(vals_[i]);
        }
    }
    return s;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(vals_.size());
    for (int i = 0; i < size(); ++i) v[vals_[i] - 1] = i + 1;
    return Permutation(std::move(v));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (vals_[i] > vals_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (vals_[i] != i + 1) return false;
    return true;
}

bool Permutation::is_longest() const {
    for (int i = 0; i < size(); ++i)
        if (vals_[i] != size() - i) return false;
    return true;
}

Permutation Permutation::times_s(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("s_i index out of range");
    std::vector<int> v = vals_;
    std::swap(v[i - 1], v[i]);
    return Permutation(std::move(v));
}

Permutation Permutation::embed(int m) const {
    if (m < size()) throw std::invalid_argument("embed target smaller than permutation");
    std::vector<int> v = vals_;
    for (int x = size() + 1; x <= m; ++x) v.push_back(x);
    return Permutation(std::move(v));
}

std::optional<int> Permutation::smallest_ascent() const {
    for (int i = 1; i < size(); ++i)
        if (vals_[i - 1] < vals_[i]) return i;
    return std::nullopt;
}

std::optional<int> Permutation::largest_ascent() const {
    for (int i = size() - 1; i >= 1; --i)
        if (vals_[i - 1] < vals_[i]) return i;
    return std::nullopt;
}

uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial supported for 0 <= n <= 20");
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

uint64_t Permutation::lex_rank() const {
    uint64_t rank = 0;
    int n = size();
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (vals_[j] < vals_[i]) ++smaller;
        rank += static_cast<uint64_t>(smaller) * factorial(n - 1 - i);
    }
    return rank;
}

Permutation Permutation::lex_unrank(int n, uint64_t rank) {
    if (rank >= factorial(n)) throw std::invalid_argument("rank out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> v;
    v.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        uint64_t f = factorial(i);
        size_t idx = static_cast<size_t>(rank / f);
        rank %= f;
        v.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return Permutation(std::move(v));
}

size_t PermutationHash::operator()(const Permutation& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : w.entries()) {
        h ^= static_cast<uint64_t>(x);
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
    int n = w.size(), k = p.size();
    if (k > n) return false;
    const auto& pv = p.entries();
    const auto& wv = w.entries();
    std::vector<int> chosen;
    chosen.reserve(k);

    // Order-isomorphism is incremental: the candidate must relate to every
    // chosen value the way p's next entry relates to p's prefix.
    auto compatible = [&](int cand) {
        int t = static_cast<int>(chosen.size());
        for (int j = 0; j < t; ++j)
            if ((chosen[j] < cand) != (pv[j] < pv[t])) return false;
        return true;
    };

    auto dfs = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        int need = k - static_cast<int>(chosen.size());
        for (int i = start; i <= n - need; ++i) {
            if (!compatible(wv[i])) continue;
            chosen.push_back(wv[i]);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq requires equal sizes");
    int n = u.size();
    // r_v(i,j) = #{k <= i : v(k) <= j}; u <= w iff r_u >= r_w everywhere.
    std::vector<int> ru(n, 0), rw(n, 0);  // row-incremental counts per j
    for (int i = 1; i <= n; ++i) {
        int uv = u(i), wv = w(i);
        for (int j = uv; j <= n; ++j) ++ru[j - 1];
        for (int j = wv; j <= n; ++j) ++rw[j - 1];
        for (int j = 0; j < n; ++j)
            if (ru[j] < rw[j]) return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>(factorial(n)));
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace groth
