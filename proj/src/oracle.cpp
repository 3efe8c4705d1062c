#include "groth/oracle.hpp"

namespace groth {

IntPolynomial staircase_monomial(int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - 1 - i;
    return IntPolynomial::monomial(std::move(e));
}

std::optional<int> PolynomialOracle::pick_ascent(const Permutation& w) const {
    return choice_ == AscentChoice::Smallest ? w.smallest_ascent() : w.largest_ascent();
}

const IntPolynomial& PolynomialOracle::schubert(const Permutation& w) {
    auto it = schubert_cache_.find(w);
    if (it != schubert_cache_.end()) return it->second;
    IntPolynomial result(w.size());
    if (auto i = pick_ascent(w)) {
        result = divided_difference(schubert(w.times_s(*i)), *i);
    } else {
        result = staircase_monomial(w.size());
    }
    return schubert_cache_.emplace(w, std::move(result)).first->second;
}

const IntPolynomial& PolynomialOracle::grothendieck(const Permutation& w) {
    auto it = grothendieck_cache_.find(w);
    if (it != grothendieck_cache_.end()) return it->second;
    IntPolynomial result(w.size());
    if (auto i = pick_ascent(w)) {
        result = pi_tilde(grothendieck(w.times_s(*i)), *i);
    } else {
        result = staircase_monomial(w.size());
    }
    return grothendieck_cache_.emplace(w, std::move(result)).first->second;
}

const IntPolynomial& PolynomialOracle::lascoux(const WeakComposition& alpha) {
    auto it = lascoux_cache_.find(alpha);
    if (it != lascoux_cache_.end()) return it->second;
    IntPolynomial result(alpha.size());
    int exch = 0;
    for (int i = 1; i < alpha.size(); ++i)
        if (alpha[i] < alpha[i + 1]) {
            exch = i;
            break;
        }
    if (exch == 0) {
        result = IntPolynomial::monomial(alpha.parts());
    } else {
        const IntPolynomial& prev = lascoux(alpha.exchanged(exch));
        result = divided_difference(prev.times_variable(exch).times_one_minus_variable(exch + 1), exch);
    }
    return lascoux_cache_.emplace(alpha, std::move(result)).first->second;
}

Coeff PolynomialOracle::grothendieck_count(const Permutation& w, const WeakComposition& gamma) {
    return abs(grothendieck(w).coefficient(gamma));
}

std::vector<WeakComposition> PolynomialOracle::grothendieck_support(const Permutation& w) {
    return support_weights(grothendieck(w));
}

std::vector<WeakComposition> support_weights(const IntPolynomial& f) {
    std::vector<WeakComposition> out;
    out.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) out.push_back(WeakComposition(e));
    return out;
}

}  // namespace groth
