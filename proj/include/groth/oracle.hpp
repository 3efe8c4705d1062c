#pragma once

#include <unordered_map>

#include "groth/polynomial.hpp"

namespace groth {

// Recursive divided-difference definitions of the three polynomial families,
// with per-instance memoization.  Not thread-safe; use one oracle per worker.
class PolynomialOracle {
public:
    enum class AscentChoice { Smallest, Largest };

    explicit PolynomialOracle(AscentChoice choice = AscentChoice::Smallest) : choice_(choice) {}

    // S_w: base S_{w_0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}; else del_i S_{w s_i}
    // at an ascent w(i) < w(i+1).
    const IntPolynomial& schubert(const Permutation& w);

    // G_w: same base; else pi_i G_{w s_i}.
    const IntPolynomial& grothendieck(const Permutation& w);

    // L_alpha: x^alpha for weakly decreasing alpha; else
    // del_i(x_i (1 - x_{i+1}) L_{s_i alpha}) at alpha_i < alpha_{i+1}.
    const IntPolynomial& lascoux(const WeakComposition& alpha);

    // g_{w,gamma} = |[x^gamma] G_w|.
    Coeff grothendieck_count(const Permutation& w, const WeakComposition& gamma);

    // Weights gamma with nonzero coefficient in G_w, lex-ascending.
    std::vector<WeakComposition> grothendieck_support(const Permutation& w);

private:
    AscentChoice choice_;
    std::unordered_map<Permutation, IntPolynomial, PermutationHash> schubert_cache_;
    std::unordered_map<Permutation, IntPolynomial, PermutationHash> grothendieck_cache_;
    std::unordered_map<WeakComposition, IntPolynomial, WeakCompositionHash> lascoux_cache_;

    std::optional<int> pick_ascent(const Permutation& w) const;
};

// Weights in the support of f as length-n compositions, lex-ascending.
std::vector<WeakComposition> support_weights(const IntPolynomial& f);

IntPolynomial staircase_monomial(int n);  // x_1^{n-1} x_2^{n-2} ... x_{n-1}

}  // namespace groth
