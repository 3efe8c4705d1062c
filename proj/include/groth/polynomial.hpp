#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "groth/diagram.hpp"

namespace groth {

using Coeff = boost::multiprecision::cpp_int;

// Sparse multivariate polynomial over Z in x_1..x_n.  Terms are keyed by the
// exponent vector (length num_vars); zero coefficients are never stored.
class IntPolynomial {
public:
    using TermMap = std::map<std::vector<int>, Coeff>;

    explicit IntPolynomial(int num_vars);
    static IntPolynomial constant(int num_vars, Coeff c);
    static IntPolynomial monomial(std::vector<int> exponents, Coeff c = 1);
    static IntPolynomial variable(int num_vars, int i);  // x_i

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Coeff coefficient(const std::vector<int>& exponents) const;
    Coeff coefficient(const WeakComposition& gamma) const;

    void add_term(const std::vector<int>& exponents, const Coeff& c);

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;

    IntPolynomial times_variable(int i) const;           // x_i * f
    IntPolynomial times_one_minus_variable(int i) const;  // (1 - x_i) * f
    IntPolynomial swap_variables(int i, int j) const;     // exchange x_i, x_j

    int min_total_degree() const;  // throws on zero polynomial
    int max_total_degree() const;

    // Sum of terms of minimal total degree.  Throws on zero polynomial.
    IntPolynomial lowest_degree_part() const;

    // Signed monomials in lex-ascending exponent order, e.g. "+3*x1^2*x2 -1*x3".
    std::string to_text() const;
    static IntPolynomial from_text(const std::string& text, int num_vars);

    // JSON array of {"exponents":[...],"coeff":"<int>"} in lex order.
    std::string to_json_string() const;
    static IntPolynomial from_json_string(const std::string& json);

    bool operator==(const IntPolynomial& o) const;

private:
    int num_vars_;
    TermMap terms_;
};

// del_i f = (f - s_i f)/(x_i - x_{i+1}); exact by antisymmetric-pair expansion.
IntPolynomial divided_difference(const IntPolynomial& f, int i);

// pi_i f = del_i((1 - x_{i+1}) f).
IntPolynomial pi_tilde(const IntPolynomial& f, int i);

}  // namespace groth
