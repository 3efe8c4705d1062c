#include "groth/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <stdexcept>

namespace groth {

IntPolynomial::IntPolynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("num_vars must be >= 0");
}

IntPolynomial IntPolynomial::constant(int num_vars, Coeff c) {
    IntPolynomial f(num_vars);
    if (c != 0) f.terms_[std::vector<int>(static_cast<size_t>(num_vars), 0)] = std::move(c);
    return f;
}

IntPolynomial IntPolynomial::monomial(std::vector<int> exponents, Coeff c) {
    IntPolynomial f(static_cast<int>(exponents.size()));
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c != 0) f.terms_[std::move(exponents)] = std::move(c);
    return f;
}

IntPolynomial IntPolynomial::variable(int num_vars, int i) {
    if (i < 1 || i > num_vars) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(std::move(e));
}

Coeff IntPolynomial::coefficient(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff IntPolynomial::coefficient(const WeakComposition& gamma) const {
    return coefficient(gamma.padded(num_vars_).parts());
}

void IntPolynomial::add_term(const std::vector<int>& exponents, const Coeff& c) {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("num_vars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("num_vars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r += o;
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r -= o;
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("num_vars mismatch");
    IntPolynomial r(num_vars_);
    std::vector<int> e(static_cast<size_t>(num_vars_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < num_vars_; ++k) e[static_cast<size_t>(k)] = ea[static_cast<size_t>(k)] + eb[static_cast<size_t>(k)];
            r.add_term(e, ca * cb);
        }
    return r;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

IntPolynomial IntPolynomial::times_variable(int i) const {
    if (i < 1 || i > num_vars_) throw std::invalid_argument("variable index out of range");
    IntPolynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        ++e2[static_cast<size_t>(i - 1)];
        r.terms_[std::move(e2)] = c;
    }
    return r;
}

IntPolynomial IntPolynomial::times_one_minus_variable(int i) const {
    IntPolynomial r = *this;
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        ++e2[static_cast<size_t>(i - 1)];
        r.add_term(e2, -c);
    }
    return r;
}

IntPolynomial IntPolynomial::swap_variables(int i, int j) const {
    if (i < 1 || i > num_vars_ || j < 1 || j > num_vars_)
        throw std::invalid_argument("variable index out of range");
    IntPolynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        std::swap(e2[static_cast<size_t>(i - 1)], e2[static_cast<size_t>(j - 1)]);
        r.terms_[std::move(e2)] = c;
    }
    return r;
}

namespace {
int total(const std::vector<int>& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}
}  // namespace

int IntPolynomial::min_total_degree() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    int best = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_) best = std::min(best, total(e));
    return best;
}

int IntPolynomial::max_total_degree() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    int best = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_) best = std::max(best, total(e));
    return best;
}

IntPolynomial IntPolynomial::lowest_degree_part() const {
    int d = min_total_degree();
    IntPolynomial r(num_vars_);
    for (const auto& [e, c] : terms_)
        if (total(e) == d) r.terms_[e] = c;
    return r;
}

std::string IntPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += ' ';
        out += (c < 0 ? "-" : "+");
        Coeff a = abs(c);
        out += a.str();
        for (int k = 0; k < num_vars_; ++k) {
            int ex = e[static_cast<size_t>(k)];
            if (ex == 0) continue;
            out += "*x" + std::to_string(k + 1);
            if (ex > 1) out += "^" + std::to_string(ex);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::from_text(const std::string& text, int num_vars) {
    IntPolynomial f(num_vars);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        ++pos;
        skip_ws();
        if (pos == text.size()) return f;
        throw std::invalid_argument("unexpected text after zero polynomial");
    }
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else {
            throw std::invalid_argument("expected sign in polynomial text");
        }
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected coefficient");
        Coeff c(text.substr(start, pos - start));
        c *= sign;
        std::vector<int> e(static_cast<size_t>(num_vars), 0);
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos >= text.size() || text[pos] != 'x') throw std::invalid_argument("expected variable");
            ++pos;
            start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            int idx = std::stoi(text.substr(start, pos - start));
            if (idx < 1 || idx > num_vars) throw std::invalid_argument("variable index out of range");
            int ex = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                ex = std::stoi(text.substr(start, pos - start));
            }
            e[static_cast<size_t>(idx - 1)] += ex;
        }
        f.add_term(e, c);
        skip_ws();
    }
    return f;
}

std::string IntPolynomial::to_json_string() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json t;
        t["exponents"] = e;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    nlohmann::json doc;
    doc["num_vars"] = num_vars_;
    doc["terms"] = std::move(arr);
    return doc.dump();
}

IntPolynomial IntPolynomial::from_json_string(const std::string& json) {
    nlohmann::json doc = nlohmann::json::parse(json);
    IntPolynomial f(doc.at("num_vars").get<int>());
    for (const auto& t : doc.at("terms")) {
        std::vector<int> e = t.at("exponents").get<std::vector<int>>();
        Coeff c(t.at("coeff").get<std::string>());
        f.add_term(e, c);
    }
    return f;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

IntPolynomial divided_difference(const IntPolynomial& f, int i) {
    int n = f.num_vars();
    if (i < 1 || i + 1 > n) throw std::invalid_argument("divided difference index out of range");
    IntPolynomial r(n);
    // Per monomial with exponents a = e_i, b = e_{i+1}:
    //   a > b:  sum_{p=b}^{a-1} x_i^p x_{i+1}^{a+b-1-p}, coefficient +c
    //   a < b:  same range with a, b swapped, coefficient -c
    //   a = b:  cancels.
    for (const auto& [e, c] : f.terms()) {
        int a = e[static_cast<size_t>(i - 1)];
        int b = e[static_cast<size_t>(i)];
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        Coeff cc = (a > b) ? c : -c;
        std::vector<int> e2 = e;
        for (int p = lo; p <= hi - 1; ++p) {
            e2[static_cast<size_t>(i - 1)] = p;
            e2[static_cast<size_t>(i)] = a + b - 1 - p;
            r.add_term(e2, cc);
        }
    }
    return r;
}

IntPolynomial pi_tilde(const IntPolynomial& f, int i) {
    int n = f.num_vars();
    if (i < 1 || i + 1 > n) throw std::invalid_argument("pi_tilde index out of range");
    return divided_difference(f.times_one_minus_variable(i + 1), i);
}

}  // namespace groth
