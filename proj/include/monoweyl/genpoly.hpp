#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoweyl/ratmatrix.hpp"
#include "monoweyl/rational.hpp"

namespace monoweyl {

/// Generalized polynomial: a finite Q-linear combination of powers x^e with
/// rational exponents e (the algebra with x^b * x^c = x^{b+c}). Ordinary
/// polynomials are the case where every exponent is a nonnegative integer.
/// Canonical form: exponents strictly sorted, no zero coefficients.
class GenPolynomial {
public:
    GenPolynomial() = default;
    GenPolynomial(const Rational& constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) terms_[Rational(0)] = constant;
    }
    GenPolynomial(int constant) : GenPolynomial(Rational(constant)) {}  // NOLINT

    static GenPolynomial monomial(const Rational& coeff, const Rational& exponent) {
        GenPolynomial p;
        if (!coeff.is_zero()) p.terms_[exponent] = coeff;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Rational, Rational>& terms() const { return terms_; }

    /// True when every exponent is a nonnegative integer.
    bool is_natural() const {
        for (const auto& [e, c] : terms_)
            if (!e.is_natural()) return false;
        return true;
    }

    Rational coeff(const Rational& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest exponent with nonzero coefficient; requires a nonzero polynomial.
    Rational leading_exponent() const {
        if (is_zero()) throw ZeroVectorError("leading exponent of zero polynomial");
        return terms_.rbegin()->first;
    }
    Rational leading_coeff() const {
        if (is_zero()) throw ZeroVectorError("leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }
    Rational min_exponent() const {
        if (is_zero()) throw ZeroVectorError("min exponent of zero polynomial");
        return terms_.begin()->first;
    }

    GenPolynomial& operator+=(const GenPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(c, e);
        return *this;
    }
    GenPolynomial& operator-=(const GenPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(-c, e);
        return *this;
    }
    friend GenPolynomial operator+(GenPolynomial a, const GenPolynomial& b) { return a += b; }
    friend GenPolynomial operator-(GenPolynomial a, const GenPolynomial& b) { return a -= b; }
    GenPolynomial operator-() const {
        GenPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b) {
        GenPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ca * cb, ea + eb);
        return r;
    }
    friend GenPolynomial operator*(const Rational& k, const GenPolynomial& p) {
        GenPolynomial r;
        if (k.is_zero()) return r;
        for (const auto& [e, c] : p.terms_) r.terms_[e] = k * c;
        return r;
    }

    friend bool operator==(const GenPolynomial& a, const GenPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(const Rational& coeff, const Rational& exponent) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_[exponent] = coeff;
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string str() const;

private:
    std::map<Rational, Rational> terms_;
};

inline std::string format_exponent(const Rational& e) {
    if (e.is_natural()) return e.str();
    return "(" + e.str() + ")";
}

inline std::string GenPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    // Highest exponent first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& e = it->first;
        const Rational& c = it->second;
        Rational a = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool has_x = !e.is_zero();
        bool unit = a == Rational(1) && has_x;
        if (!unit) out += a.str();
        if (has_x) {
            if (!unit) out += "*";
            out += "x";
            if (e != Rational(1)) out += "^" + format_exponent(e);
        }
    }
    return out;
}

/// Exact coordinates of p in the span of `basis`, or nullopt when p is
/// outside it. Solves one linear system over the union of exponents.
inline std::optional<std::vector<Rational>> span_contains(
    const std::vector<GenPolynomial>& basis, const GenPolynomial& p) {
    std::map<Rational, std::size_t> exp_index;
    for (const auto& b : basis)
        for (const auto& [e, c] : b.terms())
            exp_index.emplace(e, exp_index.size());
    for (const auto& [e, c] : p.terms())
        if (!exp_index.count(e)) return std::nullopt;  // exponent unreachable

    RatMatrix m(exp_index.size(), basis.size());
    std::vector<Rational> rhs(exp_index.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [e, c] : basis[j].terms())
            m.at(exp_index[e], j) = c;
    for (const auto& [e, c] : p.terms()) rhs[exp_index[e]] = c;
    return m.solve(rhs);
}

}  // namespace monoweyl
