#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "monoweyl/genpoly.hpp"
#include "monoweyl/rational.hpp"
#include "monoweyl/unipoly.hpp"

namespace monoweyl {

/// Natural mode: exponents of x restricted to nonnegative integers
/// (polynomial coefficients). Rational mode: exponents range over Q.
enum class Mode { natural, rational };

inline const char* mode_name(Mode m) { return m == Mode::natural ? "natural" : "rational"; }

/// One normal-ordered term c * x^e * D^j.
struct OperatorTerm {
    Rational coeff;
    Rational x_exponent;
    int d_order = 0;

    Rational degree() const { return x_exponent - Rational(d_order); }
};

/// A differential operator with power coefficients, kept in normal order:
/// all x-powers left of all D-powers, no two terms sharing (e, j), terms
/// sorted by descending degree e - j, then descending j.
class DiffOperator {
public:
    explicit DiffOperator(Mode mode = Mode::natural) : mode_(mode) {}

    static DiffOperator constant(const Rational& c, Mode mode) {
        return from_terms({{c, Rational(0), 0}}, mode);
    }
    static DiffOperator x_power(const Rational& e, Mode mode) {
        return from_terms({{Rational(1), e, 0}}, mode);
    }
    static DiffOperator deriv(int j, Mode mode) {
        if (j < 0) throw Error("negative derivative order");
        return from_terms({{Rational(1), Rational(0), j}}, mode);
    }
    /// The Euler operator x*D.
    static DiffOperator euler(Mode mode) {
        return from_terms({{Rational(1), Rational(1), 1}}, mode);
    }

    static DiffOperator from_terms(std::vector<OperatorTerm> terms, Mode mode) {
        DiffOperator t(mode);
        std::sort(terms.begin(), terms.end(), term_before);
        for (const auto& term : terms) {
            if (term.d_order < 0) throw Error("negative derivative order");
            if (term.coeff.is_zero()) continue;
            if (mode == Mode::natural && !term.x_exponent.is_natural())
                throw NaturalModeViolation("exponent " + term.x_exponent.str() +
                                           " is not a natural number");
            if (!t.terms_.empty() && t.terms_.back().x_exponent == term.x_exponent &&
                t.terms_.back().d_order == term.d_order) {
                t.terms_.back().coeff += term.coeff;
                if (t.terms_.back().coeff.is_zero()) t.terms_.pop_back();
            } else {
                t.terms_.push_back(term);
            }
        }
        return t;
    }

    Mode mode() const { return mode_; }
    const std::vector<OperatorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max D-power; undefined on the zero operator.
    int order() const {
        require_nonzero("order");
        int k = 0;
        for (const auto& t : terms_) k = std::max(k, t.d_order);
        return k;
    }

    /// Max of e - j over terms; undefined on the zero operator.
    Rational degree() const {
        require_nonzero("degree");
        return terms_.front().degree();
    }

    DiffOperator to_rational() const {
        DiffOperator t = *this;
        t.mode_ = Mode::rational;
        return t;
    }
    DiffOperator to_natural() const { return from_terms(terms_, Mode::natural); }

    DiffOperator operator-() const {
        DiffOperator t(mode_);
        t.terms_ = terms_;
        for (auto& term : t.terms_) term.coeff = -term.coeff;
        return t;
    }

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
        check_modes(a, b, "+");
        std::vector<OperatorTerm> all = a.terms_;
        all.insert(all.end(), b.terms_.begin(), b.terms_.end());
        return from_terms(std::move(all), a.mode_);
    }
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
        return a + (-b);
    }
    friend DiffOperator operator*(const Rational& k, const DiffOperator& a) {
        if (k.is_zero()) return DiffOperator(a.mode_);
        DiffOperator t(a.mode_);
        t.terms_ = a.terms_;
        for (auto& term : t.terms_) term.coeff = k * term.coeff;
        return t;
    }

    /// Normal-ordered composition A then-apply-after B, i.e. (A*B)(p) = A(B(p)).
    /// Uses D^j x^e = sum_t C(j,t) * e(e-1)...(e-t+1) * x^{e-t} D^{j-t}.
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
        check_modes(a, b, "*");
        std::vector<OperatorTerm> out;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Rational c = ta.coeff * tb.coeff;
                for (int t = 0; t <= ta.d_order; ++t) {
                    Rational w = Rational(binomial(ta.d_order, t)) *
                                 falling_factorial(tb.x_exponent, t);
                    if (w.is_zero()) continue;
                    out.push_back({c * w, ta.x_exponent + tb.x_exponent - Rational(t),
                                   ta.d_order - t + tb.d_order});
                }
            }
        }
        return from_terms(std::move(out), a.mode_);
    }

    DiffOperator pow(int n) const {
        if (n < 0) throw Error("negative operator power");
        DiffOperator acc = constant(Rational(1), mode_);
        for (int i = 0; i < n; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        if (a.mode_ != b.mode_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.coeff != y.coeff || x.x_exponent != y.x_exponent || x.d_order != y.d_order)
                return false;
        }
        return true;
    }

    std::string str() const;

private:
    static bool term_before(const OperatorTerm& a, const OperatorTerm& b) {
        Rational da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.d_order > b.d_order;
    }

    static void check_modes(const DiffOperator& a, const DiffOperator& b, const char* op) {
        if (a.mode_ != b.mode_)
            throw ModeMismatch(std::string("operator ") + op + " on mixed modes");
    }

    void require_nonzero(const char* what) const {
        if (is_zero()) throw ZeroOperatorError(std::string(what) + " of the zero operator");
    }

    Mode mode_;
    std::vector<OperatorTerm> terms_;
};

inline DiffOperator normal_order_mul(const DiffOperator& a, const DiffOperator& b) {
    return a * b;
}

/// Exact image of a generalized polynomial:
/// x^e D^j (x^i) = i(i-1)...(i-j+1) * x^{i+e-j}.
inline GenPolynomial apply(const DiffOperator& t, const GenPolynomial& p) {
    if (t.mode() == Mode::natural && !p.is_natural())
        throw ModeMismatch("natural-mode operator applied to a non-natural polynomial");
    GenPolynomial out;
    for (const auto& term : t.terms()) {
        for (const auto& [i, c] : p.terms()) {
            Rational w = falling_factorial(i, term.d_order);
            if (w.is_zero()) continue;
            out.add_term(term.coeff * c * w,
                         i + term.x_exponent - Rational(term.d_order));
        }
    }
    return out;
}

/// One homogeneous piece of an operator: T x^s = P(s) x^{s+m}, where P is the
/// Euler eigenvalue polynomial in the symbol s and m is the degree.
struct GradedComponent {
    Rational degree;
    Unipoly euler_poly;

    friend bool operator==(const GradedComponent& a, const GradedComponent& b) {
        return a.degree == b.degree && a.euler_poly == b.euler_poly;
    }
};

/// Euler polynomial of a list of terms sharing degree m:
/// P(s) = sum_j c_j * s(s-1)...(s-j+1), c_j the coefficient of x^{j+m} D^j.
inline GradedComponent terms_to_euler(const std::vector<OperatorTerm>& terms) {
    if (terms.empty()) throw ZeroOperatorError("terms_to_euler of no terms");
    Rational m = terms.front().degree();
    Unipoly p;
    for (const auto& t : terms) {
        if (t.degree() != m)
            throw Error("terms_to_euler: terms of mixed degree");
        p = p + t.coeff * Unipoly::falling(t.d_order);
    }
    return {m, p};
}

/// Splits an operator into graded components of distinct degrees, highest
/// degree first. The zero operator decomposes into the empty list.
inline std::vector<GradedComponent> grade_decompose(const DiffOperator& t) {
    std::vector<GradedComponent> out;
    std::vector<OperatorTerm> bucket;
    auto flush = [&] {
        if (!bucket.empty()) {
            GradedComponent g = terms_to_euler(bucket);
            if (!g.euler_poly.is_zero()) out.push_back(std::move(g));
            bucket.clear();
        }
    };
    for (const auto& term : t.terms()) {
        if (!bucket.empty() && bucket.front().degree() != term.degree()) flush();
        bucket.push_back(term);
    }
    flush();
    return out;
}

/// Inverse of terms_to_euler via exact forward differences:
/// c_j = (Delta^j P)(0) / j!. In natural mode a nonzero c_j with j + m < 0
/// (or a non-integer degree) signals that the component has no
/// polynomial-coefficient realization.
inline DiffOperator euler_to_terms(const GradedComponent& g, Mode mode) {
    if (mode == Mode::natural && !g.degree.is_integer())
        throw NaturalModeViolation("degree " + g.degree.str() + " in natural mode");
    const Unipoly& p = g.euler_poly;
    int k = std::max(p.degree(), 0);
    std::vector<Rational> diff;
    diff.reserve(k + 1);
    for (int i = 0; i <= k; ++i) diff.push_back(p.eval(Rational(i)));
    std::vector<OperatorTerm> terms;
    Rational jfact(1);
    for (int j = 0; j <= k; ++j) {
        if (j > 0) jfact *= Rational(j);
        Rational c = diff[0] / jfact;
        if (!c.is_zero()) {
            Rational e = g.degree + Rational(j);
            if (mode == Mode::natural && e < 0)
                throw NaturalModeViolation("coefficient at exponent " + e.str() +
                                           " in natural mode");
            terms.push_back({c, e, j});
        }
        for (int i = 0; i + j + 1 <= k; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    return DiffOperator::from_terms(std::move(terms), mode);
}

}  // namespace monoweyl
