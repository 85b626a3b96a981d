#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoweyl/rational.hpp"

namespace monoweyl {

/// Dense univariate polynomial over Q, used for Euler eigenvalue polynomials
/// in the symbol s. Coefficients are stored low degree first with no trailing
/// zeros; the zero polynomial has an empty coefficient list.
class Unipoly {
public:
    Unipoly() = default;
    Unipoly(const Rational& constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Unipoly(int constant) : Unipoly(Rational(constant)) {}  // NOLINT
    explicit Unipoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Unipoly variable() { return Unipoly(std::vector<Rational>{0, 1}); }

    /// s(s-1)...(s-k+1), the Euler polynomial of d^k up to degree shift.
    static Unipoly falling(int k) {
        Unipoly p(1);
        for (int t = 0; t < k; ++t)
            p = p * Unipoly(std::vector<Rational>{Rational(-t), 1});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree, with deg(0) = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Unipoly operator+(const Unipoly& a, const Unipoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Unipoly(std::move(r));
    }
    friend Unipoly operator-(const Unipoly& a, const Unipoly& b) { return a + (-b); }
    Unipoly operator-() const {
        std::vector<Rational> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(-v);
        return Unipoly(std::move(r));
    }
    friend Unipoly operator*(const Unipoly& a, const Unipoly& b) {
        if (a.is_zero() || b.is_zero()) return Unipoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Unipoly(std::move(r));
    }
    friend Unipoly operator*(const Rational& k, const Unipoly& p) {
        if (k.is_zero()) return Unipoly();
        std::vector<Rational> r;
        r.reserve(p.c_.size());
        for (const auto& v : p.c_) r.push_back(k * v);
        return Unipoly(std::move(r));
    }

    friend bool operator==(const Unipoly& a, const Unipoly& b) { return a.c_ == b.c_; }

    /// P(s + l).
    Unipoly shifted(const Rational& l) const {
        Unipoly arg(std::vector<Rational>{l, 1});
        return composed_affine(arg);
    }
    /// P(k * s).
    Unipoly scaled_arg(const Rational& k) const {
        Unipoly arg(std::vector<Rational>{0, k});
        return composed_affine(arg);
    }

    /// Quotient and remainder of division by (s - alpha).
    std::pair<Unipoly, Rational> deflate(const Rational& alpha) const {
        if (is_zero()) return {Unipoly(), Rational(0)};
        std::vector<Rational> q(c_.size() > 1 ? c_.size() - 1 : 0, Rational(0));
        Rational carry(0);
        for (int i = degree(); i >= 1; --i) {
            carry = carry * alpha + c_[i];
            q[i - 1] = carry;
        }
        Rational rem = carry * alpha + c_[0];
        return {Unipoly(std::move(q)), rem};
    }

    /// Exact division; returns nullopt when the division leaves a remainder.
    std::optional<Unipoly> divided_exact(const Unipoly& d) const {
        if (d.is_zero()) throw Error("division by zero polynomial");
        if (is_zero()) return Unipoly();
        if (degree() < d.degree()) return std::nullopt;
        std::vector<Rational> rem = c_;
        std::vector<Rational> q(c_.size() - d.c_.size() + 1, Rational(0));
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Rational f = rem[i + d.degree()] / d.leading();
            q[i] = f;
            for (int j = 0; j <= d.degree(); ++j)
                rem[i + j] -= f * d.c_[j];
        }
        for (const auto& v : rem)
            if (!v.is_zero()) return std::nullopt;
        return Unipoly(std::move(q));
    }

    std::string str(const std::string& var = "s") const;

private:
    Unipoly composed_affine(const Unipoly& arg) const {
        Unipoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * arg + Unipoly(*it);
        return acc;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline std::string Unipoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = a == Rational(1) && i > 0;
        if (!unit) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace monoweyl
