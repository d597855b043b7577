// Sparse Laurent polynomials in one indeterminate with exact rational
// coefficients. The indeterminate is contextual (t for lattices, u for the
// degeneration families).
#pragma once

#include <map>
#include <string>

#include "schubert/core.hpp"

namespace schubert {

class LaurentScalar {
  public:
    LaurentScalar() = default;
    explicit LaurentScalar(const Rat& c) {
        if (c != 0) coef_[0] = c;
    }
    explicit LaurentScalar(long long c) : LaurentScalar(Rat(c)) {}

    static LaurentScalar monomial(long long exp, const Rat& c) {
        LaurentScalar s;
        if (c != 0) s.coef_[exp] = c;
        return s;
    }
    static LaurentScalar variable() { return monomial(1, Rat(1)); }

    bool is_zero() const { return coef_.empty(); }

    // Smallest exponent with nonzero coefficient; caller must rule out zero.
    long long val() const {
        require(!is_zero(), "valuation of the zero scalar");
        return coef_.begin()->first;
    }
    long long max_exp() const {
        require(!is_zero(), "degree of the zero scalar");
        return coef_.rbegin()->first;
    }

    Rat coefficient(long long exp) const {
        auto it = coef_.find(exp);
        return it == coef_.end() ? Rat(0) : it->second;
    }

    const std::map<long long, Rat>& coefficients() const { return coef_; }

    bool is_integral() const {
        for (const auto& [e, c] : coef_)
            if (denominator(c) != 1) return false;
        return true;
    }
    bool has_negative_exponent() const { return !is_zero() && val() < 0; }

    void add_term(long long exp, const Rat& c) {
        if (c == 0) return;
        auto it = coef_.find(exp);
        if (it == coef_.end()) {
            coef_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.coef_) r.add_term(e, c);
        return r;
    }
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [e, c] : b.coef_) r.add_term(e, -c);
        return r;
    }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.coef_)
            for (const auto& [eb, cb] : b.coef_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [e, c] : coef_) r.coef_[e] = -c;
        return r;
    }

    LaurentScalar scaled(const Rat& c) const {
        LaurentScalar r;
        if (c == 0) return r;
        for (const auto& [e, k] : coef_) r.coef_[e] = k * c;
        return r;
    }
    // Multiplication by the indeterminate to the given power.
    LaurentScalar shifted(long long exp) const {
        LaurentScalar r;
        for (const auto& [e, c] : coef_) r.coef_[e + exp] = c;
        return r;
    }

    // Substitute a rational for the indeterminate. z = 0 needs no negative
    // exponents; evaluation there is the constant coefficient.
    Rat evaluate(const Rat& z) const {
        if (z == 0) {
            require(!has_negative_exponent(), "evaluating a pole at zero");
            return coefficient(0);
        }
        Rat acc(0);
        for (const auto& [e, c] : coef_) acc += c * rat_pow(z, e);
        return acc;
    }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : coef_) {
            Rat ac = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            bool unit_coeff = (ac == 1) && e != 0;
            if (!unit_coeff) out += rat_to_string(ac);
            if (e != 0) {
                if (!unit_coeff) out += "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

  private:
    std::map<long long, Rat> coef_;  // exponent -> nonzero coefficient
};

}  // namespace schubert
