#ifndef STDIV_BIPOLY_HPP
#define STDIV_BIPOLY_HPP

#include <string>
#include <vector>

#include "stdiv/exact_element.hpp"
#include "stdiv/poly.hpp"

namespace stdiv {

// Polynomial in the two commuting variables (T, x) with rational
// coefficients, stored as x-slices: slice s is the coefficient of x^s, a
// polynomial in T. Trailing zero slices stripped.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly<Rat>> slices) : s_(std::move(slices)) { strip(); }

    static BiPoly from_T(const Poly<Rat>& f) { return BiPoly(std::vector<Poly<Rat>>{f}); }
    static BiPoly x_power(long s) {
        std::vector<Poly<Rat>> v(static_cast<std::size_t>(s) + 1);
        v.back() = Poly<Rat>::constant(Rat(1));
        return BiPoly(std::move(v));
    }

    long x_degree() const { return static_cast<long>(s_.size()) - 1; }
    long t_degree() const {
        long d = -1;
        for (const auto& f : s_) d = std::max(d, f.degree());
        return d;
    }
    bool is_zero() const { return s_.empty(); }

    const Poly<Rat>& x_slice(long s) const {
        static const Poly<Rat> z;
        if (s < 0 || s > x_degree()) return z;
        return s_[static_cast<std::size_t>(s)];
    }
    Rat coeff(long s, long d) const { return x_slice(s).coeff(d); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<Poly<Rat>> r(std::max(a.s_.size(), b.s_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.s_.size()) r[i] = r[i] + a.s_[i];
            if (i < b.s_.size()) r[i] = r[i] + b.s_[i];
        }
        return BiPoly(std::move(r));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (Rat(-1) * b); }
    friend BiPoly operator*(const Rat& c, const BiPoly& a) {
        std::vector<Poly<Rat>> r = a.s_;
        for (auto& f : r) f = c * f;
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<Poly<Rat>> r(a.s_.size() + b.s_.size() - 1);
        for (std::size_t i = 0; i < a.s_.size(); ++i)
            for (std::size_t j = 0; j < b.s_.size(); ++j) r[i + j] = r[i + j] + a.s_[i] * b.s_[j];
        return BiPoly(std::move(r));
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.s_ == b.s_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly truncate_T(long n) const {
        std::vector<Poly<Rat>> r;
        for (const auto& f : s_) r.push_back(truncate(f, n));
        return BiPoly(std::move(r));
    }

    // substitute a rational for x
    Poly<Rat> at_x(const Rat& x) const {
        Poly<Rat> acc;
        Rat xp(1);
        for (const auto& f : s_) {
            acc = acc + xp * f;
            xp *= x;
        }
        return acc;
    }

    // substitute a rational for T, leaving a polynomial in x
    Poly<Rat> at_T(const Rat& t) const {
        std::vector<Rat> r;
        for (const auto& f : s_) r.push_back(f(t));
        return Poly<Rat>(std::move(r));
    }

    Rat operator()(const Rat& t, const Rat& x) const { return at_x(x)(t); }

    // substitute exact field elements for (T, x)
    ExactElement eval(const ExactElement& t, const ExactElement& x) const {
        ExactElement acc = ExactElement::zero(t.ramification(), t.prime());
        ExactElement xp = ExactElement::one(t.ramification(), t.prime());
        for (const auto& f : s_) {
            ExactElement tacc = ExactElement::zero(t.ramification(), t.prime());
            for (long d = f.degree(); d >= 0; --d) tacc = tacc * t + ExactElement::from_rat(f.coeff(d), t.ramification(), t.prime());
            acc = acc + xp * tacc;
            xp = xp * x;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (long s = 0; s <= x_degree(); ++s) {
            if (s_[static_cast<std::size_t>(s)].is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (s == 0)
                out += poly_str(s_[0]);
            else
                out += "x^" + std::to_string(s) + "*(" + poly_str(s_[static_cast<std::size_t>(s)]) + ")";
        }
        return out;
    }

private:
    void strip() {
        while (!s_.empty() && s_.back().is_zero()) s_.pop_back();
    }
    std::vector<Poly<Rat>> s_;
};

}  // namespace stdiv

#endif
