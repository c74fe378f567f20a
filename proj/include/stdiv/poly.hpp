#ifndef STDIV_POLY_HPP
#define STDIV_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "stdiv/rational.hpp"

namespace stdiv {

// Dense univariate polynomial, ascending coefficients, trailing zeros
// stripped. degree() of the zero polynomial is -1 (the "minus infinity"
// marker).
template <class T = Rat>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { strip(); }
    Poly(std::initializer_list<T> c) : c_(c) { strip(); }
    static Poly zero() { return Poly(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly monomial(const T& v, long d) {
        std::vector<T> c(static_cast<std::size_t>(d) + 1, T(0));
        c.back() = v;
        return Poly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(long d) const {
        if (d < 0 || d >= static_cast<long>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(d)];
    }
    T leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = s * x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) { return s * a; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly shifted(long k) const {  // multiply by X^k
        if (is_zero()) return Poly();
        std::vector<T> r(c_.size() + static_cast<std::size_t>(k), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
        return Poly(std::move(r));
    }

private:
    void strip() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

// [F]^(n): drop all coefficients above degree n.
template <class T>
Poly<T> truncate(const Poly<T>& f, long n) {
    if (n < 0) throw std::invalid_argument("truncation order must be >= 0");
    std::vector<T> r;
    for (long d = 0; d <= std::min<long>(n, f.degree()); ++d) r.push_back(f.coeff(d));
    return Poly<T>(std::move(r));
}

template <class T>
Poly<T> derivative(const Poly<T>& f) {
    if (f.degree() <= 0) return Poly<T>();
    std::vector<T> r;
    for (long d = 1; d <= f.degree(); ++d) r.push_back(T(d) * f.coeff(d));
    return Poly<T>(std::move(r));
}

// f_n(T): 0 for n = 1, else the degree-(n-2) truncation of log(1+T)/T.
inline Poly<Rat> f_series(long n) {
    if (n < 1) throw std::invalid_argument("f_series needs n >= 1");
    if (n == 1) return Poly<Rat>();
    std::vector<Rat> c;
    for (long k = 0; k <= n - 2; ++k) c.push_back(Rat(k % 2 == 0 ? 1 : -1, k + 1));
    return Poly<Rat>(std::move(c));
}

// sum_{k=1}^{n} (-1)^(k-1) T^k / k, the truncated log(1+T) kernel.
inline Poly<Rat> log1p_truncated(long n) {
    std::vector<Rat> c{Rat(0)};
    for (long k = 1; k <= n; ++k) c.push_back(Rat(k % 2 == 1 ? 1 : -1, k));
    return Poly<Rat>(std::move(c));
}

// Exact division, throws if the division has a remainder. Valid over a field.
inline Poly<Rat> divide_exact(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Poly<Rat>();
    std::vector<Rat> rem(a.coeffs());
    long db = b.degree();
    if (a.degree() < db) throw std::domain_error("inexact polynomial division");
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    for (long d = a.degree(); d >= db; --d) {
        Rat c = rem[static_cast<std::size_t>(d)] / b.leading();
        q[static_cast<std::size_t>(d - db)] = c;
        if (c == 0) continue;
        for (long i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.coeff(i);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return Poly<Rat>(std::move(q));
}

template <class T>
std::string poly_str(const Poly<T>& f, const std::string& var = "T") {
    if (f.is_zero()) return "0";
    std::string s;
    for (long d = 0; d <= f.degree(); ++d) {
        if (f.coeff(d) == T(0)) continue;
        if (!s.empty()) s += " + ";
        s += to_string(f.coeff(d));
        if (d == 1) s += "*" + var;
        if (d > 1) s += "*" + var + "^" + std::to_string(d);
    }
    return s;
}

}  // namespace stdiv

#endif
