#ifndef STDIV_EXACT_ELEMENT_HPP
#define STDIV_EXACT_ELEMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdiv/extended_rational.hpp"
#include "stdiv/rational.hpp"

namespace stdiv {

// An element of E = Q[pi]/(pi^e - p), the totally ramified Eisenstein
// extension of degree e with uniformizer pi. Coefficients are exact
// rationals, so the p-adic valuation min_i(ord_p(a_i) + i/e) is exact.
// Values are immutable after construction.
class ExactElement {
public:
    ExactElement() : e_(1), p_(0), coeffs_{Rat(0)} {}

    ExactElement(std::vector<Rat> coeffs, long e, const Int& p) : e_(e), p_(p) {
        if (e < 1) throw std::invalid_argument("ramification index must be >= 1");
        if (!is_prime(p)) throw std::invalid_argument("p must be prime");
        coeffs_.assign(e, Rat(0));
        // fold pi^e = p
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            long q = static_cast<long>(i) / e, r = static_cast<long>(i) % e;
            coeffs_[r] += coeffs[i] * pow_rat(Rat(p), q);
        }
    }

    static ExactElement from_rat(const Rat& q, long e, const Int& p) {
        return ExactElement({q}, e, p);
    }
    static ExactElement zero(long e, const Int& p) { return from_rat(Rat(0), e, p); }
    static ExactElement one(long e, const Int& p) { return from_rat(Rat(1), e, p); }

    // c * pi^i  (i may exceed e; it folds)
    static ExactElement monomial(const Rat& c, long i, long e, const Int& p) {
        if (i < 0) throw std::invalid_argument("monomial exponent must be >= 0");
        std::vector<Rat> v(static_cast<std::size_t>(i) + 1, Rat(0));
        v.back() = c;
        return ExactElement(std::move(v), e, p);
    }

    // c * pi^(e*v) for half-integral (or 1/e-integral) valuation v; v*e must be integral.
    static ExactElement with_valuation(const Rat& unit, const Rat& v, long e, const Int& p) {
        Rat ev = v * e;
        if (ev.get_den() != 1) throw std::invalid_argument("valuation not representable at this ramification");
        long n = static_cast<long>(ev.get_num().get_si());
        long q = n >= 0 ? n / e : -((-n + e - 1) / e);
        long r = n - q * e;  // 0 <= r < e
        return monomial(unit * pow_rat(Rat(p), q), r, e, p);
    }

    long ramification() const { return e_; }
    const Int& prime() const { return p_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    ExtRat valuation() const {
        if (is_zero()) return ExtRat::infinity();
        bool have = false;
        Rat best;
        for (long i = 0; i < e_; ++i) {
            if (coeffs_[i] == 0) continue;
            Rat v = Rat(ord_p(coeffs_[i], p_)) + Rat(i, e_);
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
        return ExtRat(best);
    }

    friend ExactElement operator+(const ExactElement& a, const ExactElement& b) {
        a.check_compatible(b);
        ExactElement r(a);
        for (long i = 0; i < a.e_; ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend ExactElement operator-(const ExactElement& a, const ExactElement& b) {
        a.check_compatible(b);
        ExactElement r(a);
        for (long i = 0; i < a.e_; ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    friend ExactElement operator-(const ExactElement& a) {
        ExactElement r(a);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend ExactElement operator*(const ExactElement& a, const ExactElement& b) {
        a.check_compatible(b);
        std::vector<Rat> prod(2 * a.e_, Rat(0));
        for (long i = 0; i < a.e_; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (long j = 0; j < b.e_; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return ExactElement(std::move(prod), a.e_, a.p_);
    }
    friend ExactElement operator*(const Rat& c, const ExactElement& a) {
        ExactElement r(a);
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }
    friend ExactElement operator*(const ExactElement& a, const Rat& c) { return c * a; }
    friend ExactElement operator/(const ExactElement& a, const ExactElement& b) { return a * b.inverse(); }

    friend bool operator==(const ExactElement& a, const ExactElement& b) {
        a.check_compatible(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ExactElement& a, const ExactElement& b) { return !(a == b); }

    // Gaussian elimination on the multiplication-by-*this matrix.
    ExactElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        long n = e_;
        // column j of M = coeffs of (*this) * pi^j
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(2 * n, Rat(0)));
        for (long j = 0; j < n; ++j) {
            ExactElement col = *this * monomial(Rat(1), j, e_, p_);
            for (long i = 0; i < n; ++i) M[i][j] = col.coeffs_[i];
        }
        for (long i = 0; i < n; ++i) M[i][n + i] = Rat(1);
        for (long c = 0; c < n; ++c) {
            long piv = -1;
            for (long r = c; r < n; ++r)
                if (M[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular multiplication matrix");
            std::swap(M[c], M[piv]);
            Rat inv = Rat(1) / M[c][c];
            for (long j = c; j < 2 * n; ++j) M[c][j] *= inv;
            for (long r = 0; r < n; ++r) {
                if (r == c || M[r][c] == 0) continue;
                Rat f = M[r][c];
                for (long j = c; j < 2 * n; ++j) M[r][j] -= f * M[c][j];
            }
        }
        std::vector<Rat> out(n);
        for (long i = 0; i < n; ++i) out[i] = M[i][n];
        return ExactElement(std::move(out), e_, p_);
    }

    ExactElement pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        ExactElement acc = one(e_, p_), b = *this;
        unsigned long n = static_cast<unsigned long>(k);
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::string s;
        bool first = true;
        for (long i = 0; i < e_; ++i) {
            if (coeffs_[i] == 0) continue;
            if (!first) s += " + ";
            s += to_string(coeffs_[i]);
            if (i == 1) s += "*pi";
            if (i > 1) s += "*pi^" + std::to_string(i);
            first = false;
        }
        return first ? "0" : s;
    }

private:
    void check_compatible(const ExactElement& b) const {
        if (e_ != b.e_ || p_ != b.p_) throw std::invalid_argument("mixed field parameters");
    }

    long e_;
    Int p_;
    std::vector<Rat> coeffs_;
};

struct SqrtFailure {
    // Minimal change that would make the root representable, when we can tell.
    std::string reason;
};

// Exact square root in Q[pi]/(pi^e - p), supported for e <= 2. Returns one
// root when a root exists in the field; the failure note names the smallest
// extension that would contain a root when that is detectable.
inline std::optional<ExactElement> sqrt_exact(const ExactElement& a, SqrtFailure* why = nullptr) {
    const long e = a.ramification();
    const Int& p = a.prime();
    if (a.is_zero()) return ExactElement::zero(e, p);
    if (e > 2) {
        if (why) why->reason = "square roots implemented only for ramification e <= 2";
        return std::nullopt;
    }
    const Rat a0 = a.coeffs()[0];
    const Rat a1 = e == 2 ? a.coeffs()[1] : Rat(0);
    if (a1 == 0) {
        if (auto c = sqrt_rat(a0)) return ExactElement::from_rat(*c, e, p);
        if (auto d = sqrt_rat(a0 / Rat(p))) {
            if (e == 2) return ExactElement::monomial(*d, 1, e, p);
            if (why) why->reason = "root requires the ramified quadratic extension (e = 2)";
            return std::nullopt;
        }
        if (why) why->reason = "root requires an unramified extension of the coefficient field";
        return std::nullopt;
    }
    // (c + d*pi)^2 = c^2 + p d^2 + 2cd pi with c,d nonzero:
    // c^2 = (a0 +- sqrt(a0^2 - p a1^2)) / 2, d = a1 / (2c).
    Rat disc = a0 * a0 - Rat(p) * a1 * a1;
    if (auto s = sqrt_rat(disc)) {
        for (int sign : {+1, -1}) {
            Rat y = (a0 + Rat(sign) * (*s)) / 2;
            if (y == 0) continue;
            if (auto c = sqrt_rat(y)) {
                Rat d = a1 / (2 * (*c));
                return ExactElement({*c, d}, e, p);
            }
        }
    }
    if (why) why->reason = "root requires an extension beyond Q[pi]/(pi^2 - p)";
    return std::nullopt;
}

}  // namespace stdiv

#endif
