#ifndef STDIV_RESIDUE_HPP
#define STDIV_RESIDUE_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdiv/exact_element.hpp"
#include "stdiv/rational.hpp"

namespace stdiv {

class ResidueElement;

// F_{p^k} realized as F_p[z]/(irreducible of degree k). The modulus is the
// lexicographically smallest monic irreducible, so a (p, k) pair always
// denotes the same field.
class ResidueField {
public:
    ResidueField(long p, long k) : p_(p), k_(k) {
        if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
        if (!is_prime(Int(p))) throw std::invalid_argument("p must be prime");
        modulus_ = find_irreducible();
    }

    long p() const { return p_; }
    long degree() const { return k_; }
    long order_long() const {
        long q = 1;
        for (long i = 0; i < k_; ++i) q *= p_;
        return q;
    }
    const std::vector<long>& modulus() const { return modulus_; }

    ResidueElement zero() const;
    ResidueElement one() const;
    ResidueElement from_int(long n) const;
    ResidueElement from_rat(const Rat& q) const;
    ResidueElement from_coeffs(std::vector<long> c) const;
    ResidueElement element_by_index(long idx) const;  // enumerates all p^k elements

private:
    friend class ResidueElement;

    std::vector<long> find_irreducible() const;
    bool is_irreducible(const std::vector<long>& f) const;

    long p_, k_;
    std::vector<long> modulus_;  // monic, length k_+1, coeffs in [0,p)
};

class ResidueElement {
public:
    ResidueElement() : field_(nullptr) {}
    ResidueElement(const ResidueField* f, std::vector<long> c) : field_(f), c_(std::move(c)) {
        normalize();
    }

    const ResidueField* field() const { return field_; }
    const std::vector<long>& coeffs() const { return c_; }

    bool is_zero() const {
        for (long x : c_)
            if (x) return false;
        return true;
    }

    friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
        a.check(b);
        std::vector<long> r(a.c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + b.c_[i]) % a.field_->p_;
        return ResidueElement(a.field_, std::move(r));
    }
    friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
        a.check(b);
        std::vector<long> r(a.c_);
        long p = a.field_->p_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((r[i] - b.c_[i]) % p + p) % p;
        return ResidueElement(a.field_, std::move(r));
    }
    friend ResidueElement operator-(const ResidueElement& a) {
        return a.field_->zero() - a;
    }
    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
        a.check(b);
        long p = a.field_->p_, k = a.field_->k_;
        std::vector<long> prod(2 * k - 1, 0);
        for (long i = 0; i < k; ++i) {
            if (!a.c_[i]) continue;
            for (long j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
        }
        // reduce by the monic modulus
        const auto& m = a.field_->modulus_;
        for (long d = 2 * k - 2; d >= k; --d) {
            long c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (long i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * m[i]) % p + p) % p;
        }
        prod.resize(k);
        return ResidueElement(a.field_, std::move(prod));
    }
    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ResidueElement& a, const ResidueElement& b) { return !(a == b); }

    ResidueElement pow(long n) const {
        long ord = field_->order_long() - 1;
        if (n < 0) n = n % ord + ord;
        ResidueElement acc = field_->one(), b = *this;
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    ResidueElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero residue");
        return pow(field_->order_long() - 2);
    }
    friend ResidueElement operator/(const ResidueElement& a, const ResidueElement& b) {
        return a * b.inverse();
    }

    std::optional<ResidueElement> sqrt() const {
        // desk-scale brute force; fields here have at most a few thousand elements
        long q = field_->order_long();
        for (long i = 0; i < q; ++i) {
            ResidueElement x = field_->element_by_index(i);
            if (x * x == *this) return x;
        }
        return std::nullopt;
    }

    std::string str() const {
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            if (!first) s += "+";
            s += std::to_string(c_[i]);
            if (i == 1) s += "z";
            if (i > 1) s += "z^" + std::to_string(i);
            first = false;
        }
        return first ? "0" : s;
    }

private:
    void normalize() {
        if (!field_) return;
        c_.resize(field_->k_, 0);
        long p = field_->p_;
        for (auto& x : c_) x = (x % p + p) % p;
    }
    void check(const ResidueElement& b) const {
        if (field_ == nullptr || b.field_ == nullptr) throw std::invalid_argument("unbound residue element");
        if (field_->p_ != b.field_->p_ || field_->k_ != b.field_->k_)
            throw std::invalid_argument("mixed residue fields");
    }

    const ResidueField* field_;
    std::vector<long> c_;
};

inline ResidueElement ResidueField::zero() const { return ResidueElement(this, std::vector<long>(k_, 0)); }
inline ResidueElement ResidueField::one() const {
    std::vector<long> c(k_, 0);
    c[0] = 1;
    return ResidueElement(this, std::move(c));
}
inline ResidueElement ResidueField::from_int(long n) const {
    std::vector<long> c(k_, 0);
    c[0] = ((n % p_) + p_) % p_;
    return ResidueElement(this, std::move(c));
}
inline ResidueElement ResidueField::from_rat(const Rat& q) const {
    if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::domain_error("rational has negative p-valuation; no residue");
    Int pn(p_);
    Int num = q.get_num() % pn, den = q.get_den() % pn;
    long n = ((num.get_si() % p_) + p_) % p_;
    long d = ((den.get_si() % p_) + p_) % p_;
    return from_int(n) * from_int(d).inverse();
}
inline ResidueElement ResidueField::from_coeffs(std::vector<long> c) const {
    return ResidueElement(this, std::move(c));
}
inline ResidueElement ResidueField::element_by_index(long idx) const {
    std::vector<long> c(k_, 0);
    for (long i = 0; i < k_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return ResidueElement(this, std::move(c));
}

inline bool ResidueField::is_irreducible(const std::vector<long>& f) const {
    // no roots and, for degree <= 3, rootlessness suffices; otherwise trial
    // division by all monic irreducibles of degree <= k/2 found recursively.
    long k = static_cast<long>(f.size()) - 1;
    auto eval = [&](long x) {
        long acc = 0;
        for (long i = k; i >= 0; --i) acc = (acc * x + f[i]) % p_;
        return acc;
    };
    if (k <= 3) {
        for (long x = 0; x < p_; ++x)
            if (eval(x) == 0) return false;
        return true;
    }
    // polynomial gcd-based test: x^(p^d) == x mod f must fail for d < k and hold for d = k
    auto mulmod = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> prod(2 * k - 1, 0);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        for (long d = 2 * k - 2; d >= k; --d) {
            long c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (long i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * f[i]) % p_ + p_) % p_;
        }
        prod.resize(k);
        return prod;
    };
    std::vector<long> x(k, 0);
    if (k > 1) x[1] = 1;
    std::vector<long> cur = x;
    for (long d = 1; d <= k; ++d) {
        // cur := cur^p
        std::vector<long> acc(k, 0);
        acc[0] = 1;
        std::vector<long> base = cur;
        long n = p_;
        while (n) {
            if (n & 1) acc = mulmod(acc, base);
            base = mulmod(base, base);
            n >>= 1;
        }
        cur = acc;
        bool fixed = (cur == x);
        if (d < k && fixed && k % d == 0) return false;
        if (d == k && !fixed) return false;
    }
    return true;
}

inline std::vector<long> ResidueField::find_irreducible() const {
    if (k_ == 1) return {0, 1};  // z - 0; arithmetic never uses it beyond degree bound
    std::vector<long> f(k_ + 1, 0);
    f[k_] = 1;
    // lexicographic scan over the k_ lower coefficients
    long total = 1;
    for (long i = 0; i < k_; ++i) total *= p_;
    for (long idx = 0; idx < total; ++idx) {
        long t = idx;
        for (long i = 0; i < k_; ++i) {
            f[i] = t % p_;
            t /= p_;
        }
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// Reduction of a valuation->=0 element of Q[pi]/(pi^e-p) into the residue
// field: pi goes to 0 and rationals reduce mod p. A ring homomorphism on the
// valuation ring.
inline ResidueElement residue(const ExactElement& a, const ResidueField& F) {
    if (Int(F.p()) != a.prime()) throw std::invalid_argument("residue field prime mismatch");
    ExtRat v = a.valuation();
    if (v.is_finite() && v.value() < 0) throw std::domain_error("negative valuation; no residue");
    return F.from_rat(a.coeffs()[0]);
}

}  // namespace stdiv

#endif
