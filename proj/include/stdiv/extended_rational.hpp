#ifndef STDIV_EXTENDED_RATIONAL_HPP
#define STDIV_EXTENDED_RATIONAL_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include "stdiv/rational.hpp"

namespace stdiv {

// An element of Q-hat = Q cup {infinity}, totally ordered with q < infinity
// for every rational q. Addition absorbs infinity.
class ExtRat {
public:
    ExtRat() : finite_(true), value_(0) {}
    ExtRat(const Rat& q) : finite_(true), value_(q) {}
    ExtRat(long n) : finite_(true), value_(n) {}

    static ExtRat infinity() {
        ExtRat e;
        e.finite_ = false;
        return e;
    }

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& value() const {
        if (!finite_) throw std::domain_error("infinite ExtRat has no rational value");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtRat(a.value_ + b.value_);
    }

    friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

    std::string str() const { return finite_ ? to_string(value_) : std::string("inf"); }

private:
    bool finite_;
    Rat value_;
};

}  // namespace stdiv

#endif
