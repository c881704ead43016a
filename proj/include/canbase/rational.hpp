#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "canbase/errors.hpp"
#include "canbase/laurent.hpp"

namespace canbase {
namespace detail {

// Dense ordinary polynomials, index = exponent, no trailing zeros
// (the zero polynomial is the empty vector). Only used internally by the
// fraction normalization; everything stays over the integers.

template <typename C>
int degree(const std::vector<C>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <typename C>
void trim(std::vector<C>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

template <typename C>
C poly_content(const std::vector<C>& p) {
    C g(0);
    for (const C& c : p) g = coeff_gcd(g, c);
    return g;
}

template <typename C>
std::vector<C> scalar_div_exact(std::vector<C> p, const C& s) {
    for (C& c : p) {
        assert(c % s == 0);
        c /= s;
    }
    return p;
}

template <typename C>
C pow_coeff(C base, int n) {
    C acc(1);
    for (; n > 0; n >>= 1) {
        if (n & 1) acc *= base;
        if (n > 1) base *= base;
    }
    return acc;
}

/// Pseudo-remainder: the remainder of lc(b)^{deg a - deg b + 1} * a modulo b.
template <typename C>
std::vector<C> pseudo_rem(std::vector<C> a, const std::vector<C>& b) {
    assert(!b.empty());
    const C& lb = b.back();
    int e = degree(a) - degree(b) + 1;
    while (!a.empty() && degree(a) >= degree(b)) {
        const C la = a.back();
        const int shift = degree(a) - degree(b);
        std::vector<C> r(a.size() - 1, C(0));
        for (std::size_t i = 0; i + 1 < a.size(); ++i) r[i] = lb * a[i];
        for (std::size_t j = 0; j + 1 < b.size(); ++j) r[shift + j] -= la * b[j];
        trim(r);
        a = std::move(r);
        --e;
    }
    if (e > 0) {
        const C f = pow_coeff(lb, e);
        for (C& c : a) c *= f;
    }
    return a;
}

/// Exact division of polynomials over the integers; throws if not exact
/// (which would indicate a broken gcd).
template <typename C>
std::vector<C> poly_div_exact(std::vector<C> a, const std::vector<C>& b) {
    assert(!b.empty());
    std::vector<C> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, C(0));
    while (!a.empty() && degree(a) >= degree(b)) {
        if (a.back() % b.back() != 0) throw std::logic_error("inexact polynomial division");
        const C f = a.back() / b.back();
        const int shift = degree(a) - degree(b);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

template <typename C>
std::vector<C> primitive_positive(std::vector<C> p) {
    trim(p);
    if (p.empty()) return p;
    C c = poly_content(p);
    if (p.back() < 0) c = -c;
    return scalar_div_exact(std::move(p), c);
}

/// Primitive gcd over Q represented in Z[v], computed with the subresultant
/// polynomial remainder sequence so all intermediates stay integral.
template <typename C>
std::vector<C> poly_gcd_primitive(std::vector<C> a, std::vector<C> b) {
    trim(a);
    trim(b);
    if (a.empty()) return primitive_positive(std::move(b));
    if (b.empty()) return primitive_positive(std::move(a));
    if (degree(a) < degree(b)) std::swap(a, b);
    a = primitive_positive(std::move(a));
    b = primitive_positive(std::move(b));
    if (degree(b) == 0) return {C(1)};
    C g(1), h(1);
    while (true) {
        const int d = degree(a) - degree(b);
        std::vector<C> r = pseudo_rem(a, b);
        if (r.empty()) return primitive_positive(std::move(b));
        if (degree(r) == 0) return {C(1)};
        a = std::move(b);
        b = scalar_div_exact(std::move(r), g * pow_coeff(h, d));
        g = a.back();
        if (d == 1) {
            h = g;
        } else if (d > 1) {
            const C num = pow_coeff(g, d);
            const C den = pow_coeff(h, d - 1);
            assert(num % den == 0);
            h = num / den;
        }
    }
}

} // namespace detail

/// Element of the fraction field of Z[v, v^{-1}], i.e. Q(v), held in a
/// canonical form:
///   - den is an ordinary polynomial with nonzero constant term and
///     positive leading coefficient;
///   - num and den have no common nonconstant factor over Q;
///   - gcd(content(num), content(den)) = 1.
/// The form is unique, so equality is structural and independent of how a
/// value was computed.
template <typename Coeff>
class rational_function {
public:
    using laurent_type = laurent<Coeff>;

    rational_function() : num_(), den_(1) {}

    rational_function(long long constant) : num_(constant), den_(1) {} // NOLINT

    rational_function(laurent_type num) // NOLINT(google-explicit-constructor)
        : num_(std::move(num)), den_(1) {}

    rational_function(laurent_type num, laurent_type den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const laurent_type& num() const { return num_; }
    const laurent_type& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == laurent_type(1); }

    /// Pre: is_laurent(); otherwise throws not_laurent.
    laurent_type to_laurent() const {
        if (!is_laurent()) throw not_laurent("denominator does not divide numerator");
        return num_;
    }

    rational_function operator-() const {
        rational_function f = *this;
        f.num_ = -f.num_;
        return f;
    }

    rational_function inv() const {
        if (is_zero()) throw division_by_zero();
        return rational_function(den_, num_);
    }

    friend rational_function operator+(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator-(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator*(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational_function operator/(const rational_function& a, const rational_function& b) {
        if (b.is_zero()) throw division_by_zero();
        return rational_function(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational_function& operator+=(const rational_function& rhs) { return *this = *this + rhs; }
    rational_function& operator-=(const rational_function& rhs) { return *this = *this - rhs; }
    rational_function& operator*=(const rational_function& rhs) { return *this = *this * rhs; }
    rational_function& operator/=(const rational_function& rhs) { return *this = *this / rhs; }

    bool operator==(const rational_function&) const = default;

private:
    laurent_type num_;
    laurent_type den_;

    static std::vector<Coeff> to_poly(const laurent_type& f) {
        // Pre: f nonzero. Shifts out the minimal v-power.
        const int base = f.min_exp();
        std::vector<Coeff> p(static_cast<std::size_t>(f.max_exp() - base) + 1, Coeff(0));
        for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e - base)] = c;
        return p;
    }

    static laurent_type from_poly(const std::vector<Coeff>& p, int shift) {
        laurent_type f;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) f += laurent_type::monomial(p[i], static_cast<int>(i) + shift);
        return f;
    }

    void normalize() {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = laurent_type(1);
            return;
        }
        const int shift = num_.min_exp() - den_.min_exp();
        std::vector<Coeff> n = to_poly(num_);
        std::vector<Coeff> d = to_poly(den_);
        if (detail::degree(n) > 0 && detail::degree(d) > 0) {
            const std::vector<Coeff> g = detail::poly_gcd_primitive(n, d);
            if (detail::degree(g) > 0) {
                n = detail::poly_div_exact(std::move(n), g);
                d = detail::poly_div_exact(std::move(d), g);
            }
        }
        Coeff c = coeff_gcd(detail::poly_content(n), detail::poly_content(d));
        if (d.back() < 0) c = -c;
        if (c != 1) {
            n = detail::scalar_div_exact(std::move(n), c);
            d = detail::scalar_div_exact(std::move(d), c);
        }
        num_ = from_poly(n, shift);
        den_ = from_poly(d, 0);
    }
};

using rat_func = rational_function<bigint>;

} // namespace canbase
