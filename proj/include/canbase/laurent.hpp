#pragma once

#include <cctype>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "canbase/errors.hpp"

namespace canbase {

using bigint = boost::multiprecision::cpp_int;

inline bigint coeff_gcd(const bigint& a, const bigint& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Laurent polynomial in a single variable v with exact coefficients.
///
/// Stored as a sparse exponent -> coefficient map that never contains a zero
/// coefficient, so equal values always have equal representations and
/// operator== is structural.
template <typename Coeff>
class laurent {
public:
    using coeff_type = Coeff;
    using term_map = std::map<int, Coeff>;

    laurent() = default;

    laurent(long long constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) coeffs_[0] = Coeff(constant);
    }

    explicit laurent(const Coeff& constant) {
        if (constant != 0) coeffs_[0] = constant;
    }

    laurent(std::initializer_list<std::pair<int, long long>> terms) {
        for (const auto& [e, c] : terms) add_term(e, Coeff(c));
    }

    static laurent monomial(Coeff c, int exp) {
        laurent f;
        f.add_term(exp, std::move(c));
        return f;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Pre: not zero.
    int min_exp() const { return coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.rbegin()->first; }

    const term_map& terms() const { return coeffs_; }

    Coeff coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Coeff(0) : it->second;
    }

    laurent& operator+=(const laurent& rhs) {
        for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
        return *this;
    }

    laurent& operator-=(const laurent& rhs) {
        for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
        return *this;
    }

    laurent operator-() const {
        laurent f = *this;
        for (auto& [e, c] : f.coeffs_) c = -c;
        return f;
    }

    laurent& operator*=(const laurent& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend laurent operator+(laurent lhs, const laurent& rhs) { return lhs += rhs; }
    friend laurent operator-(laurent lhs, const laurent& rhs) { return lhs -= rhs; }

    friend laurent operator*(const laurent& lhs, const laurent& rhs) {
        laurent prod;
        for (const auto& [e1, c1] : lhs.coeffs_)
            for (const auto& [e2, c2] : rhs.coeffs_) prod.add_term(e1 + e2, c1 * c2);
        return prod;
    }

    /// The bar involution v -> v^{-1}.
    laurent bar() const {
        laurent f;
        for (const auto& [e, c] : coeffs_) f.coeffs_.emplace(-e, c);
        return f;
    }

    /// Multiplication by v^k.
    laurent shifted(int k) const {
        if (k == 0) return *this;
        laurent f;
        for (const auto& [e, c] : coeffs_) f.coeffs_.emplace(e + k, c);
        return f;
    }

    laurent pow(unsigned n) const {
        laurent acc(1);
        laurent base = *this;
        for (; n > 0; n >>= 1) {
            if (n & 1U) acc *= base;
            if (n > 1) base *= base;
        }
        return acc;
    }

    /// Sum of all coefficients, i.e. evaluation at v = 1.
    Coeff eval_one() const {
        Coeff s(0);
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    Coeff content() const {
        Coeff g(0);
        for (const auto& [e, c] : coeffs_) g = coeff_gcd(g, c);
        return g;
    }

    bool operator==(const laurent&) const = default;

private:
    term_map coeffs_;

    void add_term(int exp, Coeff c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(exp, Coeff(0));
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
};

using int_laurent = laurent<bigint>;

/// The unique decomposition f = q + p with q in Z[v + v^{-1}] and p in
/// v^{-1} Z[v^{-1}]; the two rings intersect in 0, which makes the pair
/// well defined.
template <typename Coeff>
struct bar_split_parts {
    laurent<Coeff> invariant_part;
    laurent<Coeff> negative_part;
};

template <typename Coeff>
bar_split_parts<Coeff> bar_split(const laurent<Coeff>& f) {
    laurent<Coeff> q(f.coeff(0));
    for (const auto& [e, c] : f.terms()) {
        if (e <= 0) continue;
        q += laurent<Coeff>::monomial(c, e);
        q += laurent<Coeff>::monomial(c, -e);
    }
    return {q, f - q};
}

/// Balanced quantum integer [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}.
inline int_laurent quantum_integer(int m) {
    int_laurent f;
    for (int e = m - 1; e >= 1 - m; e -= 2) f += int_laurent::monomial(1, e);
    return f;
}

/// [m]! = [1][2]...[m].
inline int_laurent quantum_int_factorial(int m) {
    int_laurent f(1);
    for (int k = 2; k <= m; ++k) f *= quantum_integer(k);
    return f;
}

/// [a]! = [a_1]! [a_2]! ... [a_m]! for a sequence of nonnegative integers.
inline int_laurent quantum_factorial(const std::vector<int>& a) {
    int_laurent f(1);
    for (int k : a) f *= quantum_int_factorial(k);
    return f;
}

/// Parses expressions like "1 - v^-2", "3v^9+v^11", "-2v", "0".
inline int_laurent parse_laurent(std::string_view text) {
    int_laurent f;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&]() -> long long {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = (text[i++] == '-');
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad Laurent literal: " + std::string(text));
        long long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            value = value * 10 + (text[i++] - '0');
        return neg ? -value : value;
    };

    skip_ws();
    bool first = true;
    while (i < text.size()) {
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("bad Laurent literal: " + std::string(text));
        }
        first = false;

        long long coeff = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int();
            saw_digits = true;
        }
        int exp = 0;
        if (i < text.size() && text[i] == 'v') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exp = static_cast<int>(parse_int());
            }
        } else if (!saw_digits) {
            throw std::invalid_argument("bad Laurent literal: " + std::string(text));
        }
        f += int_laurent::monomial(bigint(sign * coeff), exp);
        skip_ws();
    }
    return f;
}

} // namespace canbase
