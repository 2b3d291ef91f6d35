#pragma once

// Exponent vectors.  A Monomial stores one byte per ring position; positions
// beyond the ring size stay zero, so plain array comparison doubles as the
// canonical lexicographic comparison under the ring's variable precedence.

#include <array>
#include <cstdint>
#include <cstring>

#include "errors.hpp"
#include "vars.hpp"

namespace conchoid {

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    int degree() const {
        int s = 0;
        for (auto x : e) s += x;
        return s;
    }

    int exponent(int i) const { return e[static_cast<std::size_t>(i)]; }

    bool is_constant() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    // Lexicographic comparison along the ring tuple (index 0 most
    // significant): negative, zero, positive like memcmp.
    int lex_compare(const Monomial& o) const {
        return std::memcmp(e.data(), o.e.data(), e.size());
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < e.size(); ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw BudgetError("monomial exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Quotient o / *this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return r;
    }

    static Monomial lcm(const Monomial& p, const Monomial& q) {
        Monomial r;
        for (std::size_t i = 0; i < p.e.size(); ++i)
            r.e[i] = p.e[i] > q.e[i] ? p.e[i] : q.e[i];
        return r;
    }

    static Monomial one() { return Monomial{}; }

    static Monomial of_var(int index, int exp = 1) {
        Monomial r;
        if (exp < 0 || exp > 255) throw BudgetError("monomial exponent overflow");
        r.e[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(exp);
        return r;
    }
};

// Descending canonical order, for sorted term arrays.
struct MonomialLexGreater {
    bool operator()(const Monomial& p, const Monomial& q) const {
        return p.lex_compare(q) > 0;
    }
};

} // namespace conchoid
