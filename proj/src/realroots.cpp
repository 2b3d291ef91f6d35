#include "realroots.hpp"

#include <algorithm>

#include "errors.hpp"

namespace conchoid {

namespace {

using Dense = std::vector<Rational>; // coefficient of x^i at index i

Dense trimmed(Dense v) {
    while (!v.empty() && is_zero(v.back())) v.pop_back();
    return v;
}

int deg(const Dense& v) { return static_cast<int>(v.size()) - 1; }

Dense derivative(const Dense& p) {
    Dense r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(Rational(static_cast<long>(i)) * p[i]);
    return trimmed(std::move(r));
}

// Remainder of a by b (b nonzero), over Q.
Dense remainder(Dense a, const Dense& b) {
    while (deg(a) >= deg(b)) {
        Rational factor = a.back() / b.back();
        int shift = deg(a) - deg(b);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + static_cast<std::size_t>(shift)] -= factor * b[i];
        a = trimmed(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

int sign_at(const Dense& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return sgn(acc);
}

// Clears denominators and removes the integer content; keeps the sign.
Dense reduced(Dense p) {
    Integer lcm = 1;
    for (const Rational& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), denominator(c).get_mpz_t());
    Integer content = 0;
    Rational scale(lcm);
    for (Rational& c : p) {
        c *= scale;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), numerator(c).get_mpz_t());
    }
    if (content > 1) {
        Rational inv(Integer(1), content);
        for (Rational& c : p) c *= inv;
    }
    return p;
}

} // namespace

SturmSequence::SturmSequence(const Poly& p, Var v) {
    if (p.is_zero()) throw DomainError("cannot build a Sturm sequence of zero");
    std::vector<Var> used = p.used_vars();
    if (used.size() > 1 || (used.size() == 1 && used[0] != v))
        throw DomainError("Sturm sequence requires a univariate polynomial");

    Dense dense;
    for (const Poly& c : coefficients_in(p, v))
        dense.push_back(c.is_zero() ? Rational(0) : c.constant_value());
    dense = trimmed(std::move(dense));

    // Squarefree part: divide by gcd with the derivative, via the tail of the
    // Euclidean remainder chain.
    if (deg(dense) >= 1) {
        Dense u = dense, w = derivative(dense);
        while (!w.empty()) {
            Dense r = remainder(u, w);
            u = std::move(w);
            w = std::move(r);
        }
        if (deg(u) >= 1) {
            // u = gcd(p, p'); exact quotient dense / u.
            Dense q(dense.size() - u.size() + 1, Rational(0));
            Dense rest = dense;
            while (deg(rest) >= deg(u)) {
                Rational factor = rest.back() / u.back();
                int shift = deg(rest) - deg(u);
                q[static_cast<std::size_t>(shift)] = factor;
                for (std::size_t i = 0; i < u.size(); ++i)
                    rest[i + static_cast<std::size_t>(shift)] -= factor * u[i];
                rest = trimmed(std::move(rest));
                if (rest.empty()) break;
            }
            dense = trimmed(std::move(q));
        }
    }

    chain_.push_back(reduced(dense));
    if (deg(dense) >= 1) {
        chain_.push_back(reduced(derivative(dense)));
        while (deg(chain_.back()) >= 0) {
            Dense r = remainder(chain_[chain_.size() - 2], chain_.back());
            if (r.empty()) break;
            for (Rational& c : r) c = -c;
            chain_.push_back(reduced(std::move(r)));
        }
    }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
    int changes = 0, prev = 0;
    for (const Dense& p : chain_) {
        int s = sign_at(p, x);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int SturmSequence::sign_changes_at_infinity(int direction) const {
    int changes = 0, prev = 0;
    for (const Dense& p : chain_) {
        if (p.empty()) continue;
        int s = sgn(p.back());
        if (direction < 0 && deg(p) % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmSequence::count_in(const Rational& lo, const Rational& hi) const {
    return sign_changes_at(lo) - sign_changes_at(hi);
}

int SturmSequence::count_all() const {
    return sign_changes_at_infinity(-1) - sign_changes_at_infinity(+1);
}

Rational SturmSequence::root_bound() const {
    // Cauchy bound: 1 + max |a_i / a_n|.
    const Dense& p = chain_.front();
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / p.back());
        if (q > bound) bound = q;
    }
    return bound + 1;
}

std::vector<std::pair<Rational, Rational>> SturmSequence::isolate(const Rational& width) const {
    std::vector<std::pair<Rational, Rational>> done;
    if (degree() < 1) return done;
    Rational bound = root_bound();
    std::vector<std::pair<Rational, Rational>> work = {{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = count_in(lo, hi);
        if (n == 0) continue;
        Rational mid = (lo + hi) / 2;
        if (n == 1) {
            if (sign_at(chain_.front(), mid) == 0) {
                done.push_back({mid, mid}); // exact rational root
                continue;
            }
            if (hi - lo <= width) {
                done.push_back({lo, hi});
                continue;
            }
        }
        work.push_back({lo, mid});
        work.push_back({mid, hi});
    }
    std::sort(done.begin(), done.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return done;
}

int count_real_roots(const Poly& p, Var v) {
    if (p.is_constant()) return 0;
    return SturmSequence(p, v).count_all();
}

} // namespace conchoid
