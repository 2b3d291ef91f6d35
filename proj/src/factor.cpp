#include "factor.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace conchoid {

namespace {

// ---- dense integer univariate helpers --------------------------------------
//
// Vectors of Integer indexed by degree, trimmed (no trailing zeros); the zero
// polynomial is the empty vector.  Used for the finite-field and Hensel layers
// of univariate factorization, where dense machinery is simpler than Poly.

using ZVec = std::vector<Integer>;

void zv_trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int zv_deg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

ZVec zv_mul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    zv_trim(out);
    return out;
}

Integer zv_content(const ZVec& v) {
    Integer c = 0;
    for (const Integer& x : v) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return c;
}

void zv_make_primitive(ZVec& v) {
    if (v.empty()) return;
    Integer c = zv_content(v);
    if (v.back() < 0) c = -c;
    for (Integer& x : v) x /= c;
}

// Exact division by a monic divisor; nullopt when the remainder is nonzero.
std::optional<ZVec> zv_divide_monic(const ZVec& a, const ZVec& b) {
    ZVec r = a;
    if (zv_deg(b) < 0 || b.back() != 1) throw Error("divisor must be monic");
    if (zv_deg(r) < zv_deg(b)) return r.empty() ? std::optional<ZVec>(ZVec{}) : std::nullopt;
    ZVec q(r.size() - b.size() + 1, Integer(0));
    for (int i = zv_deg(r); i >= zv_deg(b); --i) {
        Integer c = r[i];
        if (c == 0) continue;
        q[i - zv_deg(b)] = c;
        for (size_t j = 0; j < b.size(); ++j) r[i - zv_deg(b) + j] -= c * b[j];
    }
    zv_trim(r);
    if (!r.empty()) return std::nullopt;
    zv_trim(q);
    return q;
}

// ---- arithmetic mod m -------------------------------------------------------

Integer imod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer isym(const Integer& a, const Integer& m) {
    Integer r = imod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

ZVec mp_reduce(const ZVec& a, const Integer& m) {
    ZVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = imod(a[i], m);
    zv_trim(out);
    return out;
}

ZVec mp_symmetric(const ZVec& a, const Integer& m) {
    ZVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = isym(a[i], m);
    zv_trim(out);
    return out;
}

ZVec mp_add(const ZVec& a, const ZVec& b, const Integer& m) {
    ZVec out(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = imod(out[i] + b[i], m);
    for (size_t i = b.size(); i < a.size(); ++i) out[i] = imod(out[i], m);
    zv_trim(out);
    return out;
}

ZVec mp_sub(const ZVec& a, const ZVec& b, const Integer& m) {
    ZVec out(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = imod(out[i] - b[i], m);
    for (size_t i = b.size(); i < a.size(); ++i) out[i] = imod(out[i], m);
    zv_trim(out);
    return out;
}

ZVec mp_mul(const ZVec& a, const ZVec& b, const Integer& m) {
    return mp_reduce(zv_mul(a, b), m);
}

Integer inv_mod(const Integer& a, const Integer& p) {
    Integer out;
    if (!mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw Error("non-invertible element in modular arithmetic");
    return out;
}

// Division with remainder by a monic divisor, coefficients mod m.
std::pair<ZVec, ZVec> mp_divrem_monic(const ZVec& a, const ZVec& b, const Integer& m) {
    if (zv_deg(b) < 0 || b.back() != 1) throw Error("modular divisor must be monic");
    ZVec r = a;
    if (zv_deg(r) < zv_deg(b)) return {ZVec{}, r};
    ZVec q(r.size() - b.size() + 1, Integer(0));
    for (int i = zv_deg(r); i >= zv_deg(b); --i) {
        Integer c = imod(r[i], m);
        q[i - zv_deg(b)] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i - zv_deg(b) + j] = imod(r[i - zv_deg(b) + j] - c * b[j], m);
    }
    zv_trim(q);
    zv_trim(r);
    return {q, r};
}

ZVec mp_make_monic(const ZVec& a, const Integer& p) {
    if (a.empty()) return a;
    Integer s = inv_mod(a.back(), p);
    ZVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = imod(a[i] * s, p);
    return out;
}

ZVec mp_gcd(ZVec a, ZVec b, const Integer& p) {
    a = mp_reduce(a, p);
    b = mp_reduce(b, p);
    while (!b.empty()) {
        ZVec bm = mp_make_monic(b, p);
        ZVec r = mp_divrem_monic(a, bm, p).second;
        a = b;
        b = r;
    }
    return a.empty() ? a : mp_make_monic(a, p);
}

// Extended Euclid over F_p: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
    ZVec g, s, t;
};

XGcd mp_xgcd(const ZVec& a, const ZVec& b, const Integer& p) {
    ZVec r0 = mp_reduce(a, p), r1 = mp_reduce(b, p);
    ZVec s0 = {Integer(1)}, s1 = {};
    ZVec t0 = {}, t1 = {Integer(1)};
    while (!r1.empty()) {
        Integer lead = inv_mod(r1.back(), p);
        ZVec r1m = mp_make_monic(r1, p);
        auto [q, r] = mp_divrem_monic(r0, r1m, p);
        // r0 = q*lead * r1 + r
        ZVec qs = mp_mul(q, {lead}, p);
        ZVec s2 = mp_sub(s0, mp_mul(qs, s1, p), p);
        ZVec t2 = mp_sub(t0, mp_mul(qs, t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.empty()) throw Error("xgcd of zero polynomials");
    Integer lead = inv_mod(r0.back(), p);
    return {mp_make_monic(r0, p), mp_mul(s0, {lead}, p), mp_mul(t0, {lead}, p)};
}

ZVec mp_powmod(const ZVec& base, const Integer& e, const ZVec& f, const Integer& p) {
    ZVec result = {Integer(1)};
    ZVec b = mp_divrem_monic(mp_reduce(base, p), f, p).second;
    Integer n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t()))
            result = mp_divrem_monic(mp_mul(result, b, p), f, p).second;
        b = mp_divrem_monic(mp_mul(b, b, p), f, p).second;
        n >>= 1;
    }
    return result;
}

// ---- factorization over F_p -------------------------------------------------

// Distinct-degree factorization of a monic squarefree f: list of (product of
// all irreducible factors of degree k, k).
std::vector<std::pair<ZVec, int>> mp_distinct_degree(ZVec f, const Integer& p) {
    std::vector<std::pair<ZVec, int>> out;
    ZVec x = {Integer(0), Integer(1)};
    ZVec h = mp_divrem_monic(x, f, p).second;
    int i = 0;
    while (zv_deg(f) >= 2 * (i + 1)) {
        ++i;
        h = mp_powmod(h, p, f, p);
        ZVec g = mp_gcd(mp_sub(h, x, p), f, p);
        if (zv_deg(g) > 0) {
            out.push_back({g, i});
            f = mp_divrem_monic(f, g, p).first;
            h = mp_divrem_monic(h, f, p).second;
        }
    }
    if (zv_deg(f) > 0) out.push_back({f, zv_deg(f)});
    return out;
}

// Equal-degree splitting of a monic product of distinct irreducibles of
// degree d, for odd p.  Splitting polynomials are enumerated deterministically
// from a counter written in base p.
void mp_equal_degree(const ZVec& f, int d, const Integer& p, std::vector<ZVec>& out) {
    if (zv_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e = 1;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), d);
    e = (e - 1) / 2;
    for (Integer counter = p;; ++counter) {
        ZVec h;
        Integer n = counter;
        while (n > 0) {
            h.push_back(n % p);
            n /= p;
        }
        zv_trim(h);
        if (zv_deg(h) < 1 || zv_deg(h) >= zv_deg(f)) continue;
        ZVec g = mp_gcd(h, f, p);
        if (zv_deg(g) <= 0) {
            ZVec w = mp_powmod(h, e, f, p);
            g = mp_gcd(mp_sub(w, {Integer(1)}, p), f, p);
        }
        if (zv_deg(g) > 0 && zv_deg(g) < zv_deg(f)) {
            mp_equal_degree(g, d, p, out);
            mp_equal_degree(mp_divrem_monic(f, g, p).first, d, p, out);
            return;
        }
    }
}

std::vector<ZVec> mp_factor_squarefree(const ZVec& f, const Integer& p) {
    std::vector<ZVec> out;
    for (const auto& [part, d] : mp_distinct_degree(f, p))
        mp_equal_degree(part, d, p, out);
    return out;
}

// ---- Hensel lifting ---------------------------------------------------------

// Factor tree for multifactor lifting: each internal node keeps the product of
// its leaves and the Bezout pair for its two children.
struct HenselNode {
    ZVec f, s, t;
    int left = -1, right = -1;
};

int build_hensel_tree(std::vector<HenselNode>& tree, const std::vector<ZVec>& leaves,
                      int lo, int hi, const Integer& p) {
    if (hi - lo == 1) {
        tree.push_back({leaves[lo], {}, {}, -1, -1});
        return static_cast<int>(tree.size()) - 1;
    }
    int mid = (lo + hi) / 2;
    int left = build_hensel_tree(tree, leaves, lo, mid, p);
    int right = build_hensel_tree(tree, leaves, mid, hi, p);
    HenselNode node;
    node.left = left;
    node.right = right;
    node.f = mp_mul(tree[left].f, tree[right].f, p);
    XGcd x = mp_xgcd(tree[left].f, tree[right].f, p);
    if (zv_deg(x.g) != 0) throw Error("mod-p factors are not coprime");
    node.s = x.s;
    node.t = x.t;
    tree.push_back(node);
    return static_cast<int>(tree.size()) - 1;
}

// One quadratic step: the subtree currently holds a factorization mod m; the
// target is the same product given mod m^2.  Children and Bezout pairs are
// lifted root-down.
void hensel_step(std::vector<HenselNode>& tree, int idx, const ZVec& target,
                 const Integer& m2) {
    HenselNode& node = tree[idx];
    node.f = mp_reduce(target, m2);
    if (node.left < 0) return;
    const ZVec g = tree[node.left].f, h = tree[node.right].f;
    const ZVec s = node.s, t = node.t;
    ZVec e = mp_sub(node.f, mp_mul(g, h, m2), m2);
    auto [q, r] = mp_divrem_monic(mp_mul(s, e, m2), h, m2);
    ZVec g2 = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
    ZVec h2 = mp_add(h, r, m2);
    ZVec b = mp_sub(mp_add(mp_mul(s, g2, m2), mp_mul(t, h2, m2), m2), {Integer(1)}, m2);
    auto [c, d] = mp_divrem_monic(mp_mul(s, b, m2), h2, m2);
    node.s = mp_sub(s, d, m2);
    node.t = mp_sub(mp_sub(t, mp_mul(t, b, m2), m2), mp_mul(c, g2, m2), m2);
    hensel_step(tree, node.left, g2, m2);
    hensel_step(tree, node.right, h2, m2);
}

void collect_leaves(const std::vector<HenselNode>& tree, int idx, std::vector<ZVec>& out) {
    if (tree[idx].left < 0) {
        out.push_back(tree[idx].f);
        return;
    }
    collect_leaves(tree, tree[idx].left, out);
    collect_leaves(tree, tree[idx].right, out);
}

// ---- univariate factorization over Z ----------------------------------------

// Coefficient bound for monic factors of a monic Q (Landau-Mignotte style):
// 2^deg * ceil(||Q||_2).
Integer factor_bound(const ZVec& q) {
    Integer sum = 0;
    for (const Integer& c : q) sum += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), sum.get_mpz_t());
    Integer bound = root + 1;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), zv_deg(q));
    return bound;
}

Integer choose_prime(const ZVec& q) {
    Integer p = 2;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p == 2) continue;
        if (q.back() % p == 0) continue;
        ZVec f = mp_make_monic(mp_reduce(q, p), p);
        ZVec fd;
        for (size_t i = 1; i < f.size(); ++i) fd.push_back(imod(f[i] * Integer(i), p));
        zv_trim(fd);
        if (zv_deg(mp_gcd(f, fd, p)) == 0) return p;
    }
}

// Complete factorization of a primitive squarefree polynomial with positive
// leading coefficient; returns primitive factors with positive leading
// coefficients.
std::vector<ZVec> factor_squarefree_z(const ZVec& input) {
    if (zv_deg(input) == 1) return {input};

    // Monicize: Q(x) = l^(n-1) P(x/l) is monic with integer coefficients, and
    // primitive parts of Q_i(l x) recover the factors of P.
    const Integer l = input.back();
    ZVec q = input;
    if (l != 1) {
        Integer power = 1;
        for (int i = zv_deg(q) - 1; i >= 0; --i) {
            power *= l;
            q[i] *= power / l;
        }
        q.back() = 1;
        // q[i] holds input[i] * l^(n-1-i).
    }

    Integer p = choose_prime(q);
    std::vector<ZVec> modular = mp_factor_squarefree(mp_make_monic(mp_reduce(q, p), p), p);
    if (modular.size() == 1) return {input};
    std::sort(modular.begin(), modular.end());

    std::vector<HenselNode> tree;
    int root = build_hensel_tree(tree, modular, 0, static_cast<int>(modular.size()), p);
    Integer bound = 2 * factor_bound(q) + 1;
    Integer m = p;
    while (m < bound) {
        Integer m2 = m * m;
        hensel_step(tree, root, mp_reduce(q, m2), m2);
        m = m2;
    }
    std::vector<ZVec> lifted;
    collect_leaves(tree, root, lifted);

    // Subset recombination, smallest subsets first, validated by exact monic
    // trial division over Z.
    std::vector<ZVec> found;
    ZVec rem = q;
    std::vector<int> active(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) active[i] = static_cast<int>(i);
    int size = 1;
    while (2 * size <= static_cast<int>(active.size())) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        bool restart = false;
        for (;;) {
            ZVec cand = {Integer(1)};
            for (int i : pick) cand = mp_mul(cand, lifted[active[i]], m);
            cand = mp_symmetric(cand, m);
            if (auto quo = zv_divide_monic(rem, cand)) {
                rem = *quo;
                found.push_back(cand);
                std::vector<int> next;
                for (int i = 0; i < static_cast<int>(active.size()); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        next.push_back(active[i]);
                active = next;
                restart = true;
                break;
            }
            // next subset of the same size, indices strictly increasing
            int i = size - 1;
            while (i >= 0 && pick[i] == static_cast<int>(active.size()) - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!restart) ++size;
    }
    if (zv_deg(rem) > 0) found.push_back(rem);

    // Undo the monicization.
    std::vector<ZVec> out;
    for (ZVec f : found) {
        if (l != 1) {
            Integer power = 1;
            for (size_t i = 1; i < f.size(); ++i) {
                power *= l;
                f[i] *= power;
            }
        }
        zv_make_primitive(f);
        out.push_back(f);
    }
    return out;
}

// ---- Poly <-> ZVec ----------------------------------------------------------

ZVec to_zvec(const Poly& p, Var v) {
    std::vector<Poly> coefs = coefficients_in(p, v);
    ZVec out;
    for (const Poly& c : coefs) {
        if (!c.is_constant()) throw Error("expected a univariate polynomial");
        Rational r = c.is_zero() ? Rational(0) : c.constant_value();
        if (denominator(r) != 1) throw Error("expected integer coefficients");
        out.push_back(numerator(r));
    }
    zv_trim(out);
    return out;
}

Poly from_zvec(const Ring& ring, Var v, const ZVec& z) {
    std::vector<Poly> coefs;
    for (const Integer& c : z) coefs.push_back(Poly::constant(ring, Rational(c)));
    return from_coefficients_in(ring, v, coefs);
}

// ---- squarefree decomposition (Yun) -----------------------------------------

std::vector<std::pair<Poly, int>> yun_decomposition(const Poly& p, Var v) {
    Poly deriv = p.derivative(v);
    Poly g = gcd(p, deriv);
    if (g.is_constant()) return {{normalize(p), 1}};
    Poly w = *divide_exact(p, g);
    Poly y = *divide_exact(deriv, g);
    Poly z = y - w.derivative(v);
    std::vector<std::pair<Poly, int>> out;
    int i = 1;
    while (!w.is_constant()) {
        Poly a = gcd(w, z);
        if (!a.is_constant()) out.push_back({normalize(a), i});
        w = *divide_exact(w, a);
        y = *divide_exact(z, a);
        z = y - w.derivative(v);
        ++i;
    }
    return out;
}

std::vector<Poly> factor_squarefree_univariate(const Poly& p, Var v) {
    std::vector<Poly> out;
    for (const ZVec& f : factor_squarefree_z(to_zvec(normalize(p), v)))
        out.push_back(normalize(from_zvec(p.ring(), v, f)));
    return out;
}

// Sorts factor lists and computes the unit by one exact division, verifying
// the factorization identity in the process.
Factorization assemble(const Poly& input, std::vector<std::pair<Poly, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) {
                  return compare_polys(a.first, b.first) < 0;
              });
    Poly prod = Poly::constant(input.ring(), 1);
    for (const auto& [f, mult] : factors) prod *= f.pow(mult);
    std::optional<Poly> unit = divide_exact(input, prod);
    if (!unit || !unit->is_constant())
        throw Error("factorization failed verification");
    return Factorization{unit->constant_value(), std::move(factors)};
}

} // namespace

Factorization factor_univariate(const Poly& p) {
    std::vector<Var> used = p.used_vars();
    if (used.empty()) throw DomainError("cannot factor a constant polynomial");
    if (used.size() != 1)
        throw DomainError("factor_univariate requires a single-variable polynomial");
    Var v = used.front();
    std::vector<std::pair<Poly, int>> factors;
    for (const auto& [part, mult] : yun_decomposition(normalize(p), v))
        for (const Poly& f : factor_squarefree_univariate(part, v))
            factors.push_back({f, mult});
    return assemble(p, std::move(factors));
}

namespace {

// ---- bivariate machinery ----------------------------------------------------
//
// Factors squarefree primitive polynomials in a main variable v1 over Q[v2]
// by monicizing in v1, evaluating v2 at an integer keeping the image
// squarefree, factoring the image, Hensel-lifting the factors (v2 - a)-adically
// to degree deg_v2 + 1, and recombining subsets by exact trial division.

// Truncation: drop all monomials of v2-degree >= prec.
Poly pq_trunc(const Poly& p, Var v2, int prec) {
    std::vector<Poly> coefs = coefficients_in(p, v2);
    if (static_cast<int>(coefs.size()) > prec) coefs.resize(prec);
    return from_coefficients_in(p.ring(), v2, coefs);
}

Poly pq_mul(const Poly& a, const Poly& b, Var v2, int prec) {
    return pq_trunc(a * b, v2, prec);
}

// Division with remainder in the main variable by a divisor monic in v1,
// coefficients truncated at v2-degree prec.
std::pair<Poly, Poly> pq_divrem(const Poly& a, const Poly& b, Var v1, Var v2,
                                int prec) {
    int db = b.degree_in(v1);
    Poly q = Poly::zero(a.ring());
    Poly r = pq_trunc(a, v2, prec);
    Poly v1p = Poly::variable(a.ring(), v1);
    while (!r.is_zero() && r.degree_in(v1) >= db) {
        int dr = r.degree_in(v1);
        Poly c = leading_coefficient_in(r, v1);
        Poly shift = c * v1p.pow(dr - db);
        q += shift;
        r = pq_trunc(r - shift * b, v2, prec);
    }
    return {q, r};
}

// Extended Euclid for univariate polynomials over Q (exact arithmetic).
struct QXGcd {
    Poly g, s, t;
};

std::pair<Poly, Poly> uni_divrem(const Poly& a, const Poly& b, Var v) {
    int db = b.degree_in(v);
    Poly q = Poly::zero(a.ring());
    Poly r = a;
    Poly vp = Poly::variable(a.ring(), v);
    Poly bl = leading_coefficient_in(b, v);
    Rational inv_lead = 1 / bl.constant_value();
    while (!r.is_zero() && r.degree_in(v) >= db) {
        Poly c = inv_lead * leading_coefficient_in(r, v);
        Poly shift = c * vp.pow(r.degree_in(v) - db);
        q += shift;
        r -= shift * b;
    }
    return {q, r};
}

QXGcd uni_xgcd(const Poly& a, const Poly& b, Var v) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(a.ring(), 1), s1 = Poly::zero(a.ring());
    Poly t0 = Poly::zero(a.ring()), t1 = Poly::constant(a.ring(), 1);
    while (!r1.is_zero()) {
        auto [q, r] = uni_divrem(r0, r1, v);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) throw Error("xgcd of zero polynomials");
    Rational lead = 1 / leading_coefficient_in(r0, v).constant_value();
    return {lead * r0, lead * s0, lead * t0};
}

struct PqNode {
    Poly f, s, t;
    int left = -1, right = -1;
};

int build_pq_tree(std::vector<PqNode>& tree, const std::vector<Poly>& leaves, int lo,
                  int hi, Var v1) {
    if (hi - lo == 1) {
        const Ring& ring = leaves[lo].ring();
        tree.push_back({leaves[lo], Poly::zero(ring), Poly::zero(ring), -1, -1});
        return static_cast<int>(tree.size()) - 1;
    }
    int mid = (lo + hi) / 2;
    int left = build_pq_tree(tree, leaves, lo, mid, v1);
    int right = build_pq_tree(tree, leaves, mid, hi, v1);
    PqNode node;
    node.left = left;
    node.right = right;
    node.f = tree[left].f * tree[right].f;
    QXGcd x = uni_xgcd(tree[left].f, tree[right].f, v1);
    if (!x.g.is_constant()) throw Error("image factors are not coprime");
    node.s = x.s;
    node.t = x.t;
    tree.push_back(node);
    return static_cast<int>(tree.size()) - 1;
}

void pq_hensel_step(std::vector<PqNode>& tree, int idx, const Poly& target, Var v1,
                    Var v2, int prec) {
    PqNode& node = tree[idx];
    node.f = pq_trunc(target, v2, prec);
    if (node.left < 0) return;
    const Poly g = tree[node.left].f, h = tree[node.right].f;
    const Poly s = node.s, t = node.t;
    Poly e = pq_trunc(node.f - g * h, v2, prec);
    auto [q, r] = pq_divrem(pq_mul(s, e, v2, prec), h, v1, v2, prec);
    Poly g2 = pq_trunc(g + t * e + q * g, v2, prec);
    Poly h2 = pq_trunc(h + r, v2, prec);
    Poly b = pq_trunc(s * g2 + t * h2 - Poly::constant(g.ring(), 1), v2, prec);
    auto [c, d] = pq_divrem(pq_mul(s, b, v2, prec), h2, v1, v2, prec);
    node.s = pq_trunc(s - d, v2, prec);
    node.t = pq_trunc(t - t * b - c * g2, v2, prec);
    pq_hensel_step(tree, node.left, g2, v1, v2, prec);
    pq_hensel_step(tree, node.right, h2, v1, v2, prec);
}

void collect_pq_leaves(const std::vector<PqNode>& tree, int idx, std::vector<Poly>& out) {
    if (tree[idx].left < 0) {
        out.push_back(tree[idx].f);
        return;
    }
    collect_pq_leaves(tree, tree[idx].left, out);
    collect_pq_leaves(tree, tree[idx].right, out);
}

// The deterministic evaluation sequence 0, 1, -1, 2, -2, ...
Rational eval_point(int index) {
    int k = (index + 1) / 2;
    return (index % 2 == 1) ? Rational(k) : Rational(-k);
}

// Factors squarefree primitive p with positive main-variable degree and
// trivial content in v1; every returned factor is normalized.
std::vector<Poly> factor_monicized(const Poly& p, Var v1, Var v2, int seq_offset) {
    const Ring& ring = p.ring();
    const int m = p.degree_in(v1);
    const Poly l = leading_coefficient_in(p, v1);

    // Monicize in v1: q = l^(m-1) p(v1/l, v2).
    Poly q = p;
    if (!(l == Poly::constant(ring, 1))) {
        std::vector<Poly> coefs = coefficients_in(p, v1);
        Poly power = Poly::constant(ring, 1);
        for (int j = m - 1; j >= 0; --j) {
            coefs[j] = coefs[j] * power;
            power *= l;
        }
        coefs[m] = Poly::constant(ring, 1);
        q = from_coefficients_in(ring, v1, coefs);
    }

    // Deterministic evaluation point keeping the image squarefree (the image
    // is always degree m because q is monic in v1).
    int tried = 0;
    int index = 0;
    int skipped = 0;
    Poly image = Poly::zero(ring);
    Rational point;
    for (;; ++index) {
        if (++tried > 200)
            throw BudgetError("no usable evaluation point for bivariate factorization");
        Rational a = eval_point(index);
        Poly u = q.evaluate({{v2, a}});
        Poly du = u.derivative(v1);
        if (!gcd(u, du).is_constant()) continue;
        if (skipped < seq_offset) {
            ++skipped;
            continue;
        }
        image = u;
        point = a;
        break;
    }

    std::vector<Poly> image_factors;
    for (const ZVec& f : factor_squarefree_z(to_zvec(image, v1)))
        image_factors.push_back(from_zvec(ring, v1, f));
    if (image_factors.size() == 1) return {normalize(p)};
    std::sort(image_factors.begin(), image_factors.end(),
              [](const Poly& a, const Poly& b) { return compare_polys(a, b) < 0; });

    // Shift the evaluation point to the origin and lift (v2-adically).
    Poly v2p = Poly::variable(ring, Var(v2));
    Poly shifted = q.substitute({{v2, v2p + Poly::constant(ring, point)}}, ring);
    const int prec = q.degree_in(v2) + 1;

    // Image factors are monic up to rational scalars (they are primitive
    // integer polynomials); make them monic for lifting.
    std::vector<Poly> leaves;
    for (const Poly& f : image_factors) {
        Rational lead = leading_coefficient_in(f, v1).constant_value();
        leaves.push_back((1 / lead) * f);
    }

    std::vector<PqNode> tree;
    int root = build_pq_tree(tree, leaves, 0, static_cast<int>(leaves.size()), v1);
    for (int e = 1; e < prec; e *= 2)
        pq_hensel_step(tree, root, shifted, v1, v2, std::min(2 * e, prec));
    std::vector<Poly> lifted;
    collect_pq_leaves(tree, root, lifted);

    // Subset recombination against q, un-shifting each candidate.
    std::vector<Poly> found;
    Poly rem = q;
    Poly back = v2p - Poly::constant(ring, point);
    std::vector<int> active(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) active[i] = static_cast<int>(i);
    int size = 1;
    while (2 * size <= static_cast<int>(active.size())) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        bool restart = false;
        for (;;) {
            Poly cand = Poly::constant(ring, 1);
            for (int i : pick) cand = pq_mul(cand, lifted[active[i]], v2, prec);
            Poly unshifted = cand.substitute({{v2, back}}, ring);
            if (auto quo = divide_exact(rem, unshifted)) {
                rem = *quo;
                found.push_back(unshifted);
                std::vector<int> next;
                for (int i = 0; i < static_cast<int>(active.size()); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        next.push_back(active[i]);
                active = next;
                restart = true;
                break;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == static_cast<int>(active.size()) - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!restart) ++size;
    }
    if (!rem.is_constant()) found.push_back(rem);

    // Undo the monicization: factors of p are primitive parts of q_i(l v1).
    std::vector<Poly> out;
    for (const Poly& f : found) {
        Poly mapped = f;
        if (!(l == Poly::constant(ring, 1))) {
            mapped = f.substitute({{v1, l * Poly::variable(ring, v1)}}, ring);
            Poly content = content_in(mapped, v1);
            mapped = *divide_exact(mapped, content);
        }
        out.push_back(normalize(mapped));
    }
    return out;
}

} // namespace

std::vector<Poly> factor_squarefree_bivariate(const Poly& p, int seq_offset) {
    std::vector<Var> used = p.used_vars();
    if (used.empty()) throw DomainError("cannot factor a constant polynomial");
    if (used.size() == 1) return factor_squarefree_univariate(normalize(p), used[0]);
    if (used.size() != 2)
        throw DomainError("factorization supports at most two variables");
    Var v1 = used[0], v2 = used[1];

    std::vector<Poly> out;
    Poly work = normalize(p);
    Poly content = content_in(work, v1);
    if (!content.is_constant()) {
        for (const Poly& f : factor_squarefree_univariate(content, v2)) out.push_back(f);
        work = normalize(*divide_exact(work, content));
    }
    if (work.degree_in(v1) == 0) return out;
    if (work.used_vars().size() == 1) {
        for (const Poly& f : factor_squarefree_univariate(work, v1)) out.push_back(f);
        return out;
    }
    for (const Poly& f : factor_monicized(work, v1, v2, seq_offset)) out.push_back(f);
    return out;
}

Factorization factor_bivariate(const Poly& p) {
    std::vector<Var> used = p.used_vars();
    if (used.empty()) throw DomainError("cannot factor a constant polynomial");
    if (used.size() == 1) return factor_univariate(p);
    if (used.size() != 2)
        throw DomainError("factorization supports at most two variables");

    Poly sf = squarefree_part(p);
    std::vector<Poly> irreducibles = factor_squarefree_bivariate(sf, 0);

    // Independent re-run from the next usable evaluation point must reproduce
    // the same irreducible set.
    {
        std::vector<Poly> check = factor_squarefree_bivariate(sf, 1);
        std::sort(check.begin(), check.end(),
                  [](const Poly& a, const Poly& b) { return compare_polys(a, b) < 0; });
        std::vector<Poly> sorted = irreducibles;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Poly& a, const Poly& b) { return compare_polys(a, b) < 0; });
        if (check != sorted)
            throw Error("factorization differs between evaluation points");
    }

    std::vector<std::pair<Poly, int>> factors;
    Poly norm = normalize(p);
    for (const Poly& f : irreducibles) {
        int mult = 0;
        Poly rem = norm;
        while (auto quo = divide_exact(rem, f)) {
            rem = *quo;
            ++mult;
        }
        factors.push_back({f, mult});
    }
    return assemble(p, std::move(factors));
}

Factorization factor(const Poly& p) {
    std::vector<Var> used = p.used_vars();
    if (used.empty()) throw DomainError("cannot factor a constant polynomial");
    if (used.size() == 1) return factor_univariate(p);
    if (used.size() == 2) return factor_bivariate(p);
    throw DomainError("factorization supports at most two variables");
}

} // namespace conchoid
