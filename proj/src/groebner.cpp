// Buchberger engine with Gebauer-Möller pair pruning, elimination, and
// radical-based solution counting.
//
// Basis computations run fraction-free: polynomials are scaled to coprime
// integer coefficients, reduction steps cross-multiply by leading-coefficient
// cofactors, and content is stripped as it accumulates.  The final
// interreduction is exact rational arithmetic and produces the unique reduced
// basis (monic, interreduced, sorted by leading monomial).

#include "groebner.hpp"

#include <algorithm>
#include <optional>

namespace conchoid {

namespace {

// --- working order ----------------------------------------------------------

// Key packing for the engine.  Public orders delegate to MonomialOrder; the
// staged elimination order compares one variable's exponent first and breaks
// ties by graded reverse lex on the rest.
class WorkOrder {
public:
    explicit WorkOrder(MonomialOrder order) : pub_(std::move(order)) {}

    WorkOrder(const Ring& ring, Var eliminated) {
        int idx = ring.index_of(eliminated);
        if (idx < 0) throw RingError("elimination variable outside ring");
        elim_idx_ = idx;
        for (int i = 0; i < ring.size(); ++i)
            if (i != idx) others_.push_back(i);
    }

    OrderKey key(const Monomial& m) const {
        if (pub_) return pub_->key(m);
        OrderKey k = m.e[static_cast<std::size_t>(elim_idx_)];
        unsigned deg = 0;
        for (int i : others_) deg += m.e[static_cast<std::size_t>(i)];
        k = (k << 16) | deg;
        for (auto it = others_.rbegin(); it != others_.rend(); ++it)
            k = (k << 8) |
                static_cast<std::uint8_t>(255 - m.e[static_cast<std::size_t>(*it)]);
        return k;
    }

private:
    std::optional<MonomialOrder> pub_;
    int elim_idx_ = -1;
    std::vector<int> others_;
};

// --- integer term arrays ----------------------------------------------------

struct ZTerm {
    Monomial m;
    OrderKey k;
    Integer c;
};

using ZPoly = std::vector<ZTerm>; // descending by key, no zero coefficients

int zdegree(const ZPoly& f) {
    int d = -1;
    for (const auto& t : f) d = std::max(d, t.m.degree());
    return d;
}

// Scales to coprime integer coefficients with a positive leading one.
void canonicalize_z(ZPoly& f) {
    if (f.empty()) return;
    Integer g(0);
    for (const auto& t : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    bool flip = sgn(f.front().c) < 0;
    if (flip) g = -g;
    if (g != 1)
        for (auto& t : f) t.c /= g;
}

ZPoly to_zpoly(const Poly& p, const WorkOrder& W) {
    Integer den_lcm(1);
    for (const auto& t : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                denominator(t.coef).get_mpz_t());
    ZPoly f;
    f.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Integer c = numerator(t.coef) * (den_lcm / denominator(t.coef));
        f.push_back({t.mono, W.key(t.mono), std::move(c)});
    }
    std::sort(f.begin(), f.end(),
              [](const ZTerm& s, const ZTerm& t) { return s.k > t.k; });
    canonicalize_z(f);
    return f;
}

Poly from_zpoly(const ZPoly& f, const Ring& ring) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f) terms.push_back({t.m, Rational(t.c)});
    return Poly::from_terms(ring, std::move(terms));
}

// Deterministic total order on term arrays, for input canonicalization.
int compare_z(const ZPoly& f, const ZPoly& g) {
    for (std::size_t i = 0; i < f.size() && i < g.size(); ++i) {
        if (f[i].k != g[i].k) return f[i].k < g[i].k ? -1 : 1;
        if (int c = cmp(f[i].c, g[i].c); c != 0) return c;
    }
    return static_cast<int>(f.size()) - static_cast<int>(g.size());
}

// result = a*f[ffrom..] - b*(u*g[gfrom..])
ZPoly linear_merge(const ZPoly& f, std::size_t ffrom, const Integer& a,
                   const ZPoly& g, std::size_t gfrom, const Integer& b,
                   const Monomial& u, const WorkOrder& W) {
    ZPoly out;
    out.reserve(f.size() - ffrom + g.size() - gfrom);
    std::size_t i = ffrom, j = gfrom;
    Monomial gm;
    OrderKey gk = 0;
    bool have_g = false;
    auto load_g = [&] {
        if (!have_g && j < g.size()) {
            gm = u * g[j].m;
            gk = W.key(gm);
            have_g = true;
        }
    };
    while (i < f.size() || j < g.size()) {
        load_g();
        if (j >= g.size() || (i < f.size() && f[i].k > gk)) {
            out.push_back({f[i].m, f[i].k, a * f[i].c});
            ++i;
        } else if (i >= f.size() || gk > f[i].k) {
            out.push_back({gm, gk, -b * g[j].c});
            ++j;
            have_g = false;
        } else {
            Integer c = a * f[i].c - b * g[j].c;
            if (sgn(c) != 0) out.push_back({f[i].m, f[i].k, std::move(c)});
            ++i, ++j;
            have_g = false;
        }
    }
    return out;
}

// Full fraction-free normal form of r modulo the basis.
ZPoly reduce_full(ZPoly r, const std::vector<ZPoly>& basis, const WorkOrder& W) {
    ZPoly out;
    int steps_since_strip = 0;
    while (!r.empty()) {
        const ZPoly* g = nullptr;
        for (const auto& b : basis)
            if (!b.empty() && b.front().m.divides(r.front().m)) {
                g = &b;
                break;
            }
        if (!g) {
            out.push_back(std::move(r.front()));
            r.erase(r.begin());
            continue;
        }
        Integer gamma;
        mpz_gcd(gamma.get_mpz_t(), r.front().c.get_mpz_t(),
                g->front().c.get_mpz_t());
        Integer a = g->front().c / gamma;
        Integer b = r.front().c / gamma;
        if (sgn(a) < 0) a = -a, b = -b; // keep the running scale positive
        Monomial u = g->front().m.quotient_of(r.front().m);
        r = linear_merge(r, 1, a, *g, 1, b, u, W);
        if (a != 1)
            for (auto& t : out) t.c *= a;
        if (++steps_since_strip >= 32) {
            steps_since_strip = 0;
            Integer c(0);
            for (const auto& t : out)
                mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            for (const auto& t : r)
                mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            if (c > 1) {
                for (auto& t : out) t.c /= c;
                for (auto& t : r) t.c /= c;
            }
        }
    }
    canonicalize_z(out);
    return out;
}

ZPoly spoly(const ZPoly& f, const ZPoly& g, const WorkOrder& W) {
    Monomial l = Monomial::lcm(f.front().m, g.front().m);
    Monomial uf = f.front().m.quotient_of(l);
    Monomial ug = g.front().m.quotient_of(l);
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / gamma;
    Integer b = f.front().c / gamma;
    // a*(uf*f) - b*(ug*g); the leading terms cancel by construction.
    ZPoly uff;
    uff.reserve(f.size());
    for (const auto& t : f) {
        Monomial m = uf * t.m;
        uff.push_back({m, W.key(m), t.c});
    }
    ZPoly s = linear_merge(uff, 1, a, g, 1, b, ug, W);
    canonicalize_z(s);
    return s;
}

// --- pair management (Gebauer-Möller) ---------------------------------------

struct Pair {
    int i, j; // basis indices, i < j
    Monomial lcm;
    OrderKey key;
    int deg;
};

bool coprime_monomials(const Monomial& p, const Monomial& q) {
    for (std::size_t i = 0; i < p.e.size(); ++i)
        if (p.e[i] && q.e[i]) return false;
    return true;
}

// Installs h as basis element index t, pruning the pair set.
void update_pairs(std::vector<ZPoly>& G, std::vector<Pair>& B, ZPoly h,
                  const WorkOrder& W) {
    int t = static_cast<int>(G.size());
    const Monomial& hm = h.front().m;

    struct Cand {
        int g;
        Monomial lcm;
        bool keep = true;
    };
    std::vector<Cand> cands;
    cands.reserve(G.size());
    for (int gi = 0; gi < t; ++gi)
        cands.push_back({gi, Monomial::lcm(hm, G[static_cast<std::size_t>(gi)].front().m)});

    // Criterion M: drop candidates whose lcm is a proper multiple of another's.
    for (auto& c : cands)
        for (const auto& o : cands)
            if (o.lcm != c.lcm && o.lcm.divides(c.lcm)) {
                c.keep = false;
                break;
            }
    // Criterion F: among equal lcms keep the lowest partner index.
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (cands[j].keep && cands[j].lcm == cands[i].lcm) cands[i].keep = false;
    // Criterion B: coprime leading monomials reduce to zero; drop outright.
    for (auto& c : cands)
        if (c.keep && coprime_monomials(hm, G[static_cast<std::size_t>(c.g)].front().m))
            c.keep = false;

    // Prune old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(B.size());
    for (const auto& p : B) {
        const Monomial& im = G[static_cast<std::size_t>(p.i)].front().m;
        const Monomial& jm = G[static_cast<std::size_t>(p.j)].front().m;
        bool redundant = hm.divides(p.lcm) &&
                         Monomial::lcm(im, hm) != p.lcm &&
                         Monomial::lcm(jm, hm) != p.lcm;
        if (!redundant) kept.push_back(p);
    }
    B = std::move(kept);
    for (const auto& c : cands)
        if (c.keep)
            B.push_back({c.g, t, c.lcm, W.key(c.lcm), c.lcm.degree()});
    G.push_back(std::move(h));
}

// Deterministic selection: smallest lcm degree, then lcm key, then indices.
std::size_t select_pair(const std::vector<Pair>& B) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < B.size(); ++i) {
        const Pair& p = B[i];
        const Pair& q = B[best];
        if (p.deg != q.deg ? p.deg < q.deg
            : p.key != q.key ? p.key < q.key
            : p.j != q.j     ? p.j < q.j
                             : p.i < q.i)
            best = i;
    }
    return best;
}

std::vector<ZPoly> buchberger_engine(std::vector<ZPoly> input, const WorkOrder& W,
                                     const Budget& budget) {
    // Canonical input order makes the run independent of generator shuffling.
    std::sort(input.begin(), input.end(),
              [](const ZPoly& f, const ZPoly& g) { return compare_z(f, g) < 0; });
    input.erase(std::unique(input.begin(), input.end(),
                            [](const ZPoly& f, const ZPoly& g) {
                                return compare_z(f, g) == 0;
                            }),
                input.end());

    std::vector<ZPoly> G;
    std::vector<Pair> B;
    for (auto& f : input) {
        ZPoly h = reduce_full(std::move(f), G, W);
        if (!h.empty()) update_pairs(G, B, std::move(h), W);
    }

    long processed = 0;
    while (!B.empty()) {
        if (++processed > budget.max_pairs)
            throw BudgetError("S-pair budget exhausted");
        std::size_t at = select_pair(B);
        Pair p = B[at];
        B.erase(B.begin() + static_cast<std::ptrdiff_t>(at));
        ZPoly s = spoly(G[static_cast<std::size_t>(p.i)],
                        G[static_cast<std::size_t>(p.j)], W);
        ZPoly h = reduce_full(std::move(s), G, W);
        if (h.empty()) continue;
        if (zdegree(h) > budget.max_degree)
            throw BudgetError("intermediate degree cap exceeded");
        update_pairs(G, B, std::move(h), W);
    }
    return G;
}

// --- exact interreduction ---------------------------------------------------

struct QTerm {
    Monomial m;
    OrderKey k;
    Rational c;
};

using QPoly = std::vector<QTerm>;

QPoly to_qpoly(const Poly& p, const WorkOrder& W) {
    QPoly f;
    f.reserve(p.terms().size());
    for (const auto& t : p.terms()) f.push_back({t.mono, W.key(t.mono), t.coef});
    std::sort(f.begin(), f.end(),
              [](const QTerm& s, const QTerm& t) { return s.k > t.k; });
    return f;
}

QPoly zpoly_to_qpoly(const ZPoly& f) {
    QPoly q;
    q.reserve(f.size());
    for (const auto& t : f) q.push_back({t.m, t.k, Rational(t.c)});
    return q;
}

Poly from_qpoly(const QPoly& f, const Ring& ring) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f) terms.push_back({t.m, t.c});
    return Poly::from_terms(ring, std::move(terms));
}

int compare_qpolys(const QPoly& f, const QPoly& g) {
    for (std::size_t i = 0; i < f.size() && i < g.size(); ++i) {
        if (f[i].k != g[i].k) return f[i].k < g[i].k ? -1 : 1;
        if (int c = cmp(f[i].c, g[i].c); c != 0) return c;
    }
    return static_cast<int>(f.size()) - static_cast<int>(g.size());
}

// Exact full normal form; the reducers need not be monic.
QPoly reduce_exact(QPoly r, const std::vector<const QPoly*>& basis,
                   const WorkOrder& W) {
    QPoly out;
    while (!r.empty()) {
        const QPoly* g = nullptr;
        for (const auto* b : basis)
            if (b && !b->empty() && b->front().m.divides(r.front().m)) {
                g = b;
                break;
            }
        if (!g) {
            out.push_back(std::move(r.front()));
            r.erase(r.begin());
            continue;
        }
        Rational factor = r.front().c / g->front().c;
        Monomial u = g->front().m.quotient_of(r.front().m);
        QPoly merged;
        merged.reserve(r.size() + g->size());
        std::size_t i = 1, j = 1;
        Monomial gm;
        OrderKey gk = 0;
        bool have_g = false;
        while (i < r.size() || j < g->size()) {
            if (!have_g && j < g->size()) {
                gm = u * (*g)[j].m;
                gk = W.key(gm);
                have_g = true;
            }
            if (j >= g->size() || (i < r.size() && r[i].k > gk)) {
                merged.push_back(std::move(r[i]));
                ++i;
            } else if (i >= r.size() || gk > r[i].k) {
                merged.push_back({gm, gk, -factor * (*g)[j].c});
                ++j;
                have_g = false;
            } else {
                Rational c = r[i].c - factor * (*g)[j].c;
                if (!is_zero(c)) merged.push_back({r[i].m, r[i].k, std::move(c)});
                ++i, ++j;
                have_g = false;
            }
        }
        r = std::move(merged);
    }
    return out;
}

// Minimalizes and tail-reduces a basis into the unique reduced form.
std::vector<Poly> interreduce(const std::vector<ZPoly>& G, const Ring& ring,
                              const WorkOrder& W) {
    std::vector<QPoly> q;
    q.reserve(G.size());
    for (const auto& f : G) q.push_back(zpoly_to_qpoly(f));
    std::sort(q.begin(), q.end(),
              [](const QPoly& f, const QPoly& g) { return f.front().k < g.front().k; });

    // Minimal set: no leading monomial divided by another kept one; equal
    // leading monomials collapse to the first occurrence.
    std::vector<bool> kept(q.size(), true);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!kept[i]) continue;
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (i == j || !kept[j]) continue;
            const Monomial& mi = q[i].front().m;
            const Monomial& mj = q[j].front().m;
            if (mj == mi ? j < i : mj.divides(mi)) {
                kept[i] = false;
                break;
            }
        }
    }
    std::vector<QPoly> minimal;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (kept[i]) minimal.push_back(std::move(q[i]));

    // Tail reduction to fixpoint.  Leading terms are stable here, so this
    // terminates and yields the canonical representatives.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<const QPoly*> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(&minimal[j]);
            QPoly head{minimal[i].front()};
            QPoly tail(minimal[i].begin() + 1, minimal[i].end());
            QPoly reduced_tail = reduce_exact(std::move(tail), others, W);
            head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
            if (compare_qpolys(head, minimal[i]) != 0) {
                minimal[i] = std::move(head);
                changed = true;
            }
        }
    }

    // Monic, sorted descending by leading monomial.
    std::sort(minimal.begin(), minimal.end(),
              [](const QPoly& f, const QPoly& g) { return f.front().k > g.front().k; });
    std::vector<Poly> out;
    out.reserve(minimal.size());
    for (auto& f : minimal) {
        Rational lc = f.front().c;
        for (auto& t : f) t.c /= lc;
        out.push_back(from_qpoly(f, ring));
    }
    return out;
}

} // namespace

// --- public API -------------------------------------------------------------

Ideal Ideal::of(const Ring& ring, std::vector<Poly> generators) {
    Ideal I;
    I.ring_ = ring;
    for (auto& g : generators) {
        if (g.ring() != ring) throw RingError("generator over wrong ring");
        if (!g.is_zero()) I.gens_.push_back(std::move(g));
    }
    if (I.gens_.empty()) I.gens_.push_back(Poly::zero(ring));
    return I;
}

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& order,
                       const Budget& budget) {
    if (order.ring() != I.ring()) throw RingError("order over wrong ring");
    GroebnerBasis out{I.ring(), order, {}, true};
    if (I.is_zero_ideal()) return out;
    WorkOrder W(order);
    std::vector<ZPoly> input;
    input.reserve(I.generators().size());
    for (const auto& g : I.generators()) input.push_back(to_zpoly(g, W));
    std::vector<ZPoly> G = buchberger_engine(std::move(input), W, budget);
    out.elements = interreduce(G, I.ring(), W);
    return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& basis) {
    if (p.ring() != basis.ring) throw RingError("polynomial over wrong ring");
    if (basis.elements.empty()) return p;
    WorkOrder W(basis.order);
    std::vector<QPoly> qbasis;
    qbasis.reserve(basis.elements.size());
    for (const auto& g : basis.elements) qbasis.push_back(to_qpoly(g, W));
    std::vector<const QPoly*> refs;
    for (const auto& g : qbasis) refs.push_back(&g);
    return from_qpoly(reduce_exact(to_qpoly(p, W), refs, W), p.ring());
}

Ideal eliminate(const Ideal& I, const std::vector<Var>& keep, const Budget& budget,
                ElimStrategy strategy) {
    const Ring& ring = I.ring();
    for (Var v : keep)
        if (ring.index_of(v) < 0)
            throw RingError(std::string("kept variable outside ring: ") + var_name(v));
    Ring target(keep);
    std::vector<Var> drop;
    for (Var v : ring.vars())
        if (target.index_of(v) < 0) drop.push_back(v);

    if (I.is_zero_ideal()) return Ideal::of(target, {});

    if (strategy == ElimStrategy::lex_block) {
        std::vector<Var> precedence = drop;
        precedence.insert(precedence.end(), keep.begin(), keep.end());
        GroebnerBasis G = groebner(I, MonomialOrder::lex(ring, precedence), budget);
        std::vector<Poly> free;
        for (const auto& g : G.elements) {
            bool uses_dropped = false;
            for (Var v : drop)
                if (g.degree_in(v) > 0) {
                    uses_dropped = true;
                    break;
                }
            if (!uses_dropped) free.push_back(g.over(target));
        }
        return Ideal::of(target, std::move(free));
    }

    // Staged: peel one variable at a time, then canonicalize over the target.
    Ring cur_ring = ring;
    std::vector<Poly> cur = I.generators();
    for (Var v : drop) {
        WorkOrder W(cur_ring, v);
        std::vector<ZPoly> input;
        input.reserve(cur.size());
        for (const auto& g : cur) input.push_back(to_zpoly(g, W));
        std::vector<ZPoly> G = buchberger_engine(std::move(input), W, budget);
        Ring next = cur_ring.without({v});
        std::vector<Poly> kept;
        for (const auto& f : G) {
            Poly g = from_zpoly(f, cur_ring);
            if (g.degree_in(v) == 0) kept.push_back(g.over(next));
        }
        if (kept.empty()) return Ideal::of(target, {});
        cur_ring = next;
        cur = std::move(kept);
    }
    std::vector<Poly> over_target;
    over_target.reserve(cur.size());
    for (const auto& g : cur) over_target.push_back(g.over(target));
    GroebnerBasis canonical =
        groebner(Ideal::of(target, std::move(over_target)),
                 MonomialOrder::lex(target), budget);
    return Ideal::of(target, canonical.elements);
}

int count_distinct_solutions(const Ideal& I, const Budget& budget) {
    const Ring& ring = I.ring();
    if (I.is_zero_ideal())
        throw DimensionError("ideal is not zero-dimensional");
    GroebnerBasis G = groebner(I, MonomialOrder::grevlex(ring), budget);
    if (G.elements.empty()) throw DimensionError("ideal is not zero-dimensional");
    for (const auto& g : G.elements)
        if (g.is_constant()) return 0; // empty variety

    auto has_pure_power = [&](const std::vector<Poly>& elements, int var_idx) {
        for (const auto& g : elements) {
            const Monomial& m = g.leading_term().mono;
            if (m.exponent(var_idx) == 0) continue;
            bool pure = true;
            for (int i = 0; i < ring.size(); ++i)
                if (i != var_idx && m.exponent(i) != 0) {
                    pure = false;
                    break;
                }
            if (pure) return true;
        }
        return false;
    };
    for (int i = 0; i < ring.size(); ++i)
        if (!has_pure_power(G.elements, i))
            throw DimensionError("ideal is not zero-dimensional");

    // Adjoining the squarefree part of each univariate eliminant makes the
    // ideal radical (Seidenberg), so counting standard monomials counts
    // distinct solutions over the closure.
    std::vector<Poly> gens = I.generators();
    for (Var v : ring.vars()) {
        Ideal E = eliminate(I, {v}, budget);
        if (E.is_zero_ideal() || E.generators().size() != 1)
            throw DimensionError("ideal is not zero-dimensional");
        gens.push_back(squarefree_part(E.generators()[0]).over(ring));
    }
    GroebnerBasis R = groebner(Ideal::of(ring, std::move(gens)),
                               MonomialOrder::grevlex(ring), budget);
    for (const auto& g : R.elements)
        if (g.is_constant()) return 0;

    std::vector<int> bound(static_cast<std::size_t>(ring.size()), -1);
    for (const auto& g : R.elements) {
        const Monomial& m = g.leading_term().mono;
        for (int i = 0; i < ring.size(); ++i) {
            if (m.exponent(i) == 0) continue;
            bool pure = true;
            for (int j = 0; j < ring.size(); ++j)
                if (j != i && m.exponent(j) != 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                int e = m.exponent(i);
                auto& b = bound[static_cast<std::size_t>(i)];
                if (b < 0 || e < b) b = e;
            }
        }
    }
    for (int b : bound)
        if (b < 0) throw DimensionError("ideal is not zero-dimensional");

    // Count monomials under the bounds not divisible by any leading monomial.
    std::vector<Monomial> leads;
    leads.reserve(R.elements.size());
    for (const auto& g : R.elements) leads.push_back(g.leading_term().mono);
    int count = 0;
    Monomial probe;
    std::function<void(int)> walk = [&](int var_idx) {
        if (var_idx == ring.size()) {
            for (const auto& l : leads)
                if (l.divides(probe)) return;
            ++count;
            return;
        }
        for (int e = 0; e < bound[static_cast<std::size_t>(var_idx)]; ++e) {
            probe.e[static_cast<std::size_t>(var_idx)] = static_cast<std::uint8_t>(e);
            walk(var_idx + 1);
        }
        probe.e[static_cast<std::size_t>(var_idx)] = 0;
    };
    walk(0);
    return count;
}

} // namespace conchoid
