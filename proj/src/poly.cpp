#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "order.hpp"

namespace conchoid {

// --- rationals --------------------------------------------------------------

static Integer parse_integer(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t pos = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (pos == text.size()) throw ParseError("sign without digits");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad integer literal '" + text + "'");
    return Integer(text, 10);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// --- variables and rings ----------------------------------------------------

static const char* const kVarNames[kMaxVars] = {
    "x1", "x2", "y1", "y2", "w", "d", "a", "b",
    "z1", "z2", "t1", "t2", "omega", "lambda",
};

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var parse_var(const std::string& name) {
    for (int i = 0; i < kMaxVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    throw ParseError("unknown variable '" + name + "'");
}

void Ring::validate() const {
    if (vars_.size() > static_cast<std::size_t>(kMaxVars))
        throw RingError("too many ring variables");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw RingError(std::string("repeated ring variable ") +
                                var_name(vars_[i]));
}

Ring Ring::without(const std::vector<Var>& dropped) const {
    std::vector<Var> kept;
    for (Var v : vars_)
        if (std::find(dropped.begin(), dropped.end(), v) == dropped.end())
            kept.push_back(v);
    return Ring(std::move(kept));
}

std::string Ring::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ", ";
        s += var_name(vars_[i]);
    }
    return s + ")";
}

// --- monomial orders --------------------------------------------------------

std::vector<int> MonomialOrder::full_precedence(const Ring& ring,
                                                const std::vector<Var>& first) {
    std::vector<int> prec;
    for (Var v : first) {
        int idx = ring.index_of(v);
        if (idx < 0)
            throw RingError(std::string("order variable outside ring: ") +
                            var_name(v));
        if (std::find(prec.begin(), prec.end(), idx) != prec.end())
            throw RingError("repeated order variable");
        prec.push_back(idx);
    }
    for (int i = 0; i < ring.size(); ++i)
        if (std::find(prec.begin(), prec.end(), i) == prec.end())
            prec.push_back(i);
    return prec;
}

MonomialOrder MonomialOrder::lex(const Ring& ring) { return lex(ring, {}); }
MonomialOrder MonomialOrder::grevlex(const Ring& ring) { return grevlex(ring, {}); }

MonomialOrder MonomialOrder::lex(const Ring& ring, const std::vector<Var>& first) {
    return MonomialOrder(OrderKind::Lex, ring, full_precedence(ring, first));
}

MonomialOrder MonomialOrder::grevlex(const Ring& ring, const std::vector<Var>& first) {
    return MonomialOrder(OrderKind::GrevLex, ring, full_precedence(ring, first));
}

OrderKey MonomialOrder::key(const Monomial& m) const {
    OrderKey k = 0;
    if (kind_ == OrderKind::Lex) {
        for (int idx : precedence_) k = (k << 8) | m.e[static_cast<std::size_t>(idx)];
        k = (k << 16) | static_cast<unsigned>(m.degree());
    } else {
        k = static_cast<unsigned>(m.degree());
        for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
            k = (k << 8) | static_cast<std::uint8_t>(255 - m.e[static_cast<std::size_t>(*it)]);
    }
    return k;
}

// --- construction -----------------------------------------------------------

Poly Poly::constant(const Ring& ring, const Rational& c) {
    Poly p(ring);
    if (!conchoid::is_zero(c)) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Poly Poly::variable(const Ring& ring, Var v, int exp) {
    int idx = ring.index_of(v);
    if (idx < 0)
        throw RingError(std::string("variable outside ring: ") + var_name(v));
    if (exp == 0) return constant(ring, 1);
    Poly p(ring);
    p.terms_.push_back({Monomial::of_var(idx, exp), Rational(1)});
    return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
        return s.mono.lex_compare(t.mono) > 0;
    });
    Poly p(ring);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && conchoid::is_zero(p.terms_.back().coef))
            p.terms_.pop_back();
    }
    return p;
}

// --- queries ----------------------------------------------------------------

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_[0].coef;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_[0];
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Poly::degree_in(Var v) const {
    int idx = ring_.index_of(v);
    if (idx < 0) return 0;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(idx));
    return d;
}

std::vector<Var> Poly::used_vars() const {
    std::vector<Var> used;
    for (Var v : ring_.vars())
        if (degree_in(v) > 0) used.push_back(v);
    return used;
}

void Poly::require_same_ring(const Poly& o) const {
    if (ring_ != o.ring_)
        throw RingError("ring mismatch: " + ring_.to_string() + " vs " +
                        o.ring_.to_string());
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

// --- arithmetic -------------------------------------------------------------

Poly Poly::operator-() const {
    Poly p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coef});
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(o);
    Poly p(ring_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = terms_[i].mono.lex_compare(o.terms_[j].mono);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coef + o.terms_[j].coef;
            if (!conchoid::is_zero(s)) p.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(o);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    std::map<Monomial, Rational, MonomialLexGreater> acc;
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) {
            Monomial m = s.mono * t.mono;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, s.coef * t.coef);
            else
                it->second += s.coef * t.coef;
        }
    Poly p(ring_);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!conchoid::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::scaled(const Rational& c) const {
    if (conchoid::is_zero(c)) return Poly(ring_);
    Poly p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coef * c});
    return p;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return result;
}

// --- evaluation and substitution --------------------------------------------

static Rational rational_pow(const Rational& r, int e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den); // canonical because r is canonical
}

Poly Poly::evaluate(const std::map<Var, Rational>& assignment) const {
    std::vector<Var> assigned;
    for (const auto& [v, val] : assignment) {
        (void)val;
        if (ring_.index_of(v) < 0)
            throw RingError(std::string("assigned variable outside ring: ") +
                            var_name(v));
        assigned.push_back(v);
    }
    Ring target = ring_.without(assigned);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coef;
        Monomial m;
        for (int i = 0; i < ring_.size(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            Var v = ring_.var(i);
            auto it = assignment.find(v);
            if (it != assignment.end())
                c *= rational_pow(it->second, e);
            else
                m.e[static_cast<std::size_t>(target.index_of(v))] =
                    static_cast<std::uint8_t>(e);
        }
        if (!conchoid::is_zero(c)) out.push_back({m, c});
    }
    return from_terms(target, std::move(out));
}

Poly Poly::substitute(const std::map<Var, Poly>& images, const Ring& target) const {
    // Image powers are cached per variable as needed.
    std::map<Var, std::vector<Poly>> powers;
    auto power = [&](Var v, int e) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) {
            auto it = images.find(v);
            if (it != images.end()) {
                if (it->second.ring() != target)
                    throw RingError("substitution image over wrong ring");
                cache.push_back(it->second);
            } else {
                cache.push_back(variable(target, v));
            }
        }
        while (static_cast<int>(cache.size()) < e)
            cache.push_back(cache.back() * cache.front());
        return cache[static_cast<std::size_t>(e - 1)];
    };
    for (const auto& [v, img] : images) {
        (void)img;
        if (ring_.index_of(v) < 0)
            throw RingError(std::string("substituted variable outside ring: ") +
                            var_name(v));
    }
    Poly sum = zero(target);
    for (const auto& t : terms_) {
        Poly prod = constant(target, t.coef);
        for (int i = 0; i < ring_.size(); ++i) {
            int e = t.mono.exponent(i);
            if (e > 0) prod *= power(ring_.var(i), e);
        }
        sum += prod;
    }
    return sum;
}

Poly Poly::derivative(Var v) const {
    int idx = ring_.index_of(v);
    if (idx < 0)
        throw RingError(std::string("derivative variable outside ring: ") +
                        var_name(v));
    Poly p(ring_);
    for (const auto& t : terms_) {
        int e = t.mono.exponent(idx);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.e[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(e - 1);
        p.terms_.push_back({m, t.coef * e});
    }
    // Dropping terms keeps the descending order intact; no resort needed.
    return p;
}

Poly Poly::renamed(const std::map<Var, Var>& names, const Ring& target) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (int i = 0; i < ring_.size(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            Var v = ring_.var(i);
            auto it = names.find(v);
            Var w = it == names.end() ? v : it->second;
            int idx = target.index_of(w);
            if (idx < 0)
                throw RingError(std::string("renamed variable outside ring: ") +
                                var_name(w));
            if (m.e[static_cast<std::size_t>(idx)])
                throw RingError("variable renaming is not injective");
            m.e[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(e);
        }
        out.push_back({m, t.coef});
    }
    return from_terms(target, std::move(out));
}

Poly Poly::over(const Ring& target) const { return renamed({}, target); }

// --- printing ---------------------------------------------------------------

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational mag = abs(t.coef);
        bool negative = sgn(t.coef) < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool unit = mag == 1;
        bool wrote_factor = false;
        if (!unit || t.mono.is_constant()) {
            out << conchoid::to_string(mag);
            wrote_factor = true;
        }
        for (int i = 0; i < ring_.size(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (wrote_factor) out << '*';
            out << var_name(ring_.var(i));
            if (e > 1) out << '^' << e;
            wrote_factor = true;
        }
    }
    return out.str();
}

// --- parsing ----------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos) throw ParseError("expected digits at offset " +
                                           std::to_string(start));
        return text.substr(start, pos - start);
    }
    std::string identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos) throw ParseError("expected a variable at offset " +
                                           std::to_string(start));
        return text.substr(start, pos - start);
    }
};

int parse_exponent(Lexer& lex) {
    std::string d = lex.digits();
    Integer e = parse_integer(d);
    if (e > 255) throw ParseError("exponent too large: " + d);
    return static_cast<int>(e.get_ui());
}

Term parse_term(Lexer& lex, const Ring& ring) {
    Rational coef(1);
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
        Integer num = parse_integer(lex.digits());
        coef = Rational(num);
        if (lex.accept('/')) {
            Integer den = parse_integer(lex.digits());
            if (sgn(den) == 0) throw ParseError("zero denominator");
            coef /= Rational(den);
        }
        saw_anything = true;
    }
    Monomial mono;
    for (;;) {
        bool star = lex.accept('*');
        char c = lex.peek();
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            if (star) throw ParseError("dangling '*'");
            break;
        }
        Var v = parse_var(lex.identifier());
        int idx = ring.index_of(v);
        if (idx < 0)
            throw ParseError(std::string("variable ") + var_name(v) +
                             " does not belong to ring " + ring.to_string());
        int e = lex.accept('^') ? parse_exponent(lex) : 1;
        int total = mono.exponent(idx) + e;
        if (total > 255) throw ParseError("exponent too large");
        mono.e[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(total);
        saw_anything = true;
    }
    if (!saw_anything) throw ParseError("expected a term at offset " +
                                        std::to_string(lex.pos));
    return {mono, coef};
}

} // namespace

Poly Poly::parse(const std::string& text, const Ring& ring) {
    Lexer lex{text};
    std::vector<Term> terms;
    int sign = 1;
    if (lex.accept('-')) sign = -1;
    else lex.accept('+');
    for (;;) {
        Term t = parse_term(lex, ring);
        t.coef *= sign;
        terms.push_back(std::move(t));
        if (lex.at_end()) break;
        if (lex.accept('+')) sign = 1;
        else if (lex.accept('-')) sign = -1;
        else throw ParseError("unexpected character '" + std::string(1, lex.peek()) +
                              "' at offset " + std::to_string(lex.pos));
    }
    return from_terms(ring, std::move(terms));
}

// --- canonical form ---------------------------------------------------------

Rational rational_content(const Poly& p) {
    if (p.is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                numerator(t.coef).get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                denominator(t.coef).get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly normalize(const Poly& p) {
    if (p.is_zero()) return p;
    Rational scale = 1 / rational_content(p);
    if (sgn(p.leading_term().coef) < 0) scale = -scale;
    return p.scaled(scale);
}

// --- division ---------------------------------------------------------------

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.ring() != q.ring()) throw RingError("ring mismatch in division");
    Poly r = p;
    Poly quot = Poly::zero(p.ring());
    const Term& qlead = q.leading_term();
    while (!r.is_zero()) {
        const Term& rlead = r.leading_term();
        if (!qlead.mono.divides(rlead.mono)) return std::nullopt;
        Poly t(p.ring());
        t = Poly::from_terms(p.ring(), {{qlead.mono.quotient_of(rlead.mono),
                                         rlead.coef / qlead.coef}});
        quot += t;
        r -= t * q;
    }
    return quot;
}

bool divides(const Poly& q, const Poly& p) { return divide_exact(p, q).has_value(); }

// --- univariate views -------------------------------------------------------

std::vector<Poly> coefficients_in(const Poly& p, Var v) {
    int idx = p.ring().index_of(v);
    if (idx < 0)
        throw RingError(std::string("view variable outside ring: ") + var_name(v));
    int deg = p.degree_in(v);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
    for (const auto& t : p.terms()) {
        int e = t.mono.exponent(idx);
        Monomial m = t.mono;
        m.e[static_cast<std::size_t>(idx)] = 0;
        buckets[static_cast<std::size_t>(e)].push_back({m, t.coef});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(Poly::from_terms(p.ring(), std::move(b)));
    return out;
}

Poly from_coefficients_in(const Ring& ring, Var v, const std::vector<Poly>& coefs) {
    int idx = ring.index_of(v);
    if (idx < 0)
        throw RingError(std::string("view variable outside ring: ") + var_name(v));
    std::vector<Term> out;
    for (std::size_t e = 0; e < coefs.size(); ++e) {
        if (coefs[e].ring() != ring) throw RingError("coefficient over wrong ring");
        for (const auto& t : coefs[e].terms()) {
            if (t.mono.exponent(idx) != 0)
                throw RingError("coefficient uses the view variable");
            Monomial m = t.mono;
            m.e[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(e);
            out.push_back({m, t.coef});
        }
    }
    return Poly::from_terms(ring, std::move(out));
}

Poly leading_coefficient_in(const Poly& p, Var v) {
    if (p.is_zero()) return p;
    auto coefs = coefficients_in(p, v);
    return coefs.back();
}

// --- deterministic total order ----------------------------------------------

int compare_polys(const Poly& p, const Poly& q) {
    if (int c = p.total_degree() - q.total_degree(); c != 0) return c;
    if (int c = p.term_count() - q.term_count(); c != 0) return c;
    const auto& pt = p.terms();
    const auto& qt = q.terms();
    for (std::size_t i = 0; i < pt.size() && i < qt.size(); ++i) {
        if (int c = pt[i].mono.lex_compare(qt[i].mono); c != 0) return c;
        if (int c = cmp(pt[i].coef, qt[i].coef); c != 0) return c;
    }
    return 0;
}

} // namespace conchoid
