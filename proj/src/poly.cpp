#include "cubic/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cubic {

Poly Poly::constant(int n, const Rational& c) {
    Poly p(n);
    if (!cubic::is_zero(c)) p.terms_.emplace_back(Monomial(n), c);
    return p;
}

Poly Poly::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
    Monomial m(n);
    m.e[i] = 1;
    Poly p(n);
    p.terms_.emplace_back(std::move(m), make_rational(1));
    return p;
}

Poly Poly::from_term(int n, const Monomial& m, const Rational& c) {
    if (m.vars() != static_cast<std::size_t>(n))
        throw std::invalid_argument("monomial arity mismatch");
    Poly p(n);
    if (!cubic::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
}

Poly Poly::from_terms(int n, std::vector<Term> terms) {
    Poly p(n);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return graded_lex_less(b.first, a.first);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && cubic::is_zero(out.back().second)) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Poly::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return graded_lex_less(key, t.first); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("poly arity mismatch");
    Poly r(n_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first == b->first) {
            Rational c = a->second + b->second;
            if (!cubic::is_zero(c)) r.terms_.emplace_back(a->first, std::move(c));
            ++a, ++b;
        } else if (graded_lex_less(b->first, a->first)) {
            r.terms_.push_back(*a++);
        } else {
            r.terms_.push_back(*b++);
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("poly arity mismatch");
    if (is_zero() || o.is_zero()) return Poly(n_);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            acc[ma * mb] += ca * cb;
        }
    Poly r(n_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!cubic::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
        return graded_lex_less(b.first, a.first);
    });
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (cubic::is_zero(c)) return Poly(n_);
    Poly r(*this);
    for (auto& [m, k] : r.terms_) k *= c;
    return r;
}

Rational Poly::eval(std::span<const Rational> x) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("eval: point dimension mismatch");
    // Powers are memoized per variable; exponents stay tiny in practice.
    std::vector<std::vector<Rational>> pw(n_);
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < n_; ++i) {
            const int e = m.e[i];
            if (e == 0) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache = {Rational(1), x[i]};
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * x[i]);
            v *= cache[e];
        }
        sum += v;
    }
    return sum;
}

Poly Poly::derivative(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("derivative: bad variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        if (m.e[i] == 0) continue;
        Monomial d = m;
        d.e[i] -= 1;
        out.emplace_back(std::move(d), c * m.e[i]);
    }
    return from_terms(n_, std::move(out));
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (images.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("substitute: image count mismatch");
    const int m = images.empty() ? 0 : images[0].vars();
    for (const auto& im : images)
        if (im.vars() != m) throw std::invalid_argument("substitute: mixed image arity");
    std::vector<std::vector<Poly>> pw(n_);  // pw[i][e] = images[i]^e
    // Accumulate every expanded term in one map and normalize once at the
    // end; repeated sorted merges are quadratic on large expansions.
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const auto& [mono, c] : terms_) {
        Poly t = Poly::constant(m, c);
        for (int i = 0; i < n_; ++i) {
            const int e = mono.e[i];
            if (e == 0) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache = {Poly::constant(m, make_rational(1)), images[i]};
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
            t *= cache[e];
        }
        for (const auto& [tm, tc] : t.terms_) acc[tm] += tc;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mm, cc] : acc)
        if (!cubic::is_zero(cc)) out.emplace_back(mm, std::move(cc));
    return from_terms(m, std::move(out));
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    Poly r = Poly::constant(n_, make_rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = abs(c);
        std::vector<std::string> factors;
        if (a != 1 || m.degree() == 0) factors.push_back(rational_to_string(a));
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            std::string f = "x" + std::to_string(i);
            if (m.e[i] > 1) f += "^" + std::to_string(static_cast<int>(m.e[i]));
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

}  // namespace cubic
