#include "visev/univariate.hpp"

#include <sstream>

namespace visev {

UniPoly UniPoly::from_coeffs(std::vector<Int> coeffs) {
    UniPoly p;
    p.a = std::move(coeffs);
    while (!p.a.empty() && sgn(p.a.back()) == 0) p.a.pop_back();
    return p;
}

UniPoly UniPoly::from_rationals(const std::vector<Rat>& coeffs) {
    Int den(1);
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(c.get_mpq_t()));
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Rat v = c * Rat(den);
        out.push_back(Int(v.get_num()));
    }
    return from_coeffs(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> r(std::max(a.size(), o.a.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < o.a.size(); ++i) r[i] += o.a[i];
    return from_coeffs(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> r(std::max(a.size(), o.a.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < o.a.size(); ++i) r[i] -= o.a[i];
    return from_coeffs(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> r(a.size() + o.a.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < o.a.size(); ++j) r[i + j] += a[i] * o.a[j];
    return from_coeffs(std::move(r));
}

UniPoly UniPoly::scaled(const Int& k) const {
    if (sgn(k) == 0) return zero();
    UniPoly r = *this;
    for (auto& c : r.a) c *= k;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (a.size() <= 1) return zero();
    std::vector<Int> r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(static_cast<long>(i));
    return from_coeffs(std::move(r));
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Int g(0);
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(a.back()) < 0) g = -g;
    if (g == 1) return *this;
    UniPoly r = *this;
    for (auto& c : r.a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Rat UniPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + Rat(a[i]);
    return acc;
}

int UniPoly::sign_at(const Rat& x) const { return sgn(evaluate(x)); }

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.size(); i-- > 0;) {
        if (sgn(a[i]) == 0) continue;
        Int c = a[i];
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly prem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("pseudo-remainder by zero");
    UniPoly r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int lr = r.lc();
        // r = lc(b)*r - lr*t^k*b
        std::vector<Int> nr(std::max(r.a.size(), b.a.size() + k), Int(0));
        for (size_t i = 0; i < r.a.size(); ++i) nr[i] = r.a[i] * b.lc();
        for (size_t i = 0; i < b.a.size(); ++i) nr[i + k] -= lr * b.a[i];
        r = UniPoly::from_coeffs(std::move(nr));
    }
    return r;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a.primitive(), g = b.primitive();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = prem(f, g).primitive();
        f = g;
        g = r;
    }
    return f.primitive();
}

UniPoly uni_divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.is_zero()) return a;
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    UniPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Int c;
        if (!mpz_divisible_p(r.lc().get_mpz_t(), b.lc().get_mpz_t()))
            throw Error("inexact univariate division");
        mpz_divexact(c.get_mpz_t(), r.lc().get_mpz_t(), b.lc().get_mpz_t());
        q[k] = c;
        std::vector<Int> nr = r.a;
        for (size_t i = 0; i < b.a.size(); ++i) nr[i + k] -= c * b.a[i];
        r = UniPoly::from_coeffs(std::move(nr));
        if (!r.is_zero() && r.degree() >= b.degree() + k) throw Error("inexact univariate division");
    }
    if (!r.is_zero()) throw Error("inexact univariate division");
    return UniPoly::from_coeffs(std::move(q));
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0) return f.primitive();
    UniPoly g = uni_gcd(f, f.derivative());
    return uni_divexact(f.primitive(), g).primitive();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    // Yun's algorithm over Q (primitive parts keep it in Z)
    std::vector<UniPoly> out;
    if (f.is_zero() || f.degree() == 0) return out;
    UniPoly p = f.primitive();
    UniPoly d = p.derivative();
    UniPoly a = uni_gcd(p, d);
    UniPoly b = uni_divexact(p, a);
    UniPoly c = uni_divexact(d, a);
    for (;;) {
        UniPoly delta = c - b.derivative();
        if (delta.is_zero()) {
            out.push_back(b.primitive());
            break;
        }
        UniPoly ai = uni_gcd(b, delta);
        out.push_back(ai.primitive());
        b = uni_divexact(b, ai);
        c = uni_divexact(delta, ai);
    }
    return out;
}

UniPoly uni_lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero();
    UniPoly g = uni_gcd(a, b);
    return uni_divexact(a.primitive() * b.primitive(), g).primitive();
}

}  // namespace visev
