#include "visev/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace visev {

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw Error("ring mismatch");
}
}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
    Polynomial p(std::move(ring));
    if (sgn(c) != 0) p.t_.push_back({mono_one(), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int idx, uint16_t pow) {
    if (idx < 0 || idx >= ring->nvars()) throw Error("variable index out of range");
    Polynomial p(std::move(ring));
    if (pow == 0) return constant(p.ring_, Rat(1));
    p.t_.push_back({mono_var(idx, pow), Rat(1)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name, uint16_t pow) {
    int idx = ring->index_of(name);
    if (idx < 0) throw Error("unknown variable: " + name);
    return variable(std::move(ring), idx, pow);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.t_ = std::move(terms);
    p.canonicalize();
    return p;
}

void Polynomial::canonicalize() {
    const auto& ord = ring_->order;
    int nv = ring_->nvars();
    std::sort(t_.begin(), t_.end(),
              [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, ord, nv) > 0; });
    size_t w = 0;
    for (size_t i = 0; i < t_.size();) {
        size_t j = i + 1;
        Rat c = t_[i].c;
        while (j < t_.size() && t_[j].m == t_[i].m) {
            c += t_[j].c;
            ++j;
        }
        if (sgn(c) != 0) {
            t_[w].m = t_[i].m;
            t_[w].c = c;
            ++w;
        }
        i = j;
    }
    t_.resize(w);
}

const Term& Polynomial::lead() const {
    if (t_.empty()) throw Error("lead term of zero polynomial");
    return t_[0];
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.e[var]));
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : t_)
        if (t.m.deg != t_[0].m.deg) return false;
    return true;
}

Rat Polynomial::constant_value() const {
    if (t_.empty()) return Rat(0);
    if (!is_constant()) throw Error("not a constant polynomial");
    return t_[0].c;
}

bool Polynomial::uses_var(int var) const {
    for (const auto& t : t_)
        if (t.m.e[var]) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m, -t.c});
    return r;
}

Polynomial add_scaled(const Polynomial& a, const Polynomial& b, const Rat& bscale,
                      const Monomial& bshift) {
    require_same_ring(a.ring(), b.ring());
    const auto& ord = a.ring()->order;
    int nv = a.ring()->nvars();
    Polynomial r(a.ring());
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    bool shift = !bshift.is_one();
    while (i < a.t_.size() || j < b.t_.size()) {
        if (j == b.t_.size()) {
            r.t_.push_back(a.t_[i++]);
            continue;
        }
        Monomial bm = shift ? mono_mul(b.t_[j].m, bshift, nv) : b.t_[j].m;
        if (i == a.t_.size()) {
            Rat c = b.t_[j].c * bscale;
            if (sgn(c)) r.t_.push_back({bm, std::move(c)});
            ++j;
            continue;
        }
        int cmp = mono_cmp(a.t_[i].m, bm, ord, nv);
        if (cmp > 0) {
            r.t_.push_back(a.t_[i++]);
        } else if (cmp < 0) {
            Rat c = b.t_[j].c * bscale;
            if (sgn(c)) r.t_.push_back({bm, std::move(c)});
            ++j;
        } else {
            Rat c = a.t_[i].c + b.t_[j].c * bscale;
            if (sgn(c)) r.t_.push_back({bm, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    return add_scaled(*this, o, Rat(1), mono_one());
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return add_scaled(*this, o, Rat(-1), mono_one());
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return zero(ring_);
    int nv = ring_->nvars();
    if (t_.size() == 1) return o.mul_term(t_[0].m, t_[0].c);
    if (o.t_.size() == 1) return mul_term(o.t_[0].m, o.t_[0].c);

    struct MHash {
        int nv;
        size_t operator()(const Monomial& m) const { return mono_hash(m, nv); }
    };
    std::unordered_map<Monomial, Rat, MHash> acc(t_.size() * o.t_.size() / 2 + 8, MHash{nv});
    for (const auto& ta : t_) {
        for (const auto& tb : o.t_) {
            Monomial m = mono_mul(ta.m, tb.m, nv);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, ta.c * tb.c);
            else
                it->second += ta.c * tb.c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& kv : acc)
        if (sgn(kv.second)) out.push_back({kv.first, std::move(kv.second)});
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (sgn(c) == 0) return zero(ring_);
    Polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m, t.c * c});
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
    if (sgn(c) == 0) return zero(ring_);
    int nv = ring_->nvars();
    Polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({mono_mul(t.m, m, nv), t.c * c});
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r = constant(ring_, Rat(1));
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_) || t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

Polynomial Polynomial::differentiate(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw Error("variable index out of range");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
        if (t.m.e[var] == 0) continue;
        Monomial m = t.m;
        Rat c = t.c * Rat(static_cast<long>(m.e[var]));
        m.e[var] -= 1;
        m.deg -= 1;
        out.push_back({m, std::move(c)});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::differentiate(const std::string& var) const {
    int idx = ring_->index_of(var);
    if (idx < 0) throw Error("unknown variable: " + var);
    return differentiate(idx);
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& images, RingPtr target) const {
    int nv = ring_->nvars();
    for (int v = 0; v < nv; ++v)
        if (uses_var(v) && !images.count(v))
            throw Error("unassigned variable in substitution: " + ring_->vars[v]);
    for (const auto& kv : images) require_same_ring(kv.second.ring(), target);

    // power cache per assigned variable
    std::map<int, std::vector<Polynomial>> powers;
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& vec = powers[v];
        if (vec.empty()) vec.push_back(Polynomial::constant(target, Rat(1)));
        while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * images.at(v));
        return vec[e];
    };

    Polynomial acc = zero(target);
    for (const auto& t : t_) {
        Polynomial prod = constant(target, t.c);
        for (int v = 0; v < nv; ++v)
            if (t.m.e[v]) prod = prod * power(v, t.m.e[v]);
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::substitute_named(const std::map<std::string, Polynomial>& images,
                                        RingPtr target) const {
    std::map<int, Polynomial> byidx;
    for (const auto& kv : images) {
        int idx = ring_->index_of(kv.first);
        if (idx < 0) throw Error("unknown variable: " + kv.first);
        byidx.emplace(idx, kv.second);
    }
    return substitute(byidx, std::move(target));
}

Polynomial Polynomial::map_vars(RingPtr target, const std::vector<int>& index_map) const {
    int nv = ring_->nvars();
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
        Monomial m;
        for (int v = 0; v < nv; ++v) {
            if (!t.m.e[v]) continue;
            if (index_map[v] < 0) throw Error("variable not present in target ring: " + ring_->vars[v]);
            m.e[index_map[v]] = t.m.e[v];
        }
        m.deg = t.m.deg;
        out.push_back({m, t.c});
    }
    return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::with_ring(RingPtr target) const {
    if (target->vars != ring_->vars) throw Error("with_ring requires identical variables");
    std::vector<Term> out = t_;
    return from_terms(std::move(target), std::move(out));
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars()) throw Error("evaluation point arity mismatch");
    Rat acc(0);
    for (const auto& t : t_) {
        Rat v = t.c;
        for (int i = 0; i < ring_->nvars(); ++i)
            if (t.m.e[i]) v *= rat_pow(point[i], t.m.e[i]);
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::coeff_of(int var, int k) const {
    std::vector<Term> out;
    for (const auto& t : t_) {
        if (t.m.e[var] != k) continue;
        Monomial m = t.m;
        m.deg -= m.e[var];
        m.e[var] = 0;
        out.push_back({m, t.c});
    }
    return from_terms(ring_, std::move(out));
}

std::vector<Polynomial> Polynomial::coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<Polynomial> out;
    for (int k = 0; k <= std::max(d, 0); ++k) out.push_back(coeff_of(var, k));
    if (d < 0) out.assign(1, zero(ring_));
    return out;
}

Rat Polynomial::content() const {
    if (t_.empty()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpq_numref(t.c.get_mpq_t()));
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(t.c.get_mpq_t()));
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Polynomial Polynomial::normalized() const {
    if (t_.empty()) return *this;
    Rat c = content();
    if (sgn(lead_coeff()) < 0) c = -c;
    return scaled(Rat(1) / c);
}

Polynomial Polynomial::monic() const {
    if (t_.empty()) return *this;
    return scaled(Rat(1) / lead_coeff());
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    if (g.is_zero()) throw Error("division by zero polynomial");
    int nv = ring_->nvars();
    Polynomial rem = *this;
    std::vector<Term> q;
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!mono_divides(g.lead_monomial(), lt.m, nv)) return std::nullopt;
        Monomial m = mono_div(lt.m, g.lead_monomial(), nv);
        Rat c = lt.c / g.lead_coeff();
        q.push_back({m, c});
        rem = add_scaled(rem, g, -c, m);
    }
    return from_terms(ring_, std::move(q));
}

std::string monomial_to_string(const Monomial& m, const PolynomialRing& ring) {
    std::string s;
    for (int i = 0; i < ring.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += ring.vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Rat a = t.c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            if (sgn(a) < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        std::string ms = monomial_to_string(t.m, *ring_);
        if (ms.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << ms;
        }
    }
    return os.str();
}

}  // namespace visev
