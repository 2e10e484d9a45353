#pragma once

#include <array>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "visev/numeric.hpp"

namespace visev {

constexpr int kMaxVars = 24;
constexpr uint32_t kMaxExp = 60000;  // guards uint16 exponent arithmetic

enum class OrderKind { Grevlex, Lex, Block };

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    int block_split = 0;  // Block: vars [0, block_split) are eliminated first

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block(int split) { return {OrderKind::Block, split}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || block_split == o.block_split);
    }
    std::string to_string() const {
        switch (kind) {
            case OrderKind::Grevlex: return "grevlex";
            case OrderKind::Lex: return "lex";
            case OrderKind::Block: return "block:" + std::to_string(block_split);
        }
        return "?";
    }
    static MonomialOrder from_string(const std::string& s) {
        if (s == "grevlex") return grevlex();
        if (s == "lex") return lex();
        if (s.rfind("block:", 0) == 0) return block(std::stoi(s.substr(6)));
        throw Error("unknown monomial order: " + s);
    }
};

struct PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

struct PolynomialRing {
    std::vector<std::string> vars;
    MonomialOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }
    int index_of(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }
    std::string key() const {
        std::string k = order.to_string();
        for (const auto& v : vars) k += "," + v;
        return k;
    }
};

inline RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
    if (static_cast<int>(vars.size()) > kMaxVars) throw Error("too many variables");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error("duplicate variable name: " + vars[i]);
    auto r = std::make_shared<PolynomialRing>();
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a->vars == b->vars && a->order == b->order;
}

// Exponent vector with cached total degree. Unused slots stay zero so
// equality is a plain memcmp.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial& o) const {
        return deg == o.deg && std::memcmp(e.data(), o.e.data(), sizeof(e)) == 0;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono_var(int i, uint16_t pow = 1) {
    Monomial m;
    m.e[i] = pow;
    m.deg = pow;
    return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b, int nv) {
    Monomial r;
    uint32_t d = a.deg + b.deg;
    if (d > kMaxExp) throw Error("exponent overflow");
    for (int i = 0; i < nv; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    r.deg = d;
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b, int nv) {
    // a | b
    if (a.deg > b.deg) return false;
    for (int i = 0; i < nv; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a, int nv) {
    Monomial r;
    for (int i = 0; i < nv; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, int nv) {
    Monomial r;
    uint32_t d = 0;
    for (int i = 0; i < nv; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b, int nv) {
    for (int i = 0; i < nv; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline uint64_t mono_hash(const Monomial& m, int nv) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < nv; ++i) {
        h ^= m.e[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace detail {
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = static_cast<int>(a.e[i]) - static_cast<int>(b.e[i]);
        if (d) return d < 0 ? 1 : -1;
    }
    return 0;
}
inline int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        int d = static_cast<int>(a.e[i]) - static_cast<int>(b.e[i]);
        if (d) return d > 0 ? 1 : -1;
    }
    return 0;
}
}  // namespace detail

// Returns +1 if a > b, -1 if a < b, 0 if equal, under `ord` for `nv` variables.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord, int nv) {
    switch (ord.kind) {
        case OrderKind::Grevlex: {
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            for (int i = nv - 1; i >= 0; --i) {
                int d = static_cast<int>(a.e[i]) - static_cast<int>(b.e[i]);
                if (d) return d < 0 ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::Lex:
            return detail::cmp_lex_range(a, b, 0, nv);
        case OrderKind::Block: {
            int c = detail::cmp_grevlex_range(a, b, 0, ord.block_split);
            if (c) return c;
            return detail::cmp_grevlex_range(a, b, ord.block_split, nv);
        }
    }
    return 0;
}

}  // namespace visev
