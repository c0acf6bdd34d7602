#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacsyz/field.hpp"
#include "jacsyz/monomial.hpp"

namespace jacsyz {

/// Sparse multivariate polynomial over an exact field K, in 3 or 4
/// variables. Terms are held in a map iterated in descending degrevlex
/// order, no zero coefficients stored, so equality is map equality and the
/// representation is canonical.
template <class K>
class Poly {
public:
    using Terms = std::map<Mono, K, MonoDRLGreater>;

    Poly() : nv_(3) {}
    explicit Poly(int nvars) : nv_(nvars) { checkNv(nvars); }

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const K& c) {
        Poly p(nvars);
        if (!c.isZero()) p.t_[monoOne()] = c;
        return p;
    }

    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        if (i < 0 || i >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
        p.t_[monoVar(i)] = K(1);
        return p;
    }

    static Poly term(int nvars, const Mono& m, const K& c) {
        Poly p(nvars);
        for (int i = nvars; i < kMaxVars; ++i)
            if (m.e[i]) throw std::invalid_argument("Poly::term: monomial uses missing variable");
        if (!c.isZero()) p.t_[m] = c;
        return p;
    }

    int numVars() const { return nv_; }
    bool isZero() const { return t_.empty(); }
    std::size_t termCount() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.deg());
        return d;
    }

    bool isHomogeneous() const {
        if (t_.empty()) return true;
        int d = t_.begin()->first.deg();
        for (const auto& [m, c] : t_)
            if (m.deg() != d) return false;
        return true;
    }

    bool isConstant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.isConstant()); }

    const Mono& leadMono() const {
        requireNonzero();
        return t_.begin()->first;
    }
    const K& leadCoeff() const {
        requireNonzero();
        return t_.begin()->second;
    }

    K coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? K(0) : it->second;
    }

    void addTerm(const Mono& m, const K& c) {
        if (c.isZero()) return;
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.isZero()) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        checkSameRing(o);
        for (const auto& [m, c] : o.t_) addTerm(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        checkSameRing(o);
        for (const auto& [m, c] : o.t_) addTerm(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(nv_);
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.checkSameRing(b);
        Poly r(a.nv_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.addTerm(ma * mb, ca * cb);
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const K& c) {
        if (c.isZero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, cc] : t_) cc *= c;
        return *this;
    }
    friend Poly operator*(const K& c, Poly p) { return p.scale(c); }

    /// this * (c * m)
    Poly shifted(const Mono& m, const K& c) const {
        Poly r(nv_);
        if (c.isZero()) return r;
        auto hint = r.t_.end();
        for (const auto& [mm, cc] : t_) hint = r.t_.emplace_hint(hint, mm * m, cc * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.nv_ == b.nv_ && a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int var) const {
        if (var < 0 || var >= nv_) throw std::invalid_argument("derivative: variable out of range");
        Poly r(nv_);
        for (const auto& [m, c] : t_) {
            if (m.e[var] == 0) continue;
            Mono mm = m;
            mm.e[var] -= 1;
            r.addTerm(mm, c * K(long(m.e[var])));
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (int(point.size()) != nv_) throw std::invalid_argument("evaluate: wrong point size");
        K acc(0);
        for (const auto& [m, c] : t_) {
            K t = c;
            for (int i = 0; i < nv_; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Substitute each variable by a polynomial (used for linear changes of
    /// coordinates; works for any substitution).
    Poly substitute(const std::vector<Poly>& images) const {
        if (int(images.size()) != nv_) throw std::invalid_argument("substitute: wrong image count");
        Poly acc(nv_);
        for (const auto& [m, c] : t_) {
            Poly t = Poly::constant(nv_, c);
            for (int i = 0; i < nv_; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= images[i];
            acc += t;
        }
        return acc;
    }

    /// Exact quotient this / g, or nullopt when g does not divide. Term
    /// orders are multiplicative, so when g | this the leading term of every
    /// partial remainder is divisible by lead(g).
    std::optional<Poly> divideExact(const Poly& g) const {
        checkSameRing(g);
        if (g.isZero()) throw std::domain_error("divideExact: division by zero polynomial");
        Poly q(nv_), r = *this;
        const Mono& gm = g.leadMono();
        const K& gc = g.leadCoeff();
        while (!r.isZero()) {
            const Mono& rm = r.leadMono();
            if (!divides(gm, rm)) return std::nullopt;
            K c = r.leadCoeff() / gc;
            Mono m = quotient(rm, gm);
            q.addTerm(m, c);
            r -= g.shifted(m, c);
        }
        return q;
    }

    std::string str() const;

private:
    static void checkNv(int nvars) {
        if (nvars != 3 && nvars != 4) throw std::invalid_argument("Poly: 3 or 4 variables");
    }
    void checkSameRing(const Poly& o) const {
        if (nv_ != o.nv_) throw std::invalid_argument("Poly: mixed variable counts");
    }
    void requireNonzero() const {
        if (t_.empty()) throw std::domain_error("Poly: zero polynomial has no leading term");
    }

    int nv_;
    Terms t_;
};

template <class K>
std::string Poly<K>::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string ms = monoStr(m);
        if (ms.empty()) {
            s += cs;
        } else if (cs == "1") {
            s += ms;
        } else {
            s += cs + "*" + ms;
        }
    }
    return s;
}

template <class K>
std::vector<Poly<K>> gradient(const Poly<K>& f) {
    std::vector<Poly<K>> g;
    g.reserve(f.numVars());
    for (int i = 0; i < f.numVars(); ++i) g.push_back(f.derivative(i));
    return g;
}

struct EulerResult {
    bool holds = false;
    bool charDividesDegree = false;
    explicit operator bool() const { return holds; }
};

/// Checks sum_u x_u * f_u == deg(f) * f exactly. Requires homogeneous input.
/// When the field characteristic divides deg(f) the identity degenerates to
/// sum x_u f_u = 0, which we still verify, flagging the degeneration.
template <class K>
EulerResult eulerCheck(const Poly<K>& f) {
    if (!f.isHomogeneous()) throw std::invalid_argument("eulerCheck: non-homogeneous input");
    EulerResult res;
    if (f.isZero()) {
        res.holds = true;
        return res;
    }
    long d = f.degree();
    Poly<K> lhs(f.numVars());
    for (int i = 0; i < f.numVars(); ++i)
        lhs += Poly<K>::variable(f.numVars(), i) * f.derivative(i);
    Poly<K> rhs = f;
    rhs.scale(K(d));
    res.holds = (lhs == rhs);
    std::uint64_t p = K::characteristic();
    res.charDividesDegree = (p != 0 && d % long(p) == 0);
    return res;
}

} // namespace jacsyz
