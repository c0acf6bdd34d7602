#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

/// Polynomial exterior q-form over S. Coefficients are indexed by sorted
/// variable subsets (bitmask over x,y,z,w), so the representation is
/// canonical and equality is map comparison. The grading gives every
/// variable and every differential degree 1: a homogeneous q-form of total
/// degree t has polynomial coefficients of degree t - q.
template <class K>
class Form {
public:
    Form(int nvars, int formDeg) : nv_(nvars), q_(formDeg) {
        if (formDeg < 0 || formDeg > nvars) throw std::invalid_argument("Form: degree out of range");
    }

    static Form fromPoly(const Poly<K>& p) {
        Form f(p.numVars(), 0);
        if (!p.isZero()) f.c_[0] = p;
        return f;
    }

    /// The 1-form dx_i.
    static Form differential(int nvars, int i) {
        Form f(nvars, 1);
        f.c_[std::uint8_t(1u << i)] = Poly<K>::constant(nvars, K(1));
        return f;
    }

    int numVars() const { return nv_; }
    int formDegree() const { return q_; }
    bool isZero() const { return c_.empty(); }
    const std::map<std::uint8_t, Poly<K>>& coefficients() const { return c_; }

    Poly<K> coefficient(std::uint8_t mask) const {
        auto it = c_.find(mask);
        return it == c_.end() ? Poly<K>(nv_) : it->second;
    }

    void addTerm(std::uint8_t mask, const Poly<K>& p) {
        if (std::popcount(unsigned(mask)) != q_) throw std::invalid_argument("Form: wrong subset size");
        if (mask >= (1u << nv_)) throw std::invalid_argument("Form: subset uses missing variable");
        if (p.isZero()) return;
        auto [it, fresh] = c_.try_emplace(mask, p);
        if (!fresh) {
            it->second += p;
            if (it->second.isZero()) c_.erase(it);
        }
    }

    Form& operator+=(const Form& o) {
        checkCompatible(o);
        for (const auto& [m, p] : o.c_) addTerm(m, p);
        return *this;
    }
    Form& operator-=(const Form& o) {
        checkCompatible(o);
        for (const auto& [m, p] : o.c_) addTerm(m, -p);
        return *this;
    }
    Form operator-() const {
        Form r(nv_, q_);
        for (const auto& [m, p] : c_) r.c_[m] = -p;
        return r;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }

    friend Form operator*(const Poly<K>& p, const Form& f) {
        Form r(f.nv_, f.q_);
        for (const auto& [m, c] : f.c_) r.addTerm(m, p * c);
        return r;
    }

    friend bool operator==(const Form& a, const Form& b) {
        return a.nv_ == b.nv_ && a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Total degree (polynomial degree + q); -1 when zero.
    int totalDegree() const {
        int d = -1;
        for (const auto& [m, p] : c_) d = std::max(d, p.degree() + q_);
        return d;
    }

    bool isHomogeneous() const {
        int d = -2;
        for (const auto& [m, p] : c_) {
            if (!p.isHomogeneous()) return false;
            if (d == -2)
                d = p.degree();
            else if (p.degree() != d)
                return false;
        }
        return true;
    }

    std::string str() const;

private:
    void checkCompatible(const Form& o) const {
        if (nv_ != o.nv_ || q_ != o.q_) throw std::invalid_argument("Form: mismatched rings or degrees");
    }

    int nv_;
    int q_;
    std::map<std::uint8_t, Poly<K>> c_;
};

/// Sign of merging two disjoint sorted index sets: (-1)^{#inversions},
/// counting pairs i in a, j in b with j < i.
inline int mergeSign(std::uint8_t a, std::uint8_t b) {
    int inv = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (!(a & (1u << i))) continue;
        for (int j = 0; j < i; ++j)
            if (b & (1u << j)) ++inv;
    }
    return (inv % 2 == 0) ? 1 : -1;
}

template <class K>
Form<K> wedge(const Form<K>& a, const Form<K>& b) {
    if (a.numVars() != b.numVars()) throw std::invalid_argument("wedge: mismatched rings");
    int q = a.formDegree() + b.formDegree();
    if (q > a.numVars()) return Form<K>(a.numVars(), a.numVars()); // zero beyond top degree
    Form<K> r(a.numVars(), q);
    for (const auto& [ma, pa] : a.coefficients())
        for (const auto& [mb, pb] : b.coefficients()) {
            if (ma & mb) continue;
            Poly<K> p = pa * pb;
            if (mergeSign(ma, mb) < 0) p = -p;
            r.addTerm(std::uint8_t(ma | mb), p);
        }
    return r;
}

/// Contraction with the Euler vector field x d/dx + y d/dy + ...; an
/// antiderivation dropping form degree by 1, with contractEuler(df) =
/// deg(f) * f for homogeneous f.
template <class K>
Form<K> contractEuler(const Form<K>& a) {
    int nv = a.numVars();
    if (a.formDegree() == 0) return Form<K>(nv, 0);
    Form<K> r(nv, a.formDegree() - 1);
    for (const auto& [mask, p] : a.coefficients()) {
        int sign = 1;
        for (int i = 0; i < kMaxVars; ++i) {
            if (mask & (1u << i)) {
                Poly<K> t = p * Poly<K>::variable(nv, i);
                r.addTerm(std::uint8_t(mask & ~(1u << i)), sign > 0 ? t : -t);
                sign = -sign;
            }
        }
    }
    return r;
}

/// d of a 0-form: the gradient 1-form sum_i f_{x_i} dx_i.
template <class K>
Form<K> dPoly(const Poly<K>& f) {
    Form<K> r(f.numVars(), 1);
    for (int i = 0; i < f.numVars(); ++i) r.addTerm(std::uint8_t(1u << i), f.derivative(i));
    return r;
}

/// Identification of a syzygy tuple (a_1..a_n) in S^n with an (n-1)-form;
/// in three variables a dy^dz - b dx^dz + c dx^dy. The sign convention is
/// fixed by wedge(df, toForm(v)) = (sum_i v_i f_{x_i}) * (volume form) and
/// carries over to n = 4 with alternating signs.
template <class K>
Form<K> toForm(const std::vector<Poly<K>>& v) {
    if (v.empty()) throw std::invalid_argument("toForm: empty tuple");
    int nv = v[0].numVars();
    if (int(v.size()) != nv) throw std::invalid_argument("toForm: tuple length must equal variable count");
    Form<K> r(nv, nv - 1);
    std::uint8_t full = std::uint8_t((1u << nv) - 1);
    for (int i = 0; i < nv; ++i) {
        Poly<K> p = v[i];
        if (i % 2 == 1) p = -p;
        r.addTerm(std::uint8_t(full & ~(1u << i)), p);
    }
    return r;
}

template <class K>
std::vector<Poly<K>> fromForm(const Form<K>& f) {
    int nv = f.numVars();
    if (f.formDegree() != nv - 1) throw std::invalid_argument("fromForm: need an (n-1)-form");
    std::uint8_t full = std::uint8_t((1u << nv) - 1);
    std::vector<Poly<K>> v;
    v.reserve(nv);
    for (int i = 0; i < nv; ++i) {
        Poly<K> p = f.coefficient(std::uint8_t(full & ~(1u << i)));
        v.push_back(i % 2 == 1 ? -p : p);
    }
    return v;
}

/// The Koszul syzygies of f as (n-1)-forms: df wedged with each du in three
/// variables (kappa^x = (0, f_z, -f_y) etc.), and with each du^dv, u < v, in
/// four. Each tuple satisfies sum_i kappa_i f_{x_i} = 0 and is verified.
template <class K>
std::vector<std::pair<Form<K>, std::vector<Poly<K>>>> koszulForms(const Poly<K>& f) {
    if (!f.isHomogeneous() || f.degree() < 1)
        throw std::invalid_argument("koszulForms: need homogeneous f of degree >= 1");
    int nv = f.numVars();
    Form<K> df = dPoly(f);
    std::vector<Form<K>> cofactors;
    if (nv == 3) {
        for (int u = 0; u < 3; ++u) cofactors.push_back(Form<K>::differential(3, u));
    } else {
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                cofactors.push_back(wedge(Form<K>::differential(4, u), Form<K>::differential(4, v)));
    }
    std::vector<std::pair<Form<K>, std::vector<Poly<K>>>> out;
    for (const Form<K>& c : cofactors) {
        Form<K> omega = wedge(df, c);
        std::vector<Poly<K>> kappa = fromForm(omega);
        Poly<K> check(nv);
        for (int i = 0; i < nv; ++i) check += kappa[i] * f.derivative(i);
        if (!check.isZero()) throw std::logic_error("koszulForms: Koszul tuple is not a syzygy");
        out.emplace_back(std::move(omega), std::move(kappa));
    }
    return out;
}

template <class K>
std::string Form<K>::str() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mask, p] : c_) {
        if (!first) s += " + ";
        first = false;
        std::string basis;
        for (int i = 0; i < kMaxVars; ++i) {
            if (mask & (1u << i)) {
                if (!basis.empty()) basis += "^";
                basis += "d";
                basis += kVarNames[i];
            }
        }
        std::string ps = p.str();
        if (basis.empty()) {
            s += ps;
        } else if (ps == "1") {
            s += basis;
        } else if (p.termCount() == 1) {
            s += ps + "*" + basis;
        } else {
            s += "(" + ps + ")*" + basis;
        }
    }
    return s;
}

} // namespace jacsyz
