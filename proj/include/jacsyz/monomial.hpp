#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacsyz {

inline constexpr int kMaxVars = 4;
inline constexpr const char* kVarNames[kMaxVars] = {"x", "y", "z", "w"};

/// Power product x^a y^b z^c w^d. Exponents are 16-bit; degrees in this
/// problem domain never approach that, and overflow is a hard error.
struct Mono {
    std::array<std::uint16_t, kMaxVars> e{0, 0, 0, 0};

    int deg() const { return int(e[0]) + e[1] + e[2] + e[3]; }

    bool isConstant() const { return deg() == 0; }

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
};

inline Mono monoOne() { return Mono{}; }

inline Mono monoVar(int i) {
    Mono m;
    m.e[i] = 1;
    return m;
}

inline Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = std::uint16_t(s);
    }
    return r;
}

inline bool divides(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

/// b / a, requires divides(a, b).
inline Mono quotient(const Mono& b, const Mono& a) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::uint16_t(b.e[i] - a.e[i]);
    return r;
}

inline Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

/// Graded reverse lexicographic with x > y > z > w: higher total degree
/// wins; on ties the rightmost variable where the exponents differ decides,
/// smaller exponent there being larger. Unused trailing variables carry
/// exponent 0 on both sides, so one comparison serves 3- and 4-variable
/// rings alike.
inline int drlCompare(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

inline bool drlLess(const Mono& a, const Mono& b) { return drlCompare(a, b) < 0; }

/// Comparator putting the largest monomial first (map iteration order =
/// descending term order).
struct MonoDRLGreater {
    bool operator()(const Mono& a, const Mono& b) const { return drlCompare(a, b) > 0; }
};

inline std::string monoStr(const Mono& m) {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarNames[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

} // namespace jacsyz
