#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace jacsyz {

/// Exact rational coefficient, always in lowest terms with positive
/// denominator (mpq_class keeps that canonical form for us).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(const mpq_class& v) : v_(v) {}
    explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

    static const char* fieldName() { return "QQ"; }
    static bool isPrimeField() { return false; }
    static std::uint64_t characteristic() { return 0; }

    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.isZero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    Rat inverse() const {
        if (isZero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Residue modulo a runtime prime, NTL-style: the modulus lives in a
/// thread-local context set once via Zp::init before any arithmetic.
/// Residues are kept in [0, p).
class Zp {
public:
    Zp() : v_(0) {}
    Zp(long n) { v_ = reduce(n); }

    static void init(std::uint64_t p);
    static std::uint64_t modulus() { return p_; }
    static const char* fieldName() { return "Zp"; }
    static bool isPrimeField() { return true; }
    static std::uint64_t characteristic() { return p_; }

    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }

    Zp operator-() const { return fromRaw(v_ == 0 ? 0 : p_ - v_); }
    Zp& operator+=(const Zp& o) {
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Zp& operator-=(const Zp& o) {
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Zp& operator*=(const Zp& o) { v_ = (v_ * o.v_) % p_; return *this; }
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Zp& a, const Zp& b) { return a.v_ != b.v_; }

    Zp inverse() const;

    std::uint64_t residue() const { return v_; }
    std::string str() const { return std::to_string(v_); }

private:
    static Zp fromRaw(std::uint64_t v) {
        Zp r;
        r.v_ = v;
        return r;
    }
    static std::uint64_t reduce(long n) {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t v_;
    static thread_local std::uint64_t p_;
};

bool isPrime(std::uint64_t n);

/// Runtime choice of coefficient field: exact rationals ("q") or a prime
/// field ("p:32003"). The pipeline restricts to odd primes; the paper works
/// over the complex numbers, so prime-field runs are labeled as
/// characteristic-p evidence in every report.
struct FieldDesc {
    bool rational = true;
    std::uint64_t prime = 0;

    static FieldDesc rationals() { return FieldDesc{true, 0}; }
    static FieldDesc primeField(std::uint64_t p);
    static FieldDesc parse(const std::string& text);

    std::string str() const { return rational ? "q" : "p:" + std::to_string(prime); }
    std::string evidenceLabel() const {
        return rational ? "exact rational arithmetic"
                        : "characteristic-p evidence (p=" + std::to_string(prime) + ")";
    }
};

} // namespace jacsyz
