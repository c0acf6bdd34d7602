#include "jacsyz/field.hpp"

namespace jacsyz {

thread_local std::uint64_t Zp::p_ = 0;

void Zp::init(std::uint64_t p) {
    if (p < 2 || !isPrime(p)) throw std::invalid_argument("Zp::init: modulus must be prime, got " + std::to_string(p));
    p_ = p;
}

Zp Zp::inverse() const {
    if (v_ == 0) throw std::domain_error("Zp: inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Zp(static_cast<long>(t));
}

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

FieldDesc FieldDesc::primeField(std::uint64_t p) {
    if (p <= 2 || !isPrime(p)) throw std::invalid_argument("field: need an odd prime, got " + std::to_string(p));
    return FieldDesc{false, p};
}

FieldDesc FieldDesc::parse(const std::string& text) {
    if (text == "q" || text == "Q" || text == "0") return rationals();
    if (text.rfind("p:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(text.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("field: cannot read prime in '" + text + "'");
        }
        return primeField(p);
    }
    throw std::invalid_argument("field: expected 'q' or 'p:<prime>', got '" + text + "'");
}

} // namespace jacsyz
