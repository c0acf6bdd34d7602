#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Recursive-descent parser for the polynomial grammar: integer literals,
/// variables x, y, z (and w in 4-variable mode), + - * ^ and parentheses.
/// Multiplication is always explicit. Coefficients printed as reduced
/// fractions ("3/2") are accepted back, so parse(print(p)) == p.
template <class K>
class PolyParser {
public:
    PolyParser(const std::string& text, int nvars) : s_(text), nv_(nvars) {}

    Poly<K> parse() {
        Poly<K> p = expr();
        skipWs();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Poly<K> expr() {
        skipWs();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Poly<K> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skipWs();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly<K> t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        for (;;) {
            skipWs();
            if (peek() != '*') break;
            get();
            acc *= factor();
        }
        return acc;
    }

    Poly<K> factor() {
        Poly<K> b = base();
        skipWs();
        if (peek() == '^') {
            get();
            long e = uintLiteral("exponent");
            if (e > 0xffff) fail("exponent overflow");
            Poly<K> r = Poly<K>::constant(nv_, K(1));
            for (long k = 0; k < e; ++k) r *= b;
            return r;
        }
        return b;
    }

    Poly<K> base() {
        skipWs();
        char c = peek();
        if (c == '(') {
            get();
            Poly<K> p = expr();
            skipWs();
            if (peek() != ')') fail("expected ')'");
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name;
            while (std::isalpha(static_cast<unsigned char>(peek()))) name += get();
            for (int i = 0; i < nv_; ++i)
                if (name == kVarNames[i]) return Poly<K>::variable(nv_, i);
            failAt("unknown variable '" + name + "'", at);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return Poly<K>(nv_); // unreachable
    }

    Poly<K> number() {
        long num = uintLiteral("number");
        skipWs();
        if (peek() == '/') {
            get();
            std::size_t at = pos_;
            long den = uintLiteral("denominator");
            if (den == 0) failAt("zero denominator", at);
            return Poly<K>::constant(nv_, K(num) / K(den));
        }
        return Poly<K>::constant(nv_, K(num));
    }

    long uintLiteral(const char* what) {
        skipWs();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1'000'000'000L) fail("numeric literal overflow");
        }
        return v;
    }

    void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void failAt(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    const std::string& s_;
    std::size_t pos_ = 0;
    int nv_;
};

template <class K>
Poly<K> parsePoly(const std::string& text, int nvars) {
    return PolyParser<K>(text, nvars).parse();
}

} // namespace jacsyz
