#pragma once

// Coefficient rings: exact rationals or integers modulo m (m >= 2, composite
// allowed). Elements are carried as mpq_class values; for IntegersMod the
// value is always the canonical representative in [0, m) with denominator 1.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "keller/errors.hpp"

namespace keller {

using Coeff = mpq_class;

enum class RingKind { Rationals, IntegersMod };

class Ring {
  public:
    static Ring rationals() { return Ring(RingKind::Rationals, 0); }

    static Ring integers_mod(mpz_class modulus) {
        if (modulus < 2) throw BadModulus("modulus must be >= 2");
        return Ring(RingKind::IntegersMod, std::move(modulus));
    }

    RingKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == RingKind::Rationals; }
    bool is_integers_mod() const { return kind_ == RingKind::IntegersMod; }
    const mpz_class& modulus() const { return modulus_; }

    bool operator==(const Ring& other) const {
        return kind_ == other.kind_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Ring& other) const { return !(*this == other); }

    Coeff zero() const { return Coeff(0); }
    Coeff one() const { return from_integer(1); }

    // Embeds an integer, reducing mod m when applicable.
    Coeff from_integer(const mpz_class& v) const {
        if (is_rationals()) return Coeff(v);
        mpz_class r = v % modulus_;
        if (r < 0) r += modulus_;
        return Coeff(r);
    }

    // Canonicalizes a raw value: lowest terms over Q, representative in
    // [0, m) over Z_m. Over Z_m a non-unit denominator is rejected.
    Coeff canon(const Coeff& v) const {
        if (is_rationals()) {
            Coeff r = v;
            r.canonicalize();
            return r;
        }
        if (v.get_den() == 1) return from_integer(v.get_num());
        return mul(from_integer(v.get_num()), inv(from_integer(v.get_den())));
    }

    Coeff add(const Coeff& a, const Coeff& b) const {
        if (is_rationals()) return a + b;
        return from_integer(mpz_class(a.get_num() + b.get_num()));
    }

    Coeff sub(const Coeff& a, const Coeff& b) const {
        if (is_rationals()) return a - b;
        return from_integer(mpz_class(a.get_num() - b.get_num()));
    }

    Coeff mul(const Coeff& a, const Coeff& b) const {
        if (is_rationals()) return a * b;
        return from_integer(mpz_class(a.get_num() * b.get_num()));
    }

    Coeff neg(const Coeff& a) const {
        if (is_rationals()) return -a;
        return from_integer(mpz_class(-a.get_num()));
    }

    bool is_zero(const Coeff& a) const { return a == 0; }
    bool is_one(const Coeff& a) const { return a == one(); }

    bool is_invertible(const Coeff& a) const {
        if (is_rationals()) return a != 0;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), modulus_.get_mpz_t());
        return g == 1;
    }

    Coeff inv(const Coeff& a) const {
        if (is_rationals()) {
            if (a == 0) throw ZeroDenominator("division by zero");
            return Coeff(1) / a;
        }
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(),
                       modulus_.get_mpz_t()) == 0)
            throw NonInvertible(a.get_num().get_str() +
                                " is not invertible mod " + modulus_.get_str());
        return Coeff(r);
    }

    Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

    Coeff pow(const Coeff& a, std::uint64_t e) const {
        Coeff r = one();
        Coeff base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Canonical literal: "p/q" over Q (q > 1 suppressed), plain integer over Z_m.
    std::string str(const Coeff& a) const { return a.get_str(); }

  private:
    Ring(RingKind kind, mpz_class modulus)
        : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    mpz_class modulus_;
};

}  // namespace keller
