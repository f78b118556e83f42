#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include "schurmzf/partition.hpp"

namespace schurmzf {

/// Exponent attached to a tableau box: exact positive integer or complex double.
/// A single evaluation never mixes the two kinds.
struct Exponent {
    enum class Kind { Exact, Approx };

    Kind kind = Kind::Exact;
    std::int64_t exact = 0;
    std::complex<double> approx{};

    static Exponent make_exact(std::int64_t k) {
        Exponent e;
        e.kind = Kind::Exact;
        e.exact = k;
        return e;
    }

    static Exponent make_approx(std::complex<double> z) {
        Exponent e;
        e.kind = Kind::Approx;
        e.approx = z;
        return e;
    }

    double real() const {
        return kind == Kind::Exact ? static_cast<double>(exact) : approx.real();
    }
};

/// Exact arithmetic over arbitrary-precision rationals; identity checks in this
/// mode demand difference literally zero.
struct ExactMode {
    using Scalar = mpq_class;
    using Exp = std::int64_t;

    static constexpr const char* name() { return "exact"; }
    static Scalar zero() { return mpq_class(0); }
    static Scalar one() { return mpq_class(1); }
    static bool is_zero(const Scalar& x) { return sgn(x) == 0; }
};

/// Complex double arithmetic with deterministic summation order.
struct FloatMode {
    using Scalar = std::complex<double>;
    using Exp = std::complex<double>;

    static constexpr const char* name() { return "float"; }
    static Scalar zero() { return {0.0, 0.0}; }
    static Scalar one() { return {1.0, 0.0}; }
    static bool is_zero(const Scalar& x) { return x == Scalar{0.0, 0.0}; }
};

// ---------------------------------------------------------------------------
// Deterministic string forms for reports.
// ---------------------------------------------------------------------------

/// Decimal expansion of a rational with a fixed number of fraction digits,
/// via integer long division (no floating point, bit-stable).
inline std::string decimal_string(const mpq_class& x, int digits = 24) {
    mpq_class v = x;
    std::string out;
    if (sgn(v) < 0) {
        out += '-';
        v = -v;
    }
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class intpart = num / den, rem = num % den;
    out += intpart.get_str();
    if (rem == 0) return out;
    out += '.';
    for (int k = 0; k < digits && rem != 0; ++k) {
        rem *= 10;
        mpz_class digit = rem / den;
        rem %= den;
        out += static_cast<char>('0' + digit.get_si());
    }
    if (rem != 0) out += "...";
    return out;
}

/// "p/q" (or "p" when q = 1).
inline std::string rational_string(const mpq_class& x) {
    return x.get_den() == 1 ? x.get_num().get_str() : x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string decimal_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string decimal_string(const std::complex<double>& z) {
    if (z.imag() == 0.0) return decimal_string(z.real());
    return decimal_string(z.real()) + (z.imag() < 0 ? "-" : "+") +
           decimal_string(std::abs(z.imag())) + "i";
}

// ---------------------------------------------------------------------------
// Mode-specific glue used by the verification layer.
// ---------------------------------------------------------------------------

template <class Mode>
struct ScalarOps;

template <>
struct ScalarOps<ExactMode> {
    static std::string decimal(const mpq_class& x) { return decimal_string(x); }
    static std::string exact(const mpq_class& x) { return rational_string(x); }
    static mpq_class abs_diff(const mpq_class& a, const mpq_class& b) { return abs(a - b); }
    static double magnitude(const mpq_class& x) { return std::abs(x.get_d()); }
};

template <>
struct ScalarOps<FloatMode> {
    static std::string decimal(const std::complex<double>& x) { return decimal_string(x); }
    static std::string exact(const std::complex<double>&) { return {}; }
    static double abs_diff(const std::complex<double>& a, const std::complex<double>& b) {
        return std::abs(a - b);
    }
    static double magnitude(const std::complex<double>& x) { return std::abs(x); }
};

}  // namespace schurmzf
