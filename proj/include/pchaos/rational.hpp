#ifndef PCHAOS_RATIONAL_HPP
#define PCHAOS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pchaos {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Text form is "p/q" (the
/// denominator is printed even when it is 1); parse() accepts "p/q" or a bare
/// integer.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);

    static Rational parse(std::string_view text);
    /// 2^e for any integer e.
    static Rational pow2(long e);
    /// 3^e for any integer e.
    static Rational pow3(long e);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    mpz_class floor() const;

    std::string str() const;
    /// Truncated (toward zero) decimal expansion with `digits` fractional
    /// digits. Approximate by construction; for display only.
    std::string decimal(int digits) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& gmp() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    mpq_class v_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace pchaos

template <>
struct std::hash<pchaos::Rational> {
    std::size_t operator()(const pchaos::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};

#endif
