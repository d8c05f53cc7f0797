#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace tautilt {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit comfortably in 62 bits are
/// stored inline; anything larger is promoted to a GMP rational. The choice
/// of representation is canonical (a value is small iff it fits), so
/// equality never has to compare across representations.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v);             // NOLINT(google-explicit-constructor)
    Rational(long long v);        // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Parses "p", "-p" or "p/q" (decimal integers).
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;

    /// Small-representation accessors; only meaningful when is_small().
    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] std::int64_t small_num() const { return num_; }
    [[nodiscard]] std::int64_t small_den() const { return den_; }

    [[nodiscard]] std::string str() const;

    Rational operator-() const;
    [[nodiscard]] Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    void assign_big(const mpq_class& q);
    void assign_i128(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

/// Multiplies by the least common denominator and divides by the content,
/// i.e. returns the primitive integer multiple of a vector (up to sign).
/// The sign is normalised so the first nonzero entry is positive.
void make_primitive(Rational* first, std::size_t count);

}  // namespace tautilt
