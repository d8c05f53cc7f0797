#include "tautilt/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "tautilt/error.hpp"

namespace tautilt {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits(i128 v) { return v > -static_cast<i128>(kSmallLimit) && v < static_cast<i128>(kSmallLimit); }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs64(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v); }

mpz_class mpz_from_i128(i128 v) {
    const bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_fits_small(const mpz_class& z) {
    return z.fits_slong_p() && z.get_si() > -kSmallLimit && z.get_si() < kSmallLimit;
}

}  // namespace

Rational::Rational(long v) : Rational(static_cast<long long>(v)) {}

Rational::Rational(long long v) {
    if (v > -kSmallLimit && v < kSmallLimit) {
        num_ = v;
    } else {
        assign_big(mpq_class(mpz_class(std::to_string(v))));
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw ContractViolation("exact-linalg", "rational with zero denominator");
    assign_i128(num, den);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("exact-linalg", "empty rational literal", 0, 0);
    const auto slash = s.find('/');
    try {
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(1);
        if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
        if (den == 0) throw ParseError("exact-linalg", "zero denominator in '" + s + "'", 0, 0);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("exact-linalg", "malformed rational '" + s + "'", 0, 0);
    }
}

void Rational::assign_big(const mpq_class& q) {
    if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }
}

void Rational::assign_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits(num) && fits(den)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
    } else {
        mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
        big_ = std::make_unique<mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ContractViolation("exact-linalg", "division by zero");
    if (big_) {
        Rational r;
        r.assign_big(mpq_class(1) / *big_);
        return r;
    }
    Rational r;
    r.assign_i128(den_, num_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            assign_i128(static_cast<i128>(num_) + o.num_, den_);
        } else {
            assign_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
        }
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (o.is_zero()) return *this;
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            assign_i128(static_cast<i128>(num_) - o.num_, den_);
        } else {
            assign_i128(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
        }
        return *this;
    }
    assign_big(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Rational();
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            const i128 p = static_cast<i128>(num_) * o.num_;
            if (fits(p)) {
                num_ = static_cast<std::int64_t>(p);
                return *this;
            }
            assign_i128(p, 1);
            return *this;
        }
        const std::uint64_t g1 = gcd64(uabs64(num_), static_cast<std::uint64_t>(o.den_));
        const std::uint64_t g2 = gcd64(uabs64(o.num_), static_cast<std::uint64_t>(den_));
        const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
        const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_i128(n, d);
        }
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

void make_primitive(Rational* first, std::size_t count) {
    bool all_small = true;
    std::size_t lead = count;
    for (std::size_t k = 0; k < count; ++k) {
        if (!first[k].is_small()) all_small = false;
        if (lead == count && !first[k].is_zero()) lead = k;
    }
    if (lead == count) return;
    if (all_small) {
        // lcm of denominators and gcd of numerators, both in 64-bit when possible
        i128 lcm = 1;
        std::uint64_t g = 0;
        bool overflow = false;
        for (std::size_t k = 0; k < count && !overflow; ++k) {
            if (first[k].is_zero()) continue;
            const std::uint64_t d = static_cast<std::uint64_t>(first[k].small_den());
            const std::uint64_t gg = gcd64(static_cast<std::uint64_t>(lcm), d);
            lcm = lcm / gg * d;
            if (lcm >= kSmallLimit) overflow = true;
            g = gcd64(g, uabs64(first[k].small_num()));
        }
        if (!overflow) {
            Rational scale(static_cast<long long>(lcm));
            scale /= Rational(static_cast<long long>(g));
            if (first[lead].sign() < 0) scale = -scale;
            if (!scale.is_one()) {
                for (std::size_t k = 0; k < count; ++k) {
                    if (!first[k].is_zero()) first[k] *= scale;
                }
            }
            return;
        }
    }
    mpz_class lcm(1);
    mpz_class g(0);
    for (std::size_t k = 0; k < count; ++k) {
        if (first[k].is_zero()) continue;
        const mpq_class q = first[k].to_mpq();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    mpq_class scale(lcm, g);
    scale.canonicalize();
    if (first[lead].sign() < 0) scale = -scale;
    const Rational s(scale);
    for (std::size_t k = 0; k < count; ++k) {
        if (!first[k].is_zero()) first[k] *= s;
    }
}

}  // namespace tautilt
