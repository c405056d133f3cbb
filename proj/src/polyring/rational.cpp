#include "xtp/polyring/rational.hpp"

#include <limits>
#include <stdexcept>

namespace xtp {
namespace {

constexpr std::int64_t kMin = -std::numeric_limits<std::int64_t>::max();

bool in_range(__int128 v) {
    return v >= kMin && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

mpz_class to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_class z = hi << 64;
    mpz_class lo;
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u));
    z += lo;
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(to_mpz(static_cast<std::int64_t>(num)), to_mpz(static_cast<std::int64_t>(den)));
    q.canonicalize();
    assign(std::move(q));
}

Rational::Rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    assign(std::move(c));
}

Rational::Rational(const mpz_class& z) { assign(mpq_class(z)); }

Rational& Rational::operator=(const Rational& o) {
    if (this != &o) {
        small_ = o.small_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

void Rational::assign(mpq_class&& q) {
    if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num_mpz_t()) != 0) {
        const long v = mpz_get_si(q.get_num_mpz_t());
        if (v >= kMin) {
            small_ = v;
            big_.reset();
            return;
        }
    }
    small_ = 0;
    if (big_) {
        *big_ = std::move(q);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

bool Rational::is_integer() const { return !big_ || big_->get_den() == 1; }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(small_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(small_); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(1); }

std::string Rational::str() const {
    if (big_) return big_->get_str(10);
    return std::to_string(small_);
}

std::size_t Rational::hash() const {
    if (!big_) return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
}

Rational Rational::operator-() const {
    if (!big_) return Rational(static_cast<long long>(-small_));
    return Rational(mpq_class(-*big_));
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        const __int128 s = static_cast<__int128>(small_) + o.small_;
        if (in_range(s)) {
            small_ = static_cast<std::int64_t>(s);
            return *this;
        }
        assign(mpq_class(to_mpz(s)));
        return *this;
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        const __int128 s = static_cast<__int128>(small_) - o.small_;
        if (in_range(s)) {
            small_ = static_cast<std::int64_t>(s);
            return *this;
        }
        assign(mpq_class(to_mpz(s)));
        return *this;
    }
    assign(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        const __int128 p = static_cast<__int128>(small_) * o.small_;
        if (in_range(p)) {
            small_ = static_cast<std::int64_t>(p);
            return *this;
        }
        assign(mpq_class(to_mpz(p)));
        return *this;
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_ && o.small_ != 0 && small_ % o.small_ == 0) {
        small_ /= o.small_;
        return *this;
    }
    assign(to_mpq() / o.to_mpq());
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_) {
        const __int128 p = static_cast<__int128>(a.small_) * b.small_;
        const __int128 s = p + small_;
        // |p| < 2^126 so the sum cannot wrap.
        if (in_range(s)) {
            small_ = static_cast<std::int64_t>(s);
            return;
        }
        assign(mpq_class(to_mpz(s)));
        return;
    }
    assign(to_mpq() + a.to_mpq() * b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (!a.big_ || !b.big_) return false;  // canonical storage differs
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace xtp
