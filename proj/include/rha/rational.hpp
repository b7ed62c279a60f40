#pragma once

// Exact rational scalar used throughout: all constants, valuations, delays
// and constraint coefficients are Rat. No floating point on decision paths.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rha {

using BigInt = mpz_class;

class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(int n) : q_(n) {}
    Rat(const BigInt& n) : q_(n) {}
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    // Canonical form: den > 0, gcd(|num|, den) = 1 (maintained by GMP).
    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigInt floor() const {
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    BigInt ceil() const {
        BigInt r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    // Fractional part in [0,1).
    Rat frac() const { return *this - Rat(floor()); }

    Rat operator-() const { Rat r; r.q_ = -q_; return r; }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    // Renders as "p" or "p/q".
    std::string str() const {
        std::ostringstream os;
        os << q_.get_num();
        if (q_.get_den() != 1) os << '/' << q_.get_den();
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

    // Parses "p", "-p", "p/q". Returns nullopt on malformed input.
    static std::optional<Rat> parse(std::string_view s) {
        auto is_int = [](std::string_view v) {
            if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
            if (v.empty()) return false;
            for (char c : v)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rat(BigInt(std::string(s)));
        }
        auto nums = s.substr(0, slash);
        auto dens = s.substr(slash + 1);
        if (!is_int(nums) || !is_int(dens)) return std::nullopt;
        BigInt den{std::string(dens)};
        if (den == 0) return std::nullopt;
        return Rat(BigInt(std::string(nums)), den);
    }

    static Rat pow2(long k) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
        return k >= 0 ? Rat(p) : Rat(1) / Rat(p);
    }

private:
    mpq_class q_;
};

// Raised when an internal consistency check fails (a bug, not user error).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rha
