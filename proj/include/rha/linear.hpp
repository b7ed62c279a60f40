#pragma once

// Linear constraints over named variables: sum of coeff*var {<=|<|=} bound.
// Inputs with >= / > are normalized by negating coefficients, so only the
// three relations below exist in stored form.

#include "rha/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace rha {

enum class Rel { Le, Lt, Eq };

inline const char* rel_str(Rel r) {
    switch (r) {
        case Rel::Le: return "<=";
        case Rel::Lt: return "<";
        case Rel::Eq: return "=";
    }
    return "?";
}

using LinExpr = std::map<std::string, Rat>;  // var -> coefficient, no zeros

struct LinConstraint {
    LinExpr coeffs;
    Rel rel = Rel::Le;
    Rat bound;

    LinConstraint() = default;
    LinConstraint(LinExpr c, Rel r, Rat b)
        : coeffs(std::move(c)), rel(r), bound(std::move(b)) {
        drop_zero_coeffs();
    }

    static LinConstraint upper(const std::string& var, Rat b, bool strict) {
        return LinConstraint({{var, Rat(1)}}, strict ? Rel::Lt : Rel::Le, std::move(b));
    }
    static LinConstraint lower(const std::string& var, Rat b, bool strict) {
        return LinConstraint({{var, Rat(-1)}}, strict ? Rel::Lt : Rel::Le, -b);
    }
    static LinConstraint equal(const std::string& var, Rat b) {
        return LinConstraint({{var, Rat(1)}}, Rel::Eq, std::move(b));
    }
    // Canonical unsatisfiable residual: 0 < 0.
    static LinConstraint falsum() { return LinConstraint({}, Rel::Lt, Rat(0)); }

    bool is_residual() const { return coeffs.empty(); }

    // For a residual constraint, its truth value.
    bool residual_true() const {
        switch (rel) {
            case Rel::Le: return Rat(0) <= bound;
            case Rel::Lt: return Rat(0) < bound;
            case Rel::Eq: return bound.is_zero();
        }
        return false;
    }

    Rat coeff(const std::string& var) const {
        auto it = coeffs.find(var);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    bool satisfied_by(const std::map<std::string, Rat>& point) const {
        Rat lhs(0);
        for (const auto& [v, c] : coeffs) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("satisfied_by: missing variable " + v);
            lhs += c * it->second;
        }
        switch (rel) {
            case Rel::Le: return lhs <= bound;
            case Rel::Lt: return lhs < bound;
            case Rel::Eq: return lhs == bound;
        }
        return false;
    }

    // Scale to integer coefficients with gcd 1; positive scale only, except
    // equalities where the leading coefficient sign is also normalized.
    void normalize() {
        drop_zero_coeffs();
        if (coeffs.empty()) {
            // Residual: normalize bound to sign only, preserving truth.
            if (rel == Rel::Eq) {
                bound = bound.is_zero() ? Rat(0) : Rat(1);
            } else {
                bound = Rat(bound.sign());
            }
            return;
        }
        BigInt den_lcm = 1;
        for (const auto& [v, c] : coeffs)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), bound.den().get_mpz_t());
        BigInt num_gcd = 0;
        for (const auto& [v, c] : coeffs) {
            BigInt scaled = c.num() * (den_lcm / c.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        if (!bound.is_zero()) {
            BigInt scaled = bound.num() * (den_lcm / bound.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        if (num_gcd == 0) num_gcd = 1;
        Rat scale = Rat(den_lcm) / Rat(num_gcd);
        if (rel == Rel::Eq && coeffs.begin()->second.sign() < 0) scale = -scale;
        for (auto& [v, c] : coeffs) c *= scale;
        bound *= scale;
    }

    std::string str() const {
        std::string out;
        bool first = true;
        for (const auto& [v, c] : coeffs) {
            if (first) {
                if (c == Rat(1)) out += v;
                else if (c == Rat(-1)) out += "-" + v;
                else out += c.str() + "*" + v;
                first = false;
            } else {
                if (c.sign() >= 0) out += " + ";
                else out += " - ";
                Rat a = c.sign() >= 0 ? c : -c;
                if (a == Rat(1)) out += v;
                else out += a.str() + "*" + v;
            }
        }
        if (first) out += "0";
        out += " ";
        out += rel_str(rel);
        out += " ";
        out += bound.str();
        return out;
    }

    friend bool operator==(const LinConstraint& a, const LinConstraint& b) {
        return a.rel == b.rel && a.bound == b.bound && a.coeffs == b.coeffs;
    }
    friend bool operator<(const LinConstraint& a, const LinConstraint& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        if (a.rel != b.rel) return static_cast<int>(a.rel) < static_cast<int>(b.rel);
        return a.bound < b.bound;
    }

private:
    void drop_zero_coeffs() {
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
    }
};

// Substitute var := expr + shift into c, exactly.
inline LinConstraint substitute(const LinConstraint& c, const std::string& var,
                                const LinExpr& expr, const Rat& shift) {
    auto it = c.coeffs.find(var);
    if (it == c.coeffs.end()) return c;
    Rat a = it->second;
    LinConstraint out = c;
    out.coeffs.erase(var);
    for (const auto& [v, k] : expr) {
        Rat nc = out.coeff(v) + a * k;
        if (nc.is_zero()) out.coeffs.erase(v);
        else out.coeffs[v] = nc;
    }
    out.bound -= a * shift;
    out.normalize();
    return out;
}

}  // namespace rha
