#pragma once

// Exact arithmetic over Q extended by a formal positive infinitesimal.
//
// A PerturbedRational is base + eps * ε where ε > 0 is smaller than every
// positive rational. Values are kept to first order in ε; anything that
// would need the ε² term to decide a comparison raises SecondOrderAmbiguity.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reeb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a floor lands exactly on an integer with no ε to break the
/// tie, i.e. the caller supplied a rational ratio where an irrational one
/// is required.
class DegenerateTie : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a first-order comparison ties but the operands dropped ε²
/// terms, so the true order is undetermined by the stored data.
class SecondOrderAmbiguity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer floor_rational(const Rational& q);
bool is_integral(const Rational& q);

class PerturbedRational {
public:
    PerturbedRational() = default;
    PerturbedRational(Rational base, Rational eps = 0);
    PerturbedRational(long value) : PerturbedRational(Rational(value)) {}

    static PerturbedRational epsilon() { return {Rational(0), Rational(1)}; }

    const Rational& base() const { return base_; }
    const Rational& eps() const { return eps_; }
    bool carries_eps() const { return sgn(eps_) != 0; }

    /// True when this value was produced by dropping an ε² term.
    bool truncated() const { return truncated_; }

    int sign() const;

    PerturbedRational operator-() const;
    PerturbedRational& operator+=(const PerturbedRational& rhs);
    PerturbedRational& operator-=(const PerturbedRational& rhs);
    PerturbedRational& operator*=(const Rational& rhs);

    friend PerturbedRational operator+(PerturbedRational lhs, const PerturbedRational& rhs) { return lhs += rhs; }
    friend PerturbedRational operator-(PerturbedRational lhs, const PerturbedRational& rhs) { return lhs -= rhs; }
    friend PerturbedRational operator*(PerturbedRational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend PerturbedRational operator*(const Rational& lhs, PerturbedRational rhs) { return rhs *= lhs; }

    /// First-order product; ε² is dropped (and the result flagged truncated)
    /// when both factors carry ε.
    friend PerturbedRational operator*(const PerturbedRational& lhs, const PerturbedRational& rhs);

    /// Lexicographic on (base, eps). Throws SecondOrderAmbiguity on a
    /// first-order tie involving a truncated operand.
    friend std::strong_ordering operator<=>(const PerturbedRational& lhs, const PerturbedRational& rhs);
    friend bool operator==(const PerturbedRational& lhs, const PerturbedRational& rhs);

    /// Exact representation equality; never throws.
    bool same_representation(const PerturbedRational& other) const {
        return base_ == other.base_ && eps_ == other.eps_;
    }

private:
    PerturbedRational(Rational base, Rational eps, bool truncated);
    friend PerturbedRational divide(const PerturbedRational& n, const PerturbedRational& d);

    Rational base_{0};
    Rational eps_{0};
    bool truncated_ = false;
};

Integer floor_perturbed(const PerturbedRational& x);

/// (p + cε) / (r + dε) expanded to first order. The divisor must be
/// positive with nonzero base.
PerturbedRational divide(const PerturbedRational& n, const PerturbedRational& d);

std::string to_string(const PerturbedRational& x);
std::ostream& operator<<(std::ostream& os, const PerturbedRational& x);

}  // namespace reeb
