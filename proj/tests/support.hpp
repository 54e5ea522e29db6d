#pragma once

// Test-only helpers: an independent floor/CZ oracle that substitutes a
// concrete tiny rational for ε, and seeded generators for property tests.

#include "reeb/curve_index.hpp"

#include <random>

namespace reeb::testing {

inline PerturbedRational pr(long num, long den = 1, long eps_num = 0, long eps_den = 1) {
    return {Rational(num, den), Rational(eps_num, eps_den)};
}

inline const PerturbedRational kEps = PerturbedRational::epsilon();

inline Ellipsoid ell(const PerturbedRational& a, const PerturbedRational& b) { return Ellipsoid::make(a, b); }

/// 10^-30: far below every gap between a ratio and the nearest integer
/// reachable by the parameters the tests use.
inline Rational tiny_epsilon() {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 30);
    return make_rational(1, den);
}

inline Rational substitute(const PerturbedRational& x, const Rational& eps0 = tiny_epsilon()) {
    return Rational(x.base() + x.eps() * eps0);
}

/// CZ index straight from the closed formula, evaluated on concrete rationals.
inline long cz_oracle(const Ellipsoid& e, const ReebOrbit& o) {
    Rational a = substitute(e.a());
    Rational b = substitute(e.b());
    Rational ratio = o.generator == Generator::fast ? Rational(a / b) : Rational(b / a);
    Rational scaled = ratio * o.multiplicity;
    return 2 * o.multiplicity + 2 * floor_rational(scaled).get_si() + 1;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long max_num, long max_den) { return make_rational(integer(1, max_num), integer(1, max_den)); }

    PerturbedRational perturbed(long max_num, long max_den) {
        Rational eps = coin() ? Rational(0) : make_rational(integer(-3, 3), integer(1, 3));
        return {integer(-1, 1) * rational(max_num, max_den), eps};
    }

    /// Random E(a, b) with a < b and ε carried by exactly one parameter.
    Ellipsoid ellipsoid() {
        Rational a = rational(30, 7);
        Rational ratio = 1 + rational(40, 9);
        Rational b = a * ratio;
        Rational eps = make_rational(integer(1, 3), integer(1, 2)) * (coin() ? 1 : -1);
        if (coin()) return Ellipsoid::make(PerturbedRational(a), PerturbedRational(b, eps));
        return Ellipsoid::make(PerturbedRational(a, eps), PerturbedRational(b));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace reeb::testing
