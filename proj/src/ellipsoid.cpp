#include "reeb/ellipsoid.hpp"

#include <stdexcept>

namespace reeb {

std::string to_string(Generator g) { return g == Generator::fast ? "alpha" : "beta"; }

std::string to_string(const ReebOrbit& o) { return to_string(o.generator) + "^" + std::to_string(o.multiplicity); }

Ellipsoid::Ellipsoid(PerturbedRational a, PerturbedRational b)
    : a_(std::move(a)), b_(std::move(b)), a_over_b_(divide(a_, b_)), b_over_a_(divide(b_, a_)) {}

Ellipsoid Ellipsoid::make(PerturbedRational a, PerturbedRational b) {
    if (a.sign() <= 0) throw std::invalid_argument("ellipsoid parameter a must be positive, got " + to_string(a));
    if (!(a < b)) throw std::invalid_argument("ellipsoid requires a < b, got a = " + to_string(a) + ", b = " + to_string(b));
    Ellipsoid e(std::move(a), std::move(b));
    if (!e.a_over_b_.carries_eps()) {
        throw DegenerateTie("ellipsoid ratio a/b = " + e.a_over_b_.base().get_str() + " is rational; put ε on a or b");
    }
    return e;
}

Ellipsoid Ellipsoid::scaled(const Rational& c) const {
    if (sgn(c) <= 0) throw std::invalid_argument("scale factor must be positive");
    return Ellipsoid(a_ * c, b_ * c);
}

PerturbedRational Ellipsoid::action(const ReebOrbit& o) const {
    return (o.generator == Generator::fast ? a_ : b_) * Rational(o.multiplicity);
}

long Ellipsoid::half_grading(const ReebOrbit& o) const {
    if (o.multiplicity < 1) throw std::invalid_argument("orbit multiplicity must be >= 1");
    const auto& ratio = o.generator == Generator::fast ? a_over_b_ : b_over_a_;
    Integer fl = floor_perturbed(ratio * Rational(o.multiplicity));
    return o.multiplicity + fl.get_si();
}

long Ellipsoid::cz_index(const ReebOrbit& o) const { return 2 * half_grading(o) + 1; }

std::vector<ReebOrbit> Ellipsoid::spectrum(long count) const {
    if (count < 1) throw std::invalid_argument("spectrum count must be >= 1");
    std::vector<ReebOrbit> out;
    out.reserve(static_cast<std::size_t>(count));
    long i = 1;
    long j = 1;
    PerturbedRational next_alpha = a_;
    PerturbedRational next_beta = b_;
    while (static_cast<long>(out.size()) < count) {
        auto c = next_alpha <=> next_beta;
        if (c == 0) throw DegenerateTie("alpha^" + std::to_string(i) + " and beta^" + std::to_string(j) + " share an action");
        if (c < 0) {
            out.push_back(ReebOrbit::alpha(i++));
            next_alpha += a_;
        } else {
            out.push_back(ReebOrbit::beta(j++));
            next_beta += b_;
        }
    }
    return out;
}

ReebOrbit Ellipsoid::orbit_with_cz(long m) const {
    if (m < 1) throw std::invalid_argument("orbit_with_cz needs m >= 1");
    return spectrum(m).back();
}

ReebOrbit Ellipsoid::orbit_with_cz_direct(long m) const {
    if (m < 1) throw std::invalid_argument("orbit_with_cz needs m >= 1");
    // half_grading is strictly increasing in multiplicity and at least the
    // multiplicity, so neither scan passes m.
    for (Generator g : {Generator::fast, Generator::slow}) {
        for (long k = 1; k <= m; ++k) {
            long h = half_grading({g, k});
            if (h == m) return {g, k};
            if (h > m) break;
        }
    }
    throw std::logic_error("no orbit with CZ index " + std::to_string(2 * m + 1));
}

std::string to_string(const Ellipsoid& e) { return "E(" + to_string(e.a()) + ", " + to_string(e.b()) + ")"; }

}  // namespace reeb
