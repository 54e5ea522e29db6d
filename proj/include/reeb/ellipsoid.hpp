#pragma once

// Ellipsoids E(a, b) with a < b and their Reeb dynamics: the fast orbit α
// of period a, the slow orbit β of period b, and iterates of both.

#include "reeb/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reeb {

enum class Generator : std::uint8_t { fast = 0, slow = 1 };

std::string to_string(Generator g);

struct ReebOrbit {
    Generator generator = Generator::fast;
    long multiplicity = 1;

    static ReebOrbit alpha(long k) { return {Generator::fast, k}; }
    static ReebOrbit beta(long k) { return {Generator::slow, k}; }

    auto operator<=>(const ReebOrbit&) const = default;
};

std::string to_string(const ReebOrbit& o);

class Ellipsoid {
public:
    /// Throws std::invalid_argument unless 0 < a < b, and DegenerateTie when
    /// a/b carries no ε (some iterate would then have an exact-integer floor).
    static Ellipsoid make(PerturbedRational a, PerturbedRational b);

    const PerturbedRational& a() const { return a_; }
    const PerturbedRational& b() const { return b_; }

    /// c·E(a, b) = E(ca, cb).
    Ellipsoid scaled(const Rational& c) const;

    PerturbedRational action(const ReebOrbit& o) const;

    /// 2k + 2⌊k·a/b⌋ + 1 for α^k, 2k + 2⌊k·b/a⌋ + 1 for β^k.
    long cz_index(const ReebOrbit& o) const;

    /// (cz_index - 1) / 2, i.e. k + ⌊k·a/b⌋ or k + ⌊k·b/a⌋.
    long half_grading(const ReebOrbit& o) const;

    /// The first `count` orbits in increasing action (equivalently CZ) order.
    std::vector<ReebOrbit> spectrum(long count) const;

    /// The unique orbit with CZ index 2m + 1, read off the spectrum.
    ReebOrbit orbit_with_cz(long m) const;

    /// The same orbit found by scanning iterates of α and β directly.
    ReebOrbit orbit_with_cz_direct(long m) const;

    bool operator==(const Ellipsoid& other) const {
        return a_.same_representation(other.a_) && b_.same_representation(other.b_);
    }

private:
    Ellipsoid(PerturbedRational a, PerturbedRational b);

    PerturbedRational a_;
    PerturbedRational b_;
    PerturbedRational a_over_b_;
    PerturbedRational b_over_a_;
};

std::string to_string(const Ellipsoid& e);

}  // namespace reeb
