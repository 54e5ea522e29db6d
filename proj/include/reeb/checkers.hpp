#pragma once

// Hypothesis checks for the cylinder existence results, the odd-index
// Fibonacci obstruction family, and the five-ended area obstruction.

#include "reeb/curve_index.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reeb {

struct Condition {
    std::string id;
    bool holds = false;
    nlohmann::json values = nlohmann::json::object();
};

struct Verdict {
    bool applicable = false;
    std::optional<nlohmann::json> witness;
    std::vector<Condition> reasons;
};

/// k < b1/a1 and the outer orbit with CZ index CZ(alpha_1^k) is an iterate
/// alpha_2^l. Also records whether k = l + floor(l a2/b2).
Verdict check_theorem_main(const CobordismData& cob, long k);

/// CZ(alpha_1^k) = CZ(alpha_1^{k-1}) + 2 and CZ(alpha_2^l) = CZ(alpha_1^k) for some l. Needs k >= 2.
Verdict check_theorem_alt(const CobordismData& cob, long k);

/// g_0 = g_1 = 1, g_{n+2} = 3 g_{n+1} - g_n.
Integer fib_odd(long n);

struct NopeInstance {
    long n = 2;
    Rational c1;
    CobordismData cobordism;
    ReebOrbit inner_orbit;
    ReebOrbit outer_orbit;
    long inner_cz = 0;
    long outer_cz = 0;
    bool hypothesis_g_odd = false;
    bool cz_equal = false;
};

/// E1 = c1·E(1, (g_{n+2} - g_n)/(2 g_n) + ε) inside E2 = E(1, g_{n+2}/g_n + ε)
/// with the orbit pair alpha_1^{g_{n+2} - g_n}, alpha_2^{g_{n+2}}.
NopeInstance proposition_nope_instance(long n, const Rational& c1);

struct AreaObstruction {
    Rational c;
    AsymptoticData curve;
    PerturbedRational defect;
    bool obstructed = false;
};

/// Five positive ends on beta of E(c, c+ε), one negative end on alpha^12 of
/// E(1, 4+ε). A negative action defect rules the curve out.
AreaObstruction answer1_area_obstruction(const Rational& c);

}  // namespace reeb
