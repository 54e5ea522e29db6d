#include "reeb/checkers.hpp"

#include "reeb/json_io.hpp"

#include <stdexcept>

namespace reeb {

namespace {

Verdict conclude(std::vector<Condition> reasons, std::optional<Json> witness) {
    Verdict v;
    v.applicable = true;
    for (const auto& c : reasons) v.applicable = v.applicable && c.holds;
    v.reasons = std::move(reasons);
    if (v.applicable) v.witness = std::move(witness);
    return v;
}

Condition nested_condition(const CobordismData& cob) {
    return {"nested", cob.nested(), {{"inner", to_json(cob.inner())}, {"outer", to_json(cob.outer())}}};
}

long to_long(const Integer& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit a machine integer");
    return z.get_si();
}

}  // namespace

Verdict check_theorem_main(const CobordismData& cob, long k) {
    if (k < 1) throw std::invalid_argument("check_theorem_main needs k >= 1");
    const Ellipsoid& inner = cob.inner();
    const Ellipsoid& outer = cob.outer();
    std::vector<Condition> reasons;
    reasons.push_back(nested_condition(cob));

    bool below = inner.a() * Rational(k) < inner.b();
    reasons.push_back({"k_below_ratio", below, {{"k", k}, {"b1_over_a1", to_json(divide(inner.b(), inner.a()))}}});

    long m = inner.half_grading(ReebOrbit::alpha(k));
    ReebOrbit match = outer.orbit_with_cz(m);
    bool fast = match.generator == Generator::fast;
    reasons.push_back({"matching_orbit_fast", fast, {{"cz", 2 * m + 1}, {"matching_orbit", to_json(match)}}});

    std::optional<Json> witness;
    if (fast) {
        long l = match.multiplicity;
        long rhs = outer.half_grading(match);
        reasons.push_back({"l_k_relation",
                           rhs == k,
                           {{"k", k},
                            {"l", l},
                            {"l_plus_floor", rhs},
                            {"cz_inner", inner.cz_index(ReebOrbit::alpha(k))},
                            {"cz_outer", outer.cz_index(match)}}});
        witness = Json{{"l", l}};
    } else {
        reasons.push_back({"l_k_relation", false, {{"k", k}, {"l", nullptr}}});
    }
    return conclude(std::move(reasons), std::move(witness));
}

Verdict check_theorem_alt(const CobordismData& cob, long k) {
    if (k < 2) throw std::invalid_argument("check_theorem_alt needs k >= 2");
    const Ellipsoid& inner = cob.inner();
    const Ellipsoid& outer = cob.outer();
    std::vector<Condition> reasons;
    reasons.push_back(nested_condition(cob));

    long cz_k = inner.cz_index(ReebOrbit::alpha(k));
    long cz_prev = inner.cz_index(ReebOrbit::alpha(k - 1));
    reasons.push_back({"cz_step", cz_k == cz_prev + 2, {{"cz_k", cz_k}, {"cz_k_minus_1", cz_prev}}});

    ReebOrbit match = outer.orbit_with_cz((cz_k - 1) / 2);
    bool fast = match.generator == Generator::fast;
    reasons.push_back({"matching_orbit_fast", fast, {{"cz", cz_k}, {"matching_orbit", to_json(match)}}});

    std::optional<Json> witness;
    if (fast) witness = Json{{"l", match.multiplicity}};
    return conclude(std::move(reasons), std::move(witness));
}

Integer fib_odd(long n) {
    if (n < 0) throw std::invalid_argument("fib_odd needs n >= 0");
    Integer prev = 1;
    Integer cur = 1;
    for (long i = 1; i < n; ++i) {
        Integer next = 3 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

NopeInstance proposition_nope_instance(long n, const Rational& c1) {
    if (n < 2) throw std::invalid_argument("proposition_nope_instance needs n >= 2");
    if (sgn(c1) <= 0 || c1 >= 1) throw std::invalid_argument("c1 must lie in (0, 1)");
    Integer g_n = fib_odd(n);
    Integer g_next = fib_odd(n + 1);
    Integer g_far = fib_odd(n + 2);

    PerturbedRational eps = PerturbedRational::epsilon();
    Ellipsoid inner_unscaled =
        Ellipsoid::make(PerturbedRational(1), PerturbedRational(make_rational(g_far - g_n, 2 * g_n)) + eps);
    Ellipsoid outer = Ellipsoid::make(PerturbedRational(1), PerturbedRational(make_rational(g_far, g_n)) + eps);

    NopeInstance out{n,
                     c1,
                     CobordismData::make(inner_unscaled.scaled(c1), outer),
                     ReebOrbit::alpha(to_long(g_far - g_n, "g_{n+2} - g_n")),
                     ReebOrbit::alpha(to_long(g_far, "g_{n+2}"))};
    out.inner_cz = out.cobordism.inner().cz_index(out.inner_orbit);
    out.outer_cz = out.cobordism.outer().cz_index(out.outer_orbit);
    out.hypothesis_g_odd = mpz_odd_p(g_next.get_mpz_t()) != 0;
    out.cz_equal = out.inner_cz == out.outer_cz;
    return out;
}

AreaObstruction answer1_area_obstruction(const Rational& c) {
    if (sgn(c) <= 0) throw std::invalid_argument("answer1 needs c > 0");
    PerturbedRational eps = PerturbedRational::epsilon();
    Ellipsoid outer = Ellipsoid::make(PerturbedRational(c), PerturbedRational(c) + eps);
    Ellipsoid inner = Ellipsoid::make(PerturbedRational(1), PerturbedRational(4) + eps);
    auto curve = AsymptoticData::make(CobordismData::from_embedding(inner, outer), OrbitMultiset(5, ReebOrbit::beta(1)),
                                      {ReebOrbit::alpha(12)});
    auto defect = action_defect(curve);
    bool obstructed = defect.sign() < 0;
    return {c, std::move(curve), std::move(defect), obstructed};
}

}  // namespace reeb
