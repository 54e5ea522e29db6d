// One line per acceptance criterion. Exit status is nonzero if any fails.

#include "reeb/building.hpp"
#include "reeb/checkers.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace reeb;
using namespace reeb::testing;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

std::string show(const AsymptoticData& d) {
    std::ostringstream s;
    s << "{";
    for (const auto& o : d.positives) s << " " << to_string(o);
    s << " ->";
    for (const auto& o : d.negatives) s << " " << to_string(o);
    s << " }";
    return s.str();
}

Result cz_coincidence() {
    auto outer = ell(pr(1), pr(13, 2) + kEps);
    long outer_cz = outer.cz_index(ReebOrbit::alpha(13));
    Result r{outer_cz == 29, "outer CZ(alpha^13) = " + std::to_string(outer_cz)};
    for (auto lambda : {Rational(1, 10), Rational(1, 7), Rational(1, 3)}) {
        auto inner = ell(pr(1), pr(4) + kEps).scaled(lambda);
        long cz = inner.cz_index(ReebOrbit::alpha(12));
        r.detail += ", lambda " + to_string(lambda) + ": " + std::to_string(cz);
        r.pass = r.pass && cz == 29 && CobordismData::make(inner, outer).nested();
    }
    return r;
}

Result area_sweep() {
    int wrong = 0, obstructed = 0;
    for (long i = 1; i <= 50; ++i) {
        Rational c = make_rational(4 * i, 50);
        auto a = answer1_area_obstruction(c);
        obstructed += a.obstructed;
        if (a.obstructed != (c < Rational(12, 5))) ++wrong;
    }
    return {wrong == 0, std::to_string(obstructed) + " of 50 obstructed, " + std::to_string(wrong) + " mismatches"};
}

Result nope_family() {
    Result r;
    int odd = 0;
    for (long n = 2; n <= 8; ++n) {
        auto inst = proposition_nope_instance(n, Rational(9, 10));
        if (inst.hypothesis_g_odd) {
            ++odd;
            if (!inst.cz_equal) r.pass = false;
        }
        if (n == 2 && (inst.inner_cz != 29 || inst.outer_cz != 29)) r.pass = false;
        if (n == 3 && (inst.inner_cz != 77 || inst.outer_cz != 77)) r.pass = false;
    }
    auto two = proposition_nope_instance(2, Rational(9, 10));
    auto three = proposition_nope_instance(3, Rational(9, 10));
    r.detail = std::to_string(odd) + "/7 odd, CZ n=2: " + std::to_string(two.inner_cz) + "/" +
               std::to_string(two.outer_cz) + ", n=3: " + std::to_string(three.inner_cz) + "/" +
               std::to_string(three.outer_cz);
    return r;
}

Result spectrum_order() {
    Gen gen(20240);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        auto e = gen.ellipsoid();
        auto orbits = e.spectrum(1000);
        for (std::size_t j = 0; j < orbits.size(); ++j) {
            if (e.cz_index(orbits[j]) != static_cast<long>(2 * j + 3) || cz_oracle(e, orbits[j]) != e.cz_index(orbits[j]))
                ++bad;
            if (j > 0 && !(e.action(orbits[j - 1]) < e.action(orbits[j]))) ++bad;
        }
    }
    return {bad == 0, "100 ellipsoids x 1000 orbits, " + std::to_string(bad) + " violations"};
}

std::vector<Ellipsoid> lemma_battery() {
    return {ell(pr(1), pr(5, 2) + kEps),         ell(pr(1), pr(13, 2) + kEps),     ell(pr(2), pr(13) + kEps),
            ell(pr(5), pr(11) + kEps),           ell(pr(3), pr(4) - kEps),         ell(pr(1, 1, 1), pr(7, 5)),
            ell(pr(7, 3), pr(9) + kEps * Rational(2)), ell(pr(1), pr(11, 10) + kEps), ell(pr(2, 1, -1), pr(17, 3)),
            ell(pr(1), pr(3) - kEps)};
}

std::vector<ReebOrbit> orbits_up_to(const Ellipsoid& e, const PerturbedRational& bound) {
    std::vector<ReebOrbit> out;
    for (long count = 16;; count *= 2) {
        auto s = e.spectrum(count);
        if (e.action(s.back()) > bound) {
            for (const auto& o : s)
                if (e.action(o) <= bound) out.push_back(o);
            return out;
        }
    }
}

struct LemmaCounts {
    long data = 0;
    long odd_or_negative = 0;
    long zero_not_trivial = 0;
    long trivial_not_zero = 0;
    long cz_order = 0;
    long zero_not_branched_trivial = 0;
    std::string first_counterexample;
};

Result single_positive_lemma() {
    LemmaCounts c;
    for (const auto& e : lemma_battery()) {
        Setting s = Symplectization{e};
        for (const auto& positive : orbits_up_to(e, e.a() * Rational(8))) {
            for (const auto& d : enumerate_feasible(s, positive, {6, 10})) {
                ++c.data;
                long idx = fredholm_index(d);
                if (idx < 0 || idx % 2 != 0) ++c.odd_or_negative;
                bool trivial = is_trivial_cover(d);
                if (idx == 0 && !trivial) {
                    ++c.zero_not_trivial;
                    if (c.first_counterexample.empty())
                        c.first_counterexample = show(d) + " on " + to_string(e);
                    // Weaker form: zero action and every negative end on the positive end's simple orbit.
                    long mult = 0;
                    bool same = action_defect(d) == PerturbedRational(0);
                    for (const auto& o : d.negatives) {
                        same = same && o.generator == positive.generator;
                        mult += o.multiplicity;
                    }
                    if (!same || mult != positive.multiplicity) ++c.zero_not_branched_trivial;
                }
                if (trivial && idx != 0) ++c.trivial_not_zero;
                for (const auto& o : d.negatives)
                    if (e.cz_index(o) > e.cz_index(positive)) ++c.cz_order;
            }
        }
    }
    Result r;
    r.pass = c.odd_or_negative == 0 && c.zero_not_trivial == 0 && c.trivial_not_zero == 0 && c.cz_order == 0;
    r.detail = std::to_string(c.data) + " data; odd/negative index " + std::to_string(c.odd_or_negative) +
               ", index 0 but not trivial " + std::to_string(c.zero_not_trivial) + ", trivial but index != 0 " +
               std::to_string(c.trivial_not_zero) + ", CZ order " + std::to_string(c.cz_order);
    if (!c.first_counterexample.empty()) {
        r.detail += "; first counterexample " + c.first_counterexample +
                    " (branched cover of a trivial cylinder); index-0 data that are not such covers: " +
                    std::to_string(c.zero_not_branched_trivial);
    }
    return r;
}

std::vector<std::pair<CobordismData, long>> main_battery(std::size_t count) {
    std::vector<std::pair<CobordismData, long>> out;
    out.emplace_back(CobordismData::make(ell(pr(1), pr(5) + kEps), ell(pr(2), pr(13) + kEps)), 4);
    Gen gen(777);
    while (out.size() < count) {
        auto inner = gen.ellipsoid();
        auto outer = gen.ellipsoid();
        if (!(inner.a() < outer.a() && inner.b() < outer.b())) continue;
        auto cob = CobordismData::make(inner, outer);
        for (long k = 8; k >= 2; --k) {
            if (check_theorem_main(cob, k).applicable) {
                out.emplace_back(cob, k);
                break;
            }
        }
    }
    return out;
}

long floor_ratio(const Ellipsoid& e, long m) { return floor_perturbed(divide(e.a() * Rational(m), e.b())).get_si(); }

Result cobordism_lemma() {
    long simple = 0, beta_negative = 0, negative_cover = 0, identity_checks = 0, identity_fail = 0;
    for (const auto& [cob, k] : main_battery(10)) {
        long l = (*check_theorem_main(cob, k).witness)["l"];
        const auto& outer = cob.outer();
        long top_cz = outer.cz_index(ReebOrbit::alpha(l));
        for (long p = 1; p <= 4; ++p) {
            std::vector<ReebOrbit> tops;
            for (long r = 1; p * r <= l; ++r) tops.push_back(ReebOrbit::alpha(r));
            for (long r = 1; outer.cz_index(ReebOrbit::beta(p * r)) <= top_cz; ++r) tops.push_back(ReebOrbit::beta(r));
            for (const auto& top : tops) {
                // Index >= 0 leaves room for at most k negative multiplicity.
                for (const auto& v : enumerate_feasible(cob, top, {k, k})) {
                    if (fredholm_index(v) < 0) continue;
                    ++simple;
                    bool has_beta = false;
                    for (const auto& o : v.negatives) has_beta = has_beta || o.generator == Generator::slow;
                    if (has_beta) ++beta_negative;
                    if (fredholm_index(cover(v, p)) < 0) ++negative_cover;
                }
            }
            for (long s = 1; s <= l; ++s) {
                for (long r = 1; p * r <= k; ++r) {
                    auto cyl = AsymptoticData::make(cob, {ReebOrbit::alpha(s)}, {ReebOrbit::alpha(r)});
                    long lhs = fredholm_index(cover(cyl, p)) - p * fredholm_index(cyl);
                    long rhs = 2 * (floor_ratio(outer, p * s) - p * floor_ratio(outer, s));
                    ++identity_checks;
                    if (lhs != rhs || lhs < 0) ++identity_fail;
                }
            }
        }
    }
    bool pass = beta_negative == 0 && negative_cover == 0 && identity_fail == 0 && simple > 0;
    return {pass, std::to_string(simple) + " simple data; beta_1 negative ends " + std::to_string(beta_negative) +
                      ", negative covers " + std::to_string(negative_cover) + ", identity " +
                      std::to_string(identity_checks - identity_fail) + "/" + std::to_string(identity_checks)};
}

Result classification() {
    auto cob = CobordismData::make(ell(pr(1), pr(5) + kEps), ell(pr(2), pr(13) + kEps));
    auto start = std::chrono::steady_clock::now();
    auto r = enumerate_cylindrical(cob, 4, 4, {3, 12});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Building expected{cob,
                      {},
                      {AsymptoticData::make(cob, {ReebOrbit::alpha(4)}, {ReebOrbit::alpha(4)})},
                      {},
                      ReebOrbit::alpha(4),
                      ReebOrbit::alpha(4)};
    bool pass = r.buildings.size() == 1 && r.buildings[0] == expected && secs < 30 && !r.interrupted;
    std::ostringstream s;
    s << r.buildings.size() << " building(s), " << r.nodes << " nodes, " << secs << " s";
    return {pass, s.str()};
}

Result checker_coherence() {
    Gen gen(99);
    long applicable = 0, alt_fail = 0, lk_fail = 0, tried = 0;
    while (tried < 300) {
        auto inner = gen.ellipsoid();
        auto outer = gen.ellipsoid();
        if (!(inner.a() < outer.a() && inner.b() < outer.b())) continue;
        ++tried;
        auto cob = CobordismData::make(inner, outer);
        for (long k = 1; k <= 16; ++k) {
            auto v = check_theorem_main(cob, k);
            if (!v.applicable) continue;
            ++applicable;
            long l = (*v.witness)["l"];
            if (k != l + floor_ratio(outer, l)) ++lk_fail;
            if (k >= 2 && !check_theorem_alt(cob, k).applicable) ++alt_fail;
        }
    }
    return {alt_fail == 0 && lk_fail == 0 && applicable > 0,
            std::to_string(applicable) + " applicable (cob, k) over 300 cobordisms; alt failures " +
                std::to_string(alt_fail) + ", relation failures " + std::to_string(lk_fail)};
}

Result index_bounds() {
    long planes = 0, pairs = 0, bad = 0;
    for (const auto& e : lemma_battery()) {
        Setting s = Symplectization{e};
        auto orbits = orbits_up_to(e, e.a() * Rational(8));
        for (const auto& positive : orbits) {
            for (const auto& d : enumerate_feasible(s, positive, {6, 10})) {
                if (!d.negatives.empty()) continue;
                ++planes;
                if (fredholm_index(d) < 2) ++bad;
            }
        }
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            for (std::size_t j = i; j < orbits.size(); ++j) {
                ++pairs;
                if (fredholm_index(AsymptoticData::make(s, {orbits[i], orbits[j]}, {})) < 6) ++bad;
            }
        }
    }
    return {bad == 0 && planes > 0, std::to_string(planes) + " planes, " + std::to_string(pairs) +
                                         " two-positive data, " + std::to_string(bad) + " below bound"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"CZ coincidence alpha_1^12 / alpha_2^13", cz_coincidence},
        {"area obstruction threshold 5c >= 12", area_sweep},
        {"Fibonacci family CZ equality", nope_family},
        {"spectrum CZ and action order", spectrum_order},
        {"single positive puncture index lemma", single_positive_lemma},
        {"cobordism curves and covers", cobordism_lemma},
        {"building classification", classification},
        {"hypothesis checker coherence", checker_coherence},
        {"plane and two-positive index bounds", index_bounds},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failures += !r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << r.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
