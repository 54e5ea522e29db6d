#include "reeb/curve_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reeb {

CobordismData CobordismData::make(Ellipsoid inner, Ellipsoid outer) {
    if (!(inner.a() < outer.a()) || !(inner.b() < outer.b())) {
        throw std::invalid_argument("cobordism needs a1 < a2 and b1 < b2, got " + to_string(inner) + " inside " +
                                    to_string(outer));
    }
    return {std::move(inner), std::move(outer), true};
}

CobordismData CobordismData::from_embedding(Ellipsoid inner, Ellipsoid outer) {
    return {std::move(inner), std::move(outer), false};
}

const Ellipsoid& positive_boundary(const Setting& s) {
    if (const auto* sym = std::get_if<Symplectization>(&s)) return sym->ellipsoid;
    return std::get<CobordismData>(s).outer();
}

const Ellipsoid& negative_boundary(const Setting& s) {
    if (const auto* sym = std::get_if<Symplectization>(&s)) return sym->ellipsoid;
    return std::get<CobordismData>(s).inner();
}

bool is_symplectization(const Setting& s) { return std::holds_alternative<Symplectization>(s); }

void canonicalize(OrbitMultiset& orbits) { std::sort(orbits.begin(), orbits.end(), std::greater<>()); }

AsymptoticData AsymptoticData::make(Setting setting, OrbitMultiset positives, OrbitMultiset negatives) {
    if (positives.empty()) throw std::invalid_argument("asymptotic data needs at least one positive puncture");
    for (const auto* side : {&positives, &negatives}) {
        for (const auto& o : *side) {
            if (o.multiplicity < 1) throw std::invalid_argument("orbit multiplicity must be >= 1");
        }
    }
    canonicalize(positives);
    canonicalize(negatives);
    return {std::move(setting), std::move(positives), std::move(negatives)};
}

long fredholm_index(const AsymptoticData& d) {
    const Ellipsoid& top = positive_boundary(d.setting);
    const Ellipsoid& bottom = negative_boundary(d.setting);
    long bracket = static_cast<long>(d.positives.size()) - 1;
    for (const auto& o : d.positives) bracket += top.half_grading(o);
    for (const auto& o : d.negatives) bracket -= bottom.half_grading(o);
    return 2 * bracket;
}

PerturbedRational action_defect(const AsymptoticData& d) {
    const Ellipsoid& top = positive_boundary(d.setting);
    const Ellipsoid& bottom = negative_boundary(d.setting);
    PerturbedRational total;
    for (const auto& o : d.positives) total += top.action(o);
    for (const auto& o : d.negatives) total -= bottom.action(o);
    return total;
}

bool is_trivial_cover(const AsymptoticData& d) {
    if (!is_symplectization(d.setting)) throw std::invalid_argument("is_trivial_cover is defined in a symplectization");
    return d.positives.size() == 1 && d.negatives.size() == 1 && d.positives.front() == d.negatives.front();
}

AsymptoticData cover(const AsymptoticData& d, long p) {
    if (p < 1) throw std::invalid_argument("cover degree must be >= 1");
    AsymptoticData out = d;
    for (auto& o : out.positives) o.multiplicity *= p;
    for (auto& o : out.negatives) o.multiplicity *= p;
    return out;
}

std::vector<SimpleDecomposition> decompositions(const AsymptoticData& d) {
    long g = 0;
    for (const auto* side : {&d.positives, &d.negatives}) {
        for (const auto& o : *side) g = std::gcd(g, o.multiplicity);
    }
    std::vector<SimpleDecomposition> out;
    for (long p = 1; p <= g; ++p) {
        if (g % p != 0) continue;
        AsymptoticData v = d;
        for (auto& o : v.positives) o.multiplicity /= p;
        for (auto& o : v.negatives) o.multiplicity /= p;
        out.push_back({std::move(v), p});
    }
    return out;
}

bool passes_genericity(const AsymptoticData& d) {
    auto decs = decompositions(d);
    return std::any_of(decs.begin(), decs.end(),
                       [](const SimpleDecomposition& s) { return fredholm_index(s.underlying) >= 0; });
}

namespace {

struct FeasibleSearch {
    const Setting& setting;
    const ReebOrbit& positive;
    const EnumerationCaps& caps;
    PerturbedRational budget;
    std::vector<std::pair<ReebOrbit, PerturbedRational>> candidates;  // ascending
    std::vector<AsymptoticData> results;
    OrbitMultiset current;

    void run(std::size_t max_index, const PerturbedRational& spent, long multiplicity) {
        results.push_back({setting, {positive}, current});
        if (static_cast<long>(current.size()) >= caps.max_negative_punctures) return;
        for (std::size_t i = 0; i <= max_index && i < candidates.size(); ++i) {
            const auto& [orbit, action] = candidates[i];
            if (multiplicity + orbit.multiplicity > caps.max_total_multiplicity) continue;
            PerturbedRational next = spent + action;
            if (next > budget) continue;
            current.push_back(orbit);
            run(i, next, multiplicity + orbit.multiplicity);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<AsymptoticData> enumerate_feasible(const Setting& setting, const ReebOrbit& positive,
                                               const EnumerationCaps& caps) {
    if (caps.max_negative_punctures < 0 || caps.max_total_multiplicity < 0) {
        throw std::invalid_argument("enumeration caps must be nonnegative");
    }
    FeasibleSearch search{setting, positive, caps, positive_boundary(setting).action(positive), {}, {}, {}};
    const Ellipsoid& bottom = negative_boundary(setting);
    for (Generator g : {Generator::fast, Generator::slow}) {
        for (long k = 1; k <= caps.max_total_multiplicity; ++k) {
            ReebOrbit o{g, k};
            PerturbedRational act = bottom.action(o);
            if (act > search.budget) break;
            search.candidates.emplace_back(o, std::move(act));
        }
    }
    search.run(search.candidates.size(), PerturbedRational{}, 0);
    return std::move(search.results);
}

}  // namespace reeb
