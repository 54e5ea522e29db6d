#pragma once

// Asymptotic data of genus-zero punctured curves, either in the
// symplectization of one ellipsoid boundary or in the completed cobordism
// between two nested ellipsoids, together with their Fredholm index and
// action defect.

#include "reeb/ellipsoid.hpp"

#include <variant>
#include <vector>

namespace reeb {

class CobordismData {
public:
    /// Requires inner.a < outer.a and inner.b < outer.b.
    static CobordismData make(Ellipsoid inner, Ellipsoid outer);

    /// A cobordism arising from a symplectic embedding rather than an
    /// inclusion; the parameters need not be nested.
    static CobordismData from_embedding(Ellipsoid inner, Ellipsoid outer);

    const Ellipsoid& inner() const { return inner_; }
    const Ellipsoid& outer() const { return outer_; }
    bool nested() const { return nested_; }

    bool operator==(const CobordismData&) const = default;

private:
    CobordismData(Ellipsoid inner, Ellipsoid outer, bool nested)
        : inner_(std::move(inner)), outer_(std::move(outer)), nested_(nested) {}

    Ellipsoid inner_;
    Ellipsoid outer_;
    bool nested_ = true;
};

struct Symplectization {
    Ellipsoid ellipsoid;
    bool operator==(const Symplectization&) const = default;
};

using Setting = std::variant<Symplectization, CobordismData>;

const Ellipsoid& positive_boundary(const Setting& s);
const Ellipsoid& negative_boundary(const Setting& s);
bool is_symplectization(const Setting& s);

using OrbitMultiset = std::vector<ReebOrbit>;

/// Sorts descending by (generator, multiplicity).
void canonicalize(OrbitMultiset& orbits);

struct AsymptoticData {
    Setting setting;
    OrbitMultiset positives;
    OrbitMultiset negatives;

    /// Canonicalizes both multisets and rejects data without a positive
    /// puncture (ruled out by Stokes).
    static AsymptoticData make(Setting setting, OrbitMultiset positives, OrbitMultiset negatives);

    std::size_t puncture_count() const { return positives.size() + negatives.size(); }
    bool operator==(const AsymptoticData&) const = default;
};

/// A datum written as the degree-p cover of `underlying`.
struct SimpleDecomposition {
    AsymptoticData underlying;
    long degree = 1;
};

long fredholm_index(const AsymptoticData& d);
PerturbedRational action_defect(const AsymptoticData& d);

/// One positive and one negative end on the same orbit. Symplectization only.
bool is_trivial_cover(const AsymptoticData& d);

/// Scales every multiplicity by p; the puncture count is unchanged.
AsymptoticData cover(const AsymptoticData& d, long p);

/// Every way of writing d as cover(v, p), smallest degree first.
std::vector<SimpleDecomposition> decompositions(const AsymptoticData& d);

/// d admits some decomposition cover(v, p) with fredholm_index(v) >= 0.
bool passes_genericity(const AsymptoticData& d);

struct EnumerationCaps {
    long max_negative_punctures = 4;
    long max_total_multiplicity = 8;
};

/// All data with the single positive end `positive` whose negative ends
/// respect `caps` and whose action defect is nonnegative, ordered
/// lexicographically on the canonical negative multiset.
std::vector<AsymptoticData> enumerate_feasible(const Setting& setting, const ReebOrbit& positive,
                                               const EnumerationCaps& caps);

}  // namespace reeb
