#pragma once

// Skeletons of holomorphic buildings in a completed ellipsoid cobordism:
// symplectization levels over the inner boundary, one cobordism level,
// symplectization levels over the outer boundary. Levels are listed from
// the bottom up.

#include "reeb/curve_index.hpp"

#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reeb {

using Level = std::vector<AsymptoticData>;

struct Building {
    CobordismData cobordism;
    std::vector<Level> lower_levels;  // symplectization of the inner boundary
    Level middle_level;               // the cobordism itself
    std::vector<Level> upper_levels;  // symplectization of the outer boundary
    ReebOrbit bottom;                 // unmatched negative end on the inner boundary
    ReebOrbit top;                    // unmatched positive end on the outer boundary

    std::size_t curve_count() const;
    bool operator==(const Building&) const = default;
};

enum class LevelKind { lower, middle, upper };

std::string to_string(LevelKind kind);

struct CurveRecord {
    LevelKind kind = LevelKind::middle;
    std::size_t level = 0;  // position counted from the bottom of the building
    std::size_t position = 0;
    long index = 0;
    PerturbedRational action_defect;
    bool trivial_cover = false;
    bool generic = true;  // only meaningful for cobordism curves
};

struct Violation {
    std::string id;
    std::string detail;
    bool operator==(const Violation&) const = default;
};

struct BuildingDiagnostics {
    std::vector<CurveRecord> curves;
    long total_index = 0;
    long euler_characteristic = 0;
    bool connected = false;
    bool cylindrical = false;
    std::vector<Violation> violations;

    /// Violations that make the level structure itself ill-formed.
    bool structurally_valid() const;
};

class InvalidBuilding : public std::invalid_argument {
public:
    explicit InvalidBuilding(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

BuildingDiagnostics validate(const Building& b);

/// Sum of the Fredholm indices of all curves. Throws InvalidBuilding when
/// the levels do not match up.
long building_index(const Building& b);

struct BuildingCaps {
    long max_levels_per_side = 3;
    long max_multiplicity = 12;  // bound on the total multiplicity crossing any level boundary
};

struct CylindricalSearchOptions {
    unsigned jobs = 1;
    const std::atomic<bool>* cancel = nullptr;
};

struct CylindricalSearchResult {
    std::vector<Building> buildings;
    bool cap_hit = false;      // some branch was cut by a cap rather than by action
    bool interrupted = false;  // cancel flag observed; results are partial
    std::size_t nodes = 0;
};

/// All index-0 cylindrical buildings from alpha_1^k (bottom) to alpha_2^l
/// (top) within `caps`, with every curve of nonnegative action defect,
/// every cobordism curve passing the genericity filter, and no levels made
/// solely of trivial cylinders. Output order is deterministic.
CylindricalSearchResult enumerate_cylindrical(const CobordismData& cob, long k, long l, const BuildingCaps& caps,
                                              const CylindricalSearchOptions& options = {});

}  // namespace reeb
