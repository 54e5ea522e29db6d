#include "reeb/building.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace reeb {

std::size_t Building::curve_count() const {
    std::size_t n = middle_level.size();
    for (const auto& l : lower_levels) n += l.size();
    for (const auto& l : upper_levels) n += l.size();
    return n;
}

std::string to_string(LevelKind kind) {
    switch (kind) {
        case LevelKind::lower: return "lower";
        case LevelKind::middle: return "middle";
        case LevelKind::upper: return "upper";
    }
    return "?";
}

namespace {

const char* const kStructural[] = {"setting_mismatch", "empty_middle_level", "matching", "bottom_mismatch",
                                   "top_mismatch"};

std::string describe(const OrbitMultiset& orbits) {
    std::string out = "{";
    for (std::size_t i = 0; i < orbits.size(); ++i) out += (i ? ", " : "") + to_string(orbits[i]);
    return out + "}";
}

struct LevelView {
    LevelKind kind;
    const Level* curves;
};

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

}  // namespace

InvalidBuilding::InvalidBuilding(std::vector<Violation> violations)
    : std::invalid_argument([&] {
          std::string msg = "invalid building:";
          for (const auto& v : violations) msg += " [" + v.id + "] " + v.detail + ";";
          return msg;
      }()),
      violations_(std::move(violations)) {}

bool BuildingDiagnostics::structurally_valid() const {
    return std::none_of(violations.begin(), violations.end(), [](const Violation& v) {
        return std::find(std::begin(kStructural), std::end(kStructural), v.id) != std::end(kStructural);
    });
}

BuildingDiagnostics validate(const Building& b) {
    BuildingDiagnostics diag;
    std::vector<LevelView> levels;
    for (const auto& l : b.lower_levels) levels.push_back({LevelKind::lower, &l});
    levels.push_back({LevelKind::middle, &b.middle_level});
    for (const auto& l : b.upper_levels) levels.push_back({LevelKind::upper, &l});

    if (b.middle_level.empty()) diag.violations.push_back({"empty_middle_level", "the cobordism level has no curves"});

    // Curve ids, in level order, for the connectivity check.
    std::vector<std::vector<std::size_t>> ids(levels.size());
    std::size_t next_id = 0;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto& [kind, curves] = levels[li];
        for (std::size_t ci = 0; ci < curves->size(); ++ci) {
            const AsymptoticData& c = (*curves)[ci];
            ids[li].push_back(next_id++);
            std::string where = to_string(kind) + " level " + std::to_string(li) + ", curve " + std::to_string(ci);

            bool setting_ok = kind == LevelKind::middle
                                  ? c.setting == Setting{b.cobordism}
                                  : c.setting == Setting{Symplectization{kind == LevelKind::lower ? b.cobordism.inner()
                                                                                                  : b.cobordism.outer()}};
            if (!setting_ok) {
                diag.violations.push_back({"setting_mismatch", where + " lives in the wrong target"});
                continue;
            }

            CurveRecord rec;
            rec.kind = kind;
            rec.level = li;
            rec.position = ci;
            rec.index = fredholm_index(c);
            rec.action_defect = action_defect(c);
            rec.trivial_cover = kind != LevelKind::middle && is_trivial_cover(c);
            rec.generic = kind != LevelKind::middle || passes_genericity(c);
            diag.total_index += rec.index;
            diag.euler_characteristic += 2 - static_cast<long>(c.puncture_count());

            if (c.positives.empty()) {
                diag.violations.push_back({"no_positive_puncture", where});
            } else if (c.positives.size() > 1) {
                diag.violations.push_back({"multiple_positive_punctures", where});
            }
            if (rec.action_defect.sign() < 0) {
                diag.violations.push_back({"action_infeasible", where + " has action defect " + to_string(rec.action_defect)});
            }
            diag.curves.push_back(std::move(rec));
        }
    }

    auto ends = [&](std::size_t li, bool positive) {
        std::vector<std::pair<ReebOrbit, std::size_t>> out;
        const Level& curves = *levels[li].curves;
        for (std::size_t ci = 0; ci < curves.size(); ++ci) {
            for (const auto& o : positive ? curves[ci].positives : curves[ci].negatives) out.emplace_back(o, ids[li][ci]);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto orbits_of = [](const std::vector<std::pair<ReebOrbit, std::size_t>>& e) {
        OrbitMultiset out;
        for (const auto& [o, id] : e) out.push_back(o);
        canonicalize(out);
        return out;
    };

    DisjointSets components(next_id);
    bool matched = true;
    for (std::size_t li = 0; li + 1 < levels.size(); ++li) {
        auto below = ends(li, true);
        auto above = ends(li + 1, false);
        if (orbits_of(below) != orbits_of(above)) {
            matched = false;
            diag.violations.push_back({"matching", "positive ends " + describe(orbits_of(below)) + " of level " +
                                                       std::to_string(li) + " vs negative ends " +
                                                       describe(orbits_of(above)) + " of level " +
                                                       std::to_string(li + 1)});
            continue;
        }
        for (std::size_t i = 0; i < below.size(); ++i) components.unite(below[i].second, above[i].second);
    }
    auto lowest = orbits_of(ends(0, false));
    if (lowest != OrbitMultiset{b.bottom}) {
        matched = false;
        diag.violations.push_back({"bottom_mismatch", "lowest negative ends " + describe(lowest) + ", expected {" +
                                                          to_string(b.bottom) + "}"});
    }
    auto highest = orbits_of(ends(levels.size() - 1, true));
    if (highest != OrbitMultiset{b.top}) {
        matched = false;
        diag.violations.push_back(
            {"top_mismatch", "highest positive ends " + describe(highest) + ", expected {" + to_string(b.top) + "}"});
    }

    std::set<std::size_t> roots;
    for (std::size_t id = 0; id < next_id; ++id) roots.insert(components.find(id));
    diag.connected = matched && roots.size() == 1;
    if (matched && !diag.connected) {
        diag.violations.push_back({"disconnected", std::to_string(roots.size()) + " components"});
    }
    diag.cylindrical = diag.connected && diag.euler_characteristic == 0 && diag.structurally_valid();
    return diag;
}

long building_index(const Building& b) {
    auto diag = validate(b);
    if (!diag.structurally_valid()) {
        std::vector<Violation> structural;
        for (const auto& v : diag.violations) {
            if (std::find(std::begin(kStructural), std::end(kStructural), v.id) != std::end(kStructural)) {
                structural.push_back(v);
            }
        }
        throw InvalidBuilding(std::move(structural));
    }
    return diag.total_index;
}

namespace {

struct Curve {
    ReebOrbit positive;
    OrbitMultiset negatives;  // canonical
    auto operator<=>(const Curve&) const = default;
};

using RawLevel = std::vector<Curve>;  // sorted

struct OrbitInfo {
    ReebOrbit orbit;
    PerturbedRational action;
};

// Orbits of one boundary with action within budget, ascending by (generator, multiplicity).
struct OrbitTable {
    const Ellipsoid* ellipsoid = nullptr;
    std::vector<OrbitInfo> orbits;
    std::vector<long> halves;
    std::map<ReebOrbit, std::size_t> position;

    OrbitTable(const Ellipsoid& e, const PerturbedRational& budget, long max_multiplicity) : ellipsoid(&e) {
        for (Generator g : {Generator::fast, Generator::slow}) {
            for (long m = 1; m <= max_multiplicity; ++m) {
                ReebOrbit o{g, m};
                auto act = e.action(o);
                if (act > budget) break;
                position[o] = orbits.size();
                orbits.push_back({o, std::move(act)});
                halves.push_back(e.half_grading(o));
            }
        }
    }

    const PerturbedRational& action(const ReebOrbit& o) const { return orbits.at(position.at(o)).action; }

    long half(const ReebOrbit& o) const { return halves.at(position.at(o)); }
};

class CylindricalSearch {
public:
    CylindricalSearch(const CobordismData& cob, long k, long l, const BuildingCaps& caps,
                      const CylindricalSearchOptions& options)
        : cob_(cob),
          bottom_(ReebOrbit::alpha(k)),
          top_(ReebOrbit::alpha(l)),
          caps_(caps),
          cancel_(options.cancel),
          budget_(cob.outer().action(top_)),
          inner_(cob.inner(), budget_, caps.max_multiplicity),
          outer_(cob.outer(), budget_, caps.max_multiplicity) {}

    struct Branch {
        CylindricalSearchResult result;
        std::vector<RawLevel> lower;
        RawLevel middle;
        std::vector<RawLevel> upper;
        long index = 0;
    };

    // Each task explores one first move out of the bottom frontier.
    std::vector<std::function<void(Branch&)>> root_tasks() {
        std::vector<std::function<void(Branch&)>> tasks;
        OrbitMultiset start{bottom_};
        if (bottom_.multiplicity > caps_.max_multiplicity || top_.multiplicity > caps_.max_multiplicity) return tasks;
        if (cob_.inner().action(bottom_) > budget_) return tasks;
        for (auto& level : next_levels(start, inner_, inner_, false)) {
            tasks.push_back([this, level = std::move(level)](Branch& br) {
                if (caps_.max_levels_per_side < 1) {
                    br.result.cap_hit = true;
                    return;
                }
                push_lower(br, level);
            });
        }
        for (auto& level : next_levels(start, inner_, outer_, true)) {
            tasks.push_back([this, level = std::move(level)](Branch& br) { push_middle(br, level); });
        }
        return tasks;
    }

    Building materialize(const Branch& br) const {
        Building b{cob_, {}, {}, {}, bottom_, top_};
        auto convert = [](const RawLevel& raw, const Setting& setting) {
            Level out;
            for (const auto& c : raw) out.push_back(AsymptoticData{setting, {c.positive}, c.negatives});
            return out;
        };
        Setting lower{Symplectization{cob_.inner()}};
        Setting upper{Symplectization{cob_.outer()}};
        for (const auto& l : br.lower) b.lower_levels.push_back(convert(l, lower));
        b.middle_level = convert(br.middle, Setting{cob_});
        for (const auto& l : br.upper) b.upper_levels.push_back(convert(l, upper));
        return b;
    }

private:
    bool cancelled(Branch& br) const {
        if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) {
            br.result.interrupted = true;
            return true;
        }
        return false;
    }

    static OrbitMultiset positives_of(const RawLevel& level) {
        OrbitMultiset out;
        for (const auto& c : level) out.push_back(c.positive);
        canonicalize(out);
        return out;
    }

    long curve_index(const Curve& c, const OrbitTable& neg, const OrbitTable& pos) const {
        long h = pos.half(c.positive);
        for (const auto& o : c.negatives) h -= neg.half(o);
        return 2 * h;
    }

    long level_index(const RawLevel& level, const OrbitTable& neg, const OrbitTable& pos) const {
        long total = 0;
        for (const auto& c : level) total += curve_index(c, neg, pos);
        return total;
    }

    bool generic(const Curve& c) const {
        long g = c.positive.multiplicity;
        for (const auto& o : c.negatives) g = std::gcd(g, o.multiplicity);
        for (long p = 1; p <= g; ++p) {
            if (g % p != 0) continue;
            long h = cob_.outer().half_grading({c.positive.generator, c.positive.multiplicity / p});
            for (const auto& o : c.negatives) h -= cob_.inner().half_grading({o.generator, o.multiplicity / p});
            if (h >= 0) return true;
        }
        return false;
    }

    void push_lower(Branch& br, const RawLevel& level) {
        br.lower.push_back(level);
        long idx = level_index(level, inner_, inner_);
        br.index += idx;
        explore_lower(br, positives_of(level));
        br.index -= idx;
        br.lower.pop_back();
    }

    void push_middle(Branch& br, const RawLevel& level) {
        br.middle = level;
        long idx = level_index(level, inner_, outer_);
        br.index += idx;
        // Symplectization curves above contribute nonnegative index.
        if (br.index <= 0) explore_upper(br, positives_of(level));
        br.index -= idx;
        br.middle.clear();
    }

    void push_upper(Branch& br, const RawLevel& level) {
        br.upper.push_back(level);
        long idx = level_index(level, outer_, outer_);
        br.index += idx;
        if (br.index <= 0) explore_upper(br, positives_of(level));
        br.index -= idx;
        br.upper.pop_back();
    }

    void explore_lower(Branch& br, const OrbitMultiset& frontier) {
        ++br.result.nodes;
        if (cancelled(br)) return;
        for (const auto& level : next_levels(frontier, inner_, outer_, true)) push_middle(br, level);
        auto more = next_levels(frontier, inner_, inner_, false);
        if (static_cast<long>(br.lower.size()) >= caps_.max_levels_per_side) {
            if (!more.empty()) br.result.cap_hit = true;
            return;
        }
        for (const auto& level : more) push_lower(br, level);
    }

    void explore_upper(Branch& br, const OrbitMultiset& frontier) {
        ++br.result.nodes;
        if (cancelled(br)) return;
        if (frontier == OrbitMultiset{top_}) {
            if (br.index == 0) br.result.buildings.push_back(materialize(br));
            return;
        }
        auto more = next_levels(frontier, outer_, outer_, false);
        if (static_cast<long>(br.upper.size()) >= caps_.max_levels_per_side) {
            if (!more.empty()) br.result.cap_hit = true;
            return;
        }
        for (const auto& level : more) push_upper(br, level);
    }

    // Every level whose negative ends are exactly `frontier`: the frontier is
    // split into blocks, each block capped by one positive end, and planes
    // may be added. One positive end per curve throughout.
    std::vector<RawLevel> next_levels(const OrbitMultiset& frontier, const OrbitTable& neg, const OrbitTable& pos,
                                      bool middle) const {
        std::set<RawLevel> levels;
        for (const auto& blocks : block_partitions(frontier)) {
            RawLevel partial;
            assign_positives(blocks, 0, partial, PerturbedRational{}, 0, neg, pos, middle, levels);
        }
        return {levels.begin(), levels.end()};
    }

    static std::set<std::vector<OrbitMultiset>> block_partitions(const OrbitMultiset& frontier) {
        std::set<std::vector<OrbitMultiset>> out;
        std::vector<OrbitMultiset> blocks;
        std::function<void(std::size_t)> place = [&](std::size_t i) {
            if (i == frontier.size()) {
                auto canon = blocks;
                for (auto& blk : canon) canonicalize(blk);
                std::sort(canon.begin(), canon.end());
                out.insert(std::move(canon));
                return;
            }
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                blocks[b].push_back(frontier[i]);
                place(i + 1);
                blocks[b].pop_back();
            }
            blocks.push_back({frontier[i]});
            place(i + 1);
            blocks.pop_back();
        };
        place(0);
        return out;
    }

    void assign_positives(const std::vector<OrbitMultiset>& blocks, std::size_t i, RawLevel& partial,
                          const PerturbedRational& spent, long multiplicity, const OrbitTable& neg,
                          const OrbitTable& pos, bool middle, std::set<RawLevel>& out) const {
        if (i == blocks.size()) {
            add_planes(partial, pos.orbits.size(), spent, multiplicity, neg, pos, middle, out);
            return;
        }
        PerturbedRational floor_action;
        for (const auto& o : blocks[i]) floor_action += neg.action(o);
        for (const auto& info : pos.orbits) {
            if (multiplicity + info.orbit.multiplicity > caps_.max_multiplicity) continue;
            if (info.action < floor_action) continue;
            PerturbedRational next = spent + info.action;
            if (next > budget_) continue;
            Curve c{info.orbit, blocks[i]};
            if (middle && !generic(c)) continue;
            partial.push_back(std::move(c));
            assign_positives(blocks, i + 1, partial, next, multiplicity + info.orbit.multiplicity, neg, pos, middle,
                             out);
            partial.pop_back();
        }
    }

    void add_planes(RawLevel& partial, std::size_t max_index, const PerturbedRational& spent, long multiplicity,
                    const OrbitTable& neg, const OrbitTable& pos, bool middle, std::set<RawLevel>& out) const {
        RawLevel level = partial;
        std::sort(level.begin(), level.end());
        bool all_trivial = std::all_of(level.begin(), level.end(), [](const Curve& c) {
            return c.negatives.size() == 1 && c.negatives.front() == c.positive;
        });
        if (middle || !all_trivial) out.insert(std::move(level));
        for (std::size_t j = 0; j < max_index && j < pos.orbits.size(); ++j) {
            const auto& info = pos.orbits[j];
            if (multiplicity + info.orbit.multiplicity > caps_.max_multiplicity) continue;
            PerturbedRational next = spent + info.action;
            if (next > budget_) continue;
            Curve plane{info.orbit, {}};
            if (middle && !generic(plane)) continue;
            partial.push_back(std::move(plane));
            add_planes(partial, j + 1, next, multiplicity + info.orbit.multiplicity, neg, pos, middle, out);
            partial.pop_back();
        }
    }

    const CobordismData& cob_;
    ReebOrbit bottom_;
    ReebOrbit top_;
    BuildingCaps caps_;
    const std::atomic<bool>* cancel_;
    PerturbedRational budget_;
    OrbitTable inner_;
    OrbitTable outer_;
};

}  // namespace

CylindricalSearchResult enumerate_cylindrical(const CobordismData& cob, long k, long l, const BuildingCaps& caps,
                                              const CylindricalSearchOptions& options) {
    if (k < 1 || l < 1) throw std::invalid_argument("enumerate_cylindrical needs k, l >= 1");
    if (caps.max_levels_per_side < 0 || caps.max_multiplicity < 0) {
        throw std::invalid_argument("building caps must be nonnegative");
    }
    CylindricalSearch search(cob, k, l, caps, options);
    auto tasks = search.root_tasks();
    std::vector<CylindricalSearch::Branch> branches(tasks.size());

    unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) tasks[i](branches[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) tasks[i](branches[i]);
            });
        }
        for (auto& t : workers) t.join();
    }

    CylindricalSearchResult out;
    for (auto& br : branches) {
        for (auto& b : br.result.buildings) out.buildings.push_back(std::move(b));
        out.cap_hit = out.cap_hit || br.result.cap_hit;
        out.interrupted = out.interrupted || br.result.interrupted;
        out.nodes += br.result.nodes;
    }
    return out;
}

}  // namespace reeb
