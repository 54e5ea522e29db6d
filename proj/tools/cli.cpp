#include "cli.hpp"

#include "reeb/json_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace reeb::cli {

namespace {

enum class Format { json, table };

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

// Inline JSON, or @path to read it from a file.
Json load_json(const std::string& text, const char* what) {
    std::string body = text;
    if (!body.empty() && body[0] == '@') {
        std::ifstream in(body.substr(1));
        if (!in) throw InputError(std::string("cannot read ") + what + " file '" + body.substr(1) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

bool looks_like_json(const std::string& text) {
    auto t = trim(text);
    return !t.empty() && (t[0] == '{' || t[0] == '@');
}

// a=..,b=..[,eps=a|b|none]; ε defaults to nowhere unless named.
Ellipsoid parse_ellipsoid(const std::string& text) {
    if (looks_like_json(text)) return ellipsoid_from_json(load_json(text, "ellipsoid"));
    std::optional<Rational> a;
    std::optional<Rational> b;
    std::string eps = "none";
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("ellipsoid item '" + item + "' is not key=value");
        auto key = trim(item.substr(0, eq));
        auto value = trim(item.substr(eq + 1));
        if (key == "a") {
            a = parse_rational(value);
        } else if (key == "b") {
            b = parse_rational(value);
        } else if (key == "eps") {
            if (value != "a" && value != "b" && value != "none") throw InputError("eps must name a, b or none");
            eps = value;
        } else {
            throw InputError("unknown ellipsoid key '" + key + "'");
        }
    }
    if (!a || !b) throw InputError("ellipsoid needs both a and b");
    PerturbedRational pa(*a, eps == "a" ? 1 : 0);
    PerturbedRational pb(*b, eps == "b" ? 1 : 0);
    return Ellipsoid::make(pa, pb);
}

ReebOrbit parse_orbit(const std::string& text) {
    if (looks_like_json(text)) return orbit_from_json(load_json(text, "orbit"));
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("orbit must be <gen>,<mult>");
    auto gen = trim(text.substr(0, comma));
    Json j{{"gen", gen == "a" ? "alpha" : gen == "b" ? "beta" : gen}};
    try {
        j["mult"] = std::stol(trim(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw InputError("orbit multiplicity must be an integer");
    }
    return orbit_from_json(j);
}

std::pair<long, long> parse_caps(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("caps must be <n>,<m>");
    try {
        long first = std::stol(text.substr(0, comma));
        long second = std::stol(text.substr(comma + 1));
        if (first < 0 || second < 0) throw InputError("caps must be nonnegative");
        return {first, second};
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("caps must be two integers");
    }
}

struct CobordismInput {
    std::string json;
    std::string inner;
    std::string outer;

    void attach(CLI::App* cmd) {
        cmd->add_option("--cobordism", json, "cobordism JSON {\"inner\":..,\"outer\":..} or @file");
        cmd->add_option("--inner", inner, "inner ellipsoid (JSON or a=..,b=..,eps=a|b)");
        cmd->add_option("--outer", outer, "outer ellipsoid (JSON or a=..,b=..,eps=a|b)");
    }

    CobordismData resolve() const {
        if (!json.empty()) return cobordism_from_json(load_json(json, "cobordism"));
        if (inner.empty() || outer.empty()) throw InputError("give --cobordism, or both --inner and --outer");
        return CobordismData::make(parse_ellipsoid(inner), parse_ellipsoid(outer));
    }
};

unsigned default_jobs() {
    if (const char* env = std::getenv("REEB_TOOLKIT_JOBS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

void print_verdict_table(std::ostream& out, const Verdict& v) {
    out << "applicable: " << (v.applicable ? "yes" : "no");
    if (v.witness) out << "  witness: " << v.witness->dump();
    out << "\n";
    for (const auto& c : v.reasons) out << "  [" << (c.holds ? "ok" : "--") << "] " << c.id << " " << c.values.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
    CLI::App app{"Reeb orbit, Conley-Zehnder and Fredholm index toolkit for 4-dimensional ellipsoids",
                 "reeb-toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::string ellipsoid_text, orbit_text, data_text, setting_text, positive_text, enumerate_caps, building_caps, c1_text, c_text,
        building_text;
    long count = 1, k = 1, l = 0, n = 0;
    unsigned jobs = default_jobs();
    CobordismInput cob_input;

    auto* cz = app.add_subcommand("cz", "Conley-Zehnder index of one orbit");
    cz->add_option("--ellipsoid", ellipsoid_text, "JSON or a=..,b=..,eps=a|b")->required();
    cz->add_option("--orbit", orbit_text, "<alpha|beta>,<mult> or JSON")->required();

    auto* spectrum = app.add_subcommand("spectrum", "orbits in action order with actions and CZ indices");
    spectrum->add_option("--ellipsoid", ellipsoid_text)->required();
    spectrum->add_option("--count", count)->required()->check(CLI::PositiveNumber);

    auto* index = app.add_subcommand("index", "Fredholm index and action defect of asymptotic data");
    index->add_option("--data", data_text, "AsymptoticData JSON or @file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "feasible data with one positive puncture (JSON Lines)");
    enumerate->add_option("--setting", setting_text, "setting JSON");
    enumerate->add_option("--ellipsoid", ellipsoid_text, "shorthand for the symplectization of one ellipsoid");
    enumerate->add_option("--positive", positive_text)->required();
    enumerate->add_option("--caps", enumerate_caps, "<max negative punctures>,<max total multiplicity> (default 4,8)");

    auto* buildings = app.add_subcommand("buildings", "index-0 cylindrical buildings (JSON Lines + summary)");
    cob_input.attach(buildings);
    buildings->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    buildings->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    buildings->add_option("--caps", building_caps, "<max levels per side>,<max multiplicity> (default 3,12)");
    buildings->add_option("--jobs", jobs, "worker threads (default $REEB_TOOLKIT_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    auto* check_main = app.add_subcommand("check-main", "hypotheses of the single-cylinder existence result");
    cob_input.attach(check_main);
    check_main->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    auto* check_alt = app.add_subcommand("check-alt", "hypotheses of the cylindrical-building result");
    cob_input.attach(check_alt);
    check_alt->add_option("--k", k)->required()->check(CLI::Range(2L, std::numeric_limits<long>::max()));

    auto* fibonacci = app.add_subcommand("fibonacci", "odd-index Fibonacci number g_n");
    fibonacci->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

    auto* nope = app.add_subcommand("nope", "Fibonacci obstruction instance");
    nope->add_option("--n", n)->required()->check(CLI::Range(2L, 60L));
    nope->add_option("--c1", c1_text, "rational in (0,1)")->required();

    auto* answer1 = app.add_subcommand("answer1", "five-ended area obstruction for E(1,4) into E(c,c+eps)");
    answer1->add_option("--c", c_text, "positive rational")->required();

    auto* validate_cmd = app.add_subcommand("validate", "diagnostics for a building JSON record");
    validate_cmd->add_option("--building", building_text, "Building JSON or @file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "parse_error", e.what());
        return kInvalidInput;
    }

    Format format = format_name == "table" ? Format::table : Format::json;
    auto caps_or = [](const std::string& text, std::pair<long, long> fallback) {
        return text.empty() ? fallback : parse_caps(text);
    };

    try {
        if (*cz) {
            auto e = parse_ellipsoid(ellipsoid_text);
            auto o = parse_orbit(orbit_text);
            long value = e.cz_index(o);
            if (format == Format::table) {
                out << to_string(o) << "  action " << e.action(o) << "  CZ " << value << "\n";
            } else {
                out << Json{{"ellipsoid", to_json(e)}, {"orbit", to_json(o)}, {"action", to_json(e.action(o))},
                            {"cz", value}}
                           .dump()
                    << "\n";
            }
        } else if (*spectrum) {
            auto e = parse_ellipsoid(ellipsoid_text);
            auto orbits = e.spectrum(count);
            if (format == Format::table) {
                out << std::left << std::setw(6) << "#" << std::setw(12) << "orbit" << std::setw(8) << "CZ"
                    << "action\n";
                for (std::size_t i = 0; i < orbits.size(); ++i) {
                    out << std::setw(6) << i + 1 << std::setw(12) << to_string(orbits[i]) << std::setw(8)
                        << e.cz_index(orbits[i]) << e.action(orbits[i]) << "\n";
                }
            } else {
                Json rows = Json::array();
                for (const auto& o : orbits) {
                    rows.push_back({{"orbit", to_json(o)}, {"action", to_json(e.action(o))}, {"cz", e.cz_index(o)}});
                }
                out << Json{{"ellipsoid", to_json(e)}, {"orbits", std::move(rows)}}.dump() << "\n";
            }
        } else if (*index) {
            auto d = asymptotic_data_from_json(load_json(data_text, "data"));
            long idx = fredholm_index(d);
            auto defect = action_defect(d);
            if (format == Format::table) {
                out << "index " << idx << "  action defect " << defect << "\n";
            } else {
                Json rec{{"data", to_json(d)}, {"index", idx}, {"defect", to_json(defect)}};
                if (is_symplectization(d.setting)) rec["trivial_cover"] = is_trivial_cover(d);
                out << rec.dump() << "\n";
            }
        } else if (*enumerate) {
            std::optional<Setting> setting;
            if (!setting_text.empty()) {
                setting = setting_from_json(load_json(setting_text, "setting"));
            } else if (!ellipsoid_text.empty()) {
                setting = Symplectization{parse_ellipsoid(ellipsoid_text)};
            } else {
                throw InputError("enumerate needs --setting or --ellipsoid");
            }
            auto [punctures, mult] = caps_or(enumerate_caps, {4, 8});
            auto results = enumerate_feasible(*setting, parse_orbit(positive_text), {punctures, mult});
            for (const auto& d : results) {
                Json rec = to_json(d);
                rec["index"] = fredholm_index(d);
                rec["defect"] = to_json(action_defect(d));
                out << rec.dump() << "\n";
            }
        } else if (*buildings) {
            auto cob = cob_input.resolve();
            auto [levels, mult] = caps_or(building_caps, {3, 12});
            unsigned hw = std::max(1u, std::thread::hardware_concurrency());
            auto start = std::chrono::steady_clock::now();
            auto result = enumerate_cylindrical(cob, k, l, {levels, mult}, {std::min(jobs, hw), cancel});
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (const auto& b : result.buildings) out << to_json(b).dump() << "\n";
            bool partial = result.cap_hit || result.interrupted;
            out << Json{{"summary",
                         {{"count", result.buildings.size()},
                          {"caps", {{"max_levels_per_side", levels}, {"max_multiplicity", mult}}},
                          {"partial", partial},
                          {"cap_hit", result.cap_hit},
                          {"interrupted", result.interrupted},
                          {"elapsed", elapsed}}}}
                       .dump()
                << "\n";
            if (partial) {
                emit_error(err, "partial_results",
                           result.interrupted ? "interrupted; results are partial"
                                              : "a level or multiplicity cap cut the search; results are partial");
                return kPartialResults;
            }
        } else if (*check_main || *check_alt) {
            auto cob = cob_input.resolve();
            auto verdict = *check_main ? check_theorem_main(cob, k) : check_theorem_alt(cob, k);
            if (format == Format::table) {
                print_verdict_table(out, verdict);
            } else {
                out << to_json(verdict).dump() << "\n";
            }
        } else if (*fibonacci) {
            auto g = fib_odd(n);
            if (format == Format::table) {
                out << g.get_str() << "\n";
            } else {
                out << Json{{"n", n}, {"g", g.get_str()}}.dump() << "\n";
            }
        } else if (*nope) {
            out << to_json(proposition_nope_instance(n, parse_rational(c1_text))).dump() << "\n";
        } else if (*answer1) {
            out << to_json(answer1_area_obstruction(parse_rational(c_text))).dump() << "\n";
        } else if (*validate_cmd) {
            out << to_json(validate(building_from_json(load_json(building_text, "building")))).dump() << "\n";
        }
    } catch (const DegenerateTie& e) {
        emit_error(err, "degenerate_tie", e.what());
        return kDegenerateTie;
    } catch (const SecondOrderAmbiguity& e) {
        emit_error(err, "second_order_ambiguity", e.what());
        return kInvalidInput;
    } catch (const InvalidBuilding& e) {
        emit_error(err, "invalid_building", e.what());
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        emit_error(err, "invalid_input", e.what());
        return kInvalidInput;
    } catch (const Json::exception& e) {
        emit_error(err, "invalid_input", e.what());
        return kInvalidInput;
    } catch (const std::overflow_error& e) {
        emit_error(err, "invalid_input", e.what());
        return kInvalidInput;
    }
    return kSuccess;
}

}  // namespace reeb::cli
