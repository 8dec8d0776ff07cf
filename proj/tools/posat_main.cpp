#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posat/constructions.hpp"
#include "posat/io.hpp"
#include "posat/oracle.hpp"
#include "posat/percolation.hpp"
#include "posat/saturation.hpp"

namespace {

using nlohmann::json;
using namespace posat;

// Exit codes: 0 property holds / construction certified, 1 property fails
// (certificate attached), 2 usage or parse error, 3 feasibility cap.
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;

int g_max_ground = 0;  // POSAT_MAX_GROUND override, read once at startup

CheckOptions base_options() {
    CheckOptions o;
    if (g_max_ground > 0) o.max_ground = g_max_ground;
    return o;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_check(const std::string& poset_path, const std::string& family_path,
              const std::string& mode) {
    SetFamily f = family_from_json(load_json(family_path));
    json doc;
    doc["mode"] = mode;
    if (mode == "separates") {
        auto pair = separates(f);
        doc["holds"] = !pair.has_value();
        if (pair) doc["pair"] = json::array({pair->first, pair->second});
        emit(doc);
        return pair ? kFails : kHolds;
    }
    Poset p = poset_from_json(load_json(poset_path));
    if (mode == "free") {
        auto r = is_free(f, p);
        doc["holds"] = r.free;
        if (r.witness) doc["witness"] = embedding_to_json(*r.witness);
        emit(doc);
        return r.free ? kHolds : kFails;
    }
    auto v = is_saturated(f, p, base_options());
    doc["holds"] = v.saturated;
    doc["free"] = v.free;
    doc["exhaustive"] = v.exhaustive;
    if (v.copy_witness) doc["copy_witness"] = embedding_to_json(*v.copy_witness);
    if (v.missing_witness) doc["missing_set"] = json(mask_elements(*v.missing_witness));
    emit(doc);
    return v.saturated ? kHolds : kFails;
}

int cmd_construct(const std::string& kind, const std::string& poset_path,
                  const std::string& poset2_path, const std::vector<int>& sizes, int n) {
    SetFamily fam;
    ConstructionReport rep;
    json extra;
    if (kind == "special") {
        std::tie(fam, rep) = special_family(poset_from_json(load_json(poset_path)), n,
                                            base_options());
    } else if (kind == "glued") {
        std::tie(fam, rep) = glued_special_family(poset_from_json(load_json(poset_path)),
                                                  poset_from_json(load_json(poset2_path)), n,
                                                  base_options());
    } else {
        auto [reduced, positions] = reduce_unit_layers(sizes);
        std::tie(fam, rep) = klayer_seed(reduced, n);
        if (!positions.empty()) extra["unit_positions"] = positions;
    }
    json doc = family_to_json(fam);
    doc["meta"] = report_to_json(rep);
    for (auto& [k, v] : extra.items()) doc["meta"][k] = v;
    emit(doc);
    return kHolds;
}

int cmd_saturate(const std::string& poset_path, const std::string& seed_path, int n,
                 const std::string& order, std::uint64_t rng_seed) {
    Poset p = poset_from_json(load_json(poset_path));
    SetFamily seed =
        seed_path.empty() ? SetFamily(n, {}) : family_from_json(load_json(seed_path));
    auto opt = base_options();
    if (seed.ground() > opt.max_ground)
        throw feasibility_error("saturate infeasible for n=" + std::to_string(seed.ground()) +
                                " (limit " + std::to_string(opt.max_ground) + ")");
    ScanOrder so = ScanOrder::AscendingMask;
    if (order == "desc")
        so = ScanOrder::DescendingMask;
    else if (order == "size")
        so = ScanOrder::BySizeThenMask;
    else if (order == "random")
        so = ScanOrder::SeededRandom;
    SetFamily out = greedy_complete(seed, p, so, rng_seed);
    json doc = family_to_json(out);
    doc["meta"] = json{{"order", order}, {"status", "saturated"}};
    emit(doc);
    return kHolds;
}

int cmd_percolate(const std::string& poset_path, int n, const std::string& verify_path) {
    if (!verify_path.empty()) {
        auto s = schedule_from_json(load_json(verify_path));
        auto chk = verify_schedule(s);
        json doc;
        doc["ok"] = chk.ok;
        if (chk.failing_step) doc["failing_step"] = *chk.failing_step;
        if (!chk.reason.empty()) doc["reason"] = chk.reason;
        emit(doc);
        return chk.ok ? kHolds : kFails;
    }
    Poset p = poset_from_json(load_json(poset_path));
    auto s = percolating_family(p, n, base_options());
    emit(schedule_to_json(s));
    return kHolds;
}

int cmd_oracle(const std::string& kind, const std::string& poset_path, int n,
               long long max_candidates, long long budget_ms, bool symmetry) {
    Poset p = poset_from_json(load_json(poset_path));
    SearchLimits limits;
    limits.max_ground = g_max_ground;
    limits.max_candidate_size = max_candidates;
    limits.time_budget = std::chrono::milliseconds(budget_ms);
    limits.symmetry_reduction = symmetry;
    OracleResult r = kind == "sat" ? min_saturated(p, n, limits) : min_percolating(p, n, limits);
    json doc;
    doc["kind"] = kind;
    doc["size"] = r.size;
    doc["exact"] = r.exact;
    if (!r.note.empty()) doc["note"] = r.note;
    if (r.witness) doc["witness"] = family_to_json(*r.witness);
    emit(doc);
    return r.exact ? kHolds : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("POSAT_MAX_GROUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= kMaxGround)
            g_max_ground = static_cast<int>(v);
    }

    CLI::App app{"induced poset saturation and percolation toolkit"};
    app.require_subcommand(1);
    int threads = 1;  // accepted for compatibility; all computation is sequential
    app.add_option("--threads", threads, "worker threads (outputs never depend on this)");

    std::string poset_path, poset2_path, family_path, seed_path, verify_path;
    std::string mode = "free", kind, order = "asc";
    std::vector<int> sizes;
    int n = 0;
    std::uint64_t rng_seed = 0;
    long long max_candidates = 0, budget_ms = 0;
    bool symmetry = false;

    auto* check = app.add_subcommand("check", "check freeness / saturation / separation");
    check->add_option("--poset", poset_path, "poset document");
    check->add_option("--family", family_path, "family document")->required();
    check->add_option("--mode", mode, "free|saturated|separates")
        ->check(CLI::IsMember({"free", "saturated", "separates"}));

    auto* construct = app.add_subcommand("construct", "build a saturated family or seed");
    construct->add_option("--kind", kind, "special|glued|klayer")
        ->required()
        ->check(CLI::IsMember({"special", "glued", "klayer"}));
    construct->add_option("--poset", poset_path, "poset document (glued: the bottom factor)");
    construct->add_option("--poset2", poset2_path, "top factor for --kind=glued");
    construct->add_option("--sizes", sizes, "layer sizes for --kind=klayer")->delimiter(',');
    construct->add_option("--n", n, "ground size")->required();

    auto* saturate = app.add_subcommand("saturate", "greedily complete a free seed");
    saturate->add_option("--poset", poset_path, "poset document")->required();
    saturate->add_option("--seed", seed_path, "seed family document (default empty)");
    saturate->add_option("--n", n, "ground size when no seed is given");
    saturate->add_option("--order", order, "asc|desc|size|random")
        ->check(CLI::IsMember({"asc", "desc", "size", "random"}));
    saturate->add_option("--rng-seed", rng_seed, "seed for --order=random");

    auto* percolate = app.add_subcommand("percolate", "emit or verify a percolation schedule");
    percolate->add_option("--poset", poset_path, "poset document");
    percolate->add_option("--n", n, "ground size");
    percolate->add_option("--verify", verify_path, "verify an existing schedule document");

    auto* oracle = app.add_subcommand("oracle", "exact minimum saturated/percolating size");
    oracle->add_option("--kind", kind, "sat|satp")
        ->required()
        ->check(CLI::IsMember({"sat", "satp"}));
    oracle->add_option("--poset", poset_path, "poset document")->required();
    oracle->add_option("--n", n, "ground size")->required();
    oracle->add_option("--max-candidate-size", max_candidates, "largest family size tried");
    oracle->add_option("--time-budget-ms", budget_ms, "time budget in milliseconds");
    oracle->add_flag("--symmetry-reduction", symmetry, "prune by ground permutations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(poset_path, family_path, mode);
        if (construct->parsed()) return cmd_construct(kind, poset_path, poset2_path, sizes, n);
        if (saturate->parsed()) return cmd_saturate(poset_path, seed_path, n, order, rng_seed);
        if (percolate->parsed()) return cmd_percolate(poset_path, n, verify_path);
        if (oracle->parsed())
            return cmd_oracle(kind, poset_path, n, max_candidates, budget_ms, symmetry);
    } catch (const not_free_error& e) {
        json doc;
        doc["error"] = e.what();
        doc["witness"] = embedding_to_json(e.witness);
        emit(doc);
        return kFails;
    } catch (const feasibility_error& e) {
        emit(json{{"error", e.what()}});
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        emit(json{{"error", e.what()}});
        return kUsage;
    } catch (const std::exception& e) {
        emit(json{{"error", e.what()}});
        return kFails;
    }
    return kUsage;
}
