#include "lewiskit/correspondence.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace lewiskit {

std::vector<CorrespondenceRow> load_pairing_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open pairing table '" + path + "'");
    std::vector<CorrespondenceRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string cond_field, axiom, flag;
        if (!(ls >> cond_field)) continue;  // blank line
        if (!(ls >> axiom >> flag))
            throw RegistryError("pairing table line " + std::to_string(lineno) +
                                ": expected condition, axiom, finite-only flag");
        CorrespondenceRow row;
        row.conds = parse_condition_set(cond_field);
        row.axiom = axiom;
        if (flag == "1")
            row.finite_only = true;
        else if (flag == "0")
            row.finite_only = false;
        else
            throw RegistryError("pairing table line " + std::to_string(lineno) +
                                ": finite-only flag must be 0 or 1, got '" + flag + "'");
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

struct ShardOutcome {
    std::uint64_t checked = 0;
    std::optional<Preframe> counterexample;
    bool condition_held = false;
};

ShardOutcome run_shard(Fm instance, const std::set<ConditionId>& conds, int n, int id,
                       int nshards, std::uint64_t cap, const SearchLimits& lim,
                       std::atomic<bool>* stop) {
    ShardOutcome out;
    std::uint64_t ordinal = 0;
    enumerate_frames(
        n, {},
        [&](const Frame& fr) {
            if (stop && stop->load(std::memory_order_relaxed)) return false;
            if (ordinal++ % nshards != std::uint64_t(id)) return true;
            ++out.checked;
            bool c = check_conditions(fr.pre(), conds);
            bool v = frame_validates(fr, instance, cap);
            if (c == v) return true;
            out.counterexample = fr.pre();
            out.condition_held = c;
            if (stop) stop->store(true, std::memory_order_relaxed);
            return false;
        },
        lim);
    return out;
}

}  // namespace

CorrespondenceReport correspondence_test(const Registry& reg, const std::set<ConditionId>& conds,
                                         const std::string& axiom, int max_n,
                                         const SearchLimits& lim, int workers) {
    Fm instance = reg.fresh_instance(axiom);
    const std::uint64_t cap = lim.valuation_cap ? lim.valuation_cap : enumeration_cap();
    if (workers < 1) workers = 1;
    CorrespondenceReport report;
    for (int n = 1; n <= max_n; ++n) {
        if (workers == 1) {
            ShardOutcome out = run_shard(instance, conds, n, 0, 1, cap, lim, nullptr);
            report.frames_checked += out.checked;
            if (out.counterexample) {
                report.pass = false;
                report.counterexample = std::move(out.counterexample);
                report.condition_held = out.condition_held;
                return report;
            }
            continue;
        }
        std::vector<ShardOutcome> outs(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::atomic<bool> stop{false};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int id = 0; id < workers; ++id) {
            pool.emplace_back([&, id] {
                try {
                    outs[id] = run_shard(instance, conds, n, id, workers, cap, lim, &stop);
                } catch (...) {
                    errors[id] = std::current_exception();
                    stop.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& out : outs) report.frames_checked += out.checked;
        for (auto& out : outs) {
            if (out.counterexample) {
                report.pass = false;
                report.counterexample = std::move(out.counterexample);
                report.condition_held = out.condition_held;
                return report;
            }
        }
    }
    return report;
}

}  // namespace lewiskit
