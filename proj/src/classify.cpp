#include "derange/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "derange/json_io.hpp"

namespace derange {

namespace {

void tally(ClassificationTable& table) {
    table.realized = table.unrealizable = table.capped = 0;
    for (const auto& row : table.rows) {
        switch (row.result.status) {
            case RealizationResult::Status::Realized: ++table.realized; break;
            case RealizationResult::Status::Unrealizable: ++table.unrealizable; break;
            case RealizationResult::Status::CapHit: ++table.capped; break;
        }
    }
}

}  // namespace

ClassificationTable classify_all(const Graph& g, PartitionFilter family,
                                 const ClassifyOptions& opt) {
    ClassificationTable table;
    table.graph_label = g.label;
    table.family = family.name();
    const auto parts = enumerate_partitions(g.n, family);
    table.rows.resize(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) table.rows[i].partition = parts[i];

    auto run_row = [&](size_t i) {
        table.rows[i].result = realize(g, parts[i], RealizeMode::Derangement, opt.budget);
    };
    const int workers = std::max(1, opt.workers);
    if (workers == 1 || parts.size() <= 1) {
        for (size_t i = 0; i < parts.size(); ++i) run_row(i);
    } else {
        // Each partition's search is sequential and independent, so the table
        // content is identical for any worker count.
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < parts.size(); i = next.fetch_add(1))
                    run_row(i);
            });
        for (auto& t : pool) t.join();
    }
    tally(table);
    return table;
}

namespace {

UniversalityResult verdict_from_table(const ClassificationTable& table) {
    UniversalityResult res;
    for (const auto& row : table.rows) {
        res.nodes += row.result.nodes;
        if (row.result.status == RealizationResult::Status::Realized) continue;
        res.universal = false;
        res.decided = row.result.status == RealizationResult::Status::Unrealizable;
        res.first_excluded = row.partition;
        return res;
    }
    res.universal = true;
    return res;
}

}  // namespace

UniversalityResult is_even_universal(const Graph& g, const ClassifyOptions& opt) {
    if (!two_color(g))
        throw std::invalid_argument(
            "even universality is asked of bipartite graphs; use is_universal instead");
    if (g.n % 2)
        throw std::invalid_argument("even universality needs an even vertex count");
    return verdict_from_table(classify_all(g, PartitionFilter::even(), opt));
}

UniversalityResult is_universal(const Graph& g, const ClassifyOptions& opt) {
    if (g.n < 2) throw std::invalid_argument("universality needs at least two vertices");
    if (g.n >= 5 && two_color(g)) {
        // Bipartite derangements have even cycles only, and every n >= 5 admits
        // a parts->=2 partition with an odd part, so the answer is known.
        UniversalityResult res;
        res.universal = false;
        res.short_circuit = true;
        for (const auto& p : enumerate_partitions(g.n, PartitionFilter::min(2)))
            if (std::any_of(p.begin(), p.end(), [](int x) { return x % 2; })) {
                res.first_excluded = p;
                break;
            }
        return res;
    }
    return verdict_from_table(classify_all(g, PartitionFilter::min(2), opt));
}

namespace {

CycleType canonical(CycleType t) {
    std::sort(t.rbegin(), t.rend());
    return t;
}

// Scheduled exclusion types per family; see the header for the schemas.
std::pair<Graph, std::vector<CycleType>> family_schedule(const std::string& id,
                                                         const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + id + "' expects " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (id == "four-forces-two") {
        need(1);
        const int n = params[0];
        if (n < 4 || n % 2) throw std::invalid_argument("four-forces-two needs even n >= 4");
        std::vector<CycleType> types;
        for (auto& q : enumerate_partitions(3 * n - 4, PartitionFilter::even())) {
            if (std::any_of(q.begin(), q.end(), [](int p) { return p < 4; })) continue;
            q.push_back(4);
            types.push_back(canonical(q));
        }
        return {gen_checkerboard({3, n}), types};
    }
    if (id == "all-fours") {
        need(2);
        const int m = params[0], n = params[1];
        if (m < 1 || m % 2 == 0 || n < 4 || n % 4)
            throw std::invalid_argument("all-fours needs odd m and n divisible by 4");
        return {gen_checkerboard({m, n}), {CycleType(static_cast<size_t>(m) * n / 4, 4)}};
    }
    if (id == "sixes-then-four") {
        need(1);
        const int k = params[0];
        if (k < 0) throw std::invalid_argument("sixes-then-four needs k >= 0");
        const int n = 6 * k + 4;
        CycleType t(static_cast<size_t>(4 * k + 2), 6);
        t.push_back(4);
        return {gen_checkerboard({4, n}), {canonical(t)}};
    }
    if (id == "six-then-fours") {
        need(2);
        const int m = params[0], k = params[1];
        if (m < 1 || m % 2 == 0 || k < 1)
            throw std::invalid_argument("six-then-fours needs odd m and k >= 1");
        const int n = 4 * k + 2;
        CycleType t{6};
        t.insert(t.end(), static_cast<size_t>(m * n - 6) / 4, 4);
        return {gen_checkerboard({m, n}), {canonical(t)}};
    }
    if (id == "matchless-fours") {
        need(1);
        const int n = params[0];
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("matchless-fours needs odd n >= 3");
        const int k = (n - 1) / 2;
        std::vector<CycleType> types;
        for (const auto& q : enumerate_partitions(4 * n, PartitionFilter::even())) {
            if (std::any_of(q.begin(), q.end(), [](int p) { return p < 4; })) continue;
            if (std::count(q.begin(), q.end(), 4) >= 2 * k - 1) types.push_back(q);
        }
        return {gen_checkerboard({4, n}), types};
    }
    throw std::invalid_argument("unknown exclusion family '" + id + "'");
}

}  // namespace

std::vector<std::string> exclusion_family_ids() {
    return {"four-forces-two", "all-fours", "sixes-then-four", "six-then-fours",
            "matchless-fours"};
}

FamilyReport verify_exclusion_family(const std::string& family_id,
                                     const std::vector<int>& params,
                                     const SearchBudget& budget) {
    auto [graph, types] = family_schedule(family_id, params);
    FamilyReport report;
    report.family_id = family_id;
    report.graph_label = graph.label;
    const auto mode =
        family_id == "matchless-fours" ? RealizeMode::Matchless : RealizeMode::Derangement;
    report.confirmed = true;
    for (const auto& t : types) {
        ClassificationRow row;
        row.partition = t;
        row.result = realize(graph, t, mode, budget);
        switch (row.result.status) {
            case RealizationResult::Status::Unrealizable: break;
            case RealizationResult::Status::CapHit:
                report.cap_hit = true;
                report.confirmed = false;
                break;
            case RealizationResult::Status::Realized:
                // A realized row contradicts the family claim; surface it.
                report.counterexamples.push_back(t);
                report.confirmed = false;
                break;
        }
        report.scheduled.push_back(std::move(row));
    }
    return report;
}

ScanReport conjecture_scan(int row_lo, int row_hi, int col_lo, int col_hi,
                           const ScanOptions& opt) {
    for (int b : {row_lo, row_hi, col_lo, col_hi})
        if (b % 2) throw std::invalid_argument("scan bounds must be even board sizes");

    // Previously persisted verdicts keyed by (graph, partition); capped rows
    // are retried rather than reused.
    std::map<std::pair<std::string, std::string>, nlohmann::json> done;
    if (!opt.results_path.empty()) {
        std::ifstream in(opt.results_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("graph") || !j.contains("partition")) continue;
            if (j.value("status", "") == "cap") continue;
            done[{j["graph"], j["partition"]}] = j;
        }
    }
    std::ofstream sink;
    if (!opt.results_path.empty()) sink.open(opt.results_path, std::ios::app);

    ScanReport report;
    const auto started = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - started;
        return used.count() > opt.time_cap_seconds;
    };

    for (int m = row_lo; m <= row_hi; m += 2) {
        for (int n = col_lo; n <= col_hi; n += 2) {
            const auto g = gen_checkerboard({m, n});
            ScanCell cell;
            cell.rows = m;
            cell.cols = n;
            cell.completed = true;
            for (const auto& p : enumerate_partitions(g.n, PartitionFilter::even())) {
                const auto key = std::make_pair(g.label, cycle_type_string(p));
                std::string status;
                if (auto it = done.find(key); it != done.end()) {
                    status = it->second["status"];
                } else {
                    if (out_of_time()) {
                        cell.completed = false;
                        report.time_capped = true;
                        break;
                    }
                    const auto r = realize(g, p, RealizeMode::Derangement, opt.classify.budget);
                    status = status_name(r.status);
                    const auto record = realization_record(g.label, p, r);
                    if (sink.is_open()) sink << record.dump() << "\n" << std::flush;
                    if (opt.progress)
                        (*opt.progress) << g.label << " " << key.second << " " << status << "\n";
                }
                if (status == "realized") ++cell.realized;
                else if (status == "unrealizable") cell.exclusions.push_back(p);
                else ++cell.capped;
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace derange
