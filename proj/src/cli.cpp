#include "derange/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "derange/classify.hpp"
#include "derange/existence.hpp"
#include "derange/json_io.hpp"
#include "derange/realize.hpp"
#include "derange/render.hpp"
#include "derange/spec_parse.hpp"

namespace derange {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    std::uint64_t budget = SearchBudget{}.max_nodes;
    int subset_cap = 20;
    int hall_cap = 24;
    int workers = 1;
    double time_cap = 7200.0;
    std::string results_path;
};

void emit(std::ostream& out, const Options& opt, const json& payload) {
    if (opt.format == "text") {
        // Compact key: value lines; arrays stay JSON-ish for copy/paste.
        for (auto it = payload.begin(); it != payload.end(); ++it)
            out << it.key() << ": " << it.value().dump() << "\n";
    } else {
        out << payload.dump(2) << "\n";
    }
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range '" + s + "' needs the form A..B");
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    return {lo, hi};
}

json table_to_json(const ClassificationTable& table, bool witnesses) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r;
        r["partition"] = cycle_type_string(row.partition);
        r["status"] = status_name(row.result.status);
        if (row.result.status == RealizationResult::Status::Realized) {
            if (witnesses) r["succ"] = row.result.witness.succ;
        } else {
            r["nodes"] = row.result.nodes;
        }
        rows.push_back(std::move(r));
    }
    return json{{"graph", table.graph_label},
                {"family", table.family},
                {"realized", table.realized},
                {"unrealizable", table.unrealizable},
                {"capped", table.capped},
                {"rows", std::move(rows)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph derangement toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", opt.budget, "node budget per realization search");
    app.add_option("--subset-cap", opt.subset_cap,
                   "vertex cap for subset enumeration (tutte/berge/general matching)");
    app.add_option("--hall-cap", opt.hall_cap, "vertex cap for the brute-independent hall check");
    app.add_option("--workers", opt.workers, "parallel partition searches");
    app.add_option("--time-cap", opt.time_cap, "scan time cap in seconds");
    app.add_option("--results", opt.results_path, "scan results file (JSONL, append + resume)");

    std::string spec, partition_str, witness_path, method_str = "matching-deficiency";
    std::string family_id, rows_range, cols_range;
    std::vector<int> family_params;
    int partitions_n = 0;
    bool even = false, matchless = false, witnesses = false;

    auto* c_exists = app.add_subcommand("exists", "decide derangement existence");
    c_exists->add_option("spec", spec)->required();

    auto* c_find = app.add_subcommand("find", "construct a derangement witness");
    c_find->add_option("spec", spec)->required();
    c_find->add_flag("--matchless", matchless, "require every cycle length >= 3");

    auto* c_hall = app.add_subcommand("hall", "check the neighborhood condition");
    c_hall->add_option("spec", spec)->required();
    c_hall->add_option("--method", method_str)
        ->check(CLI::IsMember({"brute-independent", "matching-deficiency"}));

    auto* c_tutte = app.add_subcommand("tutte", "check the odd-component condition");
    c_tutte->add_option("spec", spec)->required();

    auto* c_berge = app.add_subcommand("berge", "maximum matching size by the subset formula");
    c_berge->add_option("spec", spec)->required();

    auto* c_realize = app.add_subcommand("realize", "realize a cycle type");
    c_realize->add_option("spec", spec)->required();
    c_realize->add_option("partition", partition_str, "parts joined by +, e.g. 6+4+2")->required();
    c_realize->add_flag("--matchless", matchless);

    auto* c_classify = app.add_subcommand("classify", "realize every partition of a family");
    c_classify->add_option("spec", spec)->required();
    c_classify->add_flag("--even", even, "even partitions only (default: all parts >= 2)");
    c_classify->add_flag("--witnesses", witnesses, "include witness arrays in rows");

    auto* c_universal = app.add_subcommand("universal", "universality verdict");
    c_universal->add_option("spec", spec)->required();
    c_universal->add_flag("--even", even);

    auto* c_partitions = app.add_subcommand("partitions", "enumerate partitions of N");
    c_partitions->add_option("n", partitions_n)->required();
    c_partitions->add_flag("--even", even);

    auto* c_longest = app.add_subcommand("longest", "longest realizable cycle");
    c_longest->add_option("spec", spec)->required();

    auto* c_family = app.add_subcommand("verify-family", "verify an exclusion family");
    c_family->add_option("id", family_id)->required();
    c_family->add_option("params", family_params, "family parameters");

    auto* c_scan = app.add_subcommand("scan", "even-universality sweep over boards");
    c_scan->add_option("--rows", rows_range, "row sizes A..B (even)")->required();
    c_scan->add_option("--cols", cols_range, "column sizes C..D (even)")->required();

    auto* c_render = app.add_subcommand("render", "ASCII board of a witness");
    c_render->add_option("spec", spec)->required();
    c_render->add_option("witness", witness_path, "JSON witness file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        SearchBudget budget{opt.budget};
        ClassifyOptions copt{budget, opt.workers};

        if (c_exists->parsed()) {
            const auto g = parse_graph_spec(spec);
            emit(out, opt,
                 json{{"graph", g.label},
                      {"n", g.n},
                      {"derangement_exists", find_derangement(g).has_value()}});
            return 0;
        }
        if (c_find->parsed()) {
            const auto g = parse_graph_spec(spec);
            json j{{"graph", g.label}, {"n", g.n}, {"matchless", matchless}};
            int code = 0;
            if (matchless) {
                const auto r = find_matchless_derangement(g, budget);
                j["status"] = r.status == RealizationResult::Status::Realized ? "found"
                              : r.status == RealizationResult::Status::CapHit ? "cap"
                                                                              : "none";
                j["nodes"] = r.nodes;
                if (r.status == RealizationResult::Status::Realized) {
                    j["succ"] = r.witness.succ;
                    j["cycle_type"] = cycle_type_string(cycle_decomposition(r.witness).type);
                }
                code = r.status == RealizationResult::Status::CapHit ? 3 : 0;
            } else {
                const auto w = find_derangement(g);
                j["status"] = w ? "found" : "none";
                if (w) {
                    j["succ"] = w->succ;
                    j["cycle_type"] = cycle_type_string(cycle_decomposition(*w).type);
                }
            }
            emit(out, opt, j);
            return code;
        }
        if (c_hall->parsed()) {
            const auto g = parse_graph_spec(spec);
            const auto method = method_str == "brute-independent"
                                    ? HallMethod::BruteIndependent
                                    : HallMethod::MatchingDeficiency;
            auto j = hall_report_to_json(hall_check(g, method, opt.hall_cap));
            j["graph"] = g.label;
            j["n"] = g.n;
            emit(out, opt, j);
            return 0;
        }
        if (c_tutte->parsed()) {
            const auto g = parse_graph_spec(spec);
            const auto r = tutte_check(g, opt.subset_cap);
            json j{{"graph", g.label}, {"n", g.n}, {"holds", r.holds}};
            if (!r.holds) j["witness"] = r.witness;
            emit(out, opt, j);
            return 0;
        }
        if (c_berge->parsed()) {
            const auto g = parse_graph_spec(spec);
            const int b = berge_number(g, opt.subset_cap);
            emit(out, opt,
                 json{{"graph", g.label},
                      {"n", g.n},
                      {"berge_number", b},
                      {"min_fixed_points_dyadic", g.n - 2 * b}});
            return 0;
        }
        if (c_realize->parsed()) {
            const auto g = parse_graph_spec(spec);
            const auto parts = parse_cycle_type(partition_str);
            const auto mode = matchless ? RealizeMode::Matchless : RealizeMode::Derangement;
            const auto r = realize(g, parts, mode, budget);
            emit(out, opt, realization_record(g.label, parts, r));
            return r.status == RealizationResult::Status::CapHit ? 3 : 0;
        }
        if (c_classify->parsed()) {
            const auto g = parse_graph_spec(spec);
            const auto family = even ? PartitionFilter::even() : PartitionFilter::min(2);
            const auto table = classify_all(g, family, copt);
            emit(out, opt, table_to_json(table, witnesses));
            return table.capped > 0 ? 3 : 0;
        }
        if (c_universal->parsed()) {
            const auto g = parse_graph_spec(spec);
            const auto r = even ? is_even_universal(g, copt) : is_universal(g, copt);
            json j{{"graph", g.label}, {"even", even}, {"universal", r.universal},
                   {"decided", r.decided}};
            if (!r.universal && !r.first_excluded.empty())
                j["excluded"] = cycle_type_string(r.first_excluded);
            if (r.short_circuit) j["short_circuit"] = "bipartite-odd-part";
            emit(out, opt, j);
            return r.decided ? 0 : 3;
        }
        if (c_partitions->parsed()) {
            const auto filter = even ? PartitionFilter::even() : PartitionFilter::all();
            const auto parts = enumerate_partitions(partitions_n, filter);
            json list = json::array();
            for (const auto& p : parts) list.push_back(cycle_type_string(p));
            emit(out, opt,
                 json{{"n", partitions_n},
                      {"filter", filter.name()},
                      {"count", parts.size()},
                      {"partitions", std::move(list)}});
            return 0;
        }
        if (c_longest->parsed()) {
            const auto g = parse_graph_spec(spec);
            const auto r = longest_realizable_cycle(g, budget);
            emit(out, opt,
                 json{{"graph", g.label},
                      {"n", g.n},
                      {"longest_cycle", r.length},
                      {"exact", r.exact},
                      {"nodes", r.nodes},
                      {"succ", r.witness.succ}});
            return r.exact ? 0 : 3;
        }
        if (c_family->parsed()) {
            const auto r = verify_exclusion_family(family_id, family_params, budget);
            json types = json::array();
            for (const auto& row : r.scheduled)
                types.push_back(json{{"partition", cycle_type_string(row.partition)},
                                     {"status", status_name(row.result.status)}});
            json cx = json::array();
            for (const auto& t : r.counterexamples) cx.push_back(cycle_type_string(t));
            emit(out, opt,
                 json{{"family", r.family_id},
                      {"graph", r.graph_label},
                      {"confirmed", r.confirmed},
                      {"cap_hit", r.cap_hit},
                      {"types", std::move(types)},
                      {"counterexamples", std::move(cx)}});
            return r.cap_hit ? 3 : 0;
        }
        if (c_scan->parsed()) {
            const auto [rlo, rhi] = parse_range(rows_range);
            const auto [clo, chi] = parse_range(cols_range);
            ScanOptions sopt;
            sopt.classify = copt;
            sopt.time_cap_seconds = opt.time_cap;
            sopt.results_path = opt.results_path;
            sopt.progress = &err;
            const auto report = conjecture_scan(rlo, rhi, clo, chi, sopt);
            json cells = json::array();
            for (const auto& cell : report.cells) {
                json excl = json::array();
                for (const auto& t : cell.exclusions) excl.push_back(cycle_type_string(t));
                cells.push_back(json{{"rows", cell.rows},
                                     {"cols", cell.cols},
                                     {"realized", cell.realized},
                                     {"capped", cell.capped},
                                     {"exclusions", std::move(excl)},
                                     {"completed", cell.completed}});
            }
            emit(out, opt, json{{"cells", std::move(cells)}, {"time_capped", report.time_capped}});
            return 0;
        }
        if (c_render->parsed()) {
            const auto g = parse_graph_spec(spec);
            std::ifstream in(witness_path);
            if (!in) throw std::invalid_argument("cannot open witness file '" + witness_path + "'");
            const auto p = perm_from_json(json::parse(in));
            const auto cls = validate(g, p);
            if (cls.kind == Classification::Kind::Invalid)
                throw std::invalid_argument("witness invalid at vertex " +
                                            std::to_string(cls.offending) + ": " + cls.reason);
            if (opt.format == "text") {
                out << render_board(g, p);
            } else {
                std::stringstream board(render_board(g, p));
                json lines = json::array();
                std::string line;
                while (std::getline(board, line)) lines.push_back(line);
                emit(out, opt, json{{"graph", g.label}, {"board", std::move(lines)}});
            }
            return 0;
        }
    } catch (const CapExceeded& e) {
        err << "resource cap: " << e.what() << "\n";
        emit(out, opt, json{{"status", "cap"}, {"detail", e.what()}});
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n" << app.help();
    return 2;
}

}  // namespace derange
