// Command-line front end: generate boards, verify direction vectors, run
// the constructions and searches, reduce instances, and manage the catalog.
// Exit codes: 0 success, 1 negative result, 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ckt/constructions.hpp"
#include "ckt/diagonal.hpp"
#include "ckt/grid.hpp"
#include "ckt/io.hpp"
#include "ckt/moves.hpp"
#include "ckt/reduction.hpp"
#include "ckt/search.hpp"
#include "json.hpp"

using namespace ckt;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParameterError(flag + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw ParameterError(flag + ": empty list");
    return out;
}

Directions parse_directions(const std::string& r_text, const std::string& c_text) {
    Directions d;
    for (int v : parse_int_list(r_text, "--R")) {
        if (v != 1 && v != -1) throw ParameterError("--R entries must be 1 or -1");
        d.row_dir.push_back(static_cast<std::int8_t>(v));
    }
    for (int v : parse_int_list(c_text, "--C")) {
        if (v != 1 && v != -1) throw ParameterError("--C entries must be 1 or -1");
        d.col_dir.push_back(static_cast<std::int8_t>(v));
    }
    return d;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write '" + path + "'");
    out << text;
}

json directions_json(const Directions& dirs) {
    json r = json::array(), c = json::array();
    for (auto v : dirs.row_dir) r.push_back(static_cast<int>(v));
    for (auto v : dirs.col_dir) c.push_back(static_cast<int>(v));
    return {{"R", std::move(r)}, {"C", std::move(c)}};
}

json cycles_json_value(const CycleDecomposition& dec) {
    json cycles = json::array();
    for (const auto& cycle : dec.cycles) {
        json arr = json::array();
        for (Cell c : cycle) arr.push_back(json::array({c.row, c.col}));
        cycles.push_back(std::move(arr));
    }
    return cycles;
}

json provenance_json(const Provenance& p) {
    json out{{"kind", ""}};
    switch (p.kind) {
        case Provenance::Kind::Coprime: out["kind"] = "coprime"; break;
        case Provenance::Kind::Case1: out["kind"] = "case1"; break;
        case Provenance::Kind::Case2: out["kind"] = "case2"; break;
        case Provenance::Kind::Search: out["kind"] = "search"; break;
        case Provenance::Kind::Extension:
            out["kind"] = "extension";
            out["base_n"] = p.base_n;
            out["lambda"] = p.lambda;
            out["reused_base"] = p.reused_base;
            break;
    }
    return out;
}

json record_json(const SolutionRecord& rec) {
    json out = directions_json(rec.dirs);
    out["n"] = rec.n;
    out["k"] = rec.k;
    if (rec.e_rows) out["E"] = *rec.e_rows;
    out["provenance"] = provenance_json(rec.provenance);
    out["verified"] = rec.verified;
    return out;
}

std::string catalog_path_or(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CK_CATALOG")) return env;
    return {};
}

// ---- shared verify/render plumbing ---------------------------------------

struct Instance {
    Grid grid;
    Directions dirs;
    std::optional<std::vector<int>> e_rows;
};

Instance make_instance(int n, int k, const std::string& grid_path,
                       const std::string& r_text, const std::string& c_text,
                       const std::string& e_text) {
    Grid grid = grid_path.empty() ? Grid::cyclic_diagonal(n, k)
                                  : grid_from_json(read_input(grid_path));
    Instance inst{std::move(grid), {}, std::nullopt};
    if (!e_text.empty()) {
        if (!r_text.empty() || !c_text.empty())
            throw ParameterError("give either --E or the --R/--C pair, not both");
        auto rows = parse_int_list(e_text, "--E");
        inst.dirs = Directions::from_backward_rows(inst.grid.rows(), inst.grid.cols(), rows);
        inst.e_rows = std::move(rows);
    } else {
        if (r_text.empty() || c_text.empty())
            throw ParameterError("need --E, or both --R and --C");
        inst.dirs = parse_directions(r_text, c_text);
    }
    inst.dirs.validate(inst.grid);
    return inst;
}

void emit_orbit(const CycleDecomposition& dec, const std::string& format,
                const std::string& out_path, bool json_mode, json& doc) {
    if (format.empty()) return;
    if (format == "json") {
        if (json_mode && out_path.empty()) {
            doc["cycles"] = cycles_json_value(dec);
            return;
        }
        write_output(out_path, cycles_to_json(dec));
    } else if (format == "dot") {
        if (json_mode && out_path.empty())
            throw ParameterError("--emit-orbit dot needs --out in json mode");
        write_output(out_path, cycles_to_dot(dec));
    } else {
        throw ParameterError("--emit-orbit must be dot or json");
    }
}

// ---- subcommand bodies ----------------------------------------------------

int run_gen(const std::string& kind, int n, int k, int m, const std::string& corner,
            int a, int b, bool ascii) {
    Grid grid = [&] {
        if (kind == "cyclic-diagonal") return Grid::cyclic_diagonal(n, k);
        if (kind == "filled") return Grid::filled(m, n);
        HoleSpec hole{corner == "sw" ? HoleSpec::Corner::SW : HoleSpec::Corner::SE, a, b};
        return Grid::holed(m, n, hole);
    }();
    std::cout << (ascii ? grid.render() : grid_to_json(grid));
    return 0;
}

int run_verify(const Instance& inst, bool json_mode, const std::string& orbit_format,
               const std::string& out_path) {
    const CycleDecomposition dec =
        cycle_decomposition(inst.grid, crazy_knight(inst.grid, inst.dirs));
    const bool tour = dec.single_cycle();
    if (json_mode) {
        json doc;
        doc["rows"] = inst.grid.rows();
        doc["cols"] = inst.grid.cols();
        doc["filled"] = inst.grid.filled_count();
        doc["tour"] = tour;
        doc["cycle_count"] = dec.cycles.size();
        json lens = json::array();
        for (const auto& cycle : dec.cycles) lens.push_back(cycle.size());
        doc["cycle_lengths"] = std::move(lens);
        emit_orbit(dec, orbit_format, out_path, true, doc);
        std::cout << doc.dump() << "\n";
    } else {
        if (tour)
            std::cout << "tour of length " << inst.grid.filled_count() << "\n";
        else
            std::cout << "not a tour: " << dec.cycles.size() << " cycles\n";
        json unused;
        emit_orbit(dec, orbit_format, out_path, false, unused);
    }
    return tour ? 0 : 1;
}

int run_solve(int n, int k, const std::string& catalog_flag, std::uint64_t budget,
              bool json_mode, const std::string& orbit_format, const std::string& out_path) {
    std::optional<Catalog> catalog;
    const std::string path = catalog_path_or(catalog_flag);
    if (!path.empty() && std::ifstream(path).good()) catalog = Catalog::load(path);

    SearchSpec spec;
    spec.budget = budget;
    const auto record = solve(n, k, catalog ? &*catalog : nullptr, spec);

    if (!record) {
        if (!path.empty()) {
            Catalog cat = catalog.value_or(Catalog{});
            cat.mark_open(n, k, budget);
            cat.save(path);
        }
        if (json_mode)
            std::cout << json{{"n", n}, {"k", k}, {"solved", false}}.dump() << "\n";
        else
            std::cout << "no solution found within budget\n";
        return 1;
    }

    if (!path.empty()) {
        Catalog cat = catalog.value_or(Catalog{});
        cat.add(*record);
        cat.save(path);
    }

    const Grid a = Grid::cyclic_diagonal(n, k);
    const CycleDecomposition dec = cycle_decomposition(a, crazy_knight(a, record->dirs));
    if (json_mode) {
        json doc = record_json(*record);
        doc["solved"] = true;
        doc["tour_length"] = a.filled_count();
        emit_orbit(dec, orbit_format, out_path, true, doc);
        std::cout << doc.dump() << "\n";
    } else {
        auto signs = [](const std::vector<std::int8_t>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(static_cast<int>(v[i]));
            return s;
        };
        std::cout << "R = " << signs(record->dirs.row_dir) << "\n";
        std::cout << "C = " << signs(record->dirs.col_dir) << "\n";
        if (record->e_rows) {
            std::cout << "E = ";
            for (std::size_t i = 0; i < record->e_rows->size(); ++i)
                std::cout << (i ? "," : "") << (*record->e_rows)[i];
            std::cout << "\n";
        }
        std::cout << "provenance: " << to_string(record->provenance) << "\n";
        std::cout << "tour of length " << a.filled_count() << "\n";
        json unused;
        emit_orbit(dec, orbit_format, out_path, false, unused);
    }
    return 0;
}

int run_search(int n, int k, const std::string& mode, const std::string& grid_path,
               int shards, int shard, std::uint64_t budget,
               const std::string& catalog_flag, bool json_mode) {
    SearchSpec spec;
    spec.budget = budget;
    if (mode == "e") {
        ESearchResult res;
        if (shard >= 0) {
            spec.shard_count = shards;
            spec.shard_index = shard;
            res = search_e(n, k, spec);
        } else {
            res = search_e_sharded(n, k, shards, spec);
        }
        const std::string path = catalog_path_or(catalog_flag);
        if (!path.empty()) {
            Catalog cat =
                std::ifstream(path).good() ? Catalog::load(path) : Catalog{};
            if (res.record)
                cat.add(*res.record);
            else
                cat.mark_open(n, k, res.examined);
            cat.save(path);
        }
        if (json_mode) {
            json doc{{"mode", "e"},        {"n", n},
                     {"k", k},             {"found", res.record.has_value()},
                     {"examined", res.examined},
                     {"budget_exhausted", res.budget_exhausted}};
            if (res.record) {
                doc["record"] = record_json(*res.record);
                doc["winner_index"] = res.winner_index;
            }
            std::cout << doc.dump() << "\n";
        } else if (res.record) {
            std::cout << "found E = ";
            for (std::size_t i = 0; i < res.record->e_rows->size(); ++i)
                std::cout << (i ? "," : "") << (*res.record->e_rows)[i];
            std::cout << " (candidate " << res.winner_index << ", examined "
                      << res.examined << ")\n";
        } else {
            std::cout << (res.budget_exhausted ? "budget exhausted\n"
                                               : "space exhausted: no solution\n");
        }
        return res.record ? 0 : 1;
    }

    if (mode != "full") throw ParameterError("--mode must be e or full");
    const Grid grid = grid_path.empty() ? Grid::cyclic_diagonal(n, k)
                                        : grid_from_json(read_input(grid_path));
    if (shard >= 0) {
        spec.shard_count = shards;
        spec.shard_index = shard;
    }
    const FullSearchResult res = search_full(grid, spec);
    if (json_mode) {
        json doc{{"mode", "full"},
                 {"rows", grid.rows()},
                 {"cols", grid.cols()},
                 {"tour_count", res.tour_count},
                 {"examined", res.examined}};
        json tours = json::array();
        for (const auto& [index, dirs] : res.tours) {
            json t = directions_json(dirs);
            t["index"] = index;
            tours.push_back(std::move(t));
        }
        doc["tours"] = std::move(tours);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << res.tour_count << " tour-inducing direction pairs ("
                  << res.examined << " examined)\n";
    }
    return res.tour_count > 0 ? 0 : 1;
}

int run_reduce(int n, int k, const std::string& e_text, bool json_mode) {
    const DiagonalParams p = diagonal_params(n, k);
    const ESet e = ESet::of(parse_int_list(e_text, "--E"), n);
    const IntervalDecomposition dec = theta_order(p);
    const ConditionReport cond = check_conditions(e, p);

    json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["params"] = {{"block_size", p.block_size},
                     {"block_count", p.block_count},
                     {"block_shift", p.block_shift}};
    doc["theta"] = dec.theta;
    json blocks = json::array();
    for (auto [lo, hi] : dec.blocks) blocks.push_back(json::array({lo, hi}));
    doc["blocks"] = std::move(blocks);
    doc["conditions"] = {{"ok", cond.ok},
                         {"full_blocks", cond.full_blocks},
                         {"tail_gap", cond.tail_gap},
                         {"chain", cond.chain}};

    const ReducedSD red = reduce_intervals_fully(e, p);
    if (!json_mode) {
        std::cout << "blocks (size " << p.block_size << "):\n";
        for (int j = 1; j <= p.block_count; ++j)
            std::cout << "  I" << j << " = [" << dec.blocks[j - 1].first << ", "
                      << dec.blocks[j - 1].second << "]\n";
        std::cout << "theta:";
        for (int j : dec.theta) std::cout << " " << j;
        std::cout << "\n";
        if (red.theta.size() < dec.theta.size()) {
            std::cout << "reduced theta:";
            for (int j : red.theta) std::cout << " " << j;
            std::cout << "\n";
        } else {
            std::cout << "reduced theta: (nothing to remove)\n";
        }
    } else {
        doc["reduced_theta"] = red.theta;
    }

    if (!cond.ok) {
        if (json_mode)
            std::cout << doc.dump() << "\n";
        else
            std::cout << "E does not satisfy the chain conditions\n";
        return 1;
    }

    const MainEqvReport rep = verify_main_eqv(n, k, e);
    doc["dspec"] = {{"full_rows", rep.dspec.full_rows},
                    {"block_size", rep.dspec.block_size},
                    {"tail_gap", rep.dspec.tail_gap},
                    {"stride", rep.dspec.stride}};
    doc["tours"] = {{"board", rep.tour_a}, {"reduced", rep.tour_d}, {"holed", rep.tour_dstar}};
    doc["agrees"] = rep.agrees;
    json pointwise;
    pointwise["agrees"] = rep.pointwise.agrees;
    if (rep.pointwise.witness)
        pointwise["witness"] =
            json::array({rep.pointwise.witness->row, rep.pointwise.witness->col});
    doc["pointwise"] = std::move(pointwise);

    if (json_mode) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "conforming: full blocks " << cond.full_blocks << ", tail gap "
                  << cond.tail_gap << ", stride " << rep.dspec.stride << "\n";
        std::cout << "board:\n" << Grid::cyclic_diagonal(n, k).render();
        std::cout << "reduced board:\n" << build_d(rep.dspec).render();
        std::cout << "holed board:\n" << build_dstar(rep.dspec).render();
        std::cout << "tours: board " << (rep.tour_a ? "yes" : "no") << ", reduced "
                  << (rep.tour_d ? "yes" : "no") << ", holed "
                  << (rep.tour_dstar ? "yes" : "no") << "\n";
        std::cout << (rep.agrees ? "equivalence holds\n" : "equivalence FAILS\n");
    }
    return rep.agrees ? 0 : 1;
}

int run_demo_add(int modulus, int stride, int x, int y, int block, bool json_mode) {
    if (mod1(y, modulus) != mod1(stride, modulus))
        throw ParameterError("the board adds the stride: need y = h (mod modulus)");
    const DemoAddResult demo =
        block > 0 ? demo_add(modulus, stride, x, block) : demo_add(modulus, stride, x);
    if (json_mode) {
        json trace = json::array();
        for (Cell c : demo.trace) trace.push_back(json::array({c.row, c.col}));
        json doc{{"modulus", modulus}, {"h", stride},      {"x", x},
                 {"y", y},             {"result", demo.result},
                 {"alpha", demo.alpha}, {"trace", std::move(trace)}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << x << " + " << y << " = " << demo.result << "\n";
        std::cout << "alpha = " << demo.alpha << "\n";
        std::cout << "visited:";
        for (Cell c : demo.trace) std::cout << " (" << c.row << "," << c.col << ")";
        std::cout << "\n";
    }
    return 0;
}

int run_render(const std::string& grid_path, bool dot, const std::string& step_name,
               const std::string& r_text, const std::string& c_text,
               const std::string& e_text, const std::string& out_path) {
    const Grid grid = grid_from_json(read_input(grid_path.empty() ? "-" : grid_path));
    if (!dot) {
        write_output(out_path, grid.render());
        return 0;
    }
    StepFn step;
    if (step_name == "bishop") {
        step = bishop(grid);
    } else if (step_name == "reversed-bishop") {
        step = reversed_bishop(grid);
    } else if (step_name.rfind("knight:", 0) == 0) {
        step = a_knight(grid, std::stoi(step_name.substr(7)));
    } else if (step_name == "crazy") {
        Directions dirs;
        if (!e_text.empty())
            dirs = Directions::from_backward_rows(grid.rows(), grid.cols(),
                                                  parse_int_list(e_text, "--E"));
        else if (!r_text.empty() && !c_text.empty())
            dirs = parse_directions(r_text, c_text);
        else
            throw ParameterError("crazy needs --E, or both --R and --C");
        dirs.validate(grid);
        step = crazy_knight(grid, dirs);
    } else {
        throw ParameterError("--step must be bishop, reversed-bishop, knight:A, or crazy");
    }
    write_output(out_path, cycles_to_dot(cycle_decomposition(grid, step)));
    return 0;
}

int run_catalog(const std::string& catalog_flag, const std::string& merge_path,
                const std::string& csv_path, bool json_mode) {
    const std::string path = catalog_path_or(catalog_flag);
    if (path.empty())
        throw ParameterError("no catalog path: pass --catalog or set CK_CATALOG");
    Catalog cat = std::ifstream(path).good() ? Catalog::load(path) : Catalog{};
    if (!merge_path.empty()) {
        cat = catalog_merge(cat, Catalog::load(merge_path));
        cat.save(path);
    }
    if (!csv_path.empty()) write_output(csv_path, cat.to_csv());
    if (json_mode)
        std::cout << cat.to_json();
    else
        std::cout << cat.to_csv();
    return 0;
}

// CLI11 stops at values that begin with '-'; glue them to their flag.
std::vector<std::string> glue_signed_values(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        const bool wants_list = tok == "--R" || tok == "--C" || tok == "--E";
        if (wants_list && i + 1 < argc && argv[i + 1][0] == '-' &&
            std::isdigit(static_cast<unsigned char>(argv[i + 1][1]))) {
            args.push_back(tok + "=" + argv[++i]);
        } else {
            args.push_back(std::move(tok));
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crazy knight's tour workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a board");
    gen->require_subcommand(1);
    int gn = 0, gk = 0, gm = 0, ga = 0, gb = 0;
    std::string gcorner = "sw";
    bool gascii = false;
    auto* gen_cd = gen->add_subcommand("cyclic-diagonal", "diagonal band board");
    gen_cd->add_option("--n", gn, "board size")->required();
    gen_cd->add_option("--k", gk, "diagonal count")->required();
    gen_cd->add_flag("--ascii", gascii, "render as text");
    auto* gen_filled = gen->add_subcommand("filled", "completely filled board");
    gen_filled->add_option("--m", gm, "rows")->required();
    gen_filled->add_option("--n", gn, "cols")->required();
    gen_filled->add_flag("--ascii", gascii, "render as text");
    auto* gen_holed = gen->add_subcommand("holed", "board with a corner hole");
    gen_holed->add_option("--m", gm, "rows")->required();
    gen_holed->add_option("--n", gn, "cols")->required();
    gen_holed->add_option("--corner", gcorner, "sw or se")
        ->check(CLI::IsMember({"sw", "se"}));
    gen_holed->add_option("--a", ga, "hole rows")->required();
    gen_holed->add_option("--b", gb, "hole cols")->required();
    gen_holed->add_flag("--ascii", gascii, "render as text");

    // verify
    auto* verify = app.add_subcommand("verify", "check a direction assignment");
    int vn = 0, vk = 0;
    std::string vgrid, vr, vc, ve, vorbit, vout;
    bool vjson = false;
    verify->add_option("--n", vn, "board size (diagonal board)");
    verify->add_option("--k", vk, "diagonal count");
    verify->add_option("--grid", vgrid, "grid json path or -");
    verify->add_option("--R", vr, "row directions, comma separated");
    verify->add_option("--C", vc, "column directions, comma separated");
    verify->add_option("--E", ve, "backward rows, comma separated");
    verify->add_flag("--json", vjson, "machine-readable output");
    verify->add_option("--emit-orbit", vorbit, "dot or json");
    verify->add_option("--out", vout, "orbit output path");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "construct or search a solution");
    int sn = 0, sk = 0;
    std::string scatalog, sorbit, sout;
    std::uint64_t sbudget = SearchSpec{}.budget;
    bool sjson = false;
    solve_cmd->add_option("--n", sn, "board size")->required();
    solve_cmd->add_option("--k", sk, "diagonal count")->required();
    solve_cmd->add_option("--catalog", scatalog, "catalog path (or CK_CATALOG)");
    solve_cmd->add_option("--budget", sbudget, "search budget");
    solve_cmd->add_flag("--json", sjson, "machine-readable output");
    solve_cmd->add_option("--emit-orbit", sorbit, "dot or json");
    solve_cmd->add_option("--out", sout, "orbit output path");

    // search
    auto* search_cmd = app.add_subcommand("search", "enumerate candidate solutions");
    int qn = 0, qk = 0, qshards = 1, qshard = -1;
    std::string qmode = "e", qgrid, qcatalog;
    std::uint64_t qbudget = SearchSpec{}.budget;
    bool qjson = false;
    search_cmd->add_option("--n", qn, "board size");
    search_cmd->add_option("--k", qk, "diagonal count");
    search_cmd->add_option("--mode", qmode, "e or full")
        ->check(CLI::IsMember({"e", "full"}));
    search_cmd->add_option("--grid", qgrid, "board for full mode");
    search_cmd->add_option("--shards", qshards, "shard count");
    search_cmd->add_option("--shard", qshard, "run this shard only");
    search_cmd->add_option("--budget", qbudget, "candidate cap");
    search_cmd->add_option("--catalog", qcatalog, "catalog to update");
    search_cmd->add_flag("--json", qjson, "machine-readable output");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "show the reduction chain");
    int rn = 0, rk = 0;
    std::string re;
    bool rjson = false;
    reduce_cmd->add_option("--n", rn, "board size")->required();
    reduce_cmd->add_option("--k", rk, "diagonal count")->required();
    reduce_cmd->add_option("--E", re, "backward rows")->required();
    reduce_cmd->add_flag("--json", rjson, "machine-readable output");

    // demo-add
    auto* demo_cmd = app.add_subcommand("demo-add", "cyclic addition on the board");
    demo_cmd->set_help_flag("--help", "print help");  // frees -h for the stride flag
    int dt = 0, dh = 0, dx = 0, dy = 0, dg = 0;
    bool djson = false;
    demo_cmd->add_option("--modulus", dt, "group order")->required();
    demo_cmd->add_option("--h", dh, "knight stride")->required();
    demo_cmd->add_option("--x", dx, "first addend")->required();
    demo_cmd->add_option("--y", dy, "second addend")->required();
    demo_cmd->add_option("--g", dg, "block size override");
    demo_cmd->add_flag("--json", djson, "machine-readable output");

    // render
    auto* render_cmd = app.add_subcommand("render", "draw a board or an orbit");
    std::string xgrid, xstep, xr, xc, xe, xout;
    bool xdot = false;
    render_cmd->add_option("--grid", xgrid, "grid json path or - (default stdin)");
    render_cmd->add_flag("--dot", xdot, "emit the orbit digraph");
    render_cmd->add_option("--step", xstep, "bishop | reversed-bishop | knight:A | crazy");
    render_cmd->add_option("--R", xr, "row directions for crazy");
    render_cmd->add_option("--C", xc, "column directions for crazy");
    render_cmd->add_option("--E", xe, "backward rows for crazy");
    render_cmd->add_option("--out", xout, "output path");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "inspect or merge catalogs");
    std::string ccatalog, cmerge, ccsv;
    bool cjson = false;
    catalog_cmd->add_option("--catalog", ccatalog, "catalog path (or CK_CATALOG)");
    catalog_cmd->add_option("--merge", cmerge, "merge another catalog in");
    catalog_cmd->add_option("--csv", ccsv, "write csv to this path");
    catalog_cmd->add_flag("--json", cjson, "print the catalog json");

    const std::vector<std::string> args = glue_signed_values(argc, argv);
    try {
        std::vector<const char*> cargs{argv[0]};
        for (const auto& s : args) cargs.push_back(s.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen_cd->parsed()) return run_gen("cyclic-diagonal", gn, gk, 0, "", 0, 0, gascii);
        if (gen_filled->parsed()) return run_gen("filled", gn, 0, gm, "", 0, 0, gascii);
        if (gen_holed->parsed()) return run_gen("holed", gn, 0, gm, gcorner, ga, gb, gascii);
        if (verify->parsed()) {
            if (vgrid.empty() && (vn == 0 || vk == 0))
                throw ParameterError("need --grid, or --n and --k");
            return run_verify(make_instance(vn, vk, vgrid, vr, vc, ve), vjson, vorbit, vout);
        }
        if (solve_cmd->parsed())
            return run_solve(sn, sk, scatalog, sbudget, sjson, sorbit, sout);
        if (search_cmd->parsed()) {
            if (qgrid.empty() && (qn == 0 || qk == 0))
                throw ParameterError("need --grid, or --n and --k");
            return run_search(qn, qk, qmode, qgrid, qshards, qshard, qbudget, qcatalog,
                              qjson);
        }
        if (reduce_cmd->parsed()) return run_reduce(rn, rk, re, rjson);
        if (demo_cmd->parsed()) return run_demo_add(dt, dh, dx, dy, dg, djson);
        if (render_cmd->parsed())
            return run_render(xgrid, xdot, xstep, xr, xc, xe, xout);
        if (catalog_cmd->parsed()) return run_catalog(ccatalog, cmerge, ccsv, cjson);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
