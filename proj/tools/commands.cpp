#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lineart/cycles.hpp"
#include "lineart/error.hpp"
#include "lineart/io.hpp"
#include "lineart/isomorphism.hpp"
#include "lineart/linefold.hpp"
#include "lineart/permutations.hpp"
#include "lineart/regions.hpp"
#include "lineart/transforms.hpp"

namespace lineart::cli {

namespace {

std::string join(const std::vector<int>& values, const std::string& sep, int offset = 1) {
    std::string out;
    for (std::size_t t = 0; t < values.size(); ++t)
        out += (t ? sep : "") + std::to_string(values[t] + offset);
    return out;
}

std::string pair_text(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string vertex_name(VertexKey key) {
    return std::to_string(key.i + 1) + "-" + std::to_string(key.j + 1);
}

std::string signs_text(const SignVector& sv) {
    std::string out;
    for (int s : sv)
        out += s > 0 ? '+' : '-';
    return out;
}

std::string rows_text(const CycleDecomp& decomp) {
    std::string out = "[";
    for (std::size_t r = 0; r < decomp.rows.size(); ++r) {
        out += r ? ", " : "";
        out += join(decomp.rows[r], "<");
    }
    return out + "]";
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "vertical")
        return Slope::infinite();
    return Slope::finite(parse_rational(text));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

void add_census(Report& report, const std::string& prefix, const std::map<int, long>& counts) {
    for (const auto& [g, c] : counts)
        report.add(prefix + "." + std::to_string(g), c);
}

std::map<int, long> tally_gonalities(const std::vector<Region>& regions, bool bounded) {
    std::map<int, long> out;
    for (const Region& r : regions)
        if (r.bounded == bounded)
            ++out[r.gonality];
    return out;
}

std::string cmd_validate(const std::string& path, int& status) {
    ArrangementFile file = read_arrangement_file(path);
    std::vector<LineEq> lines = file.lines();
    Report report;
    auto violation = check_generic(lines);
    report.add("generic", !violation);
    report.add("n", static_cast<long>(lines.size()));
    if (violation) {
        std::vector<int> shown = violation->lines;
        std::string text = "(";
        for (std::size_t t = 0; t < shown.size(); ++t)
            text += (t ? "," : "") + std::to_string(shown[t] + 1);
        report.add(violation->parallel ? "parallel" : "concurrent", text + ")");
        status = GenericityFailure;
    } else {
        file.arrangement(); // orientation records are checked here
    }
    return report.str();
}

std::string cmd_regions(const std::string& path, bool oracle) {
    Arrangement arr = read_arrangement_file(path).arrangement();
    std::vector<Region> regions = enumerate_regions(arr);
    RegionCounts counts = tally(regions);
    Report report;
    report.add("n", arr.size());
    report.add("total", counts.total);
    report.add("bounded", counts.bounded);
    report.add("unbounded", counts.unbounded);
    for (std::size_t r = 0; r < regions.size(); ++r) {
        const std::string key = "region." + std::to_string(r + 1);
        report.add(key + ".signs", signs_text(regions[r].sign_vector));
        report.add(key + ".bounded", regions[r].bounded);
        report.add(key + ".gonality", regions[r].gonality);
        report.add(key + ".lines", join(regions[r].boundary_lines, " "));
    }
    if (oracle) {
        if (arr.size() > 12)
            throw Error(ErrorCode::InvalidArgument, "the sign-vector oracle is limited to 12 lines");
        std::vector<SignVector> found = oracle_sign_vectors(arr.lines());
        bool agrees = found.size() == regions.size();
        long oracle_bounded = 0;
        for (const SignVector& sv : found) {
            const bool bounded = oracle_feasible(arr.lines(), sv).bounded;
            oracle_bounded += bounded;
            const Region* r = find_region(regions, sv);
            agrees = agrees && r && r->bounded == bounded;
        }
        report.add("oracle.total", static_cast<long>(found.size()));
        report.add("oracle.bounded", oracle_bounded);
        report.add("oracle.unbounded", static_cast<long>(found.size()) - oracle_bounded);
        report.add("oracle_agrees", agrees);
    }
    return report.str();
}

std::string cmd_cycle(const std::string& path) {
    Arrangement arr = read_arrangement_file(path).arrangement();
    InfinityCycle at_infinity = cycle_at_infinity(arr);
    CycleDecomp decomp = decompose(at_infinity.as_cycle);
    Report report;
    report.add("n", arr.size());
    report.add("cycle", format_cycle(at_infinity.as_cycle));
    report.add("order", join(at_infinity.order, " "));
    report.add("rows", rows_text(decomp));
    report.add("i", decomp.standardness);
    report.add("consecutive", decomp.consecutive);
    report.add("in_Tn", in_Tn(at_infinity.as_cycle));
    if (decomp.standardness == 2)
        report.add("slope_property", slope_property_check(arr, decomp));
    return report.str();
}

std::string cmd_gonality(const std::string& path, const std::vector<std::string>& subset_tokens) {
    ArrangementFile file = read_arrangement_file(path);
    Arrangement arr = file.arrangement();
    std::vector<Region> regions = enumerate_regions(arr);
    Report report;
    report.add("n", arr.size());
    std::optional<NGon> ngon = global_cyclicity(arr, regions);
    report.add("ngon", ngon ? "present" : "absent");
    if (ngon)
        report.add("ngon.order", join(ngon->order, " "));
    add_census(report, "bounded", tally_gonalities(regions, true));
    add_census(report, "unbounded", tally_gonalities(regions, false));
    if (ngon) {
        GonalityCensus census = gonality_census(arr);
        report.add("census.k_triangles", census.k_triangles);
        report.add("census.r_extreme", census.r_extreme);
        report.add("census.k_T", census.k_nonouter_on_T);
        add_census(report, "predicted.bounded", census.predicted_bounded);
        add_census(report, "predicted.unbounded", census.predicted_unbounded);
        report.add("census.matches", census.matches());
    }
    if (!subset_tokens.empty()) {
        std::vector<int> subset;
        for (const std::string& t : subset_tokens)
            subset.push_back(file.resolve(t));
        LocalGonalityReport local = local_gonality(arr, subset);
        report.add("subset", join(local.subset, " "));
        report.add("has_gonality", local.has_gonality);
        report.add("chart", join(local.chart, " "));
        report.add("chart_cycle", format_cycle(local.chart_cycle));
        report.add("in_full_arrangement", local.in_full_arrangement);
        report.add("full_region_bounded", local.full_region_bounded);
        report.add("in_Tk", local.in_Tk);
        if (local.in_Tk)
            report.add("tk_chart", join(local.tk_chart, " "));
        report.add("one_sided", local.one_sided);
        if (local.one_sided) {
            report.add("one_sided_chart", join(local.one_sided_chart, " "));
            report.add("anticlockwise", local.anticlockwise);
        }
        report.add("chart_slope_property", local.chart_slope_property);
    }
    return report.str();
}

std::string cmd_iso(const std::string& path_a, const std::string& path_b, const std::string& mode) {
    Arrangement a = read_arrangement_file(path_a).arrangement();
    Arrangement b = read_arrangement_file(path_b).arrangement();
    Report report;
    report.add("mode", mode);
    if (a.size() != b.size()) {
        report.add("isomorphic", false);
        report.add("reason", "sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
        return report.str();
    }
    if (mode == "nook") {
        const bool same = nook_iso_check(a, b);
        report.add("isomorphic", same);
        if (same) {
            std::vector<int> sa = a.slope_sorted_indices(), sb = b.slope_sorted_indices();
            std::vector<int> image(a.size());
            for (int t = 0; t < a.size(); ++t)
                image[sa[t]] = sb[t];
            std::string map;
            for (int t = 0; t < a.size(); ++t)
                map += (t ? " " : "") + std::to_string(t + 1) + "->" + std::to_string(image[t] + 1);
            report.add("map", map);
        }
        return report.str();
    }
    std::optional<LineBijection> found = iso_search(a, b);
    report.add("isomorphic", found.has_value());
    if (found) {
        std::string map;
        std::vector<int> reversed;
        for (int t = 0; t < a.size(); ++t) {
            map += (t ? " " : "") + std::to_string(t + 1) + "->" + std::to_string(found->image[t] + 1);
            if (!found->reversed.empty() && found->reversed[t])
                reversed.push_back(t);
        }
        report.add("map", map);
        report.add("reversed", reversed.empty() ? std::string("none") : join(reversed, " "));
    }
    return report.str();
}

struct EctOptions {
    std::string path;
    std::vector<std::string> triangle;
    bool auto_clear = false;
    std::string c2;
    std::string out;
};

std::string cmd_ect(const EctOptions& opt) {
    ArrangementFile file = read_arrangement_file(opt.path);
    Arrangement arr = file.arrangement();
    const int i = file.resolve(opt.triangle[0]), j = file.resolve(opt.triangle[1]), k = file.resolve(opt.triangle[2]);

    Report report;
    report.add("triangle", join({i, j, k}, " "));
    std::optional<InterceptRange> range = ect_applicable(arr, i, j, k);
    const bool cleared = !range;
    if (!range) {
        if (!opt.auto_clear)
            throw Error(ErrorCode::StripViolation, "another vertex blocks every strip for line " +
                                                       std::to_string(k + 1) + "; rerun with --auto-clear");
        arr = make_applicable(arr, i, j, k);
        range = ect_applicable(arr, i, j, k);
        if (!range)
            throw Error(ErrorCode::StripViolation, "clearing did not open a strip");
    }
    report.add("cleared", cleared);
    const Rational c1 = arr.line(k).c();
    const Rational c2 = opt.c2.empty() ? range->pick(c1) : parse_rational(opt.c2);
    report.add("c1", format_rational(c1));
    report.add("c2", format_rational(c2));
    report.add("range.vertex", format_rational(range->vertex_value));
    report.add("range.direction", range->direction > 0 ? "+" : "-");
    report.add("range.limit", range->limit ? format_rational(*range->limit) : std::string("none"));

    Arrangement moved = ect_apply(arr, i, j, k, c2);
    for (VertexKey key : {VertexKey(i, j), VertexKey(j, k), VertexKey(k, i)}) {
        InnerCoordinates before = arr.inner_coordinates(key.i, key.j);
        InnerCoordinates after = moved.inner_coordinates(key.i, key.j);
        const std::string name = "vertex." + vertex_name(key);
        report.add(name + ".before", pair_text(before.rank_on_i, before.rank_on_j));
        report.add(name + ".after", pair_text(after.rank_on_i, after.rank_on_j));
    }

    std::string text = format_arrangement_file(
        moved, file.names(),
        {"after moving " + file.records[k].name + " across " + file.records[i].name + " x " + file.records[j].name});
    if (!opt.out.empty()) {
        write_text(opt.out, text);
        report.add("written", opt.out);
        return report.str();
    }
    return report.str() + text;
}

std::string cmd_realize(const std::vector<std::string>& slope_tokens, const std::string& cycle_text,
                        const std::string& out) {
    std::vector<Slope> slopes;
    for (const std::string& t : slope_tokens)
        slopes.push_back(parse_slope(t));
    Cycle sigma = parse_cycle(cycle_text);
    RealizedCycle realized = realize_cycle(slopes, sigma);
    std::vector<std::string> comments{"realizes " + format_cycle(sigma)};
    for (int t = 0; t < realized.arrangement.size(); ++t)
        comments.push_back("L" + std::to_string(t + 1) + " slope " + format_slope(slopes[realized.slope_index[t]]));
    std::string text = format_arrangement_file(realized.arrangement, {}, comments);
    if (!out.empty()) {
        write_text(out, text);
        return "written: " + out + "\n";
    }
    return text;
}

std::string optional_count(const std::optional<long>& v) {
    return v ? std::to_string(*v) : std::string("n/a");
}

std::string cmd_fold(const std::string& path) {
    LineFold fold = read_arrangement_file(path).fold();
    FoldCounts formula = fold_census(fold);
    Report report;
    long multiplicity = 0;
    for (const auto& f : fold.factors)
        multiplicity += f.second;
    report.add("d", fold.degree());
    report.add("degree", multiplicity);
    std::vector<int> multiple;
    for (const auto& [p, k] : fold.concurrency_points)
        if (k >= 3)
            multiple.push_back(k);
    std::vector<int> classes;
    for (const auto& c : fold.parallel_classes)
        if (c.size() > 1)
            classes.push_back(static_cast<int>(c.size()));
    report.add("concurrencies", multiple.empty() ? std::string("none") : join(multiple, " ", 0));
    report.add("parallel_classes", classes.empty() ? std::string("none") : join(classes, " ", 0));
    report.add("total", formula.total);
    report.add("formula.total", formula.total);
    report.add("formula.bounded", optional_count(formula.bounded));
    report.add("formula.unbounded", optional_count(formula.unbounded));
    if (fold.degree() <= 12) {
        FoldCounts oracle = fold_oracle_census(fold);
        report.add("oracle.total", oracle.total);
        report.add("oracle.bounded", optional_count(oracle.bounded));
        report.add("oracle.unbounded", optional_count(oracle.unbounded));
        bool agrees = formula.total == oracle.total;
        if (formula.bounded)
            agrees = agrees && formula.bounded == oracle.bounded && formula.unbounded == oracle.unbounded;
        report.add("agrees", agrees);
    } else {
        report.add("oracle", "skipped");
    }
    return report.str();
}

std::string cmd_svg(const std::string& path, const std::vector<std::string>& quad_tokens, const std::string& out) {
    ArrangementFile file = read_arrangement_file(path);
    Arrangement arr = file.arrangement();
    std::optional<std::array<int, 4>> quad;
    if (!quad_tokens.empty()) {
        std::array<int, 4> q{};
        for (int t = 0; t < 4; ++t)
            q[t] = file.resolve(quad_tokens[t]);
        quad_structure(arr, q); // validates the four lines
        quad = q;
    }
    std::string svg = render_svg(arr, quad);
    if (!out.empty()) {
        write_text(out, svg);
        return "written: " + out + "\n";
    }
    return svg;
}

std::string cmd_graph(int n, int samples, unsigned seed) {
    return export_graph(build_iso_class_graph(n, samples, seed));
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
        return ParseFailure;
    case ErrorCode::NotGeneric:
        return GenericityFailure;
    default:
        return OperationFailure;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of line arrangements over the rationals", "lineart"};
    app.require_subcommand(1);

    std::string path, path_b;
    bool oracle = false;
    std::vector<std::string> subset;
    std::string mode = "orders";
    EctOptions ect;
    std::vector<std::string> slopes;
    std::string cycle_text, out_path;
    std::vector<std::string> quad;
    int graph_n = 0, samples = 0;
    unsigned seed = 1;

    auto* validate = app.add_subcommand("validate", "Check that the lines are in generic position");
    validate->add_option("file", path, "Arrangement file")->required();

    auto* regions = app.add_subcommand("regions", "Region counts, sign vectors and gonalities");
    regions->add_option("file", path, "Arrangement file")->required();
    regions->add_flag("--oracle", oracle, "Recount with the linear-feasibility oracle and compare");

    auto* cycle = app.add_subcommand("cycle", "Cycle at infinity and its consecutive structure");
    cycle->add_option("file", path, "Arrangement file")->required();

    auto* gonality = app.add_subcommand("gonality", "Common n-gon, gonality census, local gonality of a subset");
    gonality->add_option("file", path, "Arrangement file")->required();
    gonality->add_option("--subset", subset, "Lines (names or 1-based numbers)")->expected(3, -1);

    auto* iso = app.add_subcommand("iso", "Isomorphism test between two arrangements");
    iso->add_option("file_a", path, "First arrangement file")->required();
    iso->add_option("file_b", path_b, "Second arrangement file")->required();
    iso->add_option("--mode", mode, "orders: search over all bijections; nook: slope-indexed nook points")
        ->check(CLI::IsMember({"orders", "nook"}));

    auto* ect_cmd = app.add_subcommand("ect", "Move line k across the vertex of lines i and j");
    ect_cmd->add_option("file", ect.path, "Arrangement file")->required();
    ect_cmd->add_option("lines", ect.triangle, "i j k (names or 1-based numbers)")->required()->expected(3);
    ect_cmd->add_flag("--auto-clear", ect.auto_clear, "Push the other lines away first when the strip is blocked");
    ect_cmd->add_option("--c2", ect.c2, "New intercept for line k (default: inside the admissible range)");
    ect_cmd->add_option("-o,--out", ect.out, "Write the new arrangement file here");

    auto* realize = app.add_subcommand("realize", "Arrangement with the given slopes and cycle at infinity");
    realize->add_option("slopes", slopes, "Slopes as p/q, integers or inf")->required();
    realize->add_option("--cycle", cycle_text, "Target cycle, e.g. \"1 3 2 4\"")->required();
    realize->add_option("-o,--out", out_path, "Write the arrangement file here");

    auto* fold = app.add_subcommand("fold", "Region counts of a line-fold, formula and oracle");
    fold->add_option("file", path, "Arrangement file, parallels and concurrencies allowed")->required();

    auto* svg = app.add_subcommand("svg", "SVG figure of the arrangement");
    svg->add_option("file", path, "Arrangement file")->required();
    svg->add_option("--quad", quad, "Four lines whose vertices and nook are marked")->expected(4);
    svg->add_option("-o,--out", out_path, "Write the SVG here");

    auto* graph = app.add_subcommand("graph", "Isomorphism classes joined by ECT moves");
    graph->add_option("n", graph_n, "Number of lines (3 to 5)")->required();
    graph->add_option("--samples", samples, "Random arrangements classified after the closure");
    graph->add_option("--seed", seed, "Seed for the random samples");

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }

    int status = Ok;
    try {
        std::string text;
        if (*validate)
            text = cmd_validate(path, status);
        else if (*regions)
            text = cmd_regions(path, oracle);
        else if (*cycle)
            text = cmd_cycle(path);
        else if (*gonality)
            text = cmd_gonality(path, subset);
        else if (*iso)
            text = cmd_iso(path, path_b, mode);
        else if (*ect_cmd)
            text = cmd_ect(ect);
        else if (*realize)
            text = cmd_realize(slopes, cycle_text, out_path);
        else if (*fold)
            text = cmd_fold(path);
        else if (*svg)
            text = cmd_svg(path, quad, out_path);
        else if (*graph)
            text = cmd_graph(graph_n, samples, seed);
        out << text;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return status;
}

} // namespace lineart::cli
