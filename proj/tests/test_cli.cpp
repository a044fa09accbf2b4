#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "commands.hpp"
#include "lineart/cycles.hpp"
#include "lineart/error.hpp"
#include "lineart/io.hpp"
#include "lineart/isomorphism.hpp"
#include "lineart/transforms.hpp"
#include "support.hpp"

using namespace lineart;
using lineart::testing::random_arrangement;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::filesystem::path dir = std::filesystem::path(::testing::TempDir()) / "lineart_cli";
    std::filesystem::create_directories(dir);
    std::filesystem::path p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::map<std::string, std::string> parse_report(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(": ");
        if (colon != std::string::npos && line.rfind("line ", 0) != 0 && line[0] != '#')
            out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

const std::string triangle = "# three lines\nline a 0 1 0\nline b 1 0 0\nline c 1 1 1\n";

} // namespace

TEST(FileFormat, ParsesRecordsAndComments) {
    ArrangementFile f = parse_arrangement_file("line x 1/2 -3 4   # trailing\n\n  # only a comment\nline y 0 2 1 3\n"
                                               "orient x -\n");
    ASSERT_EQ(f.records.size(), 2u);
    EXPECT_EQ(f.records[0].line, LineEq(make_rational(1, 2), Rational(-3), Rational(4)));
    EXPECT_EQ(f.records[1].multiplicity, 3);
    EXPECT_EQ(f.records[1].source_line, 4);
    EXPECT_EQ(f.resolve("y"), 1);
    EXPECT_EQ(f.resolve("1"), 0);
    EXPECT_THROW(f.resolve("3"), Error);
    Arrangement plain = Arrangement::build(f.lines());
    EXPECT_LT(sign(dot(f.arrangement().direction(0), plain.direction(0))), 0);
    EXPECT_GT(sign(dot(f.arrangement().direction(1), plain.direction(1))), 0);
}

TEST(FileFormat, ErrorsNameLineAndToken) {
    auto message = [](const std::string& text) {
        try {
            parse_arrangement_file(text);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("line a 0 1 0\nline a 1 0 0\n").find("line 2: duplicate name 'a'"), std::string::npos);
    EXPECT_NE(message("line a 0 1 0\nline b 1 x 0\n").find("line 2: bad rational 'x'"), std::string::npos);
    EXPECT_NE(message("line a 0 1 0\nline b 1 1/0 0\n").find("'1/0'"), std::string::npos);
    EXPECT_NE(message("\nlnie a 0 1 0\n").find("line 2: unknown record 'lnie'"), std::string::npos);
    EXPECT_NE(message("line a 0 0 1\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("line a 0 1 0 0\n").find("bad multiplicity '0'"), std::string::npos);
    EXPECT_NE(message("line a 0 1\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("line a 0 1 0\norient b -\n").find("line 2: orientation for unknown line 'b'"),
              std::string::npos);
    EXPECT_NE(message("line a 0 1 0\norient a ?\n").find("'?'"), std::string::npos);
    EXPECT_NE(message("# nothing\n").find("no line records"), std::string::npos);
}

TEST(FileFormat, RoundTripKeepsLinesAndDirections) {
    std::mt19937 rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        Arrangement a = random_arrangement(rng, 2 + trial % 6);
        for (int t = 0; t < a.size(); ++t)
            if (rng() % 2)
                a = a.with_flipped(t);
        std::string text = format_arrangement_file(a);
        ArrangementFile back = parse_arrangement_file(text);
        Arrangement b = back.arrangement();
        ASSERT_EQ(b.size(), a.size());
        for (int t = 0; t < a.size(); ++t) {
            EXPECT_EQ(b.line(t), a.line(t));
            EXPECT_GT(sign(dot(b.direction(t), a.direction(t))), 0);
        }
        EXPECT_EQ(format_arrangement_file(b), text);
        EXPECT_EQ(text.find('.'), std::string::npos);
    }
}

TEST(Report, KeepsInsertionOrder) {
    Report r;
    r.add("z", 1);
    r.add("a.b", true);
    r.add("m", "text");
    EXPECT_EQ(r.str(), "z: 1\na.b: true\nm: text\n");
}

TEST(Cli, Validate) {
    Outcome ok = run({"validate", temp_file("tri.txt", triangle)});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "generic: true\nn: 3\n");

    Outcome dup = run({"validate", temp_file("dup.txt", "line a 0 1 0\nline a 1 0 0\n")});
    EXPECT_EQ(dup.code, 2);
    EXPECT_NE(dup.err.find("PARSE_ERROR"), std::string::npos);
    EXPECT_NE(dup.err.find("line 2"), std::string::npos);

    Outcome conc = run({"validate", temp_file("conc.txt", "line a 0 1 0\nline b 1 0 0\nline c 1 -1 0\n")});
    EXPECT_EQ(conc.code, 3);
    EXPECT_EQ(parse_report(conc.out)["generic"], "false");
    EXPECT_EQ(parse_report(conc.out)["concurrent"], "(1,2,3)");

    Outcome par = run({"validate", temp_file("par.txt", "line a 0 1 0\nline b 1 0 0\nline c 0 2 1\n")});
    EXPECT_EQ(par.code, 3);
    EXPECT_EQ(parse_report(par.out)["parallel"], "(1,3)");

    EXPECT_EQ(run({"validate", "/nonexistent/file"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"iso", "a"}).code, 2);
    EXPECT_EQ(run({"iso", "a", "b", "--mode", "other"}).code, 2);
    Outcome help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("realize"), std::string::npos);
}

TEST(Cli, Regions) {
    auto r = parse_report(run({"regions", temp_file("tri.txt", triangle)}).out);
    EXPECT_EQ(r["total"], "7");
    EXPECT_EQ(r["bounded"], "1");
    EXPECT_EQ(r["unbounded"], "6");
    EXPECT_EQ(r["region.1.signs"].size(), 3u);

    auto one = parse_report(run({"regions", temp_file("one.txt", "line a 1 2 3\n")}).out);
    EXPECT_EQ(one["total"], "2");
    EXPECT_EQ(one["bounded"], "0");

    std::mt19937 rng(82);
    const std::string five = temp_file("five.txt", format_arrangement_file(random_arrangement(rng, 5)));
    Outcome first = run({"regions", five, "--oracle"});
    auto o = parse_report(first.out);
    EXPECT_EQ(o["total"], "16");
    EXPECT_EQ(o["oracle.total"], "16");
    EXPECT_EQ(o["oracle_agrees"], "true");
    EXPECT_EQ(run({"regions", five, "--oracle"}).out, first.out);
}

TEST(Cli, CycleOfRealizedFiles) {
    const std::string p5 = temp_file("p5.txt", run({"realize", "0", "1", "2", "inf", "-1", "--cycle", "1 4 5 2 3"}).out);
    auto r = parse_report(run({"cycle", p5}).out);
    EXPECT_EQ(r["cycle"], "(1 4 5 2 3)");
    EXPECT_EQ(r["rows"], "[1<2<3, 4<5]");
    EXPECT_EQ(r["i"], "2");
    EXPECT_EQ(r["consecutive"], "true");
    EXPECT_EQ(r["in_Tn"], "true");
    EXPECT_EQ(r["slope_property"], "true");

    auto id = parse_report(run({"cycle", temp_file("tri.txt", triangle)}).out);
    EXPECT_EQ(id["cycle"], "(1 2 3)");
    EXPECT_EQ(id["i"], "1");
    EXPECT_EQ(id["in_Tn"], "false");

    const std::string p4 = temp_file("p4.txt", run({"realize", "0", "1", "inf", "-1", "--cycle", "1 3 2 4"}).out);
    EXPECT_EQ(parse_report(run({"cycle", p4}).out)["cycle"], "(1 3 2 4)");
}

TEST(Cli, Realize) {
    Outcome r = run({"realize", "0", "1", "-1", "--cycle", "1 3 2"});
    ASSERT_EQ(r.code, 0) << r.err;
    Arrangement a = parse_arrangement_file(r.out).arrangement();
    EXPECT_EQ(a.size(), 3);
    EXPECT_EQ(format_cycle(cycle_at_infinity(a).as_cycle), "(1 3 2)");

    Outcome bad = run({"realize", "0", "1", "2", "3", "4", "--cycle", "1 3 5 2 4"});
    EXPECT_EQ(bad.code, 4);
    EXPECT_NE(bad.err.find("NOT_IN_TN"), std::string::npos);

    EXPECT_EQ(run({"realize", "0", "1", "--cycle", "1 3 2"}).code, 4);
    EXPECT_EQ(run({"realize", "0", "0", "1", "--cycle", "1 3 2"}).code, 4);
    EXPECT_EQ(run({"realize", "0", "x", "1", "--cycle", "1 3 2"}).code, 2);

    // Slopes appear exactly as given.
    std::vector<std::string> slopes{"1/3", "-7/2", "inf", "5", "0"};
    Outcome five = run({"realize", slopes[0], slopes[1], slopes[2], slopes[3], slopes[4], "--cycle", "1 2 5 3 4"});
    ASSERT_EQ(five.code, 0) << five.err;
    Arrangement b = parse_arrangement_file(five.out).arrangement();
    std::vector<std::string> got;
    for (int t = 0; t < b.size(); ++t)
        got.push_back(format_slope(b.slope(t)));
    std::vector<std::string> want{"1/3", "-7/2", "inf", "5", "0"};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    EXPECT_EQ(format_cycle(cycle_at_infinity(b).as_cycle), "(1 2 5 3 4)");
}

TEST(Cli, Gonality) {
    const std::string p5 = temp_file("p5.txt", run({"realize", "0", "1", "2", "inf", "-1", "--cycle", "1 4 5 2 3"}).out);
    auto r = parse_report(run({"gonality", p5}).out);
    EXPECT_EQ(r["ngon"], "present");
    EXPECT_EQ(r["bounded.5"], "1");
    EXPECT_EQ(r["census.matches"], "true");

    EXPECT_EQ(parse_report(run({"gonality", temp_file("tri.txt", triangle)}).out)["bounded.3"], "1");

    std::mt19937 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        Arrangement a = random_arrangement(rng, 6);
        std::vector<int> five{0, 1, 2, 3, 4};
        if (global_cyclicity(a.subset(five)))
            continue;
        const std::string path = temp_file("six.txt", format_arrangement_file(a));
        auto s = parse_report(run({"gonality", path, "--subset", "1", "2", "3", "4", "5"}).out);
        EXPECT_EQ(s["has_gonality"], "false");
        EXPECT_EQ(s["one_sided"], "false");
        EXPECT_EQ(run({"gonality", path, "--subset", "1", "2", "2"}).code, 4);
        return;
    }
    FAIL() << "every sample had a pentagon";
}

TEST(Cli, Iso) {
    const std::string quad = "line a 0 1 0\nline b 1 0 0\nline c 1 1 1\nline d 1 -1 -7/2\n";
    // Translated by (2, 10) and scaled by 3 about the origin.
    const std::string image = "line p 0 1 10\nline q 1 0 2\nline r 1 1 15\nline s 1 -1 -37/2\n";
    const std::string a = temp_file("quad.txt", quad), b = temp_file("image.txt", image);
    auto orders = parse_report(run({"iso", a, b}).out);
    EXPECT_EQ(orders["isomorphic"], "true");
    EXPECT_FALSE(orders["map"].empty());
    auto nook = parse_report(run({"iso", a, b, "--mode", "nook"}).out);
    EXPECT_EQ(nook["isomorphic"], "true");

    // Different gonality censuses: a realized pentagon against a pentagon-free arrangement.
    const std::string p5 = temp_file("p5.txt", run({"realize", "0", "1", "2", "inf", "-1", "--cycle", "1 4 5 2 3"}).out);
    std::mt19937 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        Arrangement other = random_arrangement(rng, 5);
        if (global_cyclicity(other))
            continue;
        const std::string q5 = temp_file("q5.txt", format_arrangement_file(other));
        EXPECT_EQ(parse_report(run({"iso", p5, q5}).out)["isomorphic"], "false");
        EXPECT_EQ(parse_report(run({"iso", p5, q5, "--mode", "nook"}).out)["isomorphic"], "false");
        break;
    }
    EXPECT_EQ(parse_report(run({"iso", a, p5}).out)["isomorphic"], "false");
}

TEST(Cli, IsoModesAgreeOnSlopePreservingPairs) {
    // Translations, positive scalings and ECT moves keep every slope, so the
    // nook test can index lines by slope order.
    std::mt19937 rng(83);
    int compared = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Arrangement a = random_arrangement(rng, 4 + trial % 3);
        std::vector<LineEq> moved;
        for (const LineEq& l : a.lines())
            moved.push_back(l.with_offset(3 * l.c() + l.a() * 2 - l.b()));
        Arrangement b = Arrangement::build(moved);
        auto tris = ect_triangles(a);
        auto [i, j, k] = tris[trial % tris.size()];
        Arrangement cleared = make_applicable(a, i, j, k);
        Arrangement c = ect_apply(cleared, i, j, k, ect_applicable(cleared, i, j, k)->pick(cleared.line(k).c()));
        for (const auto& [first, second] : {std::pair{a, b}, std::pair{cleared, c}}) {
            const std::string pa = temp_file("a.txt", format_arrangement_file(first));
            const std::string po = temp_file("o.txt", format_arrangement_file(second));
            const std::string by_orders = parse_report(run({"iso", pa, po}).out)["isomorphic"];
            const bool by_nook = parse_report(run({"iso", pa, po, "--mode", "nook"}).out)["isomorphic"] == "true";
            EXPECT_EQ(by_nook, slope_indexed_orders_check(first, second));
            // The order search ranges over every bijection, so it can only add witnesses.
            if (by_nook) {
                EXPECT_EQ(by_orders, "true");
            }
            ++compared;
        }
        EXPECT_EQ(parse_report(run({"iso", temp_file("a.txt", format_arrangement_file(a)),
                                    temp_file("o.txt", format_arrangement_file(b)), "--mode", "nook"})
                                   .out)["isomorphic"],
                  "true");
    }
    EXPECT_EQ(compared, 60);
}

TEST(Cli, EctApplicable) {
    const std::string tri = temp_file("tri.txt", triangle);
    Outcome wrong = run({"ect", tri, "1", "2", "3"});
    EXPECT_EQ(wrong.code, 4);
    EXPECT_NE(wrong.err.find("NOT_A_TRIANGLE"), std::string::npos);

    Outcome ok = run({"ect", tri, "b", "a", "c"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    auto r = parse_report(ok.out);
    EXPECT_EQ(r["cleared"], "false");
    EXPECT_EQ(r["vertex.1-2.before"], "(1,2)");
    EXPECT_EQ(r["vertex.1-2.after"], "(2,1)");
    ArrangementFile moved = parse_arrangement_file(ok.out.substr(ok.out.find('#')));
    EXPECT_EQ(moved.names(), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(moved.records[2].line, LineEq(Rational(1), Rational(1), Rational(-1)));

    const std::string out = temp_file("moved.txt", "");
    Outcome written = run({"ect", tri, "2", "1", "3", "--c2", "-5", "-o", out});
    ASSERT_EQ(written.code, 0) << written.err;
    EXPECT_EQ(parse_arrangement_file(slurp(out)).records[2].line, LineEq(Rational(1), Rational(1), Rational(-5)));
    EXPECT_EQ(run({"ect", tri, "2", "1", "3", "--c2", "1/2"}).code, 4);
}

TEST(Cli, EctBlockedAndCleared) {
    const std::string text = "line p 0 1 0\nline q 1 -1 0\nline r 1 0 3\nline s -1/10 1 -11/10\nline t 1/10 1 -9/10\n";
    const std::string path = temp_file("blocked.txt", text);
    Arrangement a = parse_arrangement_file(text).arrangement();
    int blocked = 0;
    for (auto [i, j, k] : ect_triangles(a)) {
        if (ect_applicable(a, i, j, k))
            continue;
        ++blocked;
        std::vector<std::string> args{"ect", path, std::to_string(i + 1), std::to_string(j + 1), std::to_string(k + 1)};
        Outcome refused = run(args);
        EXPECT_EQ(refused.code, 4);
        EXPECT_NE(refused.err.find("STRIP_VIOLATION"), std::string::npos);
        args.push_back("--auto-clear");
        Outcome cleared = run(args);
        ASSERT_EQ(cleared.code, 0) << cleared.err;
        EXPECT_EQ(parse_report(cleared.out)["cleared"], "true");
        Arrangement after = parse_arrangement_file(cleared.out.substr(cleared.out.find('#'))).arrangement();
        EXPECT_EQ(after.size(), 5);
    }
    EXPECT_GT(blocked, 0);
}

TEST(Cli, Fold) {
    auto conc = parse_report(run({"fold", temp_file("f1.txt", "line a 0 1 0\nline b 1 0 0\nline c 1 -1 0\n")}).out);
    EXPECT_EQ(conc["total"], "6");
    EXPECT_EQ(conc["agrees"], "true");
    auto par = parse_report(run({"fold", temp_file("f2.txt", "line a 0 1 0\nline b 0 1 1\nline c 1 0 0\n")}).out);
    EXPECT_EQ(par["total"], "6");
    EXPECT_EQ(par["formula.bounded"], "n/a");
    EXPECT_EQ(par["oracle.total"], "6");
    auto mult = parse_report(run({"fold", temp_file("f3.txt", "line a 0 1 0 3\nline b 1 0 0 2\n")}).out);
    EXPECT_EQ(mult["d"], "2");
    EXPECT_EQ(mult["degree"], "5");
    EXPECT_EQ(mult["total"], "4");

    std::mt19937 rng(84);
    for (int n = 1; n <= 6; ++n) {
        auto g = parse_report(run({"fold", temp_file("g.txt", format_arrangement_file(random_arrangement(rng, n)))}).out);
        RegionCounts want = region_counts(n);
        EXPECT_EQ(g["total"], std::to_string(want.total));
        EXPECT_EQ(g["formula.bounded"], std::to_string(want.bounded));
        EXPECT_EQ(g["agrees"], "true");
    }
}

TEST(Cli, Svg) {
    Outcome tri = run({"svg", temp_file("tri.txt", triangle)});
    ASSERT_EQ(tri.code, 0) << tri.err;
    EXPECT_EQ(count(tri.out, "<line "), 3u);
    EXPECT_EQ(count(tri.out, "<polygon "), 1u);
    EXPECT_EQ(count(tri.out, "class=\"vertex\""), 3u);
    EXPECT_EQ(run({"svg", temp_file("tri.txt", triangle)}).out, tri.out);
    // Only integers in coordinates.
    std::regex attr("(x1|y1|x2|y2|cx|cy)=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(tri.out.begin(), tri.out.end(), attr); it != std::sregex_iterator(); ++it)
        EXPECT_TRUE(std::regex_match((*it)[2].str(), std::regex("-?[0-9]+"))) << (*it)[0];

    const std::string quad = temp_file("quad.txt", "line a 0 1 0\nline b 1 0 0\nline c 1 1 1\nline d 1 -1 -7/2\n");
    Outcome marked = run({"svg", quad, "--quad", "1", "2", "3", "4"});
    ASSERT_EQ(marked.code, 0) << marked.err;
    EXPECT_EQ(count(marked.out, "class=\"quad"), 6u);
    EXPECT_EQ(count(marked.out, "class=\"quad nook\""), 1u);
    EXPECT_EQ(run({"svg", quad, "--quad", "1", "2", "3", "3"}).code, 4);

    const std::string out = temp_file("fig.svg", "");
    EXPECT_EQ(run({"svg", quad, "-o", out}).code, 0);
    EXPECT_EQ(slurp(out), run({"svg", quad}).out);
}

TEST(Cli, Graph) {
    Outcome three = run({"graph", "3"});
    ASSERT_EQ(three.code, 0) << three.err;
    EXPECT_EQ(count(three.out, "CLASS "), 1u);
    EXPECT_GT(count(three.out, "EDGE "), 0u);
    EXPECT_EQ(run({"graph", "3"}).out, three.out);
    EXPECT_EQ(run({"graph", "7"}).code, 4);
}
