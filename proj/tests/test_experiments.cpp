#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "twotype/experiments.hpp"

using namespace twotype;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

SweepSpec tiny_er_spec() {
    SweepSpec s;
    s.name = "tiny";
    s.model = Model::Er;
    s.size = 300;
    s.replicates = 3;
    s.master_seed = 9;
    s.swept = "beta";
    s.grid = {0.0, 0.5, 1.0, 1.2};
    s.fixed = {{"p1", 0.5}, {"mu1", 0.5}, {"mu2", 1.2}};
    s.derived = {DerivedRule::ErAlphasFromMeans};
    return s;
}

} // namespace

TEST_CASE("spec validation") {
    SweepSpec s = tiny_er_spec();
    SUBCASE("accepts a valid spec") { CHECK_NOTHROW(s.validate()); }
    SUBCASE("rejects non-increasing grids") {
        s.grid = {0.0, 0.0};
        CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    }
    SUBCASE("rejects empty grids") {
        s.grid.clear();
        CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    }
    SUBCASE("rejects zero replicates") {
        s.replicates = 0;
        CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    }
    SUBCASE("names the missing parameter") {
        s.fixed.erase("mu2");
        CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("mu2"), std::invalid_argument);
    }
    SUBCASE("rejects metrics that do not apply") {
        s.metrics = {Metric::Exponents};
        CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    }
}

TEST_CASE("complete graph point gives fraction 1") {
    SweepSpec s;
    s.name = "complete";
    s.model = Model::Er;
    s.size = 3;
    s.replicates = 1;
    s.master_seed = 4;
    s.swept = "beta";
    s.grid = {50.0};
    s.fixed = {{"p1", 0.5}, {"alpha1", 50.0}, {"alpha2", 50.0}};
    const SweepResult r = run_sweep(s);
    REQUIRE(r.rows.size() == 1);
    const auto it = std::find(r.columns.begin(), r.columns.end(), "largest_frac_mean");
    REQUIRE(it != r.columns.end());
    CHECK(*r.rows[0].cells[it - r.columns.begin()] == doctest::Approx(1.0));
}

TEST_CASE("infeasible grid points are flagged and carry no numbers") {
    // beta grid reaches past min(mu1/p2, mu2/p1) = 1.0
    const SweepResult r = run_sweep(tiny_er_spec());
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[0].feasible);
    CHECK(r.rows[2].feasible); // beta = 1.0 is the boundary, still feasible
    CHECK(!r.rows[3].feasible);
    CHECK(r.rows[3].flags.find("infeasible") != std::string::npos);
    for (const auto& cell : r.rows[3].cells) CHECK(!cell.has_value());
}

TEST_CASE("run_sweep is deterministic and parallel-invariant") {
    const SweepResult a = run_sweep(tiny_er_spec(), 1);
    const SweepResult b = run_sweep(tiny_er_spec(), 4);
    CHECK(sweep_csv(a) == sweep_csv(b));
    const SweepResult c = run_sweep(tiny_er_spec(), 1);
    CHECK(sweep_csv(a) == sweep_csv(c));

    SUBCASE("cm and pa sweeps too") {
        SweepSpec cm;
        cm.name = "cm_tiny";
        cm.model = Model::Cm;
        cm.size = 500;
        cm.replicates = 2;
        cm.master_seed = 77;
        cm.swept = "one_minus_xi1";
        cm.grid = {0.0, 0.3, 0.6};
        cm.fixed = {{"p1", 0.5}};
        cm.derived = {DerivedRule::CmBalanceXi2};
        cm.f1 = {DistSpec::Kind::Poisson, 0.5};
        cm.f2 = {DistSpec::Kind::YuleSimon, 1.5};
        CHECK(sweep_csv(run_sweep(cm, 1)) == sweep_csv(run_sweep(cm, 3)));

        SweepSpec pa;
        pa.name = "pa_tiny";
        pa.model = Model::Pa;
        pa.size = 5000;
        pa.replicates = 1;
        pa.master_seed = 78;
        pa.swept = "case";
        pa.grid = {1, 2, 3, 4, 5};
        pa.derived = {DerivedRule::PaCaseParams};
        CHECK(sweep_csv(run_sweep(pa, 1)) == sweep_csv(run_sweep(pa, 5)));
    }
}

TEST_CASE("pa case sweep echoes the case parameters and analytic columns") {
    SweepSpec pa;
    pa.name = "pa_cases";
    pa.model = Model::Pa;
    pa.size = 20000;
    pa.replicates = 1;
    pa.master_seed = 5;
    pa.swept = "case";
    pa.grid = {4};
    pa.derived = {DerivedRule::PaCaseParams};
    pa.metrics = {Metric::Exponents, Metric::CrossDegrees};
    const SweepResult r = run_sweep(pa);
    auto cell = [&](const std::string& name) {
        const auto it = std::find(r.columns.begin(), r.columns.end(), name);
        REQUIRE(it != r.columns.end());
        return *r.rows[0].cells[it - r.columns.begin()];
    };
    CHECK(cell("p1") == doctest::Approx(0.1));
    CHECK(cell("theta1") == doctest::Approx(0.8));
    CHECK(cell("gamma1") == doctest::Approx(1.125));
    CHECK(cell("gamma2") == doctest::Approx(5.5));
    CHECK(cell("n21_pred") == doctest::Approx(0.74 / 0.9));
    CHECK(cell("n12_pred") == doctest::Approx(7.4));
}

TEST_CASE("csv structure") {
    const SweepResult r = run_sweep(tiny_er_spec());
    const std::string csv = sweep_csv(r);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line.rfind("beta,alpha1,alpha2,lambda_c,largest_frac_mean", 0) == 0);
    CHECK(line.find(",flags") != std::string::npos);
    std::size_t data_rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++data_rows;
    CHECK(data_rows == 4);

    SUBCASE("empty result is a header-only file") {
        SweepResult empty;
        empty.spec = tiny_er_spec();
        empty.columns = {"lambda_c"};
        const std::string s = sweep_csv(empty);
        CHECK(s == "beta,lambda_c,flags\n");
    }
    SUBCASE("single-point result is a 2-line file") {
        SweepSpec one = tiny_er_spec();
        one.grid = {0.5};
        one.replicates = 1;
        const std::string s = sweep_csv(run_sweep(one));
        CHECK(std::count(s.begin(), s.end(), '\n') == 2);
    }
    SUBCASE("metric csv artifacts carry the provenance comment") {
        const std::string s = sweep_metric_csv(r, Metric::Components);
        CHECK(s.rfind("# twotype ", 0) == 0);
        CHECK(s.find("largest_frac_mean") != std::string::npos);
        CHECK(s.find("alpha1") == std::string::npos); // lambda_c columns excluded
    }
}

TEST_CASE("json config round trip") {
    const SweepSpec s = tiny_er_spec();
    const std::string j = sweep_to_json(s);
    const SweepSpec back = sweep_from_json(j);
    CHECK(sweep_to_json(back) == j);
    CHECK(back.grid == s.grid);
    CHECK(back.fixed.at("mu2") == 1.2);
    CHECK_THROWS_AS(sweep_from_json("{not json"), std::invalid_argument);
}

TEST_CASE("preset catalog") {
    CHECK_THROWS_WITH_AS(preset("nope"), doctest::Contains("Available presets"),
                         std::invalid_argument);
    SUBCASE("documented examples resolve") {
        const SweepSpec ex2 = preset("fig_ER_Ex2");
        CHECK(ex2.model == Model::Er);
        CHECK(ex2.fixed.at("mu1") == 0.5);
        CHECK(ex2.fixed.at("mu2") == 1.2);
        CHECK(ex2.replicates == 100);
        CHECK(ex2.size == 10000);

        const SweepSpec c4 = preset("table2_caseIV");
        CHECK(c4.model == Model::Pa);
        CHECK(c4.grid == std::vector<double>{4.0});

        const SweepSpec poys = preset("fig_CM_PoYS");
        CHECK(poys.model == Model::Cm);
        CHECK(poys.f1.kind == DistSpec::Kind::Poisson);
        CHECK(poys.f2.kind == DistSpec::Kind::YuleSimon);
        CHECK(poys.f2.mean == 1.1);

        const SweepSpec ex5 = preset("fig_ER_Ex5");
        CHECK(ex5.swept == "p1");
        CHECK(ex5.fixed.at("alpha1") == 1.1);
        CHECK(ex5.fixed.at("alpha2") == 1.5);
        CHECK(ex5.fixed.at("beta") == 0.5);
    }
    SUBCASE("aliases") {
        CHECK(preset("fig1").name == "fig_ER_Ex2");
        CHECK(preset("fig_ER_Ex2(2)").name == "fig_ER_Ex2_2");
        CHECK(preset("fig9").name == "fig_PA_loglog_caseI");
    }
    SUBCASE("every catalog entry validates") {
        for (const PresetInfo& info : preset_catalog()) CHECK_NOTHROW(preset(info.name).validate());
    }
}

TEST_CASE("exported preset files match the built-in catalog") {
    for (const PresetInfo& info : preset_catalog()) {
        const std::string path = std::string(TWOTYPE_REPO_ROOT) + "/presets/" + info.name + ".json";
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), "missing preset export: " << path);
        std::ostringstream os;
        os << in.rdbuf();
        CHECK_MESSAGE(sweep_to_json(sweep_from_json(os.str())) == sweep_to_json(preset(info.name)),
                      "preset export out of date: " << path);
    }
}

TEST_CASE("golden sweep csv") {
    const std::string root(TWOTYPE_REPO_ROOT);
    const SweepSpec spec = load_sweep_config(root + "/tests/data/golden_er_small.json");
    const SweepResult r = run_sweep(spec);
    CHECK(sweep_csv(r) == slurp(root + "/tests/data/golden_er_small.csv"));
}

TEST_CASE("plots") {
    SUBCASE("one series with two points renders exactly one polyline") {
        SweepResult r;
        r.spec = tiny_er_spec();
        r.spec.metrics = {Metric::Components};
        r.columns = {"largest_frac_mean"};
        r.rows.push_back({0.0, true, "", {0.25}});
        r.rows.push_back({1.0, true, "", {0.75}});
        const std::string svg = sweep_plot_svg(r, PlotKind::Line);
        CHECK(count_substr(svg, "<polyline") == 1);
        CHECK(count_substr(svg, "<svg") == 1);
    }
    SUBCASE("loglog of synthetic k^-2 ccdf annotates slope -2.00") {
        SweepResult r;
        r.spec = tiny_er_spec();
        r.spec.model = Model::Pa;
        r.spec.metrics = {Metric::Ccdf};
        r.rows.push_back({1.0, true, "", {}});
        CurveSeries s;
        s.name = "ccdf_type1";
        for (std::uint64_t k = 1; k <= 10000; ++k)
            s.points.emplace_back(static_cast<double>(k), std::pow(static_cast<double>(k), -2.0));
        r.curves.push_back(s);
        const std::string svg = sweep_plot_svg(r, PlotKind::LogLog);
        CHECK(svg.find("slope=-2.00") != std::string::npos);
    }
    SUBCASE("empty result is an error") {
        SweepResult r;
        r.spec = tiny_er_spec();
        CHECK_THROWS_AS(sweep_plot_svg(r, PlotKind::Line), std::invalid_argument);
    }
}

TEST_CASE("write_artifacts produces a csv and svg per metric") {
    SweepSpec s = tiny_er_spec();
    s.grid = {0.0, 0.5, 1.0};
    const SweepResult r = run_sweep(s);
    const std::string dir = ".";
    const auto written = write_artifacts(r, dir);
    REQUIRE(written.size() == 4); // lambda_c + components, csv + svg each
    for (const std::string& path : written) {
        std::ifstream in(path);
        CHECK(in.good());
    }
    // byte-identical on rerun
    const std::string first = slurp(written[0]);
    write_artifacts(run_sweep(s), dir);
    CHECK(slurp(written[0]) == first);
    for (const std::string& path : written) std::remove(path.c_str());
}
