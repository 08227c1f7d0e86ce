#include "doctest.h"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "modspace/serialize.hpp"

using namespace modspace;
namespace fs = std::filesystem;

namespace {

std::string tmp_path(const std::string& name) {
    return (fs::temp_directory_path() / ("msk_serialize_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.is_open());
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("binary signal container round-trips bit-exactly") {
    GridSpec g = make_grid(1, 8, 16);
    SampledSignal f = sample(g, SignalSpec::bandlimited_noise(31, 5.0));
    std::string path = tmp_path("sig.msk1");
    write_signal(path, f);

    std::string raw = slurp(path);
    REQUIRE(raw.size() == 32 + f.v.size() * 16);
    CHECK(raw.compare(0, 4, "MSK1") == 0);
    std::uint32_t fields[7];
    std::memcpy(fields, raw.data() + 4, sizeof fields);
    CHECK(fields[0] == 1);   // d
    CHECK(fields[1] == 8);   // L
    CHECK(fields[2] == 16);  // n
    CHECK(fields[3] == 0);   // flags: grid signal
    CHECK(fields[6] == 0);   // reserved

    SampledSignal back = read_signal(path);
    CHECK(back.grid == g);
    REQUIRE(back.v.size() == f.v.size());
    CHECK(std::memcmp(back.v.data(), f.v.data(), f.v.size() * sizeof(cplx)) == 0);
}

TEST_CASE("json sidecar round-trips exactly for small signals") {
    GridSpec g = make_grid(1, 2, 8);
    SampledSignal f = sample(g, SignalSpec::bandlimited_noise(32, 3.0));
    std::string path = tmp_path("sig.json");
    write_signal_json(path, f);
    SampledSignal back = read_signal_json(path);
    CHECK(back.grid == g);
    REQUIRE(back.v.size() == f.v.size());
    for (std::size_t i = 0; i < f.v.size(); ++i) CHECK(back.v[i] == f.v[i]);
}

TEST_CASE("coefficient tables round-trip with regenerated lattice coordinates") {
    GridSpec g = make_grid(1, 4, 8);
    WindowPair wp = make_window_pair(g, 2.0);
    GaborCoefficients c = analyze(sample(g, SignalSpec::bandlimited_noise(33, 4.0)), wp.phi);
    std::string path = tmp_path("coef.msk1");
    write_gabor(path, c);
    GaborCoefficients back = read_gabor(path);
    CHECK(back.grid == g);
    CHECK(back.tail_ratio == c.tail_ratio);
    REQUIRE(back.table.value.size() == c.table.value.size());
    CHECK(std::memcmp(back.table.value.data(), c.table.value.data(),
                      c.table.value.size() * sizeof(cplx)) == 0);
    REQUIRE(back.table.j_coord.size() == c.table.j_coord.size());
    REQUIRE(back.table.k_coord.size() == c.table.k_coord.size());
    for (std::size_t i = 0; i < c.table.j_coord.size(); ++i)
        CHECK(back.table.j_coord[i] == doctest::Approx(c.table.j_coord[i]).epsilon(1e-15));
    for (std::size_t i = 0; i < c.table.k_coord.size(); ++i)
        CHECK(back.table.k_coord[i] == doctest::Approx(c.table.k_coord[i]).epsilon(1e-15));

    // signal readers refuse tables and vice versa
    CHECK_THROWS(read_signal(path));
    CHECK_THROWS(read_gabor(tmp_path("sig.msk1")));
}

TEST_CASE("malformed containers are rejected") {
    std::string bad = tmp_path("bad.msk1");
    {
        std::ofstream os(bad, std::ios::binary);
        os << "JUNKJUNKJUNKJUNKJUNKJUNKJUNKJUNK";
    }
    CHECK_THROWS(read_signal(bad));

    GridSpec g = make_grid(1, 2, 8);
    std::string cut = tmp_path("cut.msk1");
    write_signal(cut, sample(g, SignalSpec::constant(1.0)));
    fs::resize_file(cut, 40);  // header survives, payload does not
    CHECK_THROWS(read_signal(cut));
    CHECK_THROWS(read_signal(tmp_path("nonexistent.msk1")));
}

TEST_CASE("weight descriptors") {
    Weight poly = Weight::polynomial(2.5, 2);
    nlohmann::json j = weight_to_json(poly);
    CHECK(j.at("kind") == "polynomial");
    Weight back = weight_from_json(j);
    CHECK(weight_to_json(back) == j);
    double x[2] = {1.5, -0.5};
    CHECK(back.eval(x) == poly.eval(x));

    Weight split = Weight::split(Weight::polynomial(1.0, 1).first,
                                 Weight::subexponential(0.7, 2.0, 1).first);
    nlohmann::json js = weight_to_json(split);
    CHECK(js.at("kind") == "split");
    Weight sback = weight_from_json(js);
    CHECK(sback.is_split());
    CHECK(sback.eval(x) == split.eval(x));

    std::string path = tmp_path("weight.json");
    {
        std::ofstream os(path);
        os << js.dump();
    }
    CHECK(read_weight(path).eval(x) == split.eval(x));
    CHECK_THROWS(weight_from_json(nlohmann::json{{"kind", "mystery"}}));
}

TEST_CASE("step symbol descriptors cover the named kinds and cell tables") {
    using nlohmann::json;
    StepSymbol h = step_symbol_from_json(json{{"kind", "hilbert"}, {"b", 1.0}});
    CHECK(h.value({3}) == cplx{0.0, -1.0});
    CHECK(h.value({-3}) == cplx{0.0, 1.0});
    CHECK_THROWS(step_symbol_from_json(json{{"kind", "hilbert"}, {"b", {1.0, 1.0}}}));

    StepSymbol c = step_symbol_from_json(json{{"kind", "constant"},
                                              {"b", 2.0},
                                              {"value", {2.0, -1.0}}});
    CHECK(c.value({5}) == cplx{2.0, -1.0});

    StepSymbol alt = step_symbol_from_json(json{{"kind", "alternating"}, {"b", {1.0, 0.5}}});
    CHECK(alt.dim == 2);
    CHECK(alt.value({1, 2}) == cplx{-1.0, 0.0});

    StepSymbol u = step_symbol_from_json(json{{"kind", "unimodular"}, {"b", 0.5}, {"seed", 9}});
    StepSymbol u_direct = random_unimodular_symbol(1, 0.5, 9);
    for (long m : {-3L, 0L, 7L}) CHECK(u.value({m}) == u_direct.value({m}));

    StepSymbol t = step_symbol_from_json(json{
        {"b", 1.0},
        {"cells", {{{"j", 0}, {"value", 1.5}}, {{"j", 2}, {"value", {0.0, -1.0}}}}}});
    CHECK(t.value({0}) == cplx{1.5, 0.0});
    CHECK(t.value({2}) == cplx{0.0, -1.0});
    CHECK(t.value({1}) == cplx{0.0, 0.0});  // absent cells read as zero

    CHECK_THROWS(step_symbol_from_json(json{{"kind", "mystery"}, {"b", 1.0}}));
    CHECK_THROWS(step_symbol_from_json(
        json{{"b", 1.0}, {"cells", {{{"j", {0, 0}}, {"value", 1.0}}}}}));

    std::string path = tmp_path("symbol.json");
    {
        std::ofstream os(path);
        os << json{{"kind", "hilbert"}, {"b", 1.0}}.dump();
    }
    CHECK(read_step_symbol(path).value({1}) == cplx{0.0, -1.0});
}

TEST_CASE("number formatting is shortest-round-trip") {
    CHECK(fmt_double(0.1) == "0.1");
    CHECK(fmt_double(2.0) == "2");
    CHECK(fmt_double(-1.5) == "-1.5");
    double third = 1.0 / 3.0;
    CHECK(std::stod(fmt_double(third)) == third);
    double big = 6.02214076e23;
    CHECK(std::stod(fmt_double(big)) == big);

    CHECK(fmt_exponent(Exponent::infinity()) == "inf");
    CHECK(fmt_exponent(Exponent::of(1.5)) == "1.5");
    CHECK(fmt_complex(cplx{1.5, -2.0}) == "1.5-2j");
    CHECK(fmt_complex(cplx{0.0, 3.0}) == "0+3j");
}

TEST_CASE("csv rows and golden coefficient dump") {
    InequalityReport rep;
    rep.admissible = true;
    rep.lhs = 16.0;
    rep.rhs_product = 4.0;
    rep.ratio = 4.0;
    rep.holds = false;
    CHECK(inequality_csv_row(7, {Exponent::of(0.5), Exponent::infinity()}, rep) ==
          "7,0.5 inf,16,4,4,0");

    GaborCoefficients tiny;
    tiny.grid = make_grid(1, 2, 8);
    tiny.table.j_count = 1;
    tiny.table.k_count = 2;
    tiny.table.dj = 1;
    tiny.table.dk = 1;
    tiny.table.j_coord = {3.0};
    tiny.table.k_coord = {0.5, -1.0};
    tiny.table.value = {cplx{1.0, -2.0}, cplx{0.25, 0.0}};
    std::string path = tmp_path("tiny.csv");
    write_gabor_csv(path, tiny);
    CHECK(slurp(path) == "j,k,re,im\n3,0.5,1,-2\n3,-1,0.25,0\n");

    OperatorGaborMatrix A;
    A.grid = make_grid(1, 2, 8);
    A.idx = {{1, 0, 2, 0, -1, 0, 3, 0}};
    A.a = {cplx{0.5, -0.25}};
    std::string mpath = tmp_path("matrix.csv");
    write_matrix_csv(mpath, A);
    CHECK(slurp(mpath) ==
          "row_pos,row_freq,col_pos,col_freq,re,im\n1,2,-1,3,0.5,-0.25\n");
}

}  // TEST_SUITE
