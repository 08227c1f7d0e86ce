#include "modspace/serialize.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace modspace {

static_assert(std::endian::native == std::endian::little,
              "MSK1 files are little-endian; byte swapping is not implemented");

// shortest round-trip decimal form
std::string fmt_double(double v) {
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

std::string fmt_complex(const cplx& z) {
    return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "j";
}

std::string fmt_exponent(const Exponent& e) { return e.is_inf() ? "inf" : fmt_double(e.v); }

namespace {

constexpr char kMagic[4] = {'M', 'S', 'K', '1'};

struct Header {
    std::uint32_t d = 0, L = 0, n = 0, flags = 0, j_count = 0, k_count = 0;
};

void write_header(std::ofstream& os, const Header& h) {
    os.write(kMagic, 4);
    std::uint32_t fields[7] = {h.d, h.L, h.n, h.flags, h.j_count, h.k_count, 0};
    os.write(reinterpret_cast<const char*>(fields), sizeof fields);
}

Header read_header(std::ifstream& is, const std::string& path) {
    char magic[4];
    std::uint32_t fields[7];
    is.read(magic, 4);
    is.read(reinterpret_cast<char*>(fields), sizeof fields);
    require(is.good() && std::memcmp(magic, kMagic, 4) == 0, "not an MSK1 file: " + path);
    return {fields[0], fields[1], fields[2], fields[3], fields[4], fields[5]};
}

void write_values(std::ofstream& os, const std::vector<cplx>& v) {
    // std::complex<double> is layout-compatible with double[2] (re, im)
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(cplx)));
}

void read_values(std::ifstream& is, std::vector<cplx>& v, const std::string& path) {
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(cplx)));
    require(is.good(), "truncated MSK1 payload: " + path);
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::binary) {
    std::ofstream os(path, mode);
    require(os.is_open(), "cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::binary) {
    std::ifstream is(path, mode);
    require(is.is_open(), "cannot open for reading: " + path);
    return is;
}

}  // namespace

void write_signal(const std::string& path, const SampledSignal& f) {
    std::ofstream os = open_out(path);
    write_header(os, {static_cast<std::uint32_t>(f.grid.d), static_cast<std::uint32_t>(f.grid.L),
                      static_cast<std::uint32_t>(f.grid.n), 0, 0, 0});
    write_values(os, f.v);
    require(os.good(), "write failed: " + path);
}

SampledSignal read_signal(const std::string& path) {
    std::ifstream is = open_in(path);
    Header h = read_header(is, path);
    require(h.flags == 0, "MSK1 file holds a coefficient table, not a signal: " + path);
    SampledSignal f = zero_signal(make_grid(static_cast<int>(h.d), static_cast<int>(h.L),
                                            static_cast<int>(h.n)));
    read_values(is, f.v, path);
    return f;
}

void write_signal_json(const std::string& path, const SampledSignal& f) {
    nlohmann::json j;
    j["format"] = "msk-signal";
    j["d"] = f.grid.d;
    j["L"] = f.grid.L;
    j["n"] = f.grid.n;
    nlohmann::json vals = nlohmann::json::array();
    for (cplx v : f.v) vals.push_back({v.real(), v.imag()});
    j["values"] = std::move(vals);
    std::ofstream os = open_out(path, std::ios::out);
    os << j.dump(1, '\t') << '\n';
    require(os.good(), "write failed: " + path);
}

SampledSignal read_signal_json(const std::string& path) {
    std::ifstream is = open_in(path, std::ios::in);
    nlohmann::json j = nlohmann::json::parse(is);
    require(j.value("format", "") == std::string("msk-signal"),
            "not a signal descriptor: " + path);
    SampledSignal f = zero_signal(make_grid(j.at("d"), j.at("L"), j.at("n")));
    const nlohmann::json& vals = j.at("values");
    require(vals.size() == f.v.size(), "value count does not match the grid: " + path);
    for (std::size_t i = 0; i < f.v.size(); ++i)
        f.v[i] = cplx{vals[i].at(0).get<double>(), vals[i].at(1).get<double>()};
    return f;
}

void write_gabor(const std::string& path, const GaborCoefficients& c) {
    std::ofstream os = open_out(path);
    write_header(os, {static_cast<std::uint32_t>(c.grid.d), static_cast<std::uint32_t>(c.grid.L),
                      static_cast<std::uint32_t>(c.grid.n), 1,
                      static_cast<std::uint32_t>(c.table.j_count),
                      static_cast<std::uint32_t>(c.table.k_count)});
    os.write(reinterpret_cast<const char*>(&c.tail_ratio), sizeof c.tail_ratio);
    write_values(os, c.table.value);
    require(os.good(), "write failed: " + path);
}

GaborCoefficients read_gabor(const std::string& path) {
    std::ifstream is = open_in(path);
    Header h = read_header(is, path);
    require(h.flags == 1, "MSK1 file holds a signal, not a coefficient table: " + path);
    GaborCoefficients c;
    c.grid = make_grid(static_cast<int>(h.d), static_cast<int>(h.L), static_cast<int>(h.n));
    const int d = c.grid.d, L = c.grid.L, n = c.grid.n;
    const std::size_t P = d == 1 ? static_cast<std::size_t>(L)
                                 : static_cast<std::size_t>(L) * static_cast<std::size_t>(L);
    const std::size_t K = d == 1 ? static_cast<std::size_t>(2 * n)
                                 : static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(2 * n);
    require(h.j_count == P && h.k_count == K, "table shape does not match the grid: " + path);
    IndexedCoefficients& t = c.table;
    t.j_count = P;
    t.k_count = K;
    t.dj = d;
    t.dk = d;
    t.value.assign(P * K, cplx{0.0, 0.0});
    t.j_coord.resize(P * static_cast<std::size_t>(d));
    t.k_coord.resize(K * static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < P; ++j) {
        if (d == 1) {
            t.j_coord[j] = static_cast<double>(j) - L / 2;
        } else {
            t.j_coord[j * 2] = static_cast<double>(j / static_cast<std::size_t>(L)) - L / 2;
            t.j_coord[j * 2 + 1] = static_cast<double>(j % static_cast<std::size_t>(L)) - L / 2;
        }
    }
    for (std::size_t k = 0; k < K; ++k) {
        if (d == 1) {
            t.k_coord[k] = pi * (static_cast<double>(k) - n);
        } else {
            std::size_t ax = static_cast<std::size_t>(2 * n);
            t.k_coord[k * 2] = pi * (static_cast<double>(k / ax) - n);
            t.k_coord[k * 2 + 1] = pi * (static_cast<double>(k % ax) - n);
        }
    }
    is.read(reinterpret_cast<char*>(&c.tail_ratio), sizeof c.tail_ratio);
    read_values(is, t.value, path);
    return c;
}

void write_gabor_csv(const std::string& path, const GaborCoefficients& c) {
    std::ofstream os = open_out(path, std::ios::out);
    os << "j,k,re,im\n";
    const int d = c.grid.d;
    for (std::size_t j = 0; j < c.table.j_count; ++j) {
        for (std::size_t k = 0; k < c.table.k_count; ++k) {
            for (int a = 0; a < d; ++a)
                os << (a ? " " : "") << fmt_double(c.table.j_coord[j * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)]);
            os << ',';
            for (int a = 0; a < d; ++a)
                os << (a ? " " : "") << fmt_double(c.table.k_coord[k * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)]);
            cplx v = c.table.at(j, k);
            os << ',' << fmt_double(v.real()) << ',' << fmt_double(v.imag()) << '\n';
        }
    }
    require(os.good(), "write failed: " + path);
}

// ---------------------------------------------------------------------------
// JSON descriptors
// ---------------------------------------------------------------------------

namespace {

WeightPart part_from_json(const nlohmann::json& j) {
    WeightPart p;
    p.dim = j.value("dim", 1);
    std::string kind = j.at("kind");
    if (kind == "constant") {
        p.kind = WeightPart::Kind::constant;
    } else if (kind == "polynomial") {
        p.kind = WeightPart::Kind::polynomial;
        p.t = j.at("t");
    } else if (kind == "subexp") {
        p.kind = WeightPart::Kind::subexponential;
        p.r = j.at("r");
        p.s = j.value("s", 1.0);
    } else {
        fail("unknown weight kind: " + kind);
    }
    return p;
}

nlohmann::json part_to_json(const WeightPart& p) {
    nlohmann::json j;
    j["dim"] = p.dim;
    switch (p.kind) {
        case WeightPart::Kind::constant: j["kind"] = "constant"; break;
        case WeightPart::Kind::polynomial:
            j["kind"] = "polynomial";
            j["t"] = p.t;
            break;
        case WeightPart::Kind::subexponential:
            j["kind"] = "subexp";
            j["r"] = p.r;
            j["s"] = p.s;
            break;
    }
    return j;
}

}  // namespace

Weight weight_from_json(const nlohmann::json& j) {
    if (j.at("kind") == "split")
        return Weight::split(part_from_json(j.at("position")), part_from_json(j.at("frequency")));
    Weight w;
    w.first = part_from_json(j);
    return w;
}

nlohmann::json weight_to_json(const Weight& w) {
    if (!w.is_split()) return part_to_json(w.first);
    nlohmann::json j;
    j["kind"] = "split";
    j["position"] = part_to_json(w.first);
    j["frequency"] = part_to_json(*w.second);
    return j;
}

Weight read_weight(const std::string& path) {
    std::ifstream is = open_in(path, std::ios::in);
    return weight_from_json(nlohmann::json::parse(is));
}

StepSymbol step_symbol_from_json(const nlohmann::json& j) {
    std::vector<double> b;
    const nlohmann::json& jb = j.at("b");
    if (jb.is_array())
        b = jb.get<std::vector<double>>();
    else
        b = {jb.get<double>()};
    int dim = static_cast<int>(b.size());
    std::string kind = j.value("kind", "table");
    if (kind == "constant") {
        const nlohmann::json& v = j.at("value");
        cplx c = v.is_array() ? cplx{v.at(0), v.at(1)} : cplx{v.get<double>(), 0.0};
        return constant_symbol(dim, b[0], c);
    }
    if (kind == "hilbert") {
        require(dim == 1, "hilbert symbol is one-dimensional");
        return hilbert_symbol(b[0]);
    }
    if (kind == "alternating") return alternating_symbol(dim, b[0]);
    if (kind == "unimodular")
        return random_unimodular_symbol(dim, b[0], j.value("seed", std::uint64_t{1}));
    if (kind == "linf")
        return random_linf_symbol(dim, b[0], j.value("seed", std::uint64_t{1}),
                                  j.value("sup", 1.0));
    require(kind == "table", "unknown symbol kind: " + kind);
    std::map<std::vector<long>, cplx> cells;
    for (const nlohmann::json& cell : j.at("cells")) {
        std::vector<long> m;
        const nlohmann::json& jj = cell.at("j");
        if (jj.is_array())
            m = jj.get<std::vector<long>>();
        else
            m = {jj.get<long>()};
        require(static_cast<int>(m.size()) == dim, "cell index dimension mismatch");
        const nlohmann::json& v = cell.at("value");
        cells[m] = v.is_array() ? cplx{v.at(0), v.at(1)} : cplx{v.get<double>(), 0.0};
    }
    return table_symbol(b, std::move(cells));
}

StepSymbol read_step_symbol(const std::string& path) {
    std::ifstream is = open_in(path, std::ios::in);
    return step_symbol_from_json(nlohmann::json::parse(is));
}

void write_matrix_csv(const std::string& path, const OperatorGaborMatrix& A) {
    std::ofstream os = open_out(path, std::ios::out);
    os << "row_pos,row_freq,col_pos,col_freq,re,im\n";
    const int d = A.grid.d;
    auto field = [&](std::ostream& o, int a0, int a1) {
        o << a0;
        if (d == 2) o << ' ' << a1;
    };
    for (std::size_t e = 0; e < A.a.size(); ++e) {
        const std::array<int, 8>& ix = A.idx[e];
        field(os, ix[0], ix[1]);
        os << ',';
        field(os, ix[2], ix[3]);
        os << ',';
        field(os, ix[4], ix[5]);
        os << ',';
        field(os, ix[6], ix[7]);
        os << ',' << fmt_double(A.a[e].real()) << ',' << fmt_double(A.a[e].imag()) << '\n';
    }
    require(os.good(), "write failed: " + path);
}

std::string inequality_csv_row(long trial, const std::vector<Exponent>& exps,
                               const InequalityReport& rep) {
    std::string row = std::to_string(trial) + ",";
    for (std::size_t i = 0; i < exps.size(); ++i)
        row += (i ? " " : "") + fmt_exponent(exps[i]);
    row += "," + fmt_double(rep.lhs) + "," + fmt_double(rep.rhs_product) + "," +
           fmt_double(rep.ratio) + "," + (rep.holds ? "1" : "0");
    return row;
}

}  // namespace modspace
