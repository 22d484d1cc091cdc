#include "slspec/io.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace slspec::io {

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_of_coeffseq(const CoeffSeq& a)
{
    std::string out = "index,re,im\n";
    for (int n = a.start_index; n <= a.max_index(); ++n) {
        const cplx v = a.at(n);
        out += std::to_string(n) + "," + format_double(v.real()) + "," +
               format_double(v.imag()) + "\n";
    }
    return out;
}

std::string csv_of_gridfun(const GridFunction& f)
{
    std::string out = "# slspec GridFunction M=" + std::to_string(f.cells) + "\n";
    out += "x,re,im,side\n";
    for (int k = 0; k <= f.cells; ++k) {
        const std::string x = format_double(f.node_x(k));
        if (f.is_breakpoint(k)) {
            const cplx l = f.value_left(k);
            out += x + "," + format_double(l.real()) + "," + format_double(l.imag()) + ",L\n";
            const cplx r = f.value_right(k);
            out += x + "," + format_double(r.real()) + "," + format_double(r.imag()) + ",R\n";
        } else {
            const cplx v = f.value_right(k);
            out += x + "," + format_double(v.real()) + "," + format_double(v.imag()) + ",\n";
        }
    }
    return out;
}

std::string csv_of_spectrum(const std::vector<cplx>& values,
                            const std::vector<double>& residuals)
{
    std::string out = "n,re,im,residual\n";
    for (size_t i = 0; i < values.size(); ++i) {
        const double r = i < residuals.size() ? residuals[i] : 0.0;
        out += std::to_string(i + 1) + "," + format_double(values[i].real()) + "," +
               format_double(values[i].imag()) + "," + format_double(r) + "\n";
    }
    return out;
}

GridFunction gridfun_from_csv(const std::string& text, std::string* meta)
{
    std::istringstream in(text);
    std::string line;
    struct Row { double x; cplx v; char side; };
    std::vector<Row> rows;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (meta && meta->empty()) *meta = line.substr(1);
            continue;
        }
        if (!header_seen) { header_seen = true; continue; } // column header
        std::istringstream ls(line);
        std::string fx, fre, fim, fside;
        std::getline(ls, fx, ',');
        std::getline(ls, fre, ',');
        std::getline(ls, fim, ',');
        std::getline(ls, fside, ',');
        Row r;
        r.x = std::stod(fx);
        r.v = cplx(std::stod(fre), fim.empty() ? 0.0 : std::stod(fim));
        r.side = fside.empty() ? ' ' : fside[0];
        rows.push_back(r);
    }
    if (rows.size() < 2)
        throw NumericalError("gridfun_from_csv: too few rows");

    // infer M from the number of distinct nodes
    int nodes = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        if (i == 0 || rows[i].x != rows[i - 1].x) ++nodes;
    const int M = nodes - 1;
    std::vector<cplx> values((size_t)M + 1);
    std::vector<GridFunction::Breakpoint> bps;
    int k = -1;
    double last_x = -1.0;
    for (const auto& r : rows) {
        if (k < 0 || r.x != last_x) { ++k; last_x = r.x; }
        if (r.side == 'L')
            bps.push_back({k, r.v});
        else
            values[(size_t)k] = r.v;
    }
    return GridFunction(M, std::move(values), std::move(bps));
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open for writing: " + path);
    out.write(content.data(), (std::streamsize)content.size());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

// FIPS 180-4 SHA-256, enough for the output manifest
struct Sha256 {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::uint64_t length = 0;
    unsigned char block[64];
    size_t fill = 0;

    static std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void process(const unsigned char* p)
    {
        static const std::uint32_t K[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t)p[4 * i] << 24 | (std::uint32_t)p[4 * i + 1] << 16 |
                   (std::uint32_t)p[4 * i + 2] << 8 | p[4 * i + 3];
        for (int i = 16; i < 64; ++i) {
            const std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            const std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            const std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            const std::uint32_t ch = (e & f) ^ (~e & g);
            const std::uint32_t t1 = hh + S1 + ch + K[i] + w[i];
            const std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            const std::uint32_t t2 = S0 + maj;
            hh = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const unsigned char* p, size_t n)
    {
        length += 8ull * n;
        while (n > 0) {
            const size_t take = std::min(n, 64 - fill);
            std::memcpy(block + fill, p, take);
            fill += take; p += take; n -= take;
            if (fill == 64) { process(block); fill = 0; }
        }
    }

    std::array<unsigned char, 32> digest()
    {
        const std::uint64_t len = length;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (fill != 56) update(&zero, 1);
        unsigned char lenb[8];
        for (int i = 0; i < 8; ++i) lenb[i] = (unsigned char)(len >> (56 - 8 * i));
        update(lenb, 8);
        std::array<unsigned char, 32> out{};
        for (int i = 0; i < 8; ++i) {
            out[(size_t)4 * i] = (unsigned char)(h[i] >> 24);
            out[(size_t)4 * i + 1] = (unsigned char)(h[i] >> 16);
            out[(size_t)4 * i + 2] = (unsigned char)(h[i] >> 8);
            out[(size_t)4 * i + 3] = (unsigned char)h[i];
        }
        return out;
    }
};

} // namespace

std::string sha256_hex(const std::string& data)
{
    Sha256 s;
    s.update((const unsigned char*)data.data(), data.size());
    const auto d = s.digest();
    static const char* hex = "0123456789abcdef";
    std::string out(64, '0');
    for (int i = 0; i < 32; ++i) {
        out[(size_t)2 * i] = hex[d[(size_t)i] >> 4];
        out[(size_t)2 * i + 1] = hex[d[(size_t)i] & 0xf];
    }
    return out;
}

} // namespace slspec::io
