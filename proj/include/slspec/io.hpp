#ifndef SLSPEC_IO_HPP
#define SLSPEC_IO_HPP

#include <string>
#include <vector>

#include "slspec/coeffseq.hpp"
#include "slspec/gridfun.hpp"

namespace slspec::io {

// shortest round-trip-exact decimal form; used for every CSV/JSON number so
// identical runs produce byte-identical files
std::string format_double(double x);

std::string csv_of_coeffseq(const CoeffSeq& a);                       // index,re,im
std::string csv_of_gridfun(const GridFunction& f);                    // x,re,im,side
std::string csv_of_spectrum(const std::vector<cplx>& values,
                            const std::vector<double>& residuals);    // n,re,im,residual

// inverse of csv_of_gridfun; the optional leading '#' comment line is
// returned through `meta` when non-null
GridFunction gridfun_from_csv(const std::string& text, std::string* meta = nullptr);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::string sha256_hex(const std::string& data);

} // namespace slspec::io

#endif
