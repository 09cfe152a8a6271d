// Helpers shared by the command-line front end and its tests: parsing of
// complex flags ("a+bi"), cutoff lists, deterministic CSV field
// formatting, and the run-manifest comment block.

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace ramsum {

// Parse "a+bi" / "a-bi" / "a" / "bi" (also bare "i", "-i"). Throws
// std::invalid_argument on malformed input.
std::complex<double> parse_complex(const std::string& text);

// Comma-separated ascending positive integers ("100,1000,100000").
std::vector<long long> parse_cutoffs(const std::string& text);

// Deterministic '%.15g' rendering; '.' decimal point, no locale.
std::string csv_num(double x);
std::string csv_num(std::complex<double> z); // "re,im" pair

// Manifest comment block written ahead of every CSV payload. Identical
// invocations produce identical output except for the timestamp line.
struct RunManifest {
    std::string subcommand;
    std::string parameters;
    std::string table_source;
    std::size_t table_count = 0;

    void write(std::ostream& out) const;
};

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace ramsum
