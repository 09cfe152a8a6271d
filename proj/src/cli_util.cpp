#include "ramsum/cli_util.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <stdexcept>

namespace ramsum {

namespace {

double parse_real_token(const std::string& tok, const char* what) {
    if (tok.empty()) throw std::invalid_argument(std::string("empty ") + what);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("unparsable ") + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw std::invalid_argument(std::string("trailing characters in ") + what + " '" +
                                    tok + "'");
    return v;
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    if (s.back() != 'i' && s.back() != 'I') return {parse_real_token(s, "real part"), 0.0};

    s.pop_back(); // drop the i
    // split at the last +/- that is not a leading sign or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re_tok, im_tok;
    if (split == std::string::npos) {
        re_tok = "0";
        im_tok = s;
    } else {
        re_tok = s.substr(0, split);
        im_tok = s.substr(split);
    }
    if (im_tok.empty() || im_tok == "+") im_tok = "1";
    if (im_tok == "-") im_tok = "-1";
    return {parse_real_token(re_tok, "real part"), parse_real_token(im_tok, "imaginary part")};
}

std::vector<long long> parse_cutoffs(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty cutoff entry");
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 1)
            throw std::invalid_argument("cutoffs must be positive integers");
        if (!out.empty() && v <= out.back())
            throw std::invalid_argument("cutoffs must be strictly ascending");
        out.push_back(v);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no cutoffs given");
    return out;
}

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string csv_num(std::complex<double> z) { return csv_num(z.real()) + "," + csv_num(z.imag()); }

void RunManifest::write(std::ostream& out) const {
    out << "# tool: ramsum " << kToolVersion << "\n";
    out << "# subcommand: " << subcommand << "\n";
    out << "# parameters: " << parameters << "\n";
    if (!table_source.empty())
        out << "# zero_table: " << table_source << " (" << table_count << " zeros)\n";
    char stamp[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out << "# timestamp: " << stamp << "\n";
}

} // namespace ramsum
