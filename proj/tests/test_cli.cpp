#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ramsum/cli_util.hpp"
#include "ramsum/zeta.hpp"

using namespace ramsum;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RAMSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// data lines only: drop '#' comments and the header row
std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        rows.push_back(line);
    }
    return rows;
}

std::string without_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("# timestamp:", 0) != 0) out << line << "\n";
    return out.str();
}

} // namespace

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("2") == cplx{2.0, 0.0});
    CHECK(parse_complex("2+1i") == cplx{2.0, 1.0});
    CHECK(parse_complex("1.5-0.5i") == cplx{1.5, -0.5});
    CHECK(parse_complex("2+i") == cplx{2.0, 1.0});
    CHECK(parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(parse_complex("2.5i") == cplx{0.0, 2.5});
    CHECK(parse_complex("1e+3") == cplx{1000.0, 0.0});
    CHECK(parse_complex("1e-2+2e-3i") == cplx{0.01, 0.002});
    CHECK(parse_complex(" 2 + 1i ") == cplx{2.0, 1.0});
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+2i3"), std::invalid_argument);
}

TEST_CASE("cutoff list parsing") {
    CHECK(parse_cutoffs("100,1000") == std::vector<long long>{100, 1000});
    CHECK(parse_cutoffs("7") == std::vector<long long>{7});
    CHECK_THROWS_AS(parse_cutoffs("100,50"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cutoffs("0,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cutoffs(",5"), std::invalid_argument);
}

TEST_CASE("csv numbers are locale-free") {
    CHECK(csv_num(0.1) == "0.1");
    CHECK(csv_num(-2.5) == "-2.5");
    CHECK(csv_num(cplx{1.0, -0.25}) == "1,-0.25");
}

TEST_CASE("csum subcommand") {
    const auto r = run_cli("csum --n 1 --beta 1 --qmax 5");
    CHECK(r.exit_code == 0);
    const auto rows = data_lines(r.output);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "1,1");
    CHECK(rows[1] == "2,-1");
    CHECK(rows[3] == "4,0");

    const auto r2 = run_cli("csum --n 16 --beta 2 --qmax 4");
    const auto rows2 = data_lines(r2.output);
    REQUIRE(rows2.size() == 4);
    CHECK(rows2[3] == "4,12");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("csum --n 1 --beta 0 --qmax 5").exit_code == 2);
    CHECK(run_cli("csum").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("series --s nonsense --n 1 --beta 1 --cutoffs 10").exit_code == 2);
}

TEST_CASE("numeric failures exit 3") {
    // refinement seed far from any zero
    CHECK(run_cli("zeros refine --gamma0 5.0").exit_code == 3);
}

TEST_CASE("series subcommand reproduces the closed form") {
    const auto r = run_cli("series --s 2 --n 24 --beta 2 --cutoffs 100,1000");
    CHECK(r.exit_code == 0);
    const auto rows = data_lines(r.output);
    REQUIRE(rows.size() == 2);
    // residual column shrinks from Q=100 to Q=1000
    const auto last_field = [](const std::string& row) {
        return std::stod(row.substr(row.rfind(',') + 1));
    };
    CHECK(last_field(rows[1]) < last_field(rows[0]));
}

TEST_CASE("identical invocations are byte-identical modulo timestamp") {
    const std::string args = "series --s 1 --n 24 --beta 1 --cutoffs 10,100,1000";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(without_timestamp(a.output) == without_timestamp(b.output));
    CHECK(a.output.find("# tool: ramsum") == 0);
}

TEST_CASE("explicit-c emits the documented columns") {
    const auto r = run_cli("explicit-c --n 12 --beta 1 --xmin 5.5 --xmax 9.5 --xstep 1 "
                           "--pairs 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("x,actual_sharp,formula,residual\n") != std::string::npos);
    CHECK(data_lines(r.output).size() == 5);
}

TEST_CASE("zeros verify and dump round trip") {
    const auto verify = run_cli("zeros verify");
    CHECK(verify.exit_code == 0);
    CHECK(data_lines(verify.output).size() == 100);

    const auto dump = run_cli("zeros dump");
    CHECK(dump.exit_code == 0);
    // feed the dump back through --table
    const auto tmp = std::filesystem::temp_directory_path() / "ramsum_cli_dump.txt";
    std::ofstream(tmp) << dump.output;
    const auto redump = run_cli("zeros dump --table " + tmp.string());
    CHECK(redump.exit_code == 0);
    CHECK(redump.output == dump.output);
}

TEST_CASE("growth subcommand") {
    const auto r = run_cli("growth --n 1 --beta 1 --xmax 20000");
    CHECK(r.exit_code == 0);
    const auto rows = data_lines(r.output);
    REQUIRE(rows.size() == 1);
    const double expo = std::stod(rows[0].substr(rows[0].find(',') + 1));
    CHECK(expo > 0.0);
    CHECK(expo < 1.0);
}

TEST_CASE("bartz fe subcommand emits a residual row") {
    const auto r = run_cli("bartz fe --n 1 --beta 1 --z 2+1i");
    CHECK(r.exit_code == 0);
    const auto rows = data_lines(r.output);
    REQUIRE(rows.size() == 1);
    // residual_abs column is tiny, variant is not
    std::istringstream row(rows[0]);
    std::string field;
    std::vector<double> fields;
    while (std::getline(row, field, ',')) fields.push_back(std::stod(field));
    REQUIRE(fields.size() == 6);
    CHECK(fields[4] < 1e-3);
    CHECK(fields[5] > 1e-1);
}

TEST_CASE("output file target") {
    const auto tmp = std::filesystem::temp_directory_path() / "ramsum_cli_out.csv";
    std::filesystem::remove(tmp);
    const auto r = run_cli("csum --n 1 --beta 1 --qmax 3 --out " + tmp.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(tmp);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(data_lines(content.str()).size() == 3);
}
