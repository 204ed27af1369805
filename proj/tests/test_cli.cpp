#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "lcsrate/bounds.hpp"
#include "lcsrate/cli.hpp"

using namespace lcsrate;
using namespace lcsrate::cli;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string log;
};

Run run(const RunConfig& cfg)
{
    std::ostringstream out, log;
    const int code = dispatch(cfg, out, log);
    return {code, out.str(), log.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

double value_of(const std::string& text, const std::string& key)
{
    const auto pos = text.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 1));
}

fs::path temp_path(const std::string& name)
{
    return fs::temp_directory_path() / ("lcsrate_test_" + std::to_string(::getpid()) + "_" + name);
}

int shell(const std::string& args)
{
    const std::string cmd = std::string(LCSRATE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("grid parsing")
{
    CHECK(parse_size_grid("2:10:4") == std::vector<std::size_t>{2, 6, 10});
    CHECK(parse_size_grid("10,20,30") == std::vector<std::size_t>{10, 20, 30});
    const auto a = parse_real_grid("0.1:2:0.1");
    CHECK(a.size() == 20);
    CHECK(a.back() == doctest::Approx(2.0));
    CHECK(parse_real_grid("0.5,1,2") == std::vector<double>{0.5, 1.0, 2.0});
    CHECK_THROWS(parse_size_grid("1:2"));
    CHECK_THROWS(parse_size_grid("5:1:1"));
    CHECK_THROWS(parse_real_grid("0:1:0"));
    CHECK_THROWS(parse_real_grid("a,b"));
}

TEST_CASE("estimate")
{
    RunConfig cfg;
    cfg.subcommand = "estimate";
    cfg.n = 500;
    cfg.k = 40;
    cfg.seed = 7;
    const auto first = run(cfg);
    REQUIRE(first.code == kOk);
    const double mean = value_of(first.log, "mean_per_letter");
    CHECK(mean >= 0.60);
    CHECK(mean <= 0.84);
    CHECK(first.out.rfind("replicate_index,score\n", 0) == 0);
    // header + k rows + summary
    CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 42);

    cfg.threads = 3;
    CHECK(run(cfg).out == first.out);
}

TEST_CASE("estimate writes byte-identical CSV files")
{
    RunConfig cfg;
    cfg.subcommand = "estimate";
    cfg.n = 64;
    cfg.k = 12;
    cfg.seed = 99;
    cfg.out_path = temp_path("a.csv");
    REQUIRE(run(cfg).code == kOk);
    const auto a = slurp(*cfg.out_path);
    REQUIRE(run(cfg).code == kOk);
    CHECK(slurp(*cfg.out_path) == a);
    fs::remove(*cfg.out_path);
}

TEST_CASE("config errors exit 2, numeric errors exit 3")
{
    RunConfig cfg;
    cfg.subcommand = "estimate";
    cfg.n = 10;
    cfg.k = 2;
    cfg.scheme_path = "/nonexistent/scheme.txt";
    CHECK(run(cfg).code == kConfigError);

    cfg.scheme_path.reset();
    cfg.n.reset();
    CHECK(run(cfg).code == kConfigError);

    RunConfig b;
    b.subcommand = "bound";
    b.n = 1;
    CHECK(run(b).code == kNumericError);
    b.n = 100;
    b.epsilon = 1.5;
    CHECK(run(b).code == kNumericError);

    RunConfig unknown;
    unknown.subcommand = "frobnicate";
    CHECK(run(unknown).code == kConfigError);

    const auto dist = temp_path("dist3.txt");
    std::ofstream(dist) << "probs: 0.2 0.3 0.5\n";
    cfg.n = 10;
    cfg.dist_path = dist;
    CHECK(run(cfg).code == kConfigError);  // 3 letters vs binary scheme
    fs::remove(dist);
}

TEST_CASE("bound")
{
    RunConfig cfg;
    cfg.subcommand = "bound";
    cfg.n = 100000;
    cfg.k = 2;
    const auto r = run(cfg);
    REQUIRE(r.code == kOk);
    CHECK(std::abs(value_of(r.out, "confidence_radius") - 0.0122) <= 5e-4);
    CHECK(value_of(r.out, "q_bound") == doctest::Approx(q_bound(100000, 1.0, 1.0)));
    CHECK(value_of(r.out, "alexander_bound") == doctest::Approx(alexander_bound(100000)));
    CHECK(r.log.empty());

    cfg.n = 1001;
    const auto odd = run(cfg);
    REQUIRE(odd.code == kOk);
    CHECK(odd.log.find("warning") != std::string::npos);
    CHECK(value_of(odd.out, "q_bound") == doctest::Approx(q_bound(1000, 1.0, 1.0)));
}

TEST_CASE("confidence")
{
    RunConfig cfg;
    cfg.subcommand = "confidence";
    cfg.n = 100000;
    cfg.k = 2;
    cfg.mean = 0.8;
    const auto r = run(cfg);
    REQUIRE(r.code == kOk);
    CHECK(std::abs(value_of(r.out, "radius") - 0.0122) <= 5e-4);
    CHECK(value_of(r.out, "one_sided_upper") == doctest::Approx(0.819699874051));

    cfg.epsilon = 0.5;
    const auto loose = run(cfg);
    CHECK(value_of(loose.out, "radius") < value_of(r.out, "radius"));
    CHECK(value_of(loose.out, "mean_per_letter") == value_of(r.out, "mean_per_letter"));

    RunConfig sim;
    sim.subcommand = "confidence";
    sim.n = 200;
    sim.k = 5;
    sim.seed = 3;
    const auto s = run(sim);
    REQUIRE(s.code == kOk);
    CHECK(value_of(s.out, "lower") < value_of(s.out, "upper"));
}

TEST_CASE("sweep")
{
    RunConfig cfg;
    cfg.subcommand = "sweep";
    cfg.n_grid = "10:10000:2";
    cfg.a_grid = "0.1,0.5,1,2";
    const auto r = run(cfg);
    REQUIRE(r.code == kOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,A,F,q_bound,alexander_bound");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string n, a, f, q, al;
        std::getline(row, n, ',');
        std::getline(row, a, ',');
        std::getline(row, f, ',');
        std::getline(row, q, ',');
        std::getline(row, al, ',');
        REQUIRE(std::stod(q) < std::stod(al));
        ++rows;
    }
    CHECK(rows == 4996 * 4);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("default sweep grid")
{
    RunConfig cfg;
    cfg.subcommand = "sweep";
    const auto r = run(cfg);
    REQUIRE(r.code == kOk);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 9999 * 20);
    CHECK(r.out.find("\n10000,1,1,0.04529173829") != std::string::npos);
    CHECK(r.out.find(",0.1068268699") != std::string::npos);
}

TEST_CASE("verify")
{
    SUBCASE("bounds group passes")
    {
        RunConfig cfg;
        cfg.subcommand = "verify";
        cfg.only = "bounds";
        const auto r = run(cfg);
        CHECK(r.code == kOk);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("PASS bounds/bound_dominance") != std::string::npos);
        CHECK(r.out.find("scoring/") == std::string::npos);
    }
    SUBCASE("unknown group")
    {
        RunConfig cfg;
        cfg.subcommand = "verify";
        cfg.only = "nope";
        CHECK(run(cfg).code == kConfigError);
    }
    SUBCASE("an injected DP fault is caught and named")
    {
        // Corrupt one cell's worth of score for a single input shape.
        const ScoreFunction faulty = [](LetterSpan x, LetterSpan y, const ScoringScheme& s) {
            const double v = optimal_score(x, y, s);
            return (x.size() == 3 && y.size() == 2) ? v + 1.0 : v;
        };
        RunConfig cfg;
        cfg.subcommand = "verify";
        cfg.only = "scoring";
        std::ostringstream out, log;
        CHECK(run_verify(cfg, out, log, faulty) == kVerificationFailed);
        CHECK(out.str().find("FAIL scoring/oracle_equivalence_binary") != std::string::npos);
    }
}

TEST_CASE("binary exit codes")
{
    CHECK(shell("bound --n 100") == 0);
    CHECK(shell("bound") == kConfigError);
    CHECK(shell("estimate --n 10 --k 2 --scheme /nonexistent/file") == kConfigError);
    CHECK(shell("bound --n 1") == kNumericError);
    CHECK(shell("frobnicate") == kConfigError);
    CHECK(shell("verify --only bounds") == 0);
}
