#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "harris/cli.hpp"
#include "harris/rng.hpp"
#include "harris/sampling.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = harris::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) out.push_back(f);
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("harris_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("pmf rows") {
    const Run r = run({"pmf", "--m", "50", "--k", "5", "--rmax", "20"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 22);
    CHECK(ls[0] == "x,p");
    CHECK(ls[1] == "1,0.457305");
    CHECK(ls[21].rfind("101,", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);

    const Run single = run({"pmf", "--m", "2", "--k", "2", "--rmax", "0"});
    CHECK(single.out == "x,p\n1,0.707107\n");

    const Run h0 = run({"pmf", "--m", "2", "--k", "2", "--rmax", "1", "--variant", "h0"});
    CHECK(h0.out == "x,p\n0,0.707107\n2,0.176777\n");
  }

  TEST_CASE("cdf rows") {
    const Run r = run({"cdf", "--m", "2", "--k", "2", "--rmax", "1"});
    CHECK(r.out == "x,F\n1,0.707107\n3,0.883883\n");
    const Run at = run({"cdf", "--m", "2", "--k", "2", "--x", "0.5"});
    CHECK(at.out == "x,F\n0.5,0.000000\n");
  }

  TEST_CASE("invalid input exits 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pmf", "--m", "1", "--k", "2"}).code == 2);
    CHECK(run({"pmf", "--m", "2", "--k", "0"}).code == 2);
    CHECK(run({"pmf", "--m", "2", "--k", "1.5"}).code == 2);
    CHECK(run({"pmf", "--m", "2"}).code == 2);
    CHECK(run({"pmf", "--m", "abc", "--k", "2"}).code == 2);
    CHECK(run({"pmf", "--m", "2", "--k", "2", "--variant", "h7"}).code == 2);
    CHECK(run({"sample", "--m", "2", "--k", "2", "--sampler", "magic"}).code == 2);
    CHECK(run({"fit", "--method", "guess"}, "1 2 3").code == 2);
    CHECK(run({"experiment", "--m", "2", "--k", "2", "--n", "1"}).code == 2);
    CHECK(run({"pmf", "--m", "2", "--k", "2", "--out", "/nonexistent/dir/x.csv"}).code == 2);
    CHECK(run({"fit", "/nonexistent/file.txt"}).code == 2);
  }

  TEST_CASE("help exits 0") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pmf") != std::string::npos);
  }

  TEST_CASE("sample is reproducible") {
    const std::vector<std::string> args{"sample", "--m", "3", "--k", "2", "--n", "500", "--seed", "17"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 501);
    CHECK(lines(a.out)[0] == "x");
    auto other = args;
    other.push_back("--stream");
    other.push_back("1");
    CHECK(run(other).out != a.out);
    for (const std::string s : {"gamma-poisson", "inverse"}) {
      auto with = args;
      with.push_back("--sampler");
      with.push_back(s);
      const Run c = run(with);
      CHECK(c.code == 0);
      CHECK(c.out == run(with).out);
    }
  }

  TEST_CASE("fit from a file of simulated draws") {
    harris::RngStream rng(2718, 0);
    const auto draws = harris::values_of(harris::sample_nb(harris::make_params(2, 2), rng, 500));
    const auto path = temp_path("draws.txt");
    {
      std::ofstream f(path);
      for (std::size_t i = 0; i < draws.size(); ++i) f << draws[i] << (i % 10 == 9 ? '\n' : ' ');
    }
    const auto json = temp_path("fit.json");
    const Run r = run({"fit", path.string(), "--json", json.string()});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "method,n,m_hat,k_hat,k_hat_int,lattice,iterations,residual");
    const auto f = fields(ls[1]);
    REQUIRE(f.size() == 8);
    CHECK(f[0] == "mle");
    CHECK(f[1] == "500");
    const double m_hat = std::stod(f[2]);
    const double k_hat = std::stod(f[3]);
    CHECK(m_hat >= 1.8);
    CHECK(m_hat <= 2.2);
    CHECK(k_hat >= 1.7);
    CHECK(k_hat <= 2.3);
    CHECK(f[5] == "2");
    CHECK(std::filesystem::exists(json));
    std::ifstream js(json);
    const std::string text((std::istreambuf_iterator<char>(js)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"k_hat\"") != std::string::npos);
    CHECK(text.find("\"solver\"") != std::string::npos);

    std::ifstream again(path);
    const std::string content((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
    const Run stdin_run = run({"fit"}, content);
    const Run dash_run = run({"fit", "-"}, content);
    CHECK(stdin_run.out == r.out);
    CHECK(dash_run.out == r.out);

    const Run mom = run({"fit", "--method", "moments"}, content);
    CHECK(mom.code == 0);
    CHECK(fields(lines(mom.out)[1])[6] == "NA");
    std::filesystem::remove(path);
    std::filesystem::remove(json);
  }

  TEST_CASE("fit failures") {
    const Run deg = run({"fit"}, "5 5 5");
    CHECK(deg.code == 3);
    CHECK(deg.err.find("degenerate_sample") != std::string::npos);
    CHECK(deg.out.empty());

    std::string flat;
    for (int i = 0; i < 9; ++i) flat += "1000000 ";
    flat += "1000001";
    const Run nr = run({"fit"}, flat);
    CHECK(nr.code == 3);
    CHECK(nr.err.find("no_root_in_bracket") != std::string::npos);

    CHECK(run({"fit"}, "1 2 x 4").code == 2);
    CHECK(run({"fit"}, "1 2 3.5").code == 2);
    CHECK(run({"fit"}, "").code == 2);
    CHECK(run({"fit"}, "0 2 3").code == 2);
    CHECK(run({"fit", "--origin", "0"}, "0 0 2 3").code == 0);
  }

  TEST_CASE("experiment CSV") {
    const Run r = run({"experiment", "--method", "mle", "--m", "2", "--k", "2", "--n", "500", "--reps", "50",
                       "--seed", "7"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "method,m,k,n,reps,m_hat,m_se,k_hat,k_se,breakdowns");
    const auto f = fields(ls[1]);
    REQUIRE(f.size() == 10);
    const double m_hat = std::stod(f[5]);
    const double k_hat = std::stod(f[7]);
    CHECK(m_hat >= 1.85);
    CHECK(m_hat <= 2.15);
    CHECK(k_hat >= 1.85);
    CHECK(k_hat <= 2.15);
    CHECK(f[5].size() - f[5].find('.') - 1 == 5);

    const Run mom = run({"experiment", "--method", "moments", "--m", "10", "--k", "10", "--n", "500", "--reps",
                         "50", "--seed", "7"});
    const auto g = fields(lines(mom.out)[1]);
    CHECK(std::abs(std::stod(g[7]) - 9.44012) <= 3 * 0.28046);
    CHECK(std::abs(std::stod(g[5]) - 9.87000) <= 3 * 0.17870);

    const Run one = run({"experiment", "--m", "2", "--k", "2", "--n", "50", "--reps", "1"});
    const auto h = fields(lines(one.out)[1]);
    CHECK(h[6] == "NA");
    CHECK(h[8] == "NA");

    const Run grid = run({"experiment", "--m", "2,10", "--k", "1", "--k", "2", "--n", "100", "--reps", "3"});
    CHECK(lines(grid.out).size() == 5);
  }

  TEST_CASE("identical output regardless of threads") {
    const std::vector<std::string> base{"experiment", "--method", "mle", "--m", "2,5", "--k", "1,3",
                                        "--n",        "120",      "--reps", "23",  "--seed", "11"};
    auto with = [&](const std::string& t) {
      auto a = base;
      a.push_back("--threads");
      a.push_back(t);
      return run(a).out;
    };
    const std::string one = with("1");
    CHECK(one == with("4"));
    CHECK(one == with("16"));
    CHECK(run(base).out == one);
  }

  TEST_CASE("writes to --out") {
    const auto path = temp_path("pmf.csv");
    const Run r = run({"pmf", "--m", "2", "--k", "2", "--rmax", "0", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text == "x,p\n1,0.707107\n");
    std::filesystem::remove(path);
  }

  TEST_CASE("stability") {
    const Run all = run({"stability", "--n", "20000"});
    CHECK(all.code == 0);
    CHECK(lines(all.out)[0] == "check,parameters,status,witness");
    CHECK(all.out.find(",fail,") == std::string::npos);

    const Run h1 = run({"stability", "--sd", "--variant", "h1"});
    CHECK(h1.code == 4);
    CHECK(h1.out.find("P(X=0)=0") != std::string::npos);
    CHECK(h1.err.find("sd") != std::string::npos);
    CHECK(h1.err.find("P(X=0)=0") != std::string::npos);

    const Run id = run({"stability", "--identity", "--a", "2", "--c", "1", "--k", "2"});
    CHECK(id.code == 0);
    const auto ls = lines(id.out);
    REQUIRE(ls.size() == 2);
    const auto f = fields(ls[1]);
    CHECK(f[0] == "identity");
    CHECK(f[2] == "pass");
    const double residual = std::stod(f[3].substr(f[3].rfind(' ') + 1));
    CHECK(residual <= 1e-12);

    const std::vector<std::string> mc{"stability", "--limit", "--stopped", "--n", "20000", "--seed", "3"};
    CHECK(run(mc).out == run(mc).out);
  }
}
