#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "irrs/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

static constexpr const char* kHeader =
    "index,task,source,n,m,K,k_max,seed,outcome,strength,verified,trials,accepted_trial,nodes,"
    "phase,kind,wall_ms";

static fs::path work_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("irrs_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
};

static Run run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path cap = work_dir() / ("cap_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string("\"") + IRRS_CLI_PATH + "\" " + args + " >\"" + cap.string() + "\" 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(cap);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
}

static std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p);
  out << s;
}

static bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

static std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

static fs::path data(const std::string& name) { return fs::path(IRRS_TEST_DATA_DIR) / name; }

TEST_CASE("help lists subcommands and the exit-code table") {
  auto r = run_cli("--help");
  CHECK(r.code == 0);
  for (const char* s : {"exact", "dense", "bounds", "verify", "gen", "batch", "Exit codes"})
    CHECK(has(r.out, s));
  CHECK(run_cli("--definitely-not-a-flag").code == 1);
  CHECK(run_cli("").code == 1);  // a subcommand is required
}

TEST_CASE("exact answers and artifact files") {
  auto rep = work_dir() / "k4_report.json";
  auto wit = work_dir() / "k4_witness.txt";
  auto r = run_cli("exact --generator complete --n 4 --out " + q(rep) + " --weights-out " + q(wit));
  CHECK(r.code == 0);
  CHECK(has(r.out, "s(G) = 3"));
  CHECK(has(r.out, "report: "));
  CHECK(has(r.out, "witness: "));

  auto j = json::parse(slurp(rep));
  CHECK(j["outcome"] == "determined");
  CHECK(j["strength"] == 3);
  CHECK(j["witness"]["k"] == 3);
  CHECK(has(slurp(wit), "6 3\n"));

  // the witness file passes verification against the same graph
  auto g = work_dir() / "k4_gen.txt";
  auto gr = run_cli("gen --generator complete --n 4 --out " + q(g));
  CHECK(gr.code == 0);
  CHECK(has(gr.out, "(n=4, m=6)"));
  auto vr = run_cli("verify --graph " + q(g) + " --weights " + q(wit));
  CHECK(vr.code == 0);
  CHECK(has(vr.out, "irregular: all 4 weighted degrees distinct"));
}

TEST_CASE("exact determinate non-answers exit 0, budget exhaustion exits 2") {
  auto inf = run_cli("exact --generator complete --n 2");
  CHECK(inf.code == 0);
  CHECK(has(inf.out, "s(G) = infinite"));

  auto capped = run_cli("exact --generator complete --n 4 --k-max 2");
  CHECK(capped.code == 0);
  CHECK(has(capped.out, "no weighting up to k = 2"));

  auto starved = run_cli("exact --generator complete --n 7 --budget 10");
  CHECK(starved.code == 2);
  CHECK(has(starved.out, "node budget exhausted at k = "));
}

TEST_CASE("verify distinguishes success, collision, and cap violation") {
  auto ok = run_cli("verify --graph " + q(data("k4.edges")) + " --weights " + q(data("k4.weights")));
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "irregular"));

  auto col = run_cli("verify --graph " + q(data("k4.edges")) + " --weights " +
                     q(data("k4_allones.weights")));
  CHECK(col.code == 4);
  CHECK(has(col.out, "collision: vertices 0 and 1 share the sum 3"));

  auto cap = run_cli("verify --graph " + q(data("k4.edges")) + " --weights " +
                     q(data("k4_cap.weights")));
  CHECK(cap.code == 4);
  CHECK(has(cap.out, "cap violation: edge 5"));

  auto short_file = work_dir() / "short.weights";
  spit(short_file, "2 3\n1\n2\n");  // wrong edge count for K4
  CHECK(run_cli("verify --graph " + q(data("k4.edges")) + " --weights " + q(short_file)).code == 1);
}

TEST_CASE("gen writes edge lists that parse back") {
  auto p = run_cli("gen --generator petersen");
  CHECK(p.code == 0);
  CHECK(p.out.rfind("10 15\n", 0) == 0);

  auto circ = work_dir() / "circ.txt";
  auto r = run_cli("gen --generator circulant --n 8 --offsets 1,4 --out " + q(circ));
  CHECK(r.code == 0);
  CHECK(has(r.out, "(n=8, m=12)"));
  auto e = run_cli("exact --graph " + q(circ));
  CHECK(e.code == 0);
  CHECK(has(e.out, "s(G) = "));
}

TEST_CASE("bounds in text and json form") {
  auto text = run_cli("bounds --n 10 --d 3 --K 3");
  CHECK(text.code == 0);
  CHECK(has(text.out, "lower_bound_regular"));
  CHECK(has(text.out, "kkp_upper_bound"));
  CHECK(has(text.out, "[vacuous: exceeds n]"));

  auto r = run_cli("bounds --n 10 --d 3 --K 3 --format json");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["lower_bound_regular"] == 4);
  CHECK(j["kkp_upper_bound"] == 24);
  CHECK(j["threshold_vacuous"] == true);
  CHECK(j["delta_threshold"].get<double>() > 10.0);
  CHECK(j["t"].get<double>() > 1.0);
  CHECK(j.contains("lambda_formula"));
  CHECK(j.contains("union_bound_diagnostic"));

  auto plain = run_cli("bounds --n 10 --format json");
  auto pj = json::parse(plain.out);
  CHECK(pj["n"] == 10);
  CHECK_FALSE(pj.contains("lower_bound_regular"));
}

TEST_CASE("dense failures exit 3 and carry the phase and kind") {
  auto r = run_cli("dense --generator complete --n 30 --K 3 --seed 1");
  CHECK(r.code == 3);
  CHECK(has(r.out, "phase failure [plan/lambda_too_small]:"));

  auto na = run_cli("dense --generator complete --n 2 --K 3");
  CHECK(na.code == 3);
  CHECK(has(na.out, "phase failure [plan/graph_outside_regime]:"));

  auto rep = work_dir() / "dense_rep.json";
  auto rj = run_cli("dense --generator complete --n 30 --K 3 --seed 1 --out " + q(rep));
  CHECK(rj.code == 3);
  auto j = json::parse(slurp(rep));
  CHECK(j["outcome"] == "phase_failure");
  CHECK(j["failure"]["kind"] == "lambda_too_small");
  CHECK(has(rj.out, "weighting: ") == false);  // no weighting on failure
}

TEST_CASE("csv column order is frozen") {
  auto rep = work_dir() / "dense_rep.csv";
  auto r = run_cli("dense --generator complete --n 30 --K 3 --seed 1 --format csv --out " +
                   q(rep) + " --no-timing");
  CHECK(r.code == 3);
  auto text = slurp(rep);
  auto nl = text.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(text.substr(0, nl) == kHeader);
  auto row = text.substr(nl + 1);
  while (!row.empty() && (row.back() == '\n' || row.back() == '\r')) row.pop_back();
  CHECK(row.rfind("0,dense,", 0) == 0);
  CHECK(has(row, ",phase_failure,"));
  CHECK(has(row, ",plan,lambda_too_small,"));
  CHECK(row.substr(row.size() - 2) == ",-");  // wall_ms placeholder sits in the last column
}

TEST_CASE("batch runs every row and aggregates") {
  auto spec = work_dir() / "spec.json";
  json rows = json::array();
  rows.push_back({{"task", "exact"}, {"generator", "complete"}, {"n", 4}});
  rows.push_back({{"task", "dense"}, {"generator", "complete"}, {"n", 30}, {"K", 3}});
  rows.push_back({{"task", "exact"}, {"generator", "complete"}, {"n", 2}});
  spit(spec, json{{"seed", 5}, {"rows", rows}}.dump());

  auto prefix = work_dir() / "batch_a";
  auto r = run_cli("batch --spec " + q(spec) + " --out " + q(prefix) + " --no-timing");
  CHECK(r.code == 0);
  CHECK(has(r.out, "batch: 3 row(s), 2 succeeded, 0 errored"));

  auto j = json::parse(slurp(prefix.string() + ".json"));
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["report"]["strength"] == 3);
  CHECK(j["rows"][1]["report"]["outcome"] == "phase_failure");
  CHECK(j["rows"][2]["report"]["outcome"] == "infinite");
  CHECK(j["aggregate"]["rows"] == 3);
  CHECK(j["aggregate"]["successes"] == 2);
  CHECK(j["aggregate"]["errors"] == 0);

  auto csv = slurp(prefix.string() + ".csv");
  auto nl = csv.find('\n');
  CHECK(csv.substr(0, nl) == kHeader);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  // rows without an explicit seed get one derived from the batch seed
  CHECK(has(csv, "," + std::to_string(irrs::derive_seed(5, 1)) + ","));

  // a bad row reports an error without sinking its neighbours
  rows.push_back({{"task", "exact"}, {"generator", "nonsense"}, {"n", 4}});
  spit(spec, json{{"seed", 5}, {"rows", rows}}.dump());
  auto bad = run_cli("batch --spec " + q(spec) + " --out " + q(work_dir() / "batch_bad"));
  CHECK(bad.code == 0);
  CHECK(has(bad.out, "1 errored"));
  auto bj = json::parse(slurp((work_dir() / "batch_bad").string() + ".json"));
  CHECK(bj["rows"][3]["report"].contains("error"));
  CHECK(bj["rows"][0]["report"]["strength"] == 3);
  CHECK(bj["aggregate"]["errors"] == 1);
}

TEST_CASE("parallel batch output matches serial byte for byte") {
  auto spec = work_dir() / "spec_par.json";
  json rows = json::array();
  for (int n : {4, 5, 2, 3})
    rows.push_back({{"task", "exact"}, {"generator", "complete"}, {"n", n}});
  rows.push_back({{"task", "dense"}, {"generator", "complete"}, {"n", 30}, {"K", 3}});
  spit(spec, json{{"seed", 11}, {"rows", rows}}.dump());

  auto serial = work_dir() / "batch_serial";
  auto par = work_dir() / "batch_par";
  CHECK(run_cli("batch --spec " + q(spec) + " --out " + q(serial) + " --no-timing").code == 0);
  CHECK(run_cli("batch --spec " + q(spec) + " --out " + q(par) + " --jobs 4 --no-timing").code ==
        0);
  CHECK(slurp(serial.string() + ".csv") == slurp(par.string() + ".csv"));
  auto js = json::parse(slurp(serial.string() + ".json"));
  auto jp = json::parse(slurp(par.string() + ".json"));
  CHECK(js["rows"] == jp["rows"]);  // only the jobs field may differ
}

TEST_CASE("empty batch specs succeed with empty outputs") {
  auto spec = work_dir() / "spec_empty.json";
  spit(spec, R"({"rows": []})");
  auto prefix = work_dir() / "batch_empty";
  auto r = run_cli("batch --spec " + q(spec) + " --out " + q(prefix));
  CHECK(r.code == 0);
  CHECK(has(r.out, "batch: 0 row(s)"));
  CHECK(slurp(prefix.string() + ".csv") == std::string(kHeader) + "\n");
  auto j = json::parse(slurp(prefix.string() + ".json"));
  CHECK(j["rows"].empty());
  CHECK(j["aggregate"]["success_rate"] == 1.0);
}

TEST_CASE("reports without timing are byte-identical across runs") {
  auto a = work_dir() / "repro_a.json";
  auto b = work_dir() / "repro_b.json";
  const std::string args = "dense --generator random --n 60 --p 0.5 --delta-min 10 "
                           "--gen-seed 7 --K 3 --seed 9 --override-t 400 --override-lambda 3 "
                           "--trials 3 --no-timing --out ";
  CHECK(run_cli(args + q(a)).code == 3);
  CHECK(run_cli(args + q(b)).code == 3);
  const auto text = slurp(a);
  CHECK_FALSE(text.empty());
  CHECK(text == slurp(b));
  CHECK_FALSE(json::parse(text).contains("timing"));
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("exact").code == 1);  // no source
  CHECK(run_cli("exact --graph a.txt --generator complete --n 4").code == 1);
  CHECK(run_cli("exact --graph /nonexistent_0f9d.txt").code == 1);
  CHECK(run_cli("batch --spec /nonexistent_0f9d.json").code == 1);
  CHECK(run_cli("bounds").code == 1);  // --n is required
}
