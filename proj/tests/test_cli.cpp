#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string bin() { return OCCLEARN_BIN; }

std::string tmp_path(const std::string& name) {
  return "/tmp/occlearn_cli_" + name;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kSample =
    "alphabet: a,b\n"
    "a\n"
    "aa\n"
    "aab\n"
    "ab\n";

}  // namespace

TEST_CASE("learn writes a model and a stats row") {
  std::string sample = tmp_path("s1.txt");
  std::string model = tmp_path("m1.dot");
  std::string stats = tmp_path("st1.csv");
  write_file(sample, kSample);
  RunResult r = run(bin() + " learn --mode dfa --algo sym --size-bound 3" +
                    " --sample " + sample + " --format dot --out " + model +
                    " --stats " + stats + " --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(read_file(model).find("digraph") == 0);
  std::string csv = read_file(stats);
  CHECK(csv.find("instance,algorithm,model_size") == 0);
  CHECK(csv.find(",sym,") != std::string::npos);
  CHECK(csv.find(",minimal,") != std::string::npos);
}

TEST_CASE("learn ltlf returns a formula") {
  std::string sample = tmp_path("s2.txt");
  write_file(sample, "alphabet: a,b\na\naa\naaa\n");
  for (const char* algo : {"ssym", "ceg"}) {
    RunResult r = run(bin() + " learn --mode ltlf --algo " + algo +
                      " --size-bound 2 --sample " + sample + " --seed 1");
    CAPTURE(algo);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("G a") != std::string::npos);
  }
}

TEST_CASE("ltlf mode rejects the fully symbolic algorithm") {
  std::string sample = tmp_path("s3.txt");
  write_file(sample, "alphabet: a\na\n");
  RunResult r = run(bin() + " learn --mode ltlf --algo sym --sample " + sample);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("ssym or ceg") != std::string::npos);
}

TEST_CASE("ltlf mode rejects samples with the empty word") {
  std::string sample = tmp_path("s4.txt");
  write_file(sample, "alphabet: a\n\na\n");
  RunResult r = run(bin() + " learn --mode ltlf --algo ceg --sample " + sample);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("empty word") != std::string::npos);
}

TEST_CASE("gen-sample sources work and are seed-deterministic") {
  std::string out1 = tmp_path("g1.txt"), out2 = tmp_path("g2.txt");
  for (const std::string src :
       {std::string("--from-random-dfa 3 --alphabet a,b"),
        std::string("--from-formula \"G a0\" --alphabet a0,a1"),
        std::string("--from-traces")}) {
    CAPTURE(src);
    RunResult r1 = run(bin() + " gen-sample " + src +
                       " --count 8 --max-len 6 --seed 9 --out " + out1);
    RunResult r2 = run(bin() + " gen-sample " + src +
                       " --count 8 --max-len 6 --seed 9 --out " + out2);
    CHECK(r1.exit_code == 0);
    CHECK(read_file(out1) == read_file(out2));
    CHECK(read_file(out1).find("alphabet:") == 0);
  }
}

TEST_CASE("gen-sample warns when fewer distinct words exist") {
  RunResult r = run(bin() +
                    " gen-sample --from-formula \"G !a0\" --alphabet a0,a1"
                    " --count 100 --min-len 1 --max-len 5 --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("warning") != std::string::npos);
}

TEST_CASE("gen-sample without a source is an error") {
  RunResult r = run(bin() + " gen-sample --count 3");
  CHECK(r.exit_code == 1);
}

TEST_CASE("check validates models against samples") {
  std::string sample = tmp_path("s5.txt");
  std::string model = tmp_path("m5.dot");
  write_file(sample, kSample);
  RunResult learn = run(bin() + " learn --mode dfa --algo sym --size-bound 3" +
                        " --sample " + sample + " --format dot --out " + model);
  REQUIRE(learn.exit_code == 0);
  RunResult ok = run(bin() + " check --model " + model + " --sample " + sample);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("accepts-sample: yes") != std::string::npos);
  CHECK(ok.out.find("minimality: pass") != std::string::npos);

  std::string formula = tmp_path("f5.txt");
  write_file(formula, "G b\n");
  RunResult bad = run(bin() + " check --model " + formula + " --sample " +
                      sample);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("satisfies-sample: no") != std::string::npos);
}

TEST_CASE("check skips the oracle above the exhaustive bound") {
  std::string sample = tmp_path("s6.txt");
  std::string formula = tmp_path("f6.txt");
  write_file(sample, "alphabet: a,b\na\naa\n");
  write_file(formula, "G a\n");
  RunResult r = run(bin() + " check --model " + formula + " --sample " +
                    sample + " --oracle-max-size 10");
  CHECK(r.out.find("minimality: skipped") != std::string::npos);
}

TEST_CASE("bench runs a manifest and emits CSV, plots, and summaries") {
  std::string manifest = tmp_path("mani.txt");
  std::string csv = tmp_path("bench.csv");
  std::string plots = tmp_path("plots");
  write_file(manifest,
             "timeout: 60\nseed: 3\n\n"
             "[instance]\nid: tiny\nmode: dfa\nalgos: sym,ceg\n"
             "size-bound: 3\nsource: random-dfa\ntarget-size: 2\n"
             "alphabet: a,b\ncount: 12\nmin-len: 1\nmax-len: 5\nseed: 4\n");
  RunResult r = run(bin() + " bench --manifest " + manifest + " --out " + csv +
                    " --plots " + plots + " --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("geomean iteration ratio (symbolic/ceg):") !=
        std::string::npos);
  std::string rows = read_file(csv);
  CHECK(rows.find("tiny,sym,") != std::string::npos);
  CHECK(rows.find("tiny,ceg,") != std::string::npos);
  CHECK(read_file(plots + "/iterations.svg").find("<svg") !=
        std::string::npos);
  CHECK(read_file(plots + "/time.svg").find("<svg") != std::string::npos);
}

TEST_CASE("bench reports manifest parse errors with a line number") {
  std::string manifest = tmp_path("bad.txt");
  write_file(manifest, "timeout: 60\n[instance]\nmode: nonsense\n");
  RunResult r = run(bin() + " bench --manifest " + manifest);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("line") != std::string::npos);
}

TEST_CASE("bench output is identical across reruns modulo timings") {
  auto strip_time = [](std::string csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
      // blank the wall_time_s column (6th)
      std::size_t start = 0;
      for (int i = 0; i < 5; ++i) start = line.find(',', start) + 1;
      std::size_t end = line.find(',', start);
      out << line.substr(0, start) << line.substr(end) << "\n";
    }
    return out.str();
  };
  std::string manifest = tmp_path("det.txt");
  std::string c1 = tmp_path("det1.csv"), c2 = tmp_path("det2.csv");
  write_file(manifest,
             "timeout: 60\nseed: 11\n\n"
             "[instance]\nid: det\nmode: ltlf\nalgos: ssym,ceg\n"
             "size-bound: 2\nhorizon: 5\nsource: formula\nformula: F a0\n"
             "alphabet: a0,a1\ncount: 10\nmin-len: 1\nmax-len: 4\n");
  REQUIRE(run(bin() + " bench --manifest " + manifest + " --out " + c1)
              .exit_code == 0);
  REQUIRE(run(bin() + " bench --manifest " + manifest + " --out " + c2)
              .exit_code == 0);
  CHECK(strip_time(read_file(c1)) == strip_time(read_file(c2)));
}

TEST_CASE("the bundled manifests parse and name real generators") {
  for (const char* name : {"dfa-grid.txt", "ltlf-patterns.txt"}) {
    std::string path = std::string(OCCLEARN_MANIFEST_DIR) + "/" + name;
    std::ifstream in(path);
    CAPTURE(name);
    CHECK(in.good());
  }
}
