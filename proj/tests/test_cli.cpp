#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// target path injected by the build
#ifndef JMLAT_BIN
#error "JMLAT_BIN must be defined"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
  int exit_code;
  std::string out;
};

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "jmlat_cli_test";
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args) {
  fs::path out_file = scratch() / "stdout.txt";
  std::string cmd = std::string(JMLAT_BIN) + " " + args + " > " + out_file.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  int code = WEXITSTATUS(rc);
  return {code, buf.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("family emits lattice JSON") {
  Run r = run("family lk --n 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"elements\"") != std::string::npos);
  CHECK(r.out.find("\"covers\"") != std::string::npos);
  CHECK(r.out.find("\"a2\"") != std::string::npos);
}

TEST_CASE("family JSON round-trips through radical") {
  fs::path lat = scratch() / "on6.json";
  Run fam = run("family on --n 6");
  REQUIRE(fam.exit_code == 0);
  std::ofstream(lat) << fam.out;
  Run rad = run("radical --lattice " + lat.string() + " --order rank-grevlex");
  CHECK(rad.exit_code == 0);
  CHECK(rad.out.find("\"RadicalBySquarefree\"") != std::string::npos);
}

TEST_CASE("radical on the diamond exits 2 (inconclusive)") {
  fs::path lat = scratch() / "m5.json";
  Run fam = run("family lk --n 1,1,1");
  REQUIRE(fam.exit_code == 0);
  std::ofstream(lat) << fam.out;
  Run rad = run("radical --lattice " + lat.string() + " --order grevlex");
  CHECK(rad.exit_code == 2);
  CHECK(rad.out.find("\"Inconclusive\"") != std::string::npos);
}

TEST_CASE("missing lattice file exits 1") {
  Run r = run("gb --lattice definitely_missing.json");
  CHECK(r.exit_code == 1);
}

TEST_CASE("gb emits a plain basis with --emit basis") {
  fs::path lat = scratch() / "l2.json";
  std::ofstream(lat) << run("family lk --n 2,2").out;
  Run r = run("gb --lattice " + lat.string() + " --emit basis");
  CHECK(r.exit_code == 0);
  // reduced GB of L2(2,2) has 6 elements
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 6);
}

TEST_CASE("verify-basis flags the structured glued set") {
  Run ok = run("verify-basis --set paper-l2 --n 3 --m 2");
  CHECK(ok.exit_code == 0);
  Run bad = run("verify-basis --set paper-glued --n1 5 --n2 5 --kp 3 --i1 2 --i2 4 "
                "--order rank-grevlex");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"is_groebner\": false") != std::string::npos);
  CHECK(bad.out.find("nonzero_normal_form") != std::string::npos);
}

TEST_CASE("certificates replay byte-identically") {
  fs::path lat = scratch() / "on4.json";
  std::ofstream(lat) << run("family on --n 4").out;
  fs::path d1 = scratch() / "r1", d2 = scratch() / "r2";
  Run a = run("radical --lattice " + lat.string() + " --order rank-grevlex --out " + d1.string());
  Run b = run("radical --lattice " + lat.string() + " --order rank-grevlex --out " + d2.string());
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp(d1 / "radical_rank-grevlex.cert.json") ==
        slurp(d2 / "radical_rank-grevlex.cert.json"));
  CHECK(slurp(d1 / "radical_rank-grevlex.manifest.json")
            .find("\"outcome\": \"verified\"") != std::string::npos);
}

TEST_CASE("recheck replays a certificate") {
  fs::path lat = scratch() / "l232.json";
  std::ofstream(lat) << run("family lk --n 3,2").out;
  Run r = run("radical --lattice " + lat.string() + " --order grevlex --recheck");
  CHECK(r.exit_code == 0);
}

TEST_CASE("search-order strategies") {
  fs::path lat = scratch() / "m5b.json";
  std::ofstream(lat) << run("family lk --n 1,1,1").out;
  Run r = run("search-order --lattice " + lat.string() + " --strategy all-revlex");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"NoneFound\"") != std::string::npos);
  CHECK(r.out.find("\"count_tested\": 120") != std::string::npos);
  Run s = run("search-order --lattice " + lat.string() +
              " --strategy sampled --samples 10 --seed 5");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("\"seed\": 5") != std::string::npos);
}

TEST_CASE("decompose single instance") {
  Run r = run("decompose --n 3 --m 1 --r 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"Radical\"") != std::string::npos);
}

TEST_CASE("props, birkhoff, gorenstein reports") {
  fs::path lat = scratch() / "glued.json";
  std::ofstream(lat) << run("family glued --n1 5 --n2 5 --kp 3 --i1 2 --i2 4").out;
  Run p = run("props --lattice " + lat.string());
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("\"modular\": false") != std::string::npos);
  CHECK(p.out.find("\"N5\"") != std::string::npos);

  fs::path on4 = scratch() / "on4b.json";
  std::ofstream(on4) << run("family on --n 4").out;
  Run b = run("birkhoff --lattice " + on4.string());
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("\"isomorphic_to_input\": true") != std::string::npos);
  Run g = run("gorenstein --lattice " + on4.string());
  CHECK(g.exit_code == 0);
  CHECK(g.out.find("\"NotGorenstein\"") != std::string::npos);
}

TEST_CASE("iso-check") {
  Run r = run("iso-check --k 2 --p 3 --q 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verdict\": true") != std::string::npos);
}

TEST_CASE("bench emits CSV, and budget 0 emits only the header") {
  Run r = run("bench --suite on-scaling");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("instance,nvars,ngenerators,spairs_processed,wall_ms,status", 0) == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 10);  // header + n = 2..10
  Run empty = run("bench --suite l2-scaling --budget-pairs 0");
  CHECK(empty.exit_code == 0);
  int elines = 0;
  for (char c : empty.out)
    if (c == '\n') ++elines;
  CHECK(elines == 1);
}

TEST_CASE("verify-paper exit codes across claims") {
  CHECK(run("verify-paper --claim theorem1 --n 3 --m 2").exit_code == 0);
  CHECK(run("verify-paper --claim theorem2 --n 2 --m 2 --r 1").exit_code == 0);
  CHECK(run("verify-paper --claim theorem4 --n 5").exit_code == 0);
  CHECK(run("verify-paper --claim theorem51 --k 1 --p 2 --q 3").exit_code == 0);
  CHECK(run("verify-paper --claim theorem63 --n 6").exit_code == 0);
  // the glued-basis claim fails honestly on the structured-set clause
  CHECK(run("verify-paper --claim theorem3 --n1 7 --n2 7 --kp 4 --i1 3 --i2 5").exit_code == 1);
  CHECK(run("verify-paper --claim nonsense").exit_code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("family lk").exit_code != 0);
  CHECK(run("decompose").exit_code != 0);
  CHECK(run("bench --suite unknown").exit_code == 1);
}
