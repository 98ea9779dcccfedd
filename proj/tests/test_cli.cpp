// Drives the installed binary end to end through /bin/sh.  TLC_CLI_BIN is
// injected by the build so the tests always exercise the freshly built tool.

#include <catch2/catch_amalgamated.hpp>

#include <tlc/canonical.hpp>
#include <tlc/examples.hpp>
#include <tlc/io.hpp>
#include <tlc/tree_of_simplices.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <set>
#include <string>

using namespace tlc;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = ::popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = ::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string bin = TLC_CLI_BIN;

// per-process scratch directory for files the binary reads and writes
std::string scratch(const std::string& name) {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("tlc-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

std::string example_file(const std::string& name, const std::string& file) {
  const std::string path = scratch(file);
  REQUIRE(run(bin + " examples --name " + name + " --out " + path).code == 0);
  return path;
}

}  // namespace

TEST_CASE("version and face counts print on request") {
  auto v = run(bin + " --version");
  CHECK(v.code == 0);
  CHECK(v.out.find("tlc") != std::string::npos);
  auto fc = run(bin + " tree facecounts --d 3 --n 2");
  CHECK(fc.code == 0);
  CHECK(fc.out.find("N2=6 N1=9 N0=5") != std::string::npos);
  auto fc45 = run(bin + " tree facecounts --d 4 --n 5 --out " + scratch("fc.json"));
  CHECK(fc45.code == 0);
  const auto j = load_json(scratch("fc.json"));
  CHECK(j.at("n_dm1").get<long long>() == 17);  // 2D = 2 + N(d-1)
}

TEST_CASE("recognition exit codes distinguish yes, no and out-of-budget") {
  const auto rp2 = example_file("projective-plane", "rp2.json");
  CHECK(run(bin + " recognize lc " + rp2 + " --t 1").code == 1);
  CHECK(run(bin + " recognize lc " + rp2 + " --t 2").code == 0);
  CHECK(run(bin + " recognize lc " + rp2 + " --t 1 --budget-ms 1").code == 2);
  CHECK(run(bin + " recognize constructible " + rp2 + " --t 2").code == 0);

  const auto moebius = example_file("moebius-band", "moebius.json");
  CHECK(run(bin + " recognize constructible " + moebius + " --t 1").code == 1);
}

TEST_CASE("malformed inputs and unknown commands exit three") {
  const std::string bad = scratch("bad.json");
  {
    std::ofstream out(bad);
    out << "{\"facets\": [[0,1,2],";
  }
  CHECK(run(bin + " homology " + bad).code == 3);
  CHECK(run(bin + " recognize lc " + bad + " --t 1").code == 3);
  CHECK(run(bin + " homology " + scratch("no-such-file.json")).code == 3);
  CHECK(run(bin + " frobnicate").code == 3);
  CHECK(run(bin + " recognize lc").code == 3);  // missing required arguments
  CHECK(run(bin + " examples --name no-such-example").code == 3);
}

TEST_CASE("recognizer witnesses replay cleanly and tampering breaks them") {
  const auto rp2 = example_file("projective-plane", "rp2b.json");
  const std::string wit = scratch("rp2-witness.json");
  REQUIRE(run(bin + " recognize lc " + rp2 + " --t 2 --out " + wit).code == 0);

  const std::string rep = scratch("replay.json");
  auto replay = run(bin + " glue replay " + wit + " --out " + rep);
  CHECK(replay.code == 0);
  const auto report = load_json(rep);
  CHECK(report.at("valid").get<bool>());
  CHECK(report.at("closed").get<bool>());
  CHECK(report.at("canonical_key").get<std::string>() ==
        canonical_key(projective_plane_6()));

  auto tampered = load_json(wit);
  tampered["witness"]["t"] = 1;  // claim the construction is more local
  save_json(scratch("tampered.json"), tampered);
  CHECK(run(bin + " glue replay " + scratch("tampered.json")).code == 1);
}

TEST_CASE("generated trees parse back to isomorphic trees") {
  const std::string file = scratch("trees34.json");
  REQUIRE(run(bin + " tree gen --d 3 --n 4 --out " + file).code == 0);
  const auto j = load_json(file);
  REQUIRE(j.at("count").get<size_t>() == 3);
  std::set<std::string> emitted, expected;
  for (const auto& tj : j.at("trees"))
    emitted.insert(canonical_key(tree_complex(tree_from_json(tj))));
  for (const auto& T : generate_trees(3, 4, true))
    expected.insert(canonical_key(tree_complex(T)));
  CHECK(emitted == expected);

  const std::string s1 = scratch("sample1.json"), s2 = scratch("sample2.json");
  REQUIRE(run(bin + " tree gen --d 2 --n 6 --sample 4 --seed 7 --out " + s1).code == 0);
  REQUIRE(run(bin + " tree gen --d 2 --n 6 --sample 4 --seed 7 --out " + s2).code == 0);
  const auto a = load_json(s1), b = load_json(s2);
  CHECK(a == b);  // same seed, same trees
  for (const auto& tj : a.at("trees")) {
    const auto T = tree_from_json(tj);
    CHECK(T.facet_count() == 6);
    CHECK(tree_complex(T).facets.size() == 6);  // validates the recipe
  }
}

TEST_CASE("census runs are driven by flags and exit by completeness") {
  const std::string out = scratch("census26.json");
  auto full = run(bin + " census --d 2 --n 6 --t 1 --class manifold --workers 2 --out " + out);
  CHECK(full.code == 0);
  const auto j = load_json(out);
  CHECK(j.at("complete").get<bool>());
  CHECK(j.at("records").size() == 1);
  CHECK(j.at("states_visited").get<long long>() == 74);

  CHECK(run(bin + " census --d 2 --n 6 --t 1 --class manifold --max-states 10").code == 2);
  CHECK(run(bin + " census --d 2 --n 6 --t 1 --class nonsense").code == 3);

  // worker count and the TLC_WORKERS default must not move the exit code
  CHECK(run(bin + " census --d 2 --n 6 --t 1 --class manifold --workers 8").code == 0);
  CHECK(run("TLC_WORKERS=4 " + bin + " census --d 2 --n 6 --t 1 --class manifold").code == 0);
}

TEST_CASE("bound reports pass small counts and reject oversized ones") {
  auto ok = run(bin + " bounds --d 3 --n 5 --count 1");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS") != std::string::npos);
  // 10^6 does not fit under the one-tetrahedron ceiling 2^(13.5)
  CHECK(run(bin + " bounds --d 3 --n 1 --count 1000000").code == 1);
  CHECK(run(bin + " bounds --d 3 --n 5 --count twelve").code == 3);
}

TEST_CASE("homology link and certify describe the classic complexes") {
  const auto torus = example_file("torus", "torus.json");
  auto hom = run(bin + " homology " + torus);
  CHECK(hom.code == 0);
  CHECK(hom.out.find("H1: Z^2") != std::string::npos);
  CHECK(run(bin + " certify manifold " + torus).code == 0);
  auto lk = run(bin + " link " + torus + " --vertex 1");
  CHECK(lk.code == 0);
  CHECK(lk.out.find("dim 1") != std::string::npos);

  const auto pinched = example_file("pinched-path-1-4", "pinched.json");
  CHECK(run(bin + " certify manifold " + pinched).code == 1);

  const auto bowtie = example_file("bowtie-balls", "bowtie.json");
  auto blk = run(bin + " link " + bowtie + " --vertex 3");
  CHECK(blk.code == 0);
  CHECK(blk.out.find("2 boundary circle") != std::string::npos);

  // four dimensions: vertex links are only homology-certified
  save_json(scratch("sphere4.json"), to_json(boundary_complex(simplex_complex(5))));
  CHECK(run(bin + " certify manifold " + scratch("sphere4.json")).code == 2);

  auto list = run(bin + " examples");
  CHECK(list.code == 0);
  CHECK(list.out.find("projective-plane") != std::string::npos);
}
