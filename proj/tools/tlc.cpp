// Command-line driver.  Thin plumbing over the headers: every subcommand
// prints a short human summary on stdout and, when --out is given, writes the
// same data as JSON.  Exit codes: 0 success / positive verdict, 1 negative
// verdict, 2 indeterminate (budget ran out, or a certificate that decides
// neither way), 3 malformed input or arguments.

#include <tlc/bounds.hpp>
#include <tlc/census.hpp>
#include <tlc/examples.hpp>
#include <tlc/io.hpp>
#include <tlc/recognition.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tlc;

constexpr const char* kVersion = "tlc 0.1.0 (file format 1)";

SearchBudget make_budget(long long budget_ms) {
  SearchBudget b;
  if (budget_ms > 0)
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(budget_ms);
  return b;
}

int exit_of(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return 0;
    case Verdict::no:
      return 1;
    default:
      return 2;
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "indeterminate";
  }
}

void write_out(const std::string& path, const json& j) {
  if (!path.empty()) save_json(path, j);
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(load_json(path));
}

std::string q_str(mpq_class q) {
  q.canonicalize();
  return q.get_str();
}

std::string surface_name(const SurfaceClass& s) {
  if (s.is_sphere()) return "sphere";
  if (s.is_disk()) return "disk";
  std::ostringstream os;
  if (s.orientable)
    os << "orientable surface, genus " << s.genus;
  else
    os << "non-orientable surface, " << s.crosscaps << " crosscap(s)";
  os << ", " << s.boundary_circles << " boundary circle(s)";
  return os.str();
}

json surface_json(const SurfaceClass& s) {
  return json{{"orientable", s.orientable},
              {"genus", s.genus},
              {"crosscaps", s.crosscaps},
              {"boundary_circles", s.boundary_circles},
              {"euler", s.euler},
              {"name", surface_name(s)}};
}

void print_homology(const HomologyProfile& H) {
  std::cout << "reduced homology (dim " << H.dim << "):\n";
  for (int k = 0; k <= H.dim; ++k) {
    std::cout << "  H" << k << ": Z^" << H.betti_at(k);
    for (long long inv : H.torsion_at(k)) std::cout << " + Z/" << inv;
    std::cout << "\n";
  }
}

// --------------------------------------------------------------------------
// tree gen

TreeOfSimplices sample_tree(int d, int n, std::mt19937& rng) {
  TreeOfSimplices T;
  T.d = d;
  std::vector<Face> sims = {Face{}};
  for (int v = 0; v <= d; ++v) sims[0].push_back(v);
  std::set<Face> shared;
  for (int k = 1; k < n; ++k) {
    // every facet of every simplex that is not already shared is free;
    // pick one uniformly, so every labeled growth step is equally likely
    std::vector<std::pair<int, Face>> free_facets;
    for (size_t i = 0; i < sims.size(); ++i)
      for (size_t drop = 0; drop < sims[i].size(); ++drop) {
        Face f = sims[i];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!shared.count(f)) free_facets.emplace_back(static_cast<int>(i), f);
      }
    std::uniform_int_distribution<size_t> pick(0, free_facets.size() - 1);
    auto [parent, facet] = free_facets[pick(rng)];
    shared.insert(facet);
    T.attachments.push_back({parent, facet});
    Face next = facet;
    next.push_back(d + k);
    std::sort(next.begin(), next.end());
    sims.push_back(next);
  }
  return T;
}

int run_tree_gen(int d, int n, int sample, unsigned seed,
                 const std::string& out) {
  json trees = json::array();
  if (sample > 0) {
    std::mt19937 rng(seed);
    for (int i = 0; i < sample; ++i) trees.push_back(to_json(sample_tree(d, n, rng)));
    std::cout << "sampled " << sample << " random trees of " << n << " "
              << d << "-simplices (seed " << seed << ")\n";
  } else {
    auto all = generate_trees(d, n, true);
    for (const auto& T : all) trees.push_back(to_json(T));
    std::cout << all.size() << " trees of " << n << " " << d
              << "-simplices up to isomorphism\n";
  }
  json j{{"d", d}, {"n", n}, {"count", trees.size()}, {"trees", trees}};
  if (sample > 0) j["seed"] = seed;
  write_out(out, j);
  return 0;
}

// --------------------------------------------------------------------------
// tree facecounts

int run_tree_facecounts(int d, int n, const std::string& out) {
  const auto rep = face_counts(d, n);
  std::cout << "boundary of a tree of " << n << " " << d << "-simplices: N"
            << d - 1 << "=" << rep.n_dm1 << " N" << d - 2 << "=" << rep.n_dm2;
  json j{{"d", d}, {"n", n}, {"D", q_str(rep.D)},
         {"n_dm1", rep.n_dm1}, {"n_dm2", rep.n_dm2}};
  if (d >= 3) {
    std::cout << " N" << d - 3 << "=" << rep.n_dm3;
    j["n_dm3"] = rep.n_dm3;
  }
  std::cout << " (D=" << q_str(rep.D) << ")\n";
  write_out(out, j);
  return 0;
}

// --------------------------------------------------------------------------
// glue replay

int run_glue_replay(const std::string& in, const std::string& out) {
  json input = load_json(in);
  // accept either a bare construction or a recognizer report carrying one
  const LocalConstruction lc = construction_from_json(
      input.is_object() && input.contains("witness") ? input.at("witness")
                                                     : input);
  const auto rr = replay(lc);
  json j{{"valid", rr.valid},
         {"moves", lc.moves.size()},
         {"t", lc.t},
         {"d", lc.tree.d}};
  if (!rr.valid) {
    j["failed_index"] = rr.failed_index;
    j["reason"] = rr.reason;
    std::cout << "replay: move " << rr.failed_index
              << " is not admissible: " << rr.reason << "\n";
    write_out(out, j);
    return 1;
  }
  const bool closed = boundary_facet_classes(rr.state).empty();
  j["closed"] = closed;
  std::cout << "replay: valid, " << lc.moves.size() << " moves on "
            << lc.tree.facet_count() << " " << lc.tree.d << "-simplices, "
            << (closed ? "closed" : "has boundary") << "\n";
  try {
    const auto K = cw_to_simplicial(materialize(rr.state));
    j["final"] = to_json(K);
    j["canonical_key"] = canonical_key(K);
    std::cout << "final complex: " << K.facets.size() << " facets, "
              << vertices(K).size() << " vertices\n";
  } catch (const DoubledCellError&) {
    j["final"] = nullptr;
    std::cout << "final object is a regular CW complex, not simplicial "
                 "(two cells share a boundary)\n";
  }
  write_out(out, j);
  return 0;
}

// --------------------------------------------------------------------------
// recognize lc / constructible

int run_recognize_lc(const std::string& in, int t, long long budget_ms,
                     const std::string& out) {
  const auto K = load_complex(in);
  const auto r = is_t_LC(K, t, make_budget(budget_ms));
  std::cout << t << "-LC: " << verdict_name(r.verdict) << " (trees tried "
            << r.trees_tried << ", orderings tried " << r.orderings_tried
            << ")\n";
  json j{{"t", t},
         {"verdict", verdict_name(r.verdict)},
         {"trees_tried", r.trees_tried},
         {"orderings_tried", r.orderings_tried}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  write_out(out, j);
  return exit_of(r.verdict);
}

json split_json(const SplitWitness& w) {
  json j{{"facets", w.facets}};
  if (w.first) {
    j["first"] = split_json(*w.first);
    j["second"] = split_json(*w.second);
  } else {
    j["base"] = w.base;
  }
  return j;
}

int run_recognize_con(const std::string& in, int t, long long budget_ms,
                      const std::string& out) {
  const auto K = load_complex(in);
  const auto r = is_t_constructible(K, t, make_budget(budget_ms));
  std::cout << t << "-constructible: " << verdict_name(r.verdict)
            << " (nodes " << r.nodes << ")\n";
  json j{{"t", t}, {"verdict", verdict_name(r.verdict)}, {"nodes", r.nodes}};
  if (r.witness) j["witness"] = split_json(*r.witness);
  write_out(out, j);
  return exit_of(r.verdict);
}

// --------------------------------------------------------------------------
// certify manifold

int run_certify(const std::string& in, const std::string& out) {
  const auto K = load_complex(in);
  const auto cert = certify_manifold(K);
  std::cout << "certificate: " << to_string(cert) << "\n";
  write_out(out, json{{"certificate", to_string(cert)}});
  switch (cert) {
    case ManifoldCertificate::certified_manifold:
      return 0;
    case ManifoldCertificate::certified_non_manifold:
      return 1;
    default:
      return 2;
  }
}

// --------------------------------------------------------------------------
// homology

int run_homology(const std::string& in, const std::string& out) {
  const auto K = load_complex(in);
  const auto H = reduced_homology(K);
  print_homology(H);
  write_out(out, to_json(H));
  return 0;
}

// --------------------------------------------------------------------------
// link

int run_link(const std::string& in, int vertex, const std::string& out) {
  const auto K = load_complex(in);
  const auto L = link(K, Face{vertex});
  std::cout << "link of vertex " << vertex << ": dim " << L.dim() << ", "
            << L.facets.size() << " facets, euler "
            << euler_characteristic(L) << "\n";
  const auto H = reduced_homology(L);
  print_homology(H);
  json j{{"vertex", vertex}, {"link", to_json(L)}, {"homology", to_json(H)}};
  if (L.dim() == 2) {
    const auto sr = classify_surface(L);
    if (const auto* sc = std::get_if<SurfaceClass>(&sr)) {
      std::cout << "surface: " << surface_name(*sc) << "\n";
      j["surface"] = surface_json(*sc);
    } else {
      const auto& bad = std::get<NotASurface>(sr);
      std::cout << "not a surface: " << bad.reason << "\n";
      j["surface"] = json{{"not_a_surface", bad.reason}};
    }
  }
  write_out(out, j);
  return 0;
}

// --------------------------------------------------------------------------
// census

int run_census(int d, int n, int t, const std::string& cls, bool closed,
               int workers, std::uint64_t max_states, long long budget_ms,
               const std::string& dir, const std::string& out) {
  CensusParams p;
  p.d = d;
  p.n = n;
  p.t = t;
  p.cls = census_class_from_string(cls);
  p.closed = closed;
  p.workers = workers;
  p.max_states = max_states;
  p.out_dir = dir;
  if (budget_ms > 0)
    p.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(budget_ms);
  const auto res = census(p);
  std::cout << "census d=" << d << " n=" << n << " t=" << t
            << " class=" << cls << (closed ? " closed" : " open") << ": "
            << res.records.size() << " records, " << res.states_visited
            << " states, " << (res.complete ? "complete" : "INCOMPLETE")
            << ", tasks " << res.tasks_done << "/" << res.tasks_total
            << ", " << res.wall_seconds << "s\n";
  for (const auto& [key, rec] : res.records)
    std::cout << "  " << rec.n_facets << " facets  "
              << to_string(rec.certificate)
              << (rec.links_spherical ? "  spherical-links" : "") << "\n";
  json records = json::array();
  for (const auto& [key, rec] : res.records)
    records.push_back(json{{"key", key}, {"record", to_json(rec)}});
  write_out(out, json{{"d", d},
                      {"n", n},
                      {"t", t},
                      {"class", cls},
                      {"closed", closed},
                      {"complete", res.complete},
                      {"states_visited", res.states_visited},
                      {"tasks_total", res.tasks_total},
                      {"tasks_done", res.tasks_done},
                      {"wall_seconds", res.wall_seconds},
                      {"records", records}});
  return res.complete ? 0 : 2;
}

// --------------------------------------------------------------------------
// bounds

int run_bounds(int d, int n, const std::string& count_str,
               const std::string& out) {
  mpz_class count;
  if (count.set_str(count_str, 10) != 0)
    throw std::invalid_argument("bounds: --count must be a decimal integer");
  const auto rep = bound_report(d, n, count);
  const auto& c = rep.chain;
  const auto& v = rep.verdicts;
  auto line = [](const std::string& label, bool ok) {
    std::cout << "  " << label << ": " << (ok ? "PASS" : "FAIL") << "\n";
  };
  std::cout << "trees of " << n << " " << d << "-simplices: D=" << q_str(c.D)
            << ", boundary facets 2D=" << c.two_D.get_str() << ", N" << d - 3
            << "=" << c.n_dm3.get_str() << "\n";
  std::cout << "log2 exponents: per-tree " << q_str(c.per_tree_log2)
            << ", collapsed " << q_str(c.collapsed_log2) << ", middle "
            << q_str(c.middle_log2) << ", ceiling " << q_str(c.ceiling_log2)
            << "\n";
  std::cout << "count " << count.get_str() << " against " << n
            << "-tree total and the 2^(" << q_str(c.ceiling_log2)
            << ") ceiling:\n";
  line("per-tree exponent equals collapsed form", v.identity_collapsed);
  line("facet compositions sum to 2^(D-1)", v.compositions_exact);
  line("tree base below d*e", v.tree_base_below_de);
  line("d*e fits under the collapse slack", v.de_below_slack);
  line("collapsed <= middle", v.chain_ordered);
  line("round usage fits its pools", v.rounds_consistent);
  line("count < trees * per-tree ceiling", v.count_below_total);
  line("count < 2^(d^3 n/2)", v.count_below_ceiling);
  std::cout << "  headroom d^3 n/12 > d(d-1)+3 (asymptotic regime): "
            << (v.headroom ? "yes" : "no") << "\n";
  const bool ok = v.identity_collapsed && v.compositions_exact &&
                  v.tree_base_below_de && v.de_below_slack &&
                  v.chain_ordered && v.rounds_consistent &&
                  v.all_count_bounds();
  write_out(out, json{{"d", d},
                      {"n", n},
                      {"count", count.get_str()},
                      {"D", q_str(c.D)},
                      {"n_dm3", c.n_dm3.get_str()},
                      {"per_tree_log2", q_str(c.per_tree_log2)},
                      {"collapsed_log2", q_str(c.collapsed_log2)},
                      {"middle_log2", q_str(c.middle_log2)},
                      {"ceiling_log2", q_str(c.ceiling_log2)},
                      {"tree_count_log2", c.tree_count_log2},
                      {"de_log2", c.de_log2},
                      {"identity_collapsed", v.identity_collapsed},
                      {"compositions_exact", v.compositions_exact},
                      {"tree_base_below_de", v.tree_base_below_de},
                      {"de_below_slack", v.de_below_slack},
                      {"chain_ordered", v.chain_ordered},
                      {"rounds_consistent", v.rounds_consistent},
                      {"count_below_total", v.count_below_total},
                      {"count_below_ceiling", v.count_below_ceiling},
                      {"headroom", v.headroom},
                      {"pass", ok}});
  return ok ? 0 : 1;
}

// --------------------------------------------------------------------------
// examples

int run_examples(const std::string& name, const std::string& out) {
  const auto corpus = example_corpus();
  if (name.empty()) {
    json list = json::array();
    for (const auto& nc : corpus) {
      std::cout << nc.name << "  dim " << nc.complex.dim() << "  "
                << nc.complex.facets.size() << " facets\n";
      list.push_back(json{{"name", nc.name},
                          {"dim", nc.complex.dim()},
                          {"facets", nc.complex.facets.size()}});
    }
    write_out(out, json{{"examples", list}});
    return 0;
  }
  for (const auto& nc : corpus)
    if (nc.name == name) {
      std::cout << nc.name << ": dim " << nc.complex.dim() << ", "
                << nc.complex.facets.size() << " facets, "
                << vertices(nc.complex).size() << " vertices\n";
      write_out(out, to_json(nc.complex));
      return 0;
    }
  throw std::invalid_argument("examples: unknown name '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local constructions of triangulated manifolds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int rc = 0;
  int d = 3, n = 1, t = 2, vertex = 0, sample = 0, workers = 1;
  unsigned seed = 0;
  long long budget_ms = 0;
  std::uint64_t max_states = 20'000'000;
  bool closed = true;
  std::string in, out, dir, cls = "pseudomanifold", name, count = "0";

  auto* tree = app.add_subcommand("tree", "trees of simplices");
  tree->require_subcommand(1);
  auto* gen = tree->add_subcommand("gen", "enumerate trees up to isomorphism, or sample random ones");
  gen->add_option("--d", d, "simplex dimension")->required();
  gen->add_option("--n", n, "number of simplices")->required();
  gen->add_option("--sample", sample, "sample this many random trees instead of enumerating");
  gen->add_option("--seed", seed, "random seed for --sample");
  gen->add_option("--out", out, "write trees as JSON");
  gen->callback([&] { rc = run_tree_gen(d, n, sample, seed, out); });

  auto* fc = tree->add_subcommand("facecounts", "closed-form boundary face counts");
  fc->add_option("--d", d, "simplex dimension")->required();
  fc->add_option("--n", n, "number of simplices")->required();
  fc->add_option("--out", out, "write counts as JSON");
  fc->callback([&] { rc = run_tree_facecounts(d, n, out); });

  auto* glue = app.add_subcommand("glue", "gluing moves");
  glue->require_subcommand(1);
  auto* rep = glue->add_subcommand("replay", "replay a construction and report the final complex");
  rep->add_option("file,--in", in, "construction JSON, or a recognizer report with a witness")->required();
  rep->add_option("--out", out, "write the replay report as JSON");
  rep->callback([&] { rc = run_glue_replay(in, out); });

  auto* rec = app.add_subcommand("recognize", "search for local constructions");
  rec->require_subcommand(1);
  auto* lc = rec->add_subcommand("lc", "is the complex t-LC?");
  lc->add_option("file,--in", in, "complex JSON")->required();
  lc->add_option("--t", t, "locality parameter")->required();
  lc->add_option("--budget-ms", budget_ms, "wall-clock budget; exceeding it exits 2");
  lc->add_option("--out", out, "write the verdict and witness as JSON");
  lc->callback([&] { rc = run_recognize_lc(in, t, budget_ms, out); });

  auto* con = rec->add_subcommand("constructible", "is the complex t-constructible?");
  con->add_option("file,--in", in, "complex JSON")->required();
  con->add_option("--t", t, "locality parameter")->required();
  con->add_option("--budget-ms", budget_ms, "wall-clock budget; exceeding it exits 2");
  con->add_option("--out", out, "write the verdict and witness as JSON");
  con->callback([&] { rc = run_recognize_con(in, t, budget_ms, out); });

  auto* cert = app.add_subcommand("certify", "certificates");
  cert->require_subcommand(1);
  auto* man = cert->add_subcommand("manifold", "manifold / non-manifold / homology-only");
  man->add_option("file,--in", in, "complex JSON")->required();
  man->add_option("--out", out, "write the certificate as JSON");
  man->callback([&] { rc = run_certify(in, out); });

  auto* hom = app.add_subcommand("homology", "integral reduced homology");
  hom->add_option("file,--in", in, "complex JSON")->required();
  hom->add_option("--out", out, "write the profile as JSON");
  hom->callback([&] { rc = run_homology(in, out); });

  auto* lnk = app.add_subcommand("link", "vertex link with surface classification");
  lnk->add_option("file,--in", in, "complex JSON")->required();
  lnk->add_option("--vertex", vertex, "vertex id")->required();
  lnk->add_option("--out", out, "write the link report as JSON");
  lnk->callback([&] { rc = run_link(in, vertex, out); });

  auto* cen = app.add_subcommand("census", "enumerate t-LC complexes up to isomorphism");
  cen->add_option("--d", d, "simplex dimension")->required();
  cen->add_option("--n", n, "number of simplices")->required();
  cen->add_option("--t", t, "locality parameter");
  cen->add_option("--class", cls, "pseudomanifold | quasimanifold | manifold");
  cen->add_flag("--closed,!--with-boundary", closed, "keep only closed complexes (default) or only ones with boundary");
  cen->add_option("--workers", workers, "worker threads")->envname("TLC_WORKERS");
  cen->add_option("--max-states", max_states, "state budget; exceeding it exits 2");
  cen->add_option("--budget-ms", budget_ms, "wall-clock budget; exceeding it exits 2");
  cen->add_option("--dir", dir, "directory for resumable records.jsonl / done.txt / manifest.json");
  cen->add_option("--out", out, "write records and manifest as one JSON file");
  cen->callback([&] {
    rc = run_census(d, n, t, cls, closed, workers, max_states, budget_ms, dir, out);
  });

  auto* bnd = app.add_subcommand("bounds", "counting-bound arithmetic for a census count");
  bnd->add_option("--d", d, "simplex dimension")->required();
  bnd->add_option("--n", n, "number of simplices")->required();
  bnd->add_option("--count", count, "census count to place under the ceilings")->required();
  bnd->add_option("--out", out, "write the report as JSON");
  bnd->callback([&] { rc = run_bounds(d, n, count, out); });

  auto* ex = app.add_subcommand("examples", "built-in complexes");
  ex->add_option("--name", name, "emit this example (omit to list all)");
  ex->add_option("--out", out, "write the complex (or the list) as JSON");
  ex->callback([&] { rc = run_examples(name, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
