#pragma once

// Exhaustive census of t-LC complexes at small scale.  For every tree of N
// d-simplices and every admissible gluing sequence, collect the resulting
// complexes up to isomorphism, each with a replayable construction witness.
//
// The state space is a DAG (move sets commute), so search branches are
// collapsed through a canonical-key memo of intermediate states.  Work is
// partitioned into (tree, first move) tasks; with any worker count a complete
// run visits exactly the distinct reachable states and produces the same
// canonical-form set.  Budget exhaustion flags the result incomplete rather
// than silently truncating it.

#include <tlc/canonical.hpp>
#include <tlc/cw_complex.hpp>
#include <tlc/gluing.hpp>
#include <tlc/homology.hpp>
#include <tlc/io.hpp>
#include <tlc/recognition.hpp>
#include <tlc/surface.hpp>
#include <tlc/tree_of_simplices.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace tlc {

enum class CensusClass { pseudomanifold, quasimanifold, manifold };

inline const char* to_string(CensusClass c) {
  switch (c) {
    case CensusClass::pseudomanifold: return "pseudomanifold";
    case CensusClass::quasimanifold: return "quasimanifold";
    case CensusClass::manifold: return "manifold";
  }
  return "?";
}

inline CensusClass census_class_from_string(const std::string& s) {
  if (s == "pseudomanifold") return CensusClass::pseudomanifold;
  if (s == "quasimanifold") return CensusClass::quasimanifold;
  if (s == "manifold") return CensusClass::manifold;
  throw std::invalid_argument("census: unknown class '" + s + "'");
}

inline const char* to_string(ManifoldCertificate c) {
  switch (c) {
    case ManifoldCertificate::certified_manifold: return "manifold";
    case ManifoldCertificate::certified_non_manifold: return "non-manifold";
    case ManifoldCertificate::homology_certified_only: return "homology-only";
  }
  return "?";
}

struct CensusRecord {
  std::vector<Face> facets;  // canonically labeled
  int n_facets = 0;
  bool closed = false;
  // Interior (d-3)-cell links are 2-spheres; vacuously true for d <= 2.
  bool links_spherical = true;
  ManifoldCertificate certificate = ManifoldCertificate::certified_non_manifold;
  LocalConstruction witness;
  HomologyProfile homology;
};

inline json to_json(const CensusRecord& r) {
  return json{{"facets", r.facets},
              {"n", r.n_facets},
              {"closed", r.closed},
              {"links_spherical", r.links_spherical},
              {"certificate", to_string(r.certificate)},
              {"witness", to_json(r.witness)},
              {"homology", to_json(r.homology)}};
}

inline CensusRecord record_from_json(const json& j) {
  return detail::guarded("record", [&] {
    CensusRecord r;
    r.facets = j.at("facets").get<std::vector<Face>>();
    r.n_facets = j.at("n").get<int>();
    r.closed = j.at("closed").get<bool>();
    r.links_spherical = j.at("links_spherical").get<bool>();
    const auto cert = j.at("certificate").get<std::string>();
    if (cert == "manifold")
      r.certificate = ManifoldCertificate::certified_manifold;
    else if (cert == "non-manifold")
      r.certificate = ManifoldCertificate::certified_non_manifold;
    else if (cert == "homology-only")
      r.certificate = ManifoldCertificate::homology_certified_only;
    else
      detail::bad_json("record: certificate '" + cert + "'");
    r.witness = construction_from_json(j.at("witness"));
    auto H = j.at("homology");
    r.homology.dim = H.at("dim").get<int>();
    r.homology.betti = H.at("betti").get<std::vector<long long>>();
    r.homology.torsion =
        H.at("torsion").get<std::vector<std::vector<long long>>>();
    return r;
  });
}

struct CensusParams {
  int d = 2;
  int n = 1;
  int t = 1;
  CensusClass cls = CensusClass::pseudomanifold;
  bool closed = true;
  int workers = 1;
  std::uint64_t max_states = 20'000'000;
  // Optional wall-clock cutoff; exceeding it marks the result incomplete,
  // same as hitting max_states.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::string out_dir;  // when set: records.jsonl, done.txt, manifest.json
};

struct CensusResult {
  std::map<std::string, CensusRecord> records;  // canonical key -> record
  bool complete = true;
  std::uint64_t states_visited = 0;  // distinct intermediate states
  std::size_t tasks_total = 0;
  std::size_t tasks_done = 0;
  double wall_seconds = 0.0;
};

namespace detail {

// Every interior (d-3)-cell must link a single closed orientable genus-zero
// surface piece.  Boundary cells (those under a boundary facet) are exempt.
inline bool interior_links_spherical(const CWState& s) {
  const int d = s.base->d;
  if (d < 3) return true;
  std::set<int> bdry;
  for (int f : boundary_facet_classes(s))
    for (int c : sub_classes(s, d - 1, f, d - 3)) bdry.insert(c);
  for (int delta : cw_classes(s, d - 3)) {
    if (bdry.count(delta)) continue;
    const auto L = link_of(s, delta);
    const auto A = analyze_two_complex(L.c);
    if (!A.valid || A.pieces.size() != 1) return false;
    if (!A.pieces[0].surface().is_sphere()) return false;
  }
  return true;
}

}  // namespace detail

inline CensusResult census(const CensusParams& p) {
  if (p.d < 2) throw std::invalid_argument("census: need d >= 2");
  if (p.n < 1) throw std::invalid_argument("census: need n >= 1");
  if (p.t < 1 || p.t > p.d)
    throw std::invalid_argument("census: need 1 <= t <= d");
  if (p.workers < 1) throw std::invalid_argument("census: need workers >= 1");
  const auto t_start = std::chrono::steady_clock::now();
  const bool quasi_rules = p.cls != CensusClass::pseudomanifold && p.d >= 3;

  const auto trees = generate_trees(p.d, p.n, true);
  std::vector<CWState> roots;
  roots.reserve(trees.size());
  for (const auto& T : trees) roots.push_back(cw_from_tree(T));

  // Branch list at a state: pending mandatory parallel-pair gluings take
  // precedence; otherwise any admissible move may come next.
  auto branch_list = [&](const CWState& s) -> std::vector<GluingMove> {
    if (quasi_rules) {
      auto forced = forced_gluings(s);
      if (!forced.empty()) return forced;
    }
    return admissible_moves(s, p.t);
  };

  struct Task {
    int ti = 0;
    int mi = -1;  // -1: the bare tree itself
  };
  std::vector<Task> tasks;
  std::vector<std::vector<GluingMove>> root_branches(roots.size());
  for (size_t ti = 0; ti < roots.size(); ++ti) {
    root_branches[ti] = branch_list(roots[ti]);
    tasks.push_back({static_cast<int>(ti), -1});
    for (size_t mi = 0; mi < root_branches[ti].size(); ++mi)
      tasks.push_back({static_cast<int>(ti), static_cast<int>(mi)});
  }

  CensusResult result;
  result.tasks_total = tasks.size();

  // Resumable output: merge previously finished tasks, skip them below.
  namespace fs = std::filesystem;
  std::set<std::pair<int, int>> done;
  const bool persist = !p.out_dir.empty();
  std::string records_path, done_path;
  if (persist) {
    fs::create_directories(p.out_dir);
    records_path = (fs::path(p.out_dir) / "records.jsonl").string();
    done_path = (fs::path(p.out_dir) / "done.txt").string();
    if (fs::exists(done_path)) {
      std::ifstream in(done_path);
      int a, b;
      while (in >> a >> b) done.insert({a, b});
    }
  }

  std::mutex rec_mu, memo_mu, io_mu;
  auto merge_record = [&](const std::string& key, CensusRecord&& r) {
    const std::string tag = to_json(r.witness).dump();
    std::lock_guard<std::mutex> lk(rec_mu);
    auto [it, fresh] = result.records.try_emplace(key, std::move(r));
    if (!fresh && tag < to_json(it->second.witness).dump())
      it->second = std::move(r);
  };

  if (persist && fs::exists(records_path)) {
    for (const auto& line : load_jsonl(records_path)) {
      auto task = line.at("task");
      if (!done.count({task.at(0).get<int>(), task.at(1).get<int>()})) continue;
      merge_record(line.at("key").get<std::string>(),
                   record_from_json(line.at("record")));
    }
  }

  std::set<std::string> seen;
  std::atomic<std::uint64_t> visited{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> next_task{0}, finished{done.size()};

  auto make_record = [&](const CWState& s, const std::vector<GluingMove>& path,
                         int ti) -> std::optional<std::pair<std::string, CensusRecord>> {
    const bool is_closed = boundary_facet_classes(s).empty();
    if (p.closed && !is_closed) return std::nullopt;
    if (quasi_rules && !is_closed && !forced_gluings(s).empty())
      return std::nullopt;  // mandatory gluings still pending
    SimplicialComplex K;
    try {
      K = cw_to_simplicial(materialize(s));
    } catch (const DoubledCellError&) {
      return std::nullopt;  // a valid CW quotient, but not a triangulation
    }
    CensusRecord r;
    r.certificate = certify_manifold(K);
    if (p.cls == CensusClass::manifold) {
      if (p.d <= 3 &&
          r.certificate != ManifoldCertificate::certified_manifold)
        return std::nullopt;
      if (r.certificate == ManifoldCertificate::certified_non_manifold)
        return std::nullopt;
    }
    r.links_spherical = detail::interior_links_spherical(s);
    if (p.cls != CensusClass::pseudomanifold && !r.links_spherical)
      return std::nullopt;
    r.n_facets = static_cast<int>(K.facets.size());
    r.closed = is_closed;
    r.homology = reduced_homology(K);
    const auto cf = canonical_form(K);
    r.facets = cf.complex.facets;
    r.witness.tree = trees[static_cast<size_t>(ti)];
    r.witness.t = p.t;
    r.witness.moves = path;
    return std::make_pair(canonical_key(K), std::move(r));
  };

  auto run_task = [&](const Task& task) {
    std::vector<std::string> lines;  // buffered, flushed when the task ends
    std::vector<GluingMove> path;
    auto visit = [&](auto&& self, const CWState& s) -> void {
      if (out_of_budget.load()) return;
      const std::string key = cw_canonical_key(s);
      {
        std::lock_guard<std::mutex> lk(memo_mu);
        if (!seen.insert(key).second) return;
      }
      if (visited.fetch_add(1) + 1 > p.max_states) {
        out_of_budget.store(true);
        return;
      }
      if (p.deadline && std::chrono::steady_clock::now() > *p.deadline) {
        out_of_budget.store(true);
        return;
      }
      if (auto rec = make_record(s, path, task.ti)) {
        if (persist) {
          json line{{"task", {task.ti, task.mi}},
                    {"key", rec->first},
                    {"record", to_json(rec->second)}};
          lines.push_back(line.dump());
        }
        merge_record(rec->first, std::move(rec->second));
      }
      for (const auto& mv : branch_list(s)) {
        auto applied = apply_gluing(s, mv);
        auto* child = std::get_if<CWState>(&applied);
        if (!child) continue;
        if (quasi_rules && check_quasimanifold_conditions(s, mv)) continue;
        path.push_back(mv);
        self(self, *child);
        path.pop_back();
      }
    };

    const CWState& root = roots[static_cast<size_t>(task.ti)];
    if (task.mi < 0) {
      visit(visit, root);
    } else {
      const auto& mv =
          root_branches[static_cast<size_t>(task.ti)][static_cast<size_t>(task.mi)];
      auto applied = apply_gluing(root, mv);
      if (auto* child = std::get_if<CWState>(&applied)) {
        if (!(quasi_rules && check_quasimanifold_conditions(root, mv))) {
          path.push_back(mv);
          visit(visit, *child);
        }
      }
    }

    if (persist && !out_of_budget.load()) {
      std::lock_guard<std::mutex> lk(io_mu);
      std::ofstream rec_out(records_path, std::ios::app);
      for (const auto& l : lines) rec_out << l << "\n";
      rec_out.flush();
      std::ofstream done_out(done_path, std::ios::app);
      done_out << task.ti << " " << task.mi << "\n";
    }
  };

  auto worker = [&] {
    for (;;) {
      const size_t i = next_task.fetch_add(1);
      if (i >= tasks.size() || out_of_budget.load()) return;
      if (done.count({tasks[i].ti, tasks[i].mi})) continue;
      run_task(tasks[i]);
      if (!out_of_budget.load()) finished.fetch_add(1);
    }
  };

  if (p.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < p.workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.complete = !out_of_budget.load() && finished.load() >= tasks.size();
  result.states_visited = visited.load();
  result.tasks_done = finished.load();
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();

  if (persist) {
    json manifest{{"d", p.d},
                  {"n", p.n},
                  {"t", p.t},
                  {"class", to_string(p.cls)},
                  {"closed", p.closed},
                  {"max_states", p.max_states},
                  {"complete", result.complete},
                  {"records", result.records.size()},
                  {"states_visited", result.states_visited},
                  {"tasks_total", result.tasks_total},
                  {"tasks_done", result.tasks_done},
                  {"wall_seconds", result.wall_seconds}};
    save_json((fs::path(p.out_dir) / "manifest.json").string(), manifest);
  }
  return result;
}

}  // namespace tlc
