// braidcover: Hurwitz systems, exceptional dissections of marked surfaces,
// and the braid group actions on them.
//
// Exit codes: 0 success, 1 domain/file error, 2 inconclusive certificate.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "braidcover/io.hpp"

using namespace braidcover;

namespace {

int default_threads() {
  if (const char* env = std::getenv("BRAIDCOVER_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

BraidWord parse_word(const std::string& spec) {
  BraidWord w;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const int g = std::stoi(tok);
    if (g == 0) throw domain_error("braid generators are nonzero integers");
    w.push_back(g);
  }
  return w;
}

// a dissection file starts with "surface"; otherwise treat as a skeleton
bool looks_like_dissection(const std::string& path) {
  std::ifstream in(path);
  std::string tok;
  in >> tok;
  return tok == "surface";
}

int cmd_hurwitz_orbit(const std::string& path, std::size_t limit) {
  HurwitzSystem h = read_hurwitz_file(path);
  if (!is_valid_system(h)) {
    std::cerr << path << ": transpositions do not generate the symmetric group\n";
    return 1;
  }
  auto orbit = hurwitz_orbit(h, limit);
  auto type = cycle_type(product(h));
  std::cout << "orbit_size=" << orbit.systems.size() << " complete="
            << (orbit.complete ? "true" : "false") << " cycle_type=" << type.str() << "\n";
  for (const auto& s : orbit.systems) std::cout << hurwitz_line(s) << "\n";
  return 0;
}

int cmd_hurwitz_invariants(const std::string& path) {
  HurwitzSystem h = read_hurwitz_file(path);
  if (!is_valid_system(h)) {
    std::cerr << path << ": transpositions do not generate the symmetric group\n";
    return 1;
  }
  auto inv = surface_invariants(h);
  std::cout << "m=" << h.m << " n=" << h.n() << " genus=" << inv.genus
            << " boundary=" << inv.boundary_count << " cycle_type=" << inv.distribution.str()
            << "\n";
  return 0;
}

int cmd_dissection_validate(const std::string& path) {
  std::vector<std::string> violations;
  if (looks_like_dissection(path)) {
    Dissection d = read_dissection_file(path);
    violations = validate_dissection(d).violations;
  } else {
    violations = validate_skeleton(read_skeleton_file(path)).violations;
  }
  if (violations.empty()) {
    std::cout << "Valid\n";
    return 0;
  }
  for (const auto& v : violations) std::cout << "violation: " << v << "\n";
  return 1;
}

int cmd_dissection_hurwitz(const std::string& path) {
  HurwitzSystem h;
  if (looks_like_dissection(path)) {
    h = hurwitz_of(read_dissection_file(path));
  } else {
    h = hurwitz_of(read_skeleton_file(path));
  }
  write_hurwitz(std::cout, h);
  return 0;
}

int cmd_dissection_mutate(const std::string& path, const std::string& word_spec,
                          const std::string& out_path) {
  Dissection d = read_dissection_file(path);
  auto before = validate_dissection(d);
  if (!before.valid()) {
    std::cerr << path << ": not a valid dissection: " << before.violations.front() << "\n";
    return 1;
  }
  BraidWord w = parse_word(word_spec);
  std::cout << "before: " << hurwitz_line(hurwitz_of(d)) << "\n";
  Dissection img = braid_act(d, w);
  std::cout << "after:  " << hurwitz_line(hurwitz_of(img)) << "\n";
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  write_dissection(out, img);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_dissection_quiver(const std::string& path, const std::string& grading_path,
                          const std::string& format) {
  Dissection d = read_dissection_file(path);
  GradingData grading;
  if (!grading_path.empty()) {
    std::ifstream in(grading_path);
    if (!in) {
      std::cerr << "cannot open " << grading_path << "\n";
      return 1;
    }
    grading = read_grading(in);
  }
  GradedQuiver q = quiver_of(d, grading);
  std::cout << (format == "text" ? quiver_text(q) : quiver_dot(q));
  return 0;
}

int cmd_orbit_explore(const std::string& path, int depth, std::size_t max_states, int threads) {
  Dissection d = read_dissection_file(path);
  ExploreLimits lim;
  lim.max_depth = depth;
  lim.max_states = max_states;
  lim.threads = threads;
  auto rep = explore(d, lim);
  std::cout << "orbit_size=" << rep.visited.size() << " complete="
            << (rep.complete ? "true" : "false") << " depth=" << rep.depth_reached << "\n";
  std::set<std::string> projections(rep.hurwitz_keys.begin(), rep.hurwitz_keys.end());
  std::cout << "hurwitz_classes=" << projections.size() << "\n";
  if (rep.has_deck) {
    int fixed = 0;
    for (char c : rep.deck_invariant) fixed += c;
    std::cout << "deck_invariant_states=" << fixed << "/" << rep.visited.size() << "\n";
  }
  return 0;
}

int cmd_orbit_separate(const std::string& a, const std::string& b, std::size_t budget) {
  Dissection d1 = read_dissection_file(a);
  Dissection d2 = read_dissection_file(b);
  auto cert = separate(d1, d2, budget);
  std::cout << cert.str() << "\n";
  return cert.kind == SeparationCertificate::Kind::Inconclusive ? 2 : 0;
}

int cmd_counterexample(int depth, std::size_t max_states, int threads) {
  auto rep = counterexample_g1b2(depth, max_states, threads);
  std::cout << rep.text;
  const bool ok = rep.witness_separates && rep.same_hurwitz && !rep.bfs_reached_twisted &&
                  rep.witness_preserved;
  return ok ? 0 : 1;
}

int cmd_genus0(int m, int word_bound, int depth, int threads) {
  ExploreLimits lim;
  lim.max_depth = depth;
  lim.threads = threads;
  auto rep = genus0_transitivity_check(m, word_bound, lim);
  std::cout << rep.detail << "\n";
  std::cout << (rep.ok ? "transitive=true" : "transitive=false") << "\n";
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz systems, exceptional dissections and braid orbits"};
  app.require_subcommand(1);
  const int threads = default_threads();

  // hurwitz
  auto* hur = app.add_subcommand("hurwitz", "operations on Hurwitz system files");
  hur->require_subcommand(1);
  std::string hur_file;
  std::size_t hur_limit = 1000000;
  auto* hur_orbit = hur->add_subcommand("orbit", "breadth-first move closure");
  hur_orbit->add_option("file", hur_file)->required();
  hur_orbit->add_option("--max-states", hur_limit);
  auto* hur_inv = hur->add_subcommand("invariants", "genus, boundary and cycle type");
  hur_inv->add_option("file", hur_file)->required();

  // dissection
  auto* dis = app.add_subcommand("dissection", "operations on dissection/skeleton files");
  dis->require_subcommand(1);
  std::string dis_file, dis_word, dis_out, grading_file, format = "dot";
  auto* dis_val = dis->add_subcommand("validate", "check all dissection conditions");
  dis_val->add_option("file", dis_file)->required();
  auto* dis_hur = dis->add_subcommand("hurwitz", "endpoint transpositions");
  dis_hur->add_option("file", dis_file)->required();
  auto* dis_mut = dis->add_subcommand("mutate", "apply a braid word");
  dis_mut->add_option("file", dis_file)->required();
  dis_mut->add_option("--word", dis_word, "comma separated signed generators, e.g. 1,-2,3")
      ->required();
  dis_mut->add_option("--out", dis_out, "output file (default: <file>.out)");
  auto* dis_qvr = dis->add_subcommand("quiver", "graded quiver of the dissection");
  dis_qvr->add_option("file", dis_file)->required();
  dis_qvr->add_option("--grading", grading_file);
  dis_qvr->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

  // orbit
  auto* orb = app.add_subcommand("orbit", "braid orbit search over dissections");
  orb->require_subcommand(1);
  std::string orb_file, orb_a, orb_b;
  int orb_depth = 4;
  std::size_t orb_states = 100000, orb_budget = 100000;
  auto* orb_exp = orb->add_subcommand("explore", "bounded breadth-first orbit");
  orb_exp->add_option("file", orb_file)->required();
  orb_exp->add_option("--depth", orb_depth);
  orb_exp->add_option("--max-states", orb_states);
  auto* orb_sep = orb->add_subcommand("separate", "path or witness certificate");
  orb_sep->add_option("a", orb_a)->required();
  orb_sep->add_option("b", orb_b)->required();
  orb_sep->add_option("--budget", orb_budget);

  // scenario presets
  auto* ctr = app.add_subcommand("counterexample", "scenario presets");
  ctr->require_subcommand(1);
  int ctr_depth = 6;
  std::size_t ctr_states = 2000000;
  auto* ctr_g1b2 = ctr->add_subcommand("g1b2", "genus-1, two boundary components");
  ctr_g1b2->add_option("--depth", ctr_depth);
  ctr_g1b2->add_option("--max-states", ctr_states);

  auto* g0 = app.add_subcommand("genus0", "disk transitivity check");
  int g0_m = 3, g0_bound = 4, g0_depth = 8;
  g0->add_option("m", g0_m)->required();
  g0->add_option("--word-bound", g0_bound);
  g0->add_option("--depth", g0_depth);

  CLI11_PARSE(app, argc, argv);

  try {
    if (hur_orbit->parsed()) return cmd_hurwitz_orbit(hur_file, hur_limit);
    if (hur_inv->parsed()) return cmd_hurwitz_invariants(hur_file);
    if (dis_val->parsed()) return cmd_dissection_validate(dis_file);
    if (dis_hur->parsed()) return cmd_dissection_hurwitz(dis_file);
    if (dis_mut->parsed())
      return cmd_dissection_mutate(dis_file, dis_word,
                                   dis_out.empty() ? dis_file + ".out" : dis_out);
    if (dis_qvr->parsed()) return cmd_dissection_quiver(dis_file, grading_file, format);
    if (orb_exp->parsed()) return cmd_orbit_explore(orb_file, orb_depth, orb_states, threads);
    if (orb_sep->parsed()) return cmd_orbit_separate(orb_a, orb_b, orb_budget);
    if (ctr_g1b2->parsed()) return cmd_counterexample(ctr_depth, ctr_states, threads);
    if (g0->parsed()) return cmd_genus0(g0_m, g0_bound, g0_depth, threads);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
