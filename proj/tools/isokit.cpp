// isokit: isotopy and isomorphism testing for Latin squares, nets, Steiner
// designs, and the strongly regular graphs they generate.
//
// Exit codes: 0 positive verdict / success, 1 negative verdict, 2 usage or
// IO error, 3 unknown (search budget exhausted).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include <isokit/cube.hpp>
#include <isokit/designs.hpp>
#include <isokit/gen.hpp>
#include <isokit/io.hpp>
#include <isokit/isotopy.hpp>
#include <isokit/oracle.hpp>
#include <isokit/recover.hpp>
#include <isokit/refine.hpp>

using namespace isokit;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes: return kExitYes;
    case Verdict::no: return kExitNo;
    default: return kExitUnknown;
  }
}

std::string perm_line(const std::vector<int>& p) {
  std::ostringstream out;
  for (size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  return out.str();
}

void emit_witness(const std::string& witness_path, const std::string& text) {
  std::cout << text;
  if (!witness_path.empty()) write_file(witness_path, text);
}

void emit_structure(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "written: " << out_path << "\n";
  }
}

std::string extension(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot);
}

iso::Method parse_method(const std::string& m) {
  if (m == "cube") return iso::Method::cube;
  if (m == "normal") return iso::Method::normal;
  if (m == "both") return iso::Method::both;
  throw Error(errc::unknown_spec, "unknown method: " + m);
}

const char* iso_verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "isomorphic";
    case Verdict::no: return "non-isomorphic";
    default: return "unknown";
  }
}

int run_check(const std::string& path) {
  std::string text = read_file(path);
  std::string ext = extension(path);
  try {
    if (ext == ".ls") {
      auto l = parse_latin_square(text);
      std::cout << "latin_square: n=" << l.order() << "\n";
    } else if (ext == ".g") {
      auto g = parse_graph(text);
      std::cout << "graph: n=" << g.order() << " m=" << g.edge_count() << "\n";
      if (auto p = srg_check(g))
        std::cout << "srg: n=" << p->n << " k=" << p->k << " lambda=" << p->lambda
                  << " mu=" << p->mu << "\n";
    } else if (ext == ".sd") {
      auto d = parse_design(text);
      std::cout << "steiner: t=" << d.t() << " k=" << d.k() << " v=" << d.v() << "\n";
      std::cout << "blocks: " << d.block_count() << "\n";
    } else if (ext == ".net") {
      auto net = parse_net(text);
      std::cout << "net: n=" << net.order() << " k=" << net.degree() << "\n";
    } else {
      throw Error(errc::io, "unknown file extension: " + path);
    }
  } catch (const Error& e) {
    if (e.code() == errc::io) throw;
    std::cout << "valid: no\nerror: " << e.what() << "\n";
    return kExitNo;
  }
  return kExitYes;
}

Graph permuted_graph(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.order());
  for (auto [u, v] : g.edges())
    h.add_edge(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return h;
}

struct BenchCounts {
  double median_ms = 0, p90_ms = 0;
  int yes = 0, no = 0, unknown = 0;
};

template <typename F>
BenchCounts bench_loop(int count, F&& once) {
  std::vector<double> times;
  BenchCounts out;
  for (int i = 0; i < count; ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v = once(i);
    auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    if (v == Verdict::yes) ++out.yes;
    else if (v == Verdict::no) ++out.no;
    else ++out.unknown;
  }
  std::sort(times.begin(), times.end());
  out.median_ms = times[times.size() / 2];
  out.p90_ms = times[std::min(times.size() - 1, times.size() * 9 / 10)];
  return out;
}

int run_bench(const std::string& suite, int n, int count, uint64_t seed) {
  std::vector<int> sizes;
  if (n > 0) sizes = {n};
  else if (suite == "isotopy" || suite == "recover") sizes = {4, 5, 6};
  else sizes = {13, 17, 29};

  std::printf("suite,n,count,median_ms,p90_ms,yes,no,unknown\n");
  for (int size : sizes) {
    BenchCounts row;
    if (suite == "isotopy") {
      row = bench_loop(count, [&](int i) {
        auto l1 = gen::random_latin_square(size, seed + 2 * i);
        auto l2 = gen::random_latin_square(size, seed + 2 * i + 1);
        return iso::isotopy_normal_form(l1, l2, seed + i).verdict;
      });
    } else if (suite == "recover") {
      row = bench_loop(count, [&](int i) {
        auto l = gen::random_latin_square(size, seed + i);
        auto g = recover::latin_square_graph(l);
        auto back = recover::recover_latin_square(g);
        return iso::main_class_equivalent(back, l).verdict;
      });
    } else if (suite == "refine") {
      row = bench_loop(count, [&](int i) {
        auto g = gen::paley_conference(size);
        auto s = refine::find_distinguishing_set(g, -1, seed + i);
        auto c = refine::color_refine(g, refine::individualized_coloring(g, s), 2, false);
        return c.discrete() ? Verdict::yes : Verdict::no;
      });
    } else if (suite == "conf-iso") {
      row = bench_loop(count, [&](int i) {
        auto g = gen::paley_conference(size);
        std::mt19937_64 rng(seed + i);
        auto h = permuted_graph(g, rng);
        return refine::conference_iso(g, h, seed + i).verdict;
      });
    } else {
      throw Error(errc::unknown_spec, "unknown bench suite: " + suite);
    }
    std::printf("%s,%d,%d,%.3f,%.3f,%d,%d,%d\n", suite.c_str(), size, count, row.median_ms,
                row.p90_ms, row.yes, row.no, row.unknown);
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isokit: isotopy and isomorphism testing toolkit"};
  app.require_subcommand(1);

  static int jobs = 1;
  if (const char* env = std::getenv("ISOKIT_JOBS")) jobs = std::atoi(env);
  app.add_option("--jobs", jobs,
                 "parallelism hint for enumerating operations (current "
                 "implementations are deterministic and single-threaded)");

  static uint64_t seed = 0;
  static int trials = 16;
  static std::string witness_path, out_path, method_name = "normal";
  static int exit_code = kExitYes;

  // gen
  {
    auto* g_gen = app.add_subcommand("gen", "generate structures");
    g_gen->require_subcommand(1);

    auto* ls = g_gen->add_subcommand("ls", "seeded random Latin square");
    static int gen_n = 5;
    ls->add_option("--n", gen_n, "order")->required();
    ls->add_option("--seed", seed, "random seed");
    ls->add_option("--out", out_path, "output file");
    ls->callback([]() { emit_structure(out_path, serialize(gen::random_latin_square(gen_n, seed))); });

    auto* sts = g_gen->add_subcommand("sts", "Steiner triple system (Bose/Skolem)");
    static int gen_v = 7;
    sts->add_option("--v", gen_v, "point count")->required();
    sts->add_option("--out", out_path, "output file");
    sts->callback([]() { emit_structure(out_path, serialize(gen::sts(gen_v))); });

    auto* paley = g_gen->add_subcommand("paley", "Paley conference graph");
    static int gen_q = 13;
    paley->add_option("--q", gen_q, "prime, 1 mod 4")->required();
    paley->add_option("--out", out_path, "output file");
    paley->callback([]() { emit_structure(out_path, serialize(gen::paley_conference(gen_q))); });

    auto* plane = g_gen->add_subcommand("plane", "affine plane AG(2,q) as a net");
    static int gen_pq = 3;
    plane->add_option("--q", gen_pq, "prime")->required();
    plane->add_option("--out", out_path, "output file");
    plane->callback([]() { emit_structure(out_path, serialize(gen::affine_plane(gen_pq))); });

    auto* grp = g_gen->add_subcommand("group", "group multiplication table");
    static std::string gen_spec;
    grp->add_option("--spec", gen_spec, "Zn | ZmxZk | D4 | Q8")->required();
    grp->add_option("--out", out_path, "output file");
    grp->callback([]() { emit_structure(out_path, serialize(gen::group_square(gen_spec))); });
  }

  // check
  {
    auto* chk = app.add_subcommand("check", "validate a structure file");
    static std::string path;
    chk->add_option("file", path, "structure file (.ls/.g/.sd/.net)")->required();
    chk->callback([]() { exit_code = run_check(path); });
  }

  // isotopy
  {
    auto* cmd = app.add_subcommand("isotopy", "Latin square isotopy test");
    static std::string f1, f2;
    cmd->add_option("L1", f1, "first square (.ls)")->required();
    cmd->add_option("L2", f2, "second square (.ls)")->required();
    cmd->add_option("--method", method_name, "cube|normal|both")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--trials", trials, "search restarts");
    cmd->add_option("--witness", witness_path, "write the witness here");
    cmd->callback([]() {
      auto l1 = parse_latin_square(read_file(f1));
      auto l2 = parse_latin_square(read_file(f2));
      auto r = iso::isotopy(l1, l2, parse_method(method_name), seed, trials);
      std::cout << "verdict: " << (r.yes() ? "isotopic" : r.no() ? "non-isotopic" : "unknown")
                << "\n";
      std::cout << "method: " << method_name << "\n";
      if (r.witness)
        emit_witness(witness_path, "alpha: " + perm_line(r.witness->alpha) + "\n" +
                                       "beta: " + perm_line(r.witness->beta) + "\n" +
                                       "gamma: " + perm_line(r.witness->gamma) + "\n");
      exit_code = verdict_exit(r.verdict);
    });
  }

  // iso (quasigroup isomorphism)
  {
    auto* cmd = app.add_subcommand("iso", "quasigroup isomorphism test");
    static std::string f1, f2;
    cmd->add_option("L1", f1, "first square (.ls)")->required();
    cmd->add_option("L2", f2, "second square (.ls)")->required();
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--trials", trials, "search restarts");
    cmd->add_option("--witness", witness_path, "write the witness here");
    cmd->callback([]() {
      auto l1 = parse_latin_square(read_file(f1));
      auto l2 = parse_latin_square(read_file(f2));
      auto r = iso::quasigroup_iso(l1, l2, seed, trials);
      std::cout << "verdict: " << iso_verdict_name(r.verdict) << "\n";
      if (r.witness) emit_witness(witness_path, "phi: " + perm_line(*r.witness) + "\n");
      exit_code = verdict_exit(r.verdict);
    });
  }

  // graph
  {
    auto* gr = app.add_subcommand("graph", "graph constructions and recovery");
    gr->require_subcommand(1);

    auto* fromls = gr->add_subcommand("from-ls", "Latin square graph of a square");
    static std::string ls_path;
    fromls->add_option("file", ls_path, "square (.ls)")->required();
    fromls->add_option("--out", out_path, "output file");
    fromls->callback([]() {
      emit_structure(out_path,
                     serialize(recover::latin_square_graph(parse_latin_square(read_file(ls_path)))));
    });

    auto* recls = gr->add_subcommand("recover-ls", "recover a square from its graph");
    static std::string g_path;
    recls->add_option("file", g_path, "graph (.g)")->required();
    recls->add_option("--out", out_path, "output file");
    recls->callback([]() {
      emit_structure(out_path,
                     serialize(recover::recover_latin_square(parse_graph(read_file(g_path)))));
    });

    auto* recnet = gr->add_subcommand("recover-net", "recover a net from its graph");
    static std::string ng_path;
    static int net_n = 0, net_k = 0;
    recnet->add_option("file", ng_path, "graph (.g)")->required();
    recnet->add_option("--n", net_n, "net order")->required();
    recnet->add_option("--k", net_k, "net degree")->required();
    recnet->add_option("--out", out_path, "output file");
    recnet->callback([]() {
      emit_structure(out_path,
                     serialize(recover::recover_net(parse_graph(read_file(ng_path)), net_n, net_k)));
    });

    auto* recsd =
        gr->add_subcommand("recover-design", "recover a Steiner 2-design from its block graph");
    static std::string sg_path;
    static int d_v = 0, d_k = 0;
    recsd->add_option("file", sg_path, "graph (.g)")->required();
    recsd->add_option("--v", d_v, "point count")->required();
    recsd->add_option("--k", d_k, "block size")->required();
    recsd->add_option("--out", out_path, "output file");
    recsd->callback([]() {
      emit_structure(out_path,
                     serialize(recover::recover_steiner2(parse_graph(read_file(sg_path)), d_v, d_k)));
    });

    auto* cls = gr->add_subcommand("classify", "SRG parameter family classification");
    static std::string cg_path;
    cls->add_option("file", cg_path, "graph (.g)")->required();
    cls->callback([]() {
      auto g = parse_graph(read_file(cg_path));
      auto p = srg_check(g);
      if (!p) {
        std::cout << "srg: none\n";
        exit_code = kExitNo;
        return;
      }
      std::cout << "srg: n=" << p->n << " k=" << p->k << " lambda=" << p->lambda
                << " mu=" << p->mu << "\n";
      auto matches = recover::pseudo_thresholds(*p);
      if (matches.empty()) std::cout << "family: other\n";
      for (const auto& m : matches) {
        switch (m.family) {
          case recover::Family::pseudo_lsg:
            std::cout << "family: pseudo-latin-square n=" << m.n << " threshold: "
                      << (m.threshold_met ? "met (n > 23)" : "not-met (n <= 23)") << "\n";
            break;
          case recover::Family::pseudo_net:
            std::cout << "family: pseudo-net n=" << m.n << " k=" << m.k << " threshold: ";
            if (!m.threshold_known) std::cout << "n/a (k = 1)";
            else if (m.threshold_met)
              std::cout << "met (n > p(k-1) = " << recover::bruck_polynomial(m.k - 1) << ")";
            else
              std::cout << "not-met (n <= p(k-1) = " << recover::bruck_polynomial(m.k - 1) << ")";
            std::cout << "\n";
            break;
          case recover::Family::pseudo_sts:
            std::cout << "family: pseudo-sts v=" << m.n << " threshold: "
                      << (m.threshold_met ? "met (vertices > 67)" : "not-met (vertices <= 67)")
                      << "\n";
            break;
          case recover::Family::conference:
            std::cout << "family: conference n=" << m.n << " threshold: n/a\n";
            break;
        }
      }
    });

    auto* giso = gr->add_subcommand("lsg-iso", "Latin square graph isomorphism");
    static std::string lg1, lg2;
    giso->add_option("G", lg1, "first graph (.g)")->required();
    giso->add_option("H", lg2, "second graph (.g)")->required();
    giso->add_option("--seed", seed, "random seed");
    giso->callback([]() {
      auto v = recover::lsg_iso(parse_graph(read_file(lg1)), parse_graph(read_file(lg2)), seed);
      std::cout << "verdict: " << iso_verdict_name(v) << "\n";
      exit_code = verdict_exit(v);
    });
  }

  // design
  {
    auto* ds = app.add_subcommand("design", "Steiner design operations");
    ds->require_subcommand(1);

    auto* diso = ds->add_subcommand("iso", "Steiner design isomorphism");
    static std::string d1p, d2p;
    diso->add_option("D1", d1p, "first design (.sd)")->required();
    diso->add_option("D2", d2p, "second design (.sd)")->required();
    diso->add_option("--seed", seed, "random seed");
    diso->add_option("--trials", trials, "search restarts");
    diso->add_option("--witness", witness_path, "write the witness here");
    diso->callback([]() {
      auto d1 = parse_design(read_file(d1p));
      auto d2 = parse_design(read_file(d2p));
      auto r = designs::steiner_t_iso(d1, d2, seed, trials);
      std::cout << "verdict: " << iso_verdict_name(r.verdict) << "\n";
      if (r.witness) emit_witness(witness_path, "phi: " + perm_line(*r.witness) + "\n");
      exit_code = verdict_exit(r.verdict);
    });

    auto* der = ds->add_subcommand("derive", "derived design at a point set");
    static std::string dp, points;
    der->add_option("D", dp, "design (.sd)")->required();
    der->add_option("--points", points, "comma-separated point list")->required();
    der->add_option("--out", out_path, "output file");
    der->callback([]() {
      auto d = parse_design(read_file(dp));
      std::vector<int> a;
      std::stringstream ss(points);
      std::string tok;
      while (std::getline(ss, tok, ',')) a.push_back(std::stoi(tok));
      auto derived = designs::derived_design(d, a);
      std::cout << "derived: t=" << derived.design.t() << " k=" << derived.design.k()
                << " v=" << derived.design.v() << "\n";
      emit_structure(out_path, serialize(derived.design));
    });
  }

  // net
  {
    auto* nt = app.add_subcommand("net", "net operations");
    nt->require_subcommand(1);
    auto* niso = nt->add_subcommand("iso", "net isomorphism");
    static std::string n1p, n2p;
    niso->add_option("N1", n1p, "first net (.net)")->required();
    niso->add_option("N2", n2p, "second net (.net)")->required();
    niso->add_option("--seed", seed, "random seed");
    niso->add_option("--trials", trials, "search restarts");
    niso->add_option("--witness", witness_path, "write the witness here");
    niso->callback([]() {
      auto n1 = parse_net(read_file(n1p));
      auto n2 = parse_net(read_file(n2p));
      auto r = designs::net_iso(n1, n2, seed, trials);
      std::cout << "verdict: " << iso_verdict_name(r.verdict) << "\n";
      if (r.witness) emit_witness(witness_path, "phi: " + perm_line(*r.witness) + "\n");
      exit_code = verdict_exit(r.verdict);
    });
  }

  // plane
  {
    auto* pl = app.add_subcommand("plane", "affine/projective plane conversions");
    pl->require_subcommand(1);

    auto* comp = pl->add_subcommand("complete", "projective completion of an affine plane");
    static std::string net_path;
    comp->add_option("N", net_path, "affine plane (.net, k = n+1)")->required();
    comp->add_option("--out", out_path, "output file");
    comp->callback([]() {
      emit_structure(out_path,
                     serialize(designs::affine_to_projective(parse_net(read_file(net_path)))));
    });

    auto* rest = pl->add_subcommand("restrict", "affine restriction of a projective plane");
    static std::string pd_path;
    static int line = 0;
    rest->add_option("D", pd_path, "projective plane (.sd)")->required();
    rest->add_option("--line", line, "index of the removed line")->required();
    rest->add_option("--out", out_path, "output file");
    rest->callback([]() {
      emit_structure(
          out_path, serialize(designs::projective_to_affine(parse_design(read_file(pd_path)), line)));
    });
  }

  // refine
  {
    auto* cmd = app.add_subcommand("refine", "color refinement");
    static std::string g_path, rounds_str = "stable";
    static bool count_free = false, degree_init = false;
    cmd->add_option("G", g_path, "graph (.g)")->required();
    cmd->add_option("--rounds", rounds_str, "round count or 'stable'")->capture_default_str();
    cmd->add_flag("--count-free", count_free, "set signatures instead of multisets");
    cmd->add_flag("--degree-init", degree_init, "start from the degree coloring");
    cmd->callback([]() {
      auto g = parse_graph(read_file(g_path));
      int rounds = rounds_str == "stable" ? refine::kStable : std::stoi(rounds_str);
      auto init = degree_init ? refine::degree_coloring(g) : refine::uniform_coloring(g);
      auto c = refine::color_refine(g, init, rounds, !count_free);
      std::cout << "rounds: " << c.round << "\n";
      std::cout << "classes: " << c.classes() << "\n";
      std::cout << "discrete: " << (c.discrete() ? "true" : "false") << "\n";
      std::cout << "colors: " << perm_line(c.colors) << "\n";
    });
  }

  // conf-iso
  {
    auto* cmd = app.add_subcommand("conf-iso", "conference graph isomorphism");
    static std::string g_path, h_path;
    cmd->add_option("G", g_path, "conference graph (.g)")->required();
    cmd->add_option("H", h_path, "arbitrary graph (.g)")->required();
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--trials", trials, "sampling trials");
    cmd->add_option("--witness", witness_path, "write the witness here");
    cmd->callback([]() {
      auto g = parse_graph(read_file(g_path));
      auto h = parse_graph(read_file(h_path));
      auto r = refine::conference_iso(g, h, seed, trials);
      std::cout << "verdict: " << iso_verdict_name(r.verdict) << "\n";
      if (r.witness) emit_witness(witness_path, "phi: " + perm_line(*r.witness) + "\n");
      exit_code = verdict_exit(r.verdict);
    });
  }

  // distinguish
  {
    auto* cmd = app.add_subcommand("distinguish", "find a distinguishing set");
    static std::string g_path;
    static int size = -1;
    cmd->add_option("G", g_path, "graph (.g)")->required();
    cmd->add_option("--size", size, "target size (default 4 log2 n)");
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--trials", trials, "sampling trials");
    cmd->callback([]() {
      auto g = parse_graph(read_file(g_path));
      auto s = refine::find_distinguishing_set(g, size, seed, trials);
      std::cout << "set: " << perm_line(s) << "\n";
      std::cout << "size: " << s.size() << "\n";
      std::cout << "distinguishing: " << (refine::is_distinguishing(g, s) ? "true" : "false")
                << "\n";
    });
  }

  // oracle
  {
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->require_subcommand(1);

    auto* oi = orc->add_subcommand("isotopy", "exhaustive isotopy (n <= 6)");
    static std::string o1, o2;
    oi->add_option("L1", o1)->required();
    oi->add_option("L2", o2)->required();
    oi->callback([]() {
      auto r = oracle::isotopy_brute(parse_latin_square(read_file(o1)),
                                     parse_latin_square(read_file(o2)));
      std::cout << "verdict: " << (r.yes() ? "isotopic" : "non-isotopic") << "\n";
      exit_code = verdict_exit(r.verdict);
    });

    auto* og = orc->add_subcommand("graph", "exhaustive graph isomorphism (n <= 10)");
    static std::string og1, og2;
    og->add_option("G", og1)->required();
    og->add_option("H", og2)->required();
    og->callback([]() {
      auto r = oracle::graph_iso_brute(parse_graph(read_file(og1)), parse_graph(read_file(og2)));
      std::cout << "verdict: " << iso_verdict_name(r.verdict) << "\n";
      exit_code = verdict_exit(r.verdict);
    });

    auto* od = orc->add_subcommand("design", "exhaustive design isomorphism (v <= 15)");
    static std::string od1, od2;
    od->add_option("D1", od1)->required();
    od->add_option("D2", od2)->required();
    od->callback([]() {
      auto r =
          oracle::design_iso_brute(parse_design(read_file(od1)), parse_design(read_file(od2)));
      std::cout << "verdict: " << iso_verdict_name(r.verdict) << "\n";
      exit_code = verdict_exit(r.verdict);
    });
  }

  // bench
  {
    auto* cmd = app.add_subcommand("bench", "timing harness");
    static std::string suite;
    static int bn = 0, count = 10;
    cmd->add_option("suite", suite, "isotopy|recover|refine|conf-iso")->required();
    cmd->add_option("--n", bn, "single size (default: three per suite)");
    cmd->add_option("--count", count, "instances per size")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed");
    cmd->callback([]() { exit_code = run_bench(suite, bn, count, seed); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
