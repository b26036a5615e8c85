#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "foldar/dorey.hpp"
#include "foldar/exceptional.hpp"
#include "foldar/export.hpp"

using namespace foldar;

namespace {

int max_n_cap() {
  if (const char* env = std::getenv("FOLDAR_MAX_N")) return std::atoi(env);
  return 4;
}

void check_n(int n) {
  if (n < 1 || n > max_n_cap())
    throw CLI::ValidationError("--n", "n must lie in 1.." + std::to_string(max_n_cap()) +
                                          " (override with FOLDAR_MAX_N)");
}

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream is(s);
  int x;
  while (is >> x) w.push_back(x);
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

void print_classes(const std::vector<CommutationClass>& classes) {
  for (const auto& c : classes) {
    const Word& w = c.canonical();
    for (size_t k = 0; k < w.size(); ++k) std::cout << (k ? " " : "") << w[k];
    std::cout << "\n";
  }
}

int run_enumerate(const std::string& family, int n, const std::string& point,
                  bool list) {
  if (family == "a") {
    check_n(n);
    if (point == "twisted") {
      auto classes = twisted_cluster_point(n);
      auto comp = coxeter_composition(classes.front(),
                                      DiagramAutomorphism::vee_a(2 * n + 1));
      std::cout << classes.size() << " classes, composition " << comp.str() << "\n";
      std::cout << enumerate_twisted_coxeter(n).size()
                << " twisted Coxeter elements\n";
      if (list) print_classes(classes);
      return 0;
    }
    if (point == "adapted-2n") {
      auto dg = DynkinDiagram::type_a(2 * n);
      auto q = DynkinQuiver::from_orientation_string(dg, std::string(2 * n - 1, '>'));
      auto classes = cluster_point(adapted_class(q));
      auto comp = coxeter_composition(classes.front(), DiagramAutomorphism::vee_a(2 * n));
      std::cout << classes.size() << " classes, composition " << comp.str() << "\n";
      if (list) print_classes(classes);
      return 0;
    }
    if (point == "adapted") {
      auto dg = DynkinDiagram::type_a(2 * n + 1);
      auto q = DynkinQuiver::from_orientation_string(dg, std::string(2 * n, '>'));
      auto classes = cluster_point(adapted_class(q));
      auto comp = coxeter_composition(classes.front(),
                                      DiagramAutomorphism::vee_a(2 * n + 1));
      std::cout << classes.size() << " classes, composition " << comp.str() << "\n";
      if (list) print_classes(classes);
      return 0;
    }
    throw std::invalid_argument("unknown point " + point);
  }
  if (family == "e6") {
    auto classes = e6_point();
    if (list) print_classes(classes);
    auto comp = coxeter_composition(classes.front(), DiagramAutomorphism::vee_e6());
    std::cout << classes.size() << " classes, composition " << comp.str() << "\n";
    std::cout << enumerate_sigma_coxeter(DynkinDiagram::type_e6(),
                                         DiagramAutomorphism::vee_e6())
                     .size()
              << " twisted Coxeter elements\n";
    return 0;
  }
  if (family == "d4") {
    auto [p1, p2] = d4_points();
    auto comp = coxeter_composition(p1.front(), DiagramAutomorphism::d4_triality(1));
    std::cout << p1.size() << "+" << p2.size() << " classes, composition "
              << comp.str() << "\n";
    auto d4 = DynkinDiagram::type_d(4);
    size_t tcox = enumerate_sigma_coxeter(d4, DiagramAutomorphism::d4_triality(1), 1).size() +
                  enumerate_sigma_coxeter(d4, DiagramAutomorphism::d4_triality(2), 2).size();
    std::cout << tcox << " triply twisted Coxeter elements\n";
    return 0;
  }
  throw std::invalid_argument("unknown family " + family);
}

int run_build(const std::string& quiver, const std::string& side_str,
              const std::string& word_str, bool folded, const std::string& format,
              const std::string& out_path) {
  std::optional<TwistedClass> tc;
  if (!quiver.empty()) {
    int rank = static_cast<int>(quiver.size()) + 1;
    if (rank % 2 == 1)
      throw std::invalid_argument("--quiver must describe a type A_{2n} quiver");
    check_n(rank / 2);
    auto q = DynkinQuiver::from_orientation_string(DynkinDiagram::type_a(rank), quiver);
    Side side;
    if (side_str == "<")
      side = Side::source;
    else if (side_str == ">")
      side = Side::sink;
    else
      throw std::invalid_argument("--side must be '<' or '>'");
    tc = surgery_R(q, side);
  } else if (!word_str.empty()) {
    Word w = parse_word(word_str);
    int rank = 0;
    for (int x : w) rank = std::max(rank, x);
    if (rank % 2 == 0) ++rank;
    check_n((rank - 1) / 2);
    CommutationClass c(DynkinDiagram::type_a(rank), w);
    tc = TwistedClass::from_class(c);
  } else {
    throw std::invalid_argument("build needs --quiver or --word");
  }

  auto tq = assign_coordinates(*tc);
  std::string payload;
  if (folded) {
    auto fq = fold(tq);
    if (format == "dot")
      payload = to_dot(fq);
    else if (format == "json")
      payload = to_json(fq);
    else {
      std::ostringstream os;
      for (int v = 0; v < fq.size(); ++v)
        os << fq.label(v).str() << "\t(" << fq.fres[v] << ", " << fq.fpos(v) << ")\t"
           << kind_name(fq.twisted.kind[v]) << "\n";
      payload = os.str();
    }
  } else {
    if (format == "dot")
      payload = to_dot(tq);
    else if (format == "json")
      payload = to_json(tq);
    else {
      std::ostringstream os;
      for (int v = 0; v < tq.size(); ++v)
        os << tq.ups.labels[v].str() << "\t(" << tq.ups.residue(v) << ", "
           << tq.ups.pos2[v] << "/2)\t" << kind_name(tq.kind[v]) << "\n";
      payload = os.str();
    }
  }
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open " + out_path);
    f << payload;
  }
  return 0;
}

bool verify_additive(int n, VerifyReport& rep) {
  for (const auto& q : all_quivers(DynkinDiagram::type_a(2 * n)))
    if (!check_additive(gamma_q(q))) {
      rep.fail("additive property fails on quiver " + q.orientation_string());
      return false;
    }
  rep.note("additive property holds on all quivers of A" + std::to_string(2 * n));
  return true;
}

bool verify_twisted_additive(int n, VerifyReport& rep) {
  for (const auto& c : twisted_cluster_point(n)) {
    auto tq = assign_coordinates(TwistedClass::from_class(c));
    if (!check_twisted_additive(tq) || !folded_additive_check(fold(tq))) {
      rep.fail("twisted/folded additivity fails on a class of A" +
               std::to_string(2 * n + 1));
      return false;
    }
  }
  rep.note("twisted and folded additive properties hold on all 2^" +
           std::to_string(2 * n) + " classes");
  return true;
}

bool verify_labels(int n, VerifyReport& rep) {
  for (const auto& c : twisted_cluster_point(n)) {
    auto tq = assign_coordinates(TwistedClass::from_class(c));
    if (label_twisted_by_sections(tq) != tq.ups.labels) {
      rep.fail("sectional labels disagree with word labels");
      return false;
    }
  }
  rep.note("word-based and section-based labels agree on every class");
  return true;
}

bool verify_gdist_bounds(int n, VerifyReport& rep) {
  RootSystem rs(DynkinDiagram::type_a(2 * n + 1));
  auto vee = DiagramAutomorphism::vee_a(2 * n + 1);
  for (const auto& c : twisted_cluster_point(n)) {
    OrderContext ctx(c);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = a + 1; b < rs.size(); ++b) {
        if (gdist_pair(ctx, rs.at(a), rs.at(b)) > 2) {
          rep.fail("gdist exceeds 2");
          return false;
        }
        if (!socle(ctx, ctx.pair_seq(rs.at(a), rs.at(b))).has_value()) {
          rep.fail("socle missing for a pair");
          return false;
        }
      }
    for (const auto& g : rs.positives)
      if (g.height() >= 2) {
        int r = rds(ctx, g);
        if (r > 2 || (r == 2 && folded_multiplicity(g, vee) != 2)) {
          rep.fail("rds bound violated at " + g.str());
          return false;
        }
      }
  }
  rep.note("gdist <= 2, rds <= 2 and unique socles across the twisted point");
  return true;
}

int run_verify(const std::string& suite, int n, const std::string& csv_path) {
  check_n(n);
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::invalid_argument("cannot open " + csv_path);
  }
  VerifyReport rep;
  bool ok = true;
  auto want = [&](const std::string& s) { return suite == s || suite == "all"; };
  if (want("additive")) ok = verify_additive(n, rep) && ok;
  if (want("twisted-additive")) ok = verify_twisted_additive(n, rep) && ok;
  if (want("labels")) ok = verify_labels(n, rep) && ok;
  if (want("gdist-bounds")) ok = verify_gdist_bounds(n, rep) && ok;
  if (want("denom-A")) {
    auto r = verify_dist_denom_A(n);
    ok = r.ok && ok;
    rep.lines.insert(rep.lines.end(), r.lines.begin(), r.lines.end());
  }
  if (want("denom-B")) {
    auto r = verify_dist_denom_B(n);
    ok = r.ok && ok;
    rep.lines.insert(rep.lines.end(), r.lines.begin(), r.lines.end());
    if (csv.is_open()) {
      CommutationClass c(DynkinDiagram::type_a(2 * n + 1), twisted_generator_word(n));
      OrderContext ctx(c);
      auto fq = fold(assign_coordinates(TwistedClass::from_class(c)));
      csv << "kbar,lbar,t,o\n";
      for (int k = 1; k <= n + 1; ++k)
        for (int l = k; l <= n + 1; ++l)
          for (auto [t, o] : distance_profile_folded(ctx, fq, k, l))
            csv << k << "," << l << "," << t << "," << o << "\n";
    }
  }
  if (want("dorey")) {
    auto r = verify_dorey(n);
    ok = r.ok && ok;
    rep.lines.insert(rep.lines.end(), r.lines.begin(), r.lines.end());
    if (csv.is_open()) {
      csv << "i,j,k,yz_sign,yz_exp,xz_sign,xz_exp\n";
      for (const auto& t : triples_direct(n))
        csv << t.i << "," << t.j << "," << t.k << "," << t.yz.sign << ","
            << t.yz.exp << "," << t.xz.sign << "," << t.xz.exp << "\n";
    }
    for (const auto& c : twisted_cluster_point(n)) {
      OrderContext ctx(c);
      if (!fusion_reachable(ctx)) {
        rep.fail("fusion reachability fails");
        ok = false;
        break;
      }
    }
  }
  if (want("appendix")) {
    auto e6 = e6_point();
    auto [d1, d2] = d4_points();
    size_t tce6 = enumerate_sigma_coxeter(DynkinDiagram::type_e6(),
                                          DiagramAutomorphism::vee_e6())
                      .size();
    size_t tcd4 =
        enumerate_sigma_coxeter(DynkinDiagram::type_d(4), DiagramAutomorphism::d4_triality(1), 1)
            .size() +
        enumerate_sigma_coxeter(DynkinDiagram::type_d(4), DiagramAutomorphism::d4_triality(2), 2)
            .size();
    if (e6.size() != 32 || d1.size() != 6 || d2.size() != 6 || tce6 != 24 || tcd4 != 12) {
      rep.fail("appendix counts are off");
      ok = false;
    } else {
      rep.note("appendix counts: 32 E6 classes, 6+6 D4 classes, 24 + 12 elements");
    }
  }
  static const std::set<std::string> known{"additive", "twisted-additive", "labels",
                                           "gdist-bounds", "denom-A", "denom-B",
                                           "dorey", "appendix", "all"};
  if (!known.count(suite)) throw std::invalid_argument("unknown suite " + suite);
  for (const auto& line : rep.lines) std::cout << line << "\n";
  std::cout << (ok ? "ok" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of twisted and folded AR-quivers"};
  app.require_subcommand(1);

  auto* cmd_enum = app.add_subcommand("enumerate", "count classes of a cluster point");
  std::string family = "a";
  int n = 2;
  std::string point = "twisted";
  cmd_enum->add_option("--family", family, "a, e6 or d4");
  cmd_enum->add_option("--n", n, "the n of A_{2n+1}");
  cmd_enum->add_option("--point", point, "twisted, adapted, adapted-2n");
  bool list_classes = false;
  cmd_enum->add_flag("--list", list_classes, "print one canonical word per class");

  auto* cmd_build = app.add_subcommand("build", "emit a (folded) twisted AR-quiver");
  std::string quiver, side = "<", word_str, format = "text", out_path;
  bool folded_flag = false;
  cmd_build->add_option("--quiver", quiver, "A_{2n} orientation string of < and >");
  cmd_build->add_option("--side", side, "< (n+1 source) or > (n+1 sink)");
  cmd_build->add_option("--word", word_str, "reduced word of a twisted adapted class");
  cmd_build->add_flag("--folded", folded_flag, "fold residues to orbits");
  cmd_build->add_option("--format", format, "text, dot or json");
  cmd_build->add_option("--out", out_path, "output path (stdout when absent)");

  auto* cmd_verify = app.add_subcommand("verify", "run a theorem suite");
  std::string suite;
  int vn = 2;
  cmd_verify->add_option("suite", suite,
                         "additive | twisted-additive | labels | gdist-bounds | "
                         "denom-A | denom-B | dorey | appendix | all")
      ->required();
  cmd_verify->add_option("--n", vn, "desk-scale parameter");
  std::string csv_path;
  cmd_verify->add_option("--csv", csv_path, "dump profiles or triples as CSV");

  try {
    app.parse(argc, argv);
    if (cmd_enum->parsed()) return run_enumerate(family, n, point, list_classes);
    if (cmd_build->parsed())
      return run_build(quiver, side, word_str, folded_flag, format, out_path);
    if (cmd_verify->parsed()) return run_verify(suite, vn, csv_path);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
