#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sutured/axioms.hpp"

namespace sutured {

/// Exit codes: 0 success, 1 a verdict came out false, 2 malformed input,
/// 3 an internal consistency check failed.
enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitMalformed = 2, kExitInternal = 3 };

namespace cli {

inline Ring parse_ring(const std::string& name) {
  if (name == "z") return Ring::Integers;
  if (name == "f2") return Ring::F2;
  throw StructuralError("ring must be z or f2");
}

/// Terms joined by + and -, coefficient 1 omitted, wedge written ^.
inline std::string format_element(const Multivector& x, const std::vector<std::string>& labels) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (IndexSet S : x.ordered_sets()) {
    Integer c = x.coefficient(S);
    const bool negative = c < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    auto idx = indices_of(S);
    if (idx.empty()) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "^" : "") << labels.at(idx[k]);
  }
  return os.str();
}

/// b1, b3, ..., b_{2N-3}: the disk basis of odd boundary arcs.
inline std::vector<std::string> disk_labels(int N) {
  std::vector<std::string> out;
  for (int i = 1; i <= 2 * N - 3; i += 2) out.push_back("b" + std::to_string(i));
  return out;
}

inline std::vector<std::string> plain_labels(int rank) {
  std::vector<std::string> out;
  for (int i = 1; i <= rank; ++i) out.push_back("h" + std::to_string(i));
  return out;
}

inline Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream f(path);
    if (!f) throw StructuralError("cannot open " + path);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

inline Json integer_json(const Integer& x) {
  if (x > Integer(1LL << 53) || x < -Integer(1LL << 53)) return x.str();
  return static_cast<long long>(x);
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline std::string describe(const Violation& v) {
  return v.kind + (v.detail.empty() ? "" : ": " + v.detail) + (v.witness >= 0 ? " (at " + std::to_string(v.witness) + ")" : "");
}

inline void require_valid(const SuturedSurface& s) {
  auto v = s.validate();
  if (!v.empty()) throw StructuralError("invalid surface: " + describe(v.front()));
}

inline void require_valid(const SuturedSurface& s, const DividingSet& k) {
  require_valid(s);
  auto v = validate_dividing_set(s, k);
  if (!v.empty()) throw StructuralError("invalid dividing set: " + describe(v.front()));
}

/// The homology basis as edge chains, one comment line per generator.
inline void print_basis(std::ostream& out, const Complex& c, const RelativeHomology& h, const std::vector<std::string>& labels) {
  out << "# basis of H_1(S, alpha+) as chains edge:coefficient (edge e is halfedge edge_rep(e))\n";
  for (int i = 0; i < h.rank(); ++i) {
    out << "# " << labels[i] << ":";
    for (int e = 0; e < c.edge_count(); ++e)
      if (h.basis()[i][e] != 0) out << " " << e << ":" << h.basis()[i][e];
    out << "\n";
  }
}

}  // namespace cli

/// Runs one command line; all output goes to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Sutured TQFT: contact elements, gluing maps and oracles over Z and F2"};
  app.require_subcommand(1);
  std::string ring_name = "z";
  int code = kExitOk;

  // contact
  auto* contact = app.add_subcommand("contact", "Contact element of a chord diagram or of a surface with a dividing set");
  std::string diagram, input;
  contact->add_option("--ring", ring_name, "z or f2")->check(CLI::IsMember({"z", "f2"}));
  auto* diag_opt = contact->add_option("--diagram", diagram, "chord diagram such as 1-4,2-3");
  contact->add_option("--input", input, "dividing-set JSON file, - for stdin")->excludes(diag_opt);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "All chord diagrams on 2N sutures with their contact elements");
  int enum_n = 0;
  bool count_only = false;
  enumerate->add_option("N", enum_n, "number of positive sutures")->required();
  enumerate->add_option("--ring", ring_name, "z or f2")->check(CLI::IsMember({"z", "f2"}));
  enumerate->add_flag("--count-only", count_only, "print only the number of diagrams");

  // glue
  auto* gluecmd = app.add_subcommand("glue", "Glue a surface along a pair of boundary arcs");
  std::string gluing_path;
  gluecmd->add_option("--input", input, "surface or dividing-set JSON, - for stdin")->required();
  gluecmd->add_option("--gluing", gluing_path, "gluing JSON")->required();
  gluecmd->add_option("--ring", ring_name, "z or f2")->check(CLI::IsMember({"z", "f2"}));

  // bypass
  auto* bypass = app.add_subcommand("bypass", "Bypass triples of a chord diagram and their relations");
  std::string bypass_cd;
  bypass->add_option("diagram", bypass_cd, "chord diagram")->required();
  bypass->add_option("--ring", ring_name, "z or f2")->check(CLI::IsMember({"z", "f2"}));

  // match
  auto* match = app.add_subcommand("match", "Matchability of two chord diagrams by the cycle oracle and by the wedge product");
  std::string match_a, match_b;
  match->add_option("first", match_a, "chord diagram")->required();
  match->add_option("second", match_b, "chord diagram")->required();
  match->add_option("--ring", ring_name, "z or f2")->check(CLI::IsMember({"z", "f2"}));

  // torus
  auto* torus = app.add_subcommand("torus", "Tightness pairing of a meridian disk in a solid torus");
  std::string torus_cd;
  TorusParameters tp;
  torus->add_option("diagram", torus_cd, "chord diagram with N = n q")->required();
  torus->add_option("--n", tp.n, "n")->required();
  torus->add_option("--p", tp.p, "p")->required();
  torus->add_option("--q", tp.q, "q")->required();
  int torus_base = 0;
  torus->add_option("--base", torus_base, "move the base point by this many F+ periods");

  // axioms
  auto* axioms = app.add_subcommand("axioms", "Run the axiom harness; one JSON object per check");
  AxiomSuiteOptions opts;
  axioms->add_option("--seed", opts.seed, "seed of the random corpus")->required();
  axioms->add_option("--max-n", opts.max_n, "largest disk N in the corpus");
  axioms->add_option("--gluings", opts.random_gluings, "random gluings per ring");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Cut a surface into squares and emit the pieces and the regluing");
  decompose->add_option("--input", input, "surface JSON, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? kExitOk : kExitMalformed;
  }

  try {
    const Ring ring = cli::parse_ring(ring_name);
    if (contact->parsed()) {
      if (!diagram.empty()) {
        ChordDiagram cd = ChordDiagram::parse(diagram);
        out << cli::format_element(disk_contact_element(cd, ring), cli::disk_labels(cd.N)) << "\n";
      } else if (!input.empty()) {
        auto [s, k] = dividing_set_from_json(cli::read_json(input, in));
        cli::require_valid(s, k);
        RelativeHomology h = alpha_plus_homology(s, ring);
        auto labels = cli::plain_labels(h.rank());
        cli::print_basis(out, s.complex(), h, labels);
        out << cli::format_element(contact_element(s, k, h), labels) << "\n";
      } else {
        throw StructuralError("contact needs --diagram or --input");
      }
    } else if (enumerate->parsed()) {
      auto ds = enumerate_chord_diagrams(enum_n);
      if (count_only) {
        out << ds.size() << "\n";
      } else {
        out << "# N=" << enum_n << " ring=" << ring_name << " count=" << ds.size() << "; diagram, then its contact element\n";
        for (const auto& cd : ds)
          out << cd.to_string() << "\t" << cli::format_element(disk_contact_element(cd, ring), cli::disk_labels(enum_n)) << "\n";
      }
    } else if (gluecmd->parsed()) {
      Json sj = cli::read_json(input, in);
      const bool with_k = sj.contains("K");
      SuturedSurface s;
      DividingSet k;
      if (with_k) {
        std::tie(s, k) = dividing_set_from_json(sj);
        cli::require_valid(s, k);
      } else {
        s = surface_from_json(sj);
        cli::require_valid(s);
      }
      Gluing g = gluing_from_json(s.complex(), cli::read_json(gluing_path, in));
      auto v = gluing_violations(s, g);
      if (!v.empty()) throw StructuralError("invalid gluing: " + cli::describe(v.front()));
      GluedSurface G = glue(s, g);
      RelativeHomology hs = alpha_plus_homology(s, ring), ht = alpha_plus_homology(G.result, ring);
      GluingMorphism phi(s, G, hs, ht);
      Json o{{"ring", ring_name},
             {"glued", surface_to_json(G.result)},
             {"source_rank", hs.rank()},
             {"target_rank", ht.rank()},
             {"eta", phi.eta().to_string()},
             {"matrix", cli::matrix_json(phi.matrix())}};
      if (with_k) {
        DividingSet kt = push_dividing_set(G, k);
        Json kj = dividing_set_to_json(G.result, kt);
        o["dividing_set"] = {{"K", kj["K"]}, {"signs", kj["signs"]}};
        const bool respects = check_respect(s, G, hs, ht, k);
        o["respects_contact_element"] = respects;
        if (!respects) code = kExitFalse;
      }
      out << o.dump() << "\n";
    } else if (bypass->parsed()) {
      ChordDiagram cd = ChordDiagram::parse(bypass_cd);
      auto sites = bypass_sites(cd);
      out << "# " << sites.size() << " bypass sites; each line: the triple, then whether the three elements sum to zero\n";
      for (const auto& site : sites) {
        auto t = bypass_triple_at(cd, site);
        std::vector<Multivector> c;
        for (const auto& d : t) c.push_back(disk_contact_element(d, ring));
        const bool holds = bypass_relation_holds(c);
        if (!holds) code = kExitFalse;
        out << t[0].to_string() << " | " << t[1].to_string() << " | " << t[2].to_string() << "\t" << (holds ? "holds" : "fails") << "\n";
      }
    } else if (match->parsed()) {
      ChordDiagram a = ChordDiagram::parse(match_a), b = ChordDiagram::parse(match_b);
      if (a.N != b.N) throw StructuralError("diagrams must have the same number of chords");
      const bool oracle = matchable(a, b), via_wedge = matchable_via_wedge(a, b, ring);
      out << "oracle\t" << (oracle ? "matchable" : "not matchable") << "\n";
      out << "wedge\t" << (via_wedge ? "matchable" : "not matchable") << "\n";
      if (oracle != via_wedge) out << "# the verdicts disagree\n";
      if (!oracle || oracle != via_wedge) code = kExitFalse;
    } else if (torus->parsed()) {
      ChordDiagram cd = rotate(ChordDiagram::parse(torus_cd), 2 * torus_base);
      SurfaceAlgebra disk = disk_algebra(cd.N, Ring::F2);
      const Integer pairing = solid_torus_pairing(cd, tp, disk);
      const bool tight = pairing == 1, oracle = solid_torus_oracle(cd, tp);
      out << "pairing\t" << pairing << "\n";
      out << "verdict\t" << (tight ? "tight" : "not tight") << "\n";
      out << "oracle\t" << (oracle ? "tight" : "not tight") << "\n";
      if (tight != oracle) out << "# the verdicts disagree\n";
      if (!tight || tight != oracle) code = kExitFalse;
    } else if (axioms->parsed()) {
      for (const auto& r : run_axiom_suite(opts)) {
        out << r.to_json().dump() << "\n";
        if (!r.passed) code = kExitFalse;
      }
    } else if (decompose->parsed()) {
      SuturedSurface s = surface_from_json(cli::read_json(input, in));
      cli::require_valid(s);
      Quadrangulation q = quadrangulate(s);
      Json o{{"pieces", surface_to_json(q.pieces)},
             {"arcs", q.arcs},
             {"tau0", gluing_to_json(q.pieces.complex(), q.tau0)},
             {"piece_sutures", q.piece_sutures},
             {"piece_faces", q.piece_faces},
             {"piece_curves", q.piece_curves},
             {"squares", q.squares()}};
      out << o.dump() << "\n";
    }
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return code;
}

}  // namespace sutured
