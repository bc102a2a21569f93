#pragma once

#include "sgdgs/certify.hpp"
#include "sgdgs/datasets.hpp"
#include "sgdgs/number_field.hpp"
#include "sgdgs/report.hpp"
#include "sgdgs/search.hpp"
#include "sgdgs/spectra.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sgdgs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

struct Settings {
  bool json = false;
  bool matrix = false;
  std::uint64_t seed = 0x5eed;
  int max_n = kExhaustiveCeiling;
  int jobs = 1;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// The two 14-vertex trees whose charpoly is the example1-poly dataset, located by search.
inline std::vector<SignedGraph> example1_trees() {
  std::vector<SignedGraph> t = trees_with_charpoly(14, datasets::example1_charpoly());
  if (t.size() != 2) throw InvariantViolation("expected exactly two 14-vertex trees with the example1-poly charpoly, found " + std::to_string(t.size()));
  return t;
}

/// "dataset:NAME" or a path to an .sg file (an adjacency-matrix file with --matrix).
inline SignedGraph load_graph(const std::string& arg, const Settings& s) {
  const std::string prefix = "dataset:";
  if (arg.rfind(prefix, 0) == 0) {
    const std::string name = arg.substr(prefix.size());
    if (name == "example1-a") return example1_trees()[0];
    if (name == "example1-b") return example1_trees()[1];
    return datasets::graph(name);
  }
  const std::string text = read_file(arg);
  if (s.matrix) return from_adjacency(parse_matrix<BigInt>(text));
  return parse_sg(text);
}

inline std::string poly_lines(const IntPolynomial& p, const std::string& indent = "  ") {
  return indent + p.to_string() + "\n" + indent + "ascending: " + p.to_coefficient_line() + "\n";
}

inline void print_certificate(std::ostream& out, const DgsCertificate& c) {
  out << "n: " << c.n << "\n";
  out << "charpoly:\n" << poly_lines(c.charpoly);
  if (c.irreducibility) out << "irreducible: " << (c.irreducible() ? "true" : "false") << " (" << c.irreducibility->method << ")\n";
  if (c.delta) out << "delta: " << to_string(*c.delta) << "\n";
  if (c.s) out << "s: " << to_string(*c.s) << "\n";
  if (c.s_factorization) out << "s factors: " << c.s_factorization->to_string() << "\n";
  out << "s odd: " << (c.s_odd ? "true" : "false") << "\n";
  out << "s square-free: " << (c.s_squarefree ? "true" : "false") << "\n";
  if (c.cross_check) out << "cross-check: " << (c.cross_check->agrees ? "agrees" : "FAILS") << " (" << c.cross_check->note << ")\n";
  for (const auto& f : c.probabilistic_flags) out << "probabilistic: " << f << "\n";
  out << "verdict: " << verdict_text(c) << "\n";
}

inline void print_q(std::ostream& out, const QRecovery& r, const std::optional<QClassification>& c) {
  const BigInt d = common_denominator(r.q);
  out << "Q = (1/" << to_string(d) << ") *\n";
  out << format_matrix(to_integer(RatMatrix(Rational(d) * r.q)));
  out << "orthogonal: " << (r.orthogonal ? "true" : "false") << "\n";
  out << "regular: " << (r.regular ? "true" : "false") << "\n";
  out << "conjugating: " << (r.conjugating ? "true" : "false") << "\n";
  if (c) {
    out << "classification: " << to_string(c->tag);
    if (c->split) out << " (split " << *c->split << ")";
    out << "\n";
  }
}

inline void emit(std::ostream& out, const std::string& command, const Json& result) {
  Json j;
  j["command"] = command;
  j["result"] = result;
  out << j.dump(2) << "\n";
}

inline int cmd_certify(const Settings& s, const std::optional<std::string>& graph, const std::optional<std::string>& poly_file,
                       const std::optional<std::string>& dataset, std::ostream& out) {
  const int given = int(graph.has_value()) + int(poly_file.has_value()) + int(dataset.has_value());
  if (given != 1) throw InputError("certify: give exactly one of <file.sg>, --poly FILE, --dataset NAME");
  CertifyOptions opts;
  opts.seed = s.seed;
  DgsCertificate c;
  if (graph) {
    const SignedGraph g = load_graph(*graph, s);
    if (!is_tree(g)) throw InputError("certify: graph is not a tree; use --poly to evaluate the charpoly condition alone");
    c = certify_tree(g, opts);
  } else if (poly_file) {
    std::istringstream in(read_file(*poly_file));
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    c = certify_from_charpoly(parse_int_polynomial(line), opts);
  } else if (*dataset == "example1-poly") {
    c = certify_from_charpoly(datasets::example1_charpoly(), opts);
  } else if (*dataset == "remark1") {
    c = certify_tree(datasets::remark1_a(), opts);
  } else if (*dataset == "remark2") {
    c = certify_tree(datasets::remark2_a(), opts);
  } else {
    throw InputError("certify: unknown dataset '" + *dataset + "'");
  }
  if (s.json) emit(out, "certify", to_json(c));
  else print_certificate(out, c);
  return kExitOk;
}

inline int cmd_spectra(const Settings& s, const std::string& file, std::ostream& out) {
  const SignedGraph g = load_graph(file, s);
  const IntMatrix a = adjacency(g);
  const GeneralizedSpectrum gs = generalized_spectrum(a);
  const bool controllable = is_controllable(a);
  const BalanceResult bal = is_balanced(g);
  std::optional<Bipartition> bip;
  try {
    bip = bipartition(g);
  } catch (const NotBipartiteError&) {
  }
  if (s.json) {
    Json j;
    j["graph"] = graph_json(g);
    j["charpoly_a"] = poly_json(gs.adjacency);
    j["charpoly_complement"] = poly_json(gs.complement);
    j["controllable"] = controllable;
    j["balanced"] = bal.balanced;
    j["bipartite"] = bip.has_value();
    j["tree"] = is_tree(g);
    emit(out, "spectra", j);
  } else {
    out << "vertices: " << g.order() << ", edges: " << g.size() << "\n";
    out << "charpoly(A):\n" << poly_lines(gs.adjacency);
    out << "charpoly(J - I - A):\n" << poly_lines(gs.complement);
    out << "controllable: " << (controllable ? "true" : "false") << "\n";
    out << "balanced: " << (bal.balanced ? "true" : "false") << "\n";
    out << "bipartite: " << (bip ? "true" : "false");
    if (bip) out << " (parts " << bip->left.size() << " + " << bip->right.size() << ")";
    out << "\ntree: " << (is_tree(g) ? "true" : "false") << "\n";
  }
  return kExitOk;
}

inline int cmd_recover_q(const Settings& s, const std::string& fa, const std::string& fb, std::ostream& out) {
  const SignedGraph a = load_graph(fa, s), b = load_graph(fb, s);
  if (a.order() != b.order()) throw InputError("recover-q: graphs have different orders");
  SignedGraph pa = a, pb = b;
  const auto split = detail::common_part_sorted(pa, pb);
  const QRecovery r = recover_q(adjacency(pa), adjacency(pb));
  const QClassification c = classify_q(r.q, split);
  const auto iso = are_isomorphic(a, b);
  if (s.json) {
    Json j;
    j["frame"] = split ? "part-sorted" : "input";
    j["recovery"] = to_json(r);
    j["classification"] = to_json(c);
    j["isomorphic"] = iso.has_value();
    emit(out, "recover-q", j);
  } else {
    out << "frame: " << (split ? "part-sorted" : "input") << "\n";
    print_q(out, r, c);
    out << "isomorphic: " << (iso ? "true" : "false") << "\n";
  }
  return kExitOk;
}

inline int cmd_verify_structure(const Settings& s, const std::string& fa, const std::string& fb, std::ostream& out) {
  const StructureReport r = verify_structure_theorem(load_graph(fa, s), load_graph(fb, s));
  if (s.json) {
    emit(out, "verify-structure", to_json(r));
    return kExitOk;
  }
  for (const auto& f : r.precondition_failures) out << "precondition failed: " << f << "\n";
  if (r.charpoly) out << "charpoly:\n" << poly_lines(*r.charpoly);
  if (r.recovery) print_q(out, *r.recovery, r.classification);
  out << "Q1 regular orthogonal: " << (r.q1_regular_orthogonal ? "true" : "false") << "\n";
  out << "Q2 regular orthogonal: " << (r.q2_regular_orthogonal ? "true" : "false") << "\n";
  out << "block structure holds: " << (r.holds ? "true" : "false") << "\n";
  return kExitOk;
}

inline int cmd_verify_lemma34(const Settings& s, const std::string& file, std::ostream& out) {
  const BipartiteEigenReport r = verify_bipartite_eigen_properties(load_graph(file, s));
  if (s.json) {
    emit(out, "verify-lemma34", to_json(r));
    return kExitOk;
  }
  auto yn = [](bool b) { return b ? "true" : "false"; };
  auto opt = [&](const std::optional<bool>& b) { return b ? yn(*b) : "skipped"; };
  for (const auto& f : r.precondition_failures) out << "precondition failed: " << f << "\n";
  if (r.charpoly_a) out << "charpoly(A):\n" << poly_lines(*r.charpoly_a);
  if (r.charpoly_mmt) out << "charpoly(M M^T):\n" << poly_lines(*r.charpoly_mmt);
  out << "M M^T u = a u: " << yn(r.mmt_eigenvector) << "\n";
  out << "|M^T u|^2 = a |u|^2: " << yn(r.mmt_length_equality) << "\n";
  out << "charpoly(M M^T) = charpoly(M^T M): " << yn(r.mmt_mtm_same_charpoly) << "\n";
  out << "charpoly(M M^T) irreducible: " << yn(r.mmt_irreducible) << "\n";
  out << "charpoly(A)(x) = charpoly(M^T M)(x^2): " << yn(r.even_structure) << "\n";
  out << "A xi = lambda xi: " << opt(r.full_eigenvector) << "\n";
  out << "u^T u = v^T v: " << opt(r.full_length_equality) << "\n";
  out << "M M^T u = lambda^2 u, M^T M v = lambda^2 v: " << opt(r.squares_eigenvectors) << "\n";
  out << "A (u; -v) = -lambda (u; -v): " << opt(r.reflected_eigenvector) << "\n";
  out << "passed: " << yn(r.passed()) << "\n";
  return kExitOk;
}

inline int cmd_search_mates(const Settings& s, const std::string& file, std::optional<int> pool_n, std::ostream& out) {
  const SignedGraph g = load_graph(file, s);
  const int n = pool_n.value_or(g.order());
  if (n > s.max_n) throw ResourceGuardError("search-mates: pool order " + std::to_string(n) + " exceeds --max-n " + std::to_string(s.max_n));
  const std::vector<SignedGraph> pool = all_signed_trees(enumerate_trees(n));
  SearchOptions opts;
  opts.jobs = s.jobs;
  const MateReport r = find_gc_mates(g, pool, opts, "all signed trees on " + std::to_string(n) + " vertices");
  if (s.json) {
    emit(out, "search-mates", to_json(r));
    return kExitOk;
  }
  out << "search space: " << r.search_space << " (" << r.examined << " graphs)\n";
  out << "generalized cospectral: " << r.cospectral << "\n";
  out << "non-isomorphic mates: " << r.mates.size() << "\n";
  for (const auto& m : r.mates) {
    out << "--\n" << format_sg(m.mate);
    if (m.recovery) print_q(out, *m.recovery, m.classification);
  }
  return kExitOk;
}

inline int cmd_exhaustive(const Settings& s, int n, std::ostream& out) {
  DeskScaleOptions opts;
  opts.jobs = s.jobs;
  opts.max_n = s.max_n;
  opts.seed = s.seed;
  const DeskScaleResult r = desk_scale_check(n, opts);
  if (s.json) {
    Json trees = Json::array();
    for (const auto& t : r.trees) {
      Json e;
      e["tree"] = graph_json(t.tree);
      e["verdict"] = verdict_text(t.certificate);
      e["exhaustive"] = t.outcome ? Json(t.outcome->holds) : Json(nullptr);
      trees.push_back(e);
    }
    Json j;
    j["n"] = r.n;
    j["trees"] = r.trees.size();
    j["signed_trees"] = r.signed_trees;
    j["certified"] = r.certified();
    j["results"] = trees;
    if (r.population) {
      Json p;
      p["pairs_checked"] = r.population->pairs_checked;
      p["non_isomorphic_pairs"] = r.population->non_isomorphic_pairs;
      p["violations"] = r.population->violations.size();
      j["structure_population"] = p;
    }
    j["holds"] = r.holds();
    emit(out, "exhaustive-check", j);
  } else {
    out << "n: " << r.n << "\n";
    out << "trees: " << r.trees.size() << ", signed trees: " << r.signed_trees << "\n";
    out << "certified trees: " << r.certified() << "\n";
    for (const auto& t : r.trees) {
      if (!t.outcome) continue;
      out << "--\n" << format_sg(t.tree) << "mates found: " << (t.outcome->holds ? "none" : "YES") << " (" << t.outcome->signings_checked << " signings)\n";
    }
    if (r.population) {
      out << "structure pairs checked: " << r.population->pairs_checked << " (non-isomorphic " << r.population->non_isomorphic_pairs
          << "), violations: " << r.population->violations.size() << "\n";
    }
    out << "holds: " << (r.holds() ? "true" : "false") << "\n";
  }
  return kExitOk;
}

inline int cmd_dataset(const Settings& s, const std::string& name, bool emit_files, const std::string& out_dir, std::ostream& out) {
  auto write = [&](const std::string& file, const SignedGraph& g) {
    const std::filesystem::path p = std::filesystem::path(out_dir) / file;
    std::ofstream f(p);
    if (!f) throw InputError("cannot write '" + p.string() + "'");
    write_sg(f, g);
    out << "wrote " << p.string() << "\n";
  };
  Json j;
  j["name"] = name;
  if (name == "remark1" || name == "remark2") {
    const bool one = name == "remark1";
    const IntMatrix m = one ? datasets::remark1_m() : datasets::remark2_m();
    const IntMatrix mt = one ? datasets::remark1_m_tilde() : datasets::remark2_m_tilde();
    const RatMatrix q = one ? datasets::remark1_q() : datasets::remark2_q();
    if (emit_files) {
      write(name + "-a.sg", from_bipartite_adjacency(m));
      write(name + "-b.sg", from_bipartite_adjacency(mt));
      return kExitOk;
    }
    if (s.json) {
      j["m"] = matrix_json(m);
      j["m_tilde"] = matrix_json(mt);
      j["q"] = matrix_json(q);
      emit(out, "dataset", j);
    } else {
      out << "M =\n" << format_matrix(m) << "M~ =\n" << format_matrix(mt);
      const BigInt d = common_denominator(q);
      out << "Q = (1/" << to_string(d) << ") *\n" << format_matrix(to_integer(RatMatrix(Rational(d) * q)));
    }
    return kExitOk;
  }
  if (name == "example1-poly") {
    const IntPolynomial p = datasets::example1_charpoly();
    if (emit_files) {
      const std::filesystem::path path = std::filesystem::path(out_dir) / "example1.poly";
      std::ofstream f(path);
      if (!f) throw InputError("cannot write '" + path.string() + "'");
      f << p.to_coefficient_line() << "\n";
      out << "wrote " << path.string() << "\n";
      return kExitOk;
    }
    if (s.json) {
      j["charpoly"] = poly_json(p);
      emit(out, "dataset", j);
    } else {
      out << poly_lines(p, "");
    }
    return kExitOk;
  }
  if (name == "example1-trees") {
    const auto trees = example1_trees();
    if (emit_files) {
      write("example1-a.sg", trees[0]);
      write("example1-b.sg", trees[1]);
      return kExitOk;
    }
    if (s.json) {
      j["trees"] = Json::array({graph_json(trees[0]), graph_json(trees[1])});
      emit(out, "dataset", j);
    } else {
      out << format_sg(trees[0]) << "--\n" << format_sg(trees[1]);
    }
    return kExitOk;
  }
  throw InputError("dataset: unknown name '" + name + "' (remark1, remark2, example1-poly, example1-trees)");
}

inline int max_n_from_env() {
  if (const char* v = std::getenv("SPECTRAL_MAX_N")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw InputError(std::string("SPECTRAL_MAX_N is not an integer: '") + v + "'");
    }
  }
  return kExhaustiveCeiling;
}

/// Entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized-spectrum tools for signed trees"};
  app.require_subcommand(1);
  Settings s;
  std::optional<int> max_n;
  app.add_flag("--json", s.json, "machine-readable output");
  app.add_flag("--matrix", s.matrix, "graph files are adjacency matrices");
  app.add_option("--seed", s.seed, "RNG seed for randomized factoring");
  app.add_option("--max-n", max_n, "resource guard for enumeration (also SPECTRAL_MAX_N)");
  app.add_option("--jobs", s.jobs, "parallel width")->check(CLI::PositiveNumber);

  std::optional<std::string> cert_graph, cert_poly, cert_dataset;
  auto* certify = app.add_subcommand("certify", "DGS certificate for a signed tree or a charpoly");
  certify->add_option("graph", cert_graph, "tree (.sg file or dataset:NAME)");
  certify->add_option("--poly", cert_poly, "file with ascending integer coefficients");
  certify->add_option("--dataset", cert_dataset, "example1-poly, remark1, remark2");

  std::string g1, g2;
  auto* spectra = app.add_subcommand("spectra", "generalized spectrum and basic invariants");
  spectra->add_option("graph", g1)->required();
  auto* recq = app.add_subcommand("recover-q", "recover Q = W(A) W(B)^-1");
  recq->add_option("a", g1)->required();
  recq->add_option("b", g2)->required();
  auto* vstruct = app.add_subcommand("verify-structure", "check the block structure of Q");
  vstruct->add_option("a", g1)->required();
  vstruct->add_option("b", g2)->required();
  auto* lemma = app.add_subcommand("verify-lemma34", "symbolic bipartite eigenvector checks");
  lemma->add_option("graph", g1)->required();
  std::optional<int> pool_n;
  auto* mates = app.add_subcommand("search-mates", "generalized-cospectral mates among signed trees");
  mates->add_option("graph", g1)->required();
  mates->add_option("--pool-n", pool_n, "order of the tree pool");
  int exhaustive_n = 0;
  auto* exh = app.add_subcommand("exhaustive-check", "certify all trees on n vertices and search for mates");
  exh->add_option("--n", exhaustive_n)->required();
  std::string ds_name, out_dir = ".";
  bool ds_emit = false;
  auto* ds = app.add_subcommand("dataset", "print or emit an embedded dataset");
  ds->add_option("name", ds_name)->required();
  ds->add_flag("--emit", ds_emit, "write files instead of printing");
  ds->add_option("--out-dir", out_dir, "directory for --emit");

  for (auto* sub : {certify, spectra, recq, vstruct, lemma, mates, exh, ds}) {
    sub->add_flag("--json", s.json, "machine-readable output");
    sub->add_flag("--matrix", s.matrix, "graph files are adjacency matrices");
    sub->add_option("--seed", s.seed, "RNG seed for randomized factoring");
    sub->add_option("--max-n", max_n, "resource guard for enumeration");
    sub->add_option("--jobs", s.jobs, "parallel width")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    s.max_n = max_n ? *max_n : max_n_from_env();
    if (*certify) return cmd_certify(s, cert_graph, cert_poly, cert_dataset, out);
    if (*spectra) return cmd_spectra(s, g1, out);
    if (*recq) return cmd_recover_q(s, g1, g2, out);
    if (*vstruct) return cmd_verify_structure(s, g1, g2, out);
    if (*lemma) return cmd_verify_lemma34(s, g1, out);
    if (*mates) return cmd_search_mates(s, g1, pool_n, out);
    if (*exh) return cmd_exhaustive(s, exhaustive_n, out);
    if (*ds) return cmd_dataset(s, ds_name, ds_emit, out_dir, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {  // parse, dimension, precondition
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::length_error& e) {  // resource guard
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {  // singular matrices, bad arguments
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitInput;
}

}  // namespace sgdgs::cli
