#pragma once

#include "certify.hpp"
#include "errors.hpp"
#include "signed_graph.hpp"
#include "spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace sgdgs {

inline constexpr int kTreeCeiling = 14;
inline constexpr int kExhaustiveCeiling = 10;

/// Runs body(i) for i in [0, count) on `jobs` threads. Callers write into
/// per-index slots, so the result does not depend on scheduling.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  const std::size_t width = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
  if (width <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(width);
  for (std::size_t t = 0; t < width; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += width) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct TreePool {
  int n = 0;
  std::vector<SignedGraph> trees;  // all edges +1
};

namespace detail {

// Level sequences in the Wright-Richmond-Odlyzko-McKay order.
inline std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& pred, std::optional<std::size_t> start = {}) {
  std::size_t p;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  std::vector<int> result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

inline std::pair<std::vector<int>, std::vector<int>> split_tree(const std::vector<int>& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  std::vector<int> left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

inline std::optional<std::vector<int>> next_tree(const std::vector<int>& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;
  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (!next) return std::nullopt;
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t k = 0; k < len; ++k) (*next)[next->size() - len + k] = static_cast<int>(k) + 1;
  }
  return next;
}

inline SignedGraph layout_to_tree(const std::vector<int>& layout) {
  std::vector<SignedEdge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.push_back({static_cast<int>(stack.back()), static_cast<int>(i), 1});
    }
    stack.push_back(i);
  }
  return SignedGraph(static_cast<int>(layout.size()), edges);
}

}  // namespace detail

/// All free trees on n vertices up to isomorphism, in a fixed order.
inline TreePool enumerate_trees(int n, int ceiling = kTreeCeiling) {
  if (n < 1) throw PreconditionError("enumerate_trees: n must be at least 1");
  if (n > ceiling) throw ResourceGuardError("enumerate_trees: n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(ceiling));
  TreePool pool{n, {}};
  if (n == 1) {
    pool.trees.emplace_back(1, std::vector<SignedEdge>{});
    return pool;
  }
  if (n == 2) {
    pool.trees.emplace_back(2, std::vector<SignedEdge>{{0, 1, 1}});
    return pool;
  }
  std::optional<std::vector<int>> layout;
  {
    std::vector<int> start;
    for (int i = 0; i <= n / 2; ++i) start.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
    layout = start;
  }
  while (layout) {
    layout = detail::next_tree(*layout);
    if (!layout) break;
    pool.trees.push_back(detail::layout_to_tree(*layout));
    layout = detail::next_rooted_tree(*layout);
  }
  return pool;
}

/// Lazy range over the 2^m signings of a graph with m edges; bit k of the
/// index makes edge k (in sorted edge order) negative.
class SigningRange {
 public:
  explicit SigningRange(SignedGraph base) : base_(std::move(base)) {
    if (base_.size() >= 63) throw ResourceGuardError("signings: too many edges");
  }

  class iterator {
   public:
    using value_type = SignedGraph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const SignedGraph* base, std::uint64_t mask) : base_(base), mask_(mask) {}
    SignedGraph operator*() const {
      std::vector<SignedEdge> edges = base_->edges();
      for (std::size_t k = 0; k < edges.size(); ++k) edges[k].sign = (mask_ >> k) & 1u ? -1 : 1;
      return SignedGraph(base_->order(), std::move(edges));
    }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++mask_;
      return t;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    const SignedGraph* base_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {&base_, 0}; }
  iterator end() const { return {&base_, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << base_.size(); }

 private:
  SignedGraph base_;
};

/// All 2^(n-1) signings of a tree.
inline SigningRange enumerate_signings(const SignedGraph& t) {
  if (!is_tree(t)) throw PreconditionError("enumerate_signings: graph is not a tree");
  return SigningRange(t);
}

/// Every signing of every tree on n vertices, in pool order.
inline std::vector<SignedGraph> all_signed_trees(const TreePool& pool) {
  std::vector<SignedGraph> out;
  for (const auto& t : pool.trees)
    for (SignedGraph g : enumerate_signings(t)) out.push_back(std::move(g));
  return out;
}

using SpectrumPredicate = std::function<bool(const GeneralizedSpectrum&, const GeneralizedSpectrum&)>;

/// Generalized spectra of a fixed list of graphs, grouped by exact equality.
class SpectrumIndex {
 public:
  SpectrumIndex(std::vector<SignedGraph> graphs, int jobs = 1) : graphs_(std::move(graphs)), spectra_(graphs_.size()) {
    parallel_for(graphs_.size(), jobs, [&](std::size_t i) { spectra_[i] = generalized_spectrum(adjacency(graphs_[i])); });
    for (std::size_t i = 0; i < graphs_.size(); ++i) groups_[spectra_[i].key()].push_back(i);
  }

  const std::vector<SignedGraph>& graphs() const { return graphs_; }
  const std::vector<GeneralizedSpectrum>& spectra() const { return spectra_; }
  const std::map<std::string, std::vector<std::size_t>>& groups() const { return groups_; }

  /// Indices whose spectrum matches; a linear scan when a predicate is given.
  std::vector<std::size_t> matches(const GeneralizedSpectrum& s, const SpectrumPredicate& same = nullptr) const {
    if (!same) {
      auto it = groups_.find(s.key());
      return it == groups_.end() ? std::vector<std::size_t>{} : it->second;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spectra_.size(); ++i)
      if (same(s, spectra_[i])) out.push_back(i);
    return out;
  }

 private:
  std::vector<SignedGraph> graphs_;
  std::vector<GeneralizedSpectrum> spectra_;
  std::map<std::string, std::vector<std::size_t>> groups_;
};

struct MateEntry {
  SignedGraph mate;
  std::optional<QRecovery> recovery;  // when both sides are controllable
  std::optional<QClassification> classification;
  // "part-sorted" when Q relates the part-sorted relabellings, else "input"
  std::string frame;
};

struct MateReport {
  SignedGraph query;
  std::vector<MateEntry> mates;
  std::string search_space;
  std::size_t examined = 0;
  std::size_t cospectral = 0;  // before removing isomorphs
};

namespace detail {

/// Both graphs relabelled part-sorted when they are bipartite with parts of
/// the same sizes; returns the split.
inline std::optional<std::size_t> common_part_sorted(SignedGraph& g, SignedGraph& h) {
  try {
    const Bipartition bg = bipartition(g), bh = bipartition(h);
    if (bg.left.size() != bh.left.size()) return std::nullopt;
    g = part_sorted(g, bg);
    h = part_sorted(h, bh);
    return bg.left.size();
  } catch (const NotBipartiteError&) {
    return std::nullopt;
  }
}

inline MateEntry describe_mate(const SignedGraph& query, const SignedGraph& mate) {
  MateEntry e{mate, std::nullopt, std::nullopt, "input"};
  SignedGraph a = query, b = mate;
  const auto split = common_part_sorted(a, b);
  if (split) e.frame = "part-sorted";
  const IntMatrix ma = adjacency(a), mb = adjacency(b);
  if (is_controllable(ma) && is_controllable(mb)) {
    e.recovery = recover_q(ma, mb);
    e.classification = classify_q(e.recovery->q, split);
  }
  return e;
}

inline MateReport collect_mates(const SignedGraph& g, const std::vector<SignedGraph>& candidates, std::size_t examined,
                                std::string search_space) {
  MateReport rep{g, {}, std::move(search_space), examined, candidates.size()};
  std::vector<SignedGraph> kept;
  for (const auto& h : candidates) {
    if (h.order() != g.order() || are_isomorphic(g, h)) continue;
    bool dup = false;
    for (const auto& k : kept)
      if (are_isomorphic(k, h)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(h);
  }
  for (const auto& h : kept) rep.mates.push_back(describe_mate(g, h));
  return rep;
}

}  // namespace detail

struct SearchOptions {
  int jobs = 1;
  SpectrumPredicate same_spectrum;  // exact equality when empty
};

/// Pool members generalized cospectral with g and not isomorphic to it,
/// deduplicated up to isomorphism, in pool order.
inline MateReport find_gc_mates(const SignedGraph& g, const std::vector<SignedGraph>& pool, const SearchOptions& opts = {},
                                std::string search_space = "explicit pool") {
  const GeneralizedSpectrum s = generalized_spectrum(adjacency(g));
  std::vector<char> hit(pool.size(), 0);
  parallel_for(pool.size(), opts.jobs, [&](std::size_t i) {
    if (pool[i].order() != g.order()) return;
    const GeneralizedSpectrum t = generalized_spectrum(adjacency(pool[i]));
    hit[i] = opts.same_spectrum ? opts.same_spectrum(s, t) : s == t;
  });
  std::vector<SignedGraph> cands;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (hit[i]) cands.push_back(pool[i]);
  return detail::collect_mates(g, cands, pool.size(), std::move(search_space));
}

/// Same, against a prebuilt index.
inline MateReport find_gc_mates(const SignedGraph& g, const SpectrumIndex& index, const SearchOptions& opts = {},
                                std::string search_space = "indexed pool") {
  std::vector<SignedGraph> cands;
  for (std::size_t i : index.matches(generalized_spectrum(adjacency(g)), opts.same_spectrum)) cands.push_back(index.graphs()[i]);
  return detail::collect_mates(g, cands, index.graphs().size(), std::move(search_space));
}

struct ExhaustiveOutcome {
  bool holds = true;
  std::uint64_t signings_checked = 0;
  std::uint64_t pool_size = 0;
  std::optional<MateReport> counterexample;

  explicit operator bool() const { return holds; }
};

struct ExhaustiveOptions {
  int jobs = 1;
  int max_n = kExhaustiveCeiling;
  SpectrumPredicate same_spectrum;
  const SpectrumIndex* index = nullptr;  // all signed trees on n vertices; built when absent
};

/// For a certified tree T: no signing of T has a generalized-cospectral,
/// non-isomorphic mate among all signed trees on the same number of vertices.
inline ExhaustiveOutcome exhaustive_dgs_check(const SignedGraph& t, const ExhaustiveOptions& opts = {}) {
  const int n = t.order();
  if (n > opts.max_n) throw ResourceGuardError("exhaustive_dgs_check: n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(opts.max_n));
  const DgsCertificate cert = certify_tree(t);
  if (!cert.certified()) throw PreconditionError("exhaustive_dgs_check: tree is not Certified-DGS (" + cert.reason + ")");
  std::optional<SpectrumIndex> own;
  const SpectrumIndex* index = opts.index;
  if (!index) {
    own.emplace(all_signed_trees(enumerate_trees(n, opts.max_n)), opts.jobs);
    index = &*own;
  }
  ExhaustiveOutcome out;
  out.pool_size = index->graphs().size();
  std::vector<SignedGraph> signings;
  for (SignedGraph g : enumerate_signings(t)) signings.push_back(std::move(g));
  std::vector<std::optional<MateReport>> found(signings.size());
  SearchOptions so{1, opts.same_spectrum};
  parallel_for(signings.size(), opts.jobs, [&](std::size_t i) {
    MateReport rep = find_gc_mates(signings[i], *index, so, "all signed trees on " + std::to_string(n) + " vertices");
    if (!rep.mates.empty()) found[i] = std::move(rep);
  });
  out.signings_checked = signings.size();
  for (auto& f : found) {
    if (f) {
      out.holds = false;
      out.counterexample = std::move(f);
      break;
    }
  }
  return out;
}

/// Generalized-cospectral pairs with irreducible charpoly must have a block
/// diagonal or anti-block diagonal Q in part-sorted order. Every member of a
/// cospectral class is paired with the class's first member (itself included);
/// `relabel_trials` adds pairs (G, P^T G P) for random permutations P.
struct PopulationOptions {
  int jobs = 1;
  std::size_t relabel_trials = 0;
  std::uint64_t seed = 0x5eed;
};

struct StructurePopulation {
  std::size_t irreducible_graphs = 0;
  std::size_t pairs_checked = 0;
  std::size_t self_pairs = 0;
  std::size_t isomorphic_pairs = 0;  // distinct labelled graphs, isomorphic
  std::size_t non_isomorphic_pairs = 0;
  std::size_t relabelled_pairs = 0;
  std::size_t block_diagonal = 0;
  std::size_t anti_block_diagonal = 0;
  std::vector<std::pair<SignedGraph, SignedGraph>> violations;
};

inline SignedGraph random_relabel(const SignedGraph& g, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return relabel(g, order);
}

inline StructurePopulation structure_population_check(const SpectrumIndex& index, const PopulationOptions& opts = {}) {
  std::vector<const std::vector<std::size_t>*> groups;
  for (const auto& entry : index.groups()) groups.push_back(&entry.second);
  std::vector<char> irreducible(groups.size(), 0);
  parallel_for(groups.size(), opts.jobs, [&](std::size_t gi) {
    const IntPolynomial& phi = index.spectra()[groups[gi]->front()].adjacency;
    irreducible[gi] = phi.degree() >= 1 && is_irreducible(phi).irreducible();
  });
  std::vector<StructurePopulation> slots(groups.size());
  parallel_for(groups.size(), opts.jobs, [&](std::size_t gi) {
    if (!irreducible[gi]) return;
    StructurePopulation& s = slots[gi];
    const auto& members = *groups[gi];
    const SignedGraph& first = index.graphs()[members.front()];
    auto check = [&](const SignedGraph& g, const SignedGraph& h) {
      StructureReport r = verify_structure_theorem(g, h);
      ++s.pairs_checked;
      if (r.classification && r.classification->block_diagonal) ++s.block_diagonal;
      else if (r.classification && r.classification->anti_block_diagonal) ++s.anti_block_diagonal;
      if (!r.holds) s.violations.emplace_back(g, h);
    };
    for (std::size_t k = 0; k < members.size(); ++k) {
      const SignedGraph& other = index.graphs()[members[k]];
      ++s.irreducible_graphs;
      if (k == 0) ++s.self_pairs;
      else if (are_isomorphic(first, other)) ++s.isomorphic_pairs;
      else ++s.non_isomorphic_pairs;
      check(first, other);
      for (std::size_t t = 0; t < opts.relabel_trials; ++t) {
        check(other, random_relabel(other, opts.seed ^ (members[k] * 0x9e3779b97f4a7c15ULL + t)));
        ++s.relabelled_pairs;
      }
    }
  });
  StructurePopulation out;
  for (auto& s : slots) {
    out.irreducible_graphs += s.irreducible_graphs;
    out.pairs_checked += s.pairs_checked;
    out.self_pairs += s.self_pairs;
    out.isomorphic_pairs += s.isomorphic_pairs;
    out.non_isomorphic_pairs += s.non_isomorphic_pairs;
    out.relabelled_pairs += s.relabelled_pairs;
    out.block_diagonal += s.block_diagonal;
    out.anti_block_diagonal += s.anti_block_diagonal;
    for (auto& v : s.violations) out.violations.push_back(std::move(v));
  }
  return out;
}

struct DeskScaleOptions {
  int jobs = 1;
  int max_n = kExhaustiveCeiling;
  bool population = true;
  std::size_t relabel_trials = 0;
  std::uint64_t seed = 0x5eed;
  SpectrumPredicate same_spectrum;
};

struct DeskScaleTree {
  SignedGraph tree;
  DgsCertificate certificate;
  std::optional<ExhaustiveOutcome> outcome;  // certified trees only
};

struct DeskScaleResult {
  int n = 0;
  std::size_t signed_trees = 0;
  std::vector<DeskScaleTree> trees;
  std::optional<StructurePopulation> population;

  std::size_t certified() const {
    return static_cast<std::size_t>(std::count_if(trees.begin(), trees.end(), [](const DeskScaleTree& t) { return t.outcome.has_value(); }));
  }
  bool holds() const {
    for (const auto& t : trees)
      if (t.outcome && !t.outcome->holds) return false;
    return !population || population->violations.empty();
  }
};

/// Certifies every tree on n vertices and runs the exhaustive check on the
/// certified ones against one shared index of all signed trees.
inline DeskScaleResult desk_scale_check(int n, const DeskScaleOptions& opts = {}) {
  if (n > opts.max_n) throw ResourceGuardError("desk_scale_check: n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(opts.max_n));
  const TreePool pool = enumerate_trees(n, std::max(opts.max_n, 1));
  const SpectrumIndex index(all_signed_trees(pool), opts.jobs);
  DeskScaleResult out;
  out.n = n;
  out.signed_trees = index.graphs().size();
  for (const auto& t : pool.trees) {
    DeskScaleTree entry{t, certify_tree(t), std::nullopt};
    if (entry.certificate.certified()) {
      ExhaustiveOptions eo;
      eo.jobs = opts.jobs;
      eo.max_n = opts.max_n;
      eo.same_spectrum = opts.same_spectrum;
      eo.index = &index;
      entry.outcome = exhaustive_dgs_check(t, eo);
    }
    out.trees.push_back(std::move(entry));
  }
  if (opts.population) {
    PopulationOptions po;
    po.jobs = opts.jobs;
    po.relabel_trials = opts.relabel_trials;
    po.seed = opts.seed;
    out.population = structure_population_check(index, po);
  }
  return out;
}

/// Trees on n vertices whose adjacency charpoly equals phi.
inline std::vector<SignedGraph> trees_with_charpoly(int n, const IntPolynomial& phi, int jobs = 1) {
  const TreePool pool = enumerate_trees(n);
  std::vector<char> hit(pool.trees.size(), 0);
  parallel_for(pool.trees.size(), jobs, [&](std::size_t i) { hit[i] = charpoly(adjacency(pool.trees[i])) == phi; });
  std::vector<SignedGraph> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(pool.trees[i]);
  return out;
}

}  // namespace sgdgs
