#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sgdgs {

/// Edge {u, v} with u < v (0-based) and sign +1 or -1.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple graph on vertices 0..n-1 with a +1/-1 label on each edge.
/// Edges are kept sorted, so equal graphs compare equal structurally.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw PreconditionError("signed graph: negative vertex count");
    for (auto& e : edges_) {
      if (e.u == e.v) throw PreconditionError("signed graph: self-loop at vertex " + std::to_string(e.u + 1));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_) throw PreconditionError("signed graph: vertex index out of range");
      if (e.sign != 1 && e.sign != -1) throw PreconditionError("signed graph: edge sign must be +1 or -1");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
        throw PreconditionError("signed graph: duplicate edge " + std::to_string(edges_[i].u + 1) + "-" +
                                std::to_string(edges_[i].v + 1));
      }
    }
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  /// Neighbor lists as (vertex, sign), ascending by vertex.
  std::vector<std::vector<std::pair<int, int>>> neighbors() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
      adj[e.u].emplace_back(e.v, e.sign);
      adj[e.v].emplace_back(e.u, e.sign);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;
};

inline IntMatrix adjacency(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix a(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.sign;
    a(e.v, e.u) = e.sign;
  }
  return a;
}

/// Inverse of adjacency(): requires a symmetric 0/+1/-1 matrix with zero diagonal.
inline SignedGraph from_adjacency(const IntMatrix& a) {
  a.require_square("from_adjacency");
  if (!a.is_symmetric()) throw PreconditionError("from_adjacency: matrix is not symmetric");
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw PreconditionError("from_adjacency: nonzero diagonal (loop)");
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, j) != 1 && a(i, j) != -1) throw PreconditionError("from_adjacency: entries must be 0 or +-1");
      edges.push_back({static_cast<int>(i), static_cast<int>(j), a(i, j) > 0 ? 1 : -1});
    }
  }
  return SignedGraph(static_cast<int>(a.rows()), std::move(edges));
}

/// Graph with adjacency [[O, M], [M^T, O]]: rows of M first, then columns.
inline SignedGraph from_bipartite_adjacency(const IntMatrix& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  std::vector<SignedEdge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const BigInt& s = m(i, j);
      if (s == 0) continue;
      if (s != 1 && s != -1) throw PreconditionError("from_bipartite_adjacency: entries must be 0 or +-1");
      edges.push_back({i, r + j, s > 0 ? 1 : -1});
    }
  return SignedGraph(r + c, std::move(edges));
}

/// Two-colouring: every edge joins `left` to `right`; both sorted ascending.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Raised by bipartition(); carries an odd closed walk (first vertex repeated at the end).
class NotBipartiteError : public PreconditionError {
 public:
  NotBipartiteError(const std::string& what, std::vector<int> walk)
      : PreconditionError(what), walk_(std::move(walk)) {}
  const std::vector<int>& odd_closed_walk() const { return walk_; }

 private:
  std::vector<int> walk_;
};

namespace detail {

// Closed walk u -> ... -> lca -> ... -> v -> u through BFS-tree parents.
inline std::vector<int> tree_cycle(int u, int v, const std::vector<int>& parent, const std::vector<int>& depth) {
  std::vector<int> up, down;
  int a = u, b = v;
  while (depth[a] > depth[b]) {
    up.push_back(a);
    a = parent[a];
  }
  while (depth[b] > depth[a]) {
    down.push_back(b);
    b = parent[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = parent[a];
    b = parent[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  up.push_back(u);
  return up;
}

}  // namespace detail

/// Breadth-first two-colouring; each component is rooted at its smallest vertex,
/// which goes to the left part.
inline Bipartition bipartition(const SignedGraph& g) {
  const int n = g.order();
  const auto adj = g.neighbors();
  std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, sign] : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (colour[v] == colour[u]) {
          throw NotBipartiteError("graph is not bipartite: odd cycle found", detail::tree_cycle(u, v, parent, depth));
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) (colour[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

inline void validate_bipartition(const SignedGraph& g, const Bipartition& b) {
  std::vector<int> side(g.order(), -1);
  for (int v : b.left) {
    if (v < 0 || v >= g.order() || side[v] != -1) throw PreconditionError("bipartition: invalid or repeated vertex");
    side[v] = 0;
  }
  for (int v : b.right) {
    if (v < 0 || v >= g.order() || side[v] != -1) throw PreconditionError("bipartition: invalid or repeated vertex");
    side[v] = 1;
  }
  for (int s : side)
    if (s == -1) throw PreconditionError("bipartition: parts do not cover the vertex set");
  for (const auto& e : g.edges())
    if (side[e.u] == side[e.v]) throw PreconditionError("bipartition: edge inside a part");
  if (!std::is_sorted(b.left.begin(), b.left.end()) || !std::is_sorted(b.right.begin(), b.right.end())) {
    throw PreconditionError("bipartition: parts must be in ascending order");
  }
}

/// |left| x |right| block M with A = [[O, M], [M^T, O]] in part-sorted order.
inline IntMatrix bipartite_adjacency(const SignedGraph& g, const Bipartition& b) {
  validate_bipartition(g, b);
  std::vector<int> pos(g.order());
  for (std::size_t i = 0; i < b.left.size(); ++i) pos[b.left[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < b.right.size(); ++j) pos[b.right[j]] = static_cast<int>(j);
  std::vector<char> is_left(g.order(), 0);
  for (int v : b.left) is_left[v] = 1;
  IntMatrix m(b.left.size(), b.right.size());
  for (const auto& e : g.edges()) {
    int l = is_left[e.u] ? e.u : e.v;
    int r = is_left[e.u] ? e.v : e.u;
    m(pos[l], pos[r]) = e.sign;
  }
  return m;
}

/// New graph whose vertex i is old vertex order[i].
inline SignedGraph relabel(const SignedGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.order()) throw PreconditionError("relabel: order has wrong length");
  std::vector<int> inv(g.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= g.order() || inv[order[i]] != -1) throw PreconditionError("relabel: not a permutation");
    inv[order[i]] = static_cast<int>(i);
  }
  std::vector<SignedEdge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({inv[e.u], inv[e.v], e.sign});
  return SignedGraph(g.order(), std::move(edges));
}

/// Left part first, then right, each ascending.
inline SignedGraph part_sorted(const SignedGraph& g, const Bipartition& b) {
  std::vector<int> order = b.left;
  order.insert(order.end(), b.right.begin(), b.right.end());
  return relabel(g, order);
}

/// Negates every edge with exactly one end in `subset`.
inline SignedGraph switching(const SignedGraph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.order(), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.order()) throw PreconditionError("switching: vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges)
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  return SignedGraph(g.order(), std::move(edges));
}

/// Diagonal +-1 matrix, stored as its diagonal.
struct SwitchingMatrix {
  std::vector<int> diagonal;

  IntMatrix to_matrix() const {
    IntMatrix d(diagonal.size(), diagonal.size());
    for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
  }
};

struct BalanceResult {
  bool balanced = false;
  std::optional<SwitchingMatrix> certificate;  // D with D A D entrywise nonnegative
  std::vector<int> unbalanced_cycle;           // closed walk with an odd number of negative edges
};

/// Balanced iff a vertex potential s with sign(uv) = s(u) s(v) exists.
inline BalanceResult is_balanced(const SignedGraph& g) {
  const int n = g.order();
  const auto adj = g.neighbors();
  std::vector<int> pot(n, 0), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (pot[s] != 0) continue;
    pot[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, sign] : adj[u]) {
        if (pot[v] == 0) {
          pot[v] = pot[u] * sign;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (pot[v] != pot[u] * sign) {
          return {false, std::nullopt, detail::tree_cycle(u, v, parent, depth)};
        }
      }
    }
  }
  return {true, SwitchingMatrix{pot}, {}};
}

/// Connected with n - 1 edges (the empty graph is not a tree).
inline bool is_tree(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0 || static_cast<int>(g.size()) != n - 1) return false;
  const auto adj = g.neighbors();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, s] : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

inline SignedGraph underlying(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = 1;
  return SignedGraph(g.order(), std::move(edges));
}

/// P with P[i][mapping[i]] = 1, so that P^T A(G) P = A(H) when mapping is an
/// isomorphism from G to H.
inline IntMatrix permutation_matrix(const std::vector<int>& mapping) {
  IntMatrix p(mapping.size(), mapping.size());
  for (std::size_t i = 0; i < mapping.size(); ++i) p(i, static_cast<std::size_t>(mapping[i])) = 1;
  return p;
}

namespace detail {

inline std::vector<int> tree_centers(const std::vector<std::vector<std::pair<int, int>>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(n), leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int v : leaves)
      for (auto [w, s] : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

/// AHU encoding of the tree rooted at `root`; each child's token is prefixed
/// with the sign of the edge to its parent. `tokens[v]` receives v's subtree code.
inline std::string rooted_code(const std::vector<std::vector<std::pair<int, int>>>& adj, int root,
                               std::vector<std::string>& codes) {
  const int n = static_cast<int>(adj.size());
  codes.assign(n, {});
  std::vector<int> order, parent(n, -1), parent_sign(n, 1);
  order.reserve(n);
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (auto [v, s] : adj[u])
      if (v != parent[u]) {
        parent[v] = u;
        parent_sign[v] = s;
        order.push_back(v);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    std::vector<std::string> kids;
    for (auto [v, s] : adj[u])
      if (v != parent[u]) kids.push_back((parent_sign[v] > 0 ? "+" : "-") + codes[v]);
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (auto& k : kids) c += k;
    c += ")";
    codes[u] = std::move(c);
  }
  return codes[root];
}

inline void match_subtrees(int a, int pa, int b, int pb, const std::vector<std::vector<std::pair<int, int>>>& adj_a,
                           const std::vector<std::vector<std::pair<int, int>>>& adj_b,
                           const std::vector<std::string>& codes_a, const std::vector<std::string>& codes_b,
                           std::vector<int>& mapping) {
  mapping[a] = b;
  std::vector<std::pair<std::string, int>> ka, kb;
  for (auto [v, s] : adj_a[a])
    if (v != pa) ka.emplace_back((s > 0 ? "+" : "-") + codes_a[v], v);
  for (auto [v, s] : adj_b[b])
    if (v != pb) kb.emplace_back((s > 0 ? "+" : "-") + codes_b[v], v);
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  for (std::size_t i = 0; i < ka.size(); ++i)
    match_subtrees(ka[i].second, a, kb[i].second, b, adj_a, adj_b, codes_a, codes_b, mapping);
}

inline bool verify_mapping(const SignedGraph& g, const SignedGraph& h, const std::vector<int>& mapping) {
  std::vector<SignedEdge> mapped;
  mapped.reserve(g.size());
  for (const auto& e : g.edges()) mapped.push_back({mapping[e.u], mapping[e.v], e.sign});
  return SignedGraph(h.order(), std::move(mapped)) == h;
}

inline std::optional<std::vector<int>> tree_isomorphism(const SignedGraph& g, const SignedGraph& h) {
  const auto adj_g = g.neighbors(), adj_h = h.neighbors();
  const auto cg = tree_centers(adj_g), ch = tree_centers(adj_h);
  if (cg.size() != ch.size()) return std::nullopt;
  std::vector<std::string> codes_g, codes_h;
  const std::string root_code = rooted_code(adj_g, cg.front(), codes_g);
  for (int r : ch) {
    if (rooted_code(adj_h, r, codes_h) != root_code) continue;
    std::vector<int> mapping(g.order(), -1);
    match_subtrees(cg.front(), -1, r, -1, adj_g, adj_h, codes_g, codes_h, mapping);
    if (!verify_mapping(g, h, mapping)) throw InvariantViolation("tree isomorphism: matched codes but mapping fails");
    return mapping;
  }
  return std::nullopt;
}

/// Backtracking over vertices in BFS order, pruning by signed degree and by
/// consistency with already-mapped vertices.
inline std::optional<std::vector<int>> backtrack_isomorphism(const SignedGraph& g, const SignedGraph& h) {
  const int n = g.order();
  std::vector<int> ag(n * n, 0), ah(n * n, 0);
  for (const auto& e : g.edges()) ag[e.u * n + e.v] = ag[e.v * n + e.u] = e.sign;
  for (const auto& e : h.edges()) ah[e.u * n + e.v] = ah[e.v * n + e.u] = e.sign;
  auto signature = [n](const std::vector<int>& a, int v) {
    int pos = 0, neg = 0;
    for (int w = 0; w < n; ++w) {
      pos += a[v * n + w] > 0;
      neg += a[v * n + w] < 0;
    }
    return std::pair{pos, neg};
  };
  std::vector<std::pair<int, int>> sig_g(n), sig_h(n);
  for (int v = 0; v < n; ++v) {
    sig_g[v] = signature(ag, v);
    sig_h[v] = signature(ah, v);
  }
  {
    auto a = sig_g, b = sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // visit order: BFS from highest-degree vertices so constraints bite early
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  const auto adj = g.neighbors();
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int x, int y) { return adj[x].size() > adj[y].size(); });
  for (int s : by_degree) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (auto [w, sg] : adj[order[i]])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> mapping(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || sig_h[w] != sig_g[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = ag[v * n + u] == ah[w * n + mapping[u]];
      }
      if (!ok) continue;
      mapping[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      mapping[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return mapping;
}

}  // namespace detail

/// Sign-preserving isomorphism (no switching): mapping[i] is the image of
/// vertex i, and permutation_matrix(mapping) P satisfies P^T A(g) P = A(h).
/// Trees use the signed AHU canonical form; other graphs use backtracking.
inline std::optional<std::vector<int>> are_isomorphic(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.order() == 0) return std::vector<int>{};
  const bool tg = is_tree(g), th = is_tree(h);
  if (tg != th) return std::nullopt;
  if (tg) return detail::tree_isomorphism(g, h);
  return detail::backtrack_isomorphism(g, h);
}

/// Canonical string of a signed tree; equal iff the trees are isomorphic.
inline std::string tree_canonical_form(const SignedGraph& t) {
  if (!is_tree(t)) throw PreconditionError("tree_canonical_form: graph is not a tree");
  const auto adj = t.neighbors();
  std::vector<std::string> codes;
  std::string best;
  for (int c : detail::tree_centers(adj)) {
    std::string code = detail::rooted_code(adj, c, codes);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// `.sg` text: "n m" then m lines "u v s", 1-based, s in {+1, -1, 1, +, -}.
inline SignedGraph read_sg(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("sg: missing 'n m' header");
  if (n < 0 || m < 0) throw ParseError("sg: negative counts in header");
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    std::string s;
    if (!(in >> u >> v >> s)) throw ParseError("sg: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("sg: vertex out of range on edge " + std::to_string(k + 1));
    int sign = 0;
    if (s == "+1" || s == "1" || s == "+") sign = 1;
    else if (s == "-1" || s == "-") sign = -1;
    else throw ParseError("sg: bad sign '" + s + "' on edge " + std::to_string(k + 1));
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), sign});
  }
  std::string extra;
  if (in >> extra) throw ParseError("sg: trailing data '" + extra + "'");
  try {
    return SignedGraph(static_cast<int>(n), std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("sg: ") + e.what());
  }
}

inline SignedGraph parse_sg(const std::string& text) {
  std::istringstream in(text);
  return read_sg(in);
}

/// Canonical writer: edges in lexicographic order, signs as +1/-1.
inline void write_sg(std::ostream& out, const SignedGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
}

inline std::string format_sg(const SignedGraph& g) {
  std::ostringstream os;
  write_sg(os, g);
  return os.str();
}

}  // namespace sgdgs
