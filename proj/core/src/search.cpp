#include "qlat/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>

namespace qlat::search {
namespace {

struct Bitset {
  std::vector<std::uint64_t> w;

  explicit Bitset(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const {
    return (w[i >> 6] >> (i & 63)) & 1;
  }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += std::size_t(__builtin_popcountll(x));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] |= o.w[i];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

struct Graph {
  const Field* field = nullptr;
  unsigned n = 0;
  std::vector<Subspace> verts;
  std::vector<Bitset> adj;
  std::vector<Bitset> exclusions;  // vertex sets of the excluded families
};

bool edge_ok(const Constraints& cs, const Subspace& a, const Subspace& b) {
  if (cs.s_union && !(cs.union_same_dim_only && a.dim() != b.dim()) &&
      span(a, b).dim() > *cs.s_union)
    return false;
  if (cs.t_intersecting && intersect(a, b).dim() < *cs.t_intersecting)
    return false;
  if (cs.antichain && (contains_in(a, b) || contains_in(b, a))) return false;
  return true;
}

bool vertex_ok(const Constraints& cs, const Subspace& v) {
  if (cs.s_union && v.dim() > *cs.s_union) return false;
  if (cs.t_intersecting && v.dim() < *cs.t_intersecting) return false;
  return true;
}

std::vector<Subspace> lattice(const Field& f, unsigned n) {
  std::vector<Subspace> out;
  for (unsigned k = 0; k <= n; ++k)
    for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

Graph build_graph(const Field& f, unsigned n, const Constraints& cs,
                  const std::vector<Family>& exclusions, std::size_t budget) {
  Graph g;
  g.field = &f;
  g.n = n;
  for (const auto& s : lattice(f, n))
    if (vertex_ok(cs, s)) g.verts.push_back(s);
  if (g.verts.size() > budget)
    throw BudgetExceeded("compatibility graph exceeds the vertex budget");
  const std::size_t V = g.verts.size();
  g.adj.assign(V, Bitset(V));
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t j = i + 1; j < V; ++j)
      if (edge_ok(cs, g.verts[i], g.verts[j])) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  for (const auto& fam : exclusions) {
    Bitset b(V);
    for (std::size_t i = 0; i < V; ++i)
      if (fam.has(g.verts[i])) b.set(i);
    g.exclusions.push_back(std::move(b));
  }
  return g;
}

/// Branch-and-bound maximum clique (greedy coloring bound, descending-degree
/// root order), with two exclusion-aware rules: a clique counts only if it is
/// not a subset of any exclusion set, and a subtree whose clique plus all
/// remaining candidates fits inside one exclusion set is pruned whole.
class CliqueSolver {
 public:
  CliqueSolver(const Graph& g, std::size_t target, bool enumerate,
               std::atomic<std::size_t>& best, std::uint64_t& nodes,
               std::vector<std::vector<std::size_t>>& out)
      : g_(g), target_(target), enumerate_(enumerate), best_(best),
        nodes_(nodes), out_(out) {}

  void run(std::vector<std::size_t>& clique, Bitset clique_bs, Bitset cand) {
    ++nodes_;
    if (!g_.exclusions.empty()) {
      Bitset all = clique_bs | cand;
      for (const auto& ex : g_.exclusions)
        if (all.subset_of(ex)) return;
    }
    if (admissible(clique_bs)) {
      if (enumerate_) {
        if (clique.size() == target_) out_.push_back(clique);
      } else {
        std::size_t cur = best_.load();
        while (clique.size() > cur &&
               !best_.compare_exchange_weak(cur, clique.size())) {
        }
        if (clique.size() >= target_ && target_ > 0 && out_.empty() &&
            clique.size() >= best_.load())
          out_.push_back(clique);
      }
    }
    if (cand.empty()) return;

    // greedy coloring of the candidate set, colors ascending
    std::vector<std::size_t> order;
    std::vector<std::size_t> color;
    color_sort(cand, order, color);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      std::size_t v = order[idx];
      std::size_t limit = enumerate_ ? target_ - 1 : best_.load();
      if (clique.size() + color[idx] <= limit && !enumerate_) return;
      if (enumerate_ && clique.size() + color[idx] < target_) return;
      clique.push_back(v);
      Bitset bs2 = clique_bs;
      bs2.set(v);
      run(clique, bs2, cand & g_.adj[v]);
      clique.pop_back();
      if (!enumerate_ && target_ > 0 && !out_.empty()) return;  // first-found
      cand.reset(v);
    }
  }

 private:
  bool admissible(const Bitset& clique_bs) const {
    for (const auto& ex : g_.exclusions)
      if (clique_bs.subset_of(ex)) return false;
    return true;
  }

  void color_sort(const Bitset& cand, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& color) const {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < g_.verts.size(); ++i)
      if (cand.test(i)) verts.push_back(i);
    std::vector<Bitset> classes;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t v : verts) {
      std::size_t c = 0;
      while (c < classes.size() && !(classes[c] & g_.adj[v]).empty()) ++c;
      if (c == classes.size()) {
        classes.emplace_back(g_.verts.size());
        members.emplace_back();
      }
      classes[c].set(v);
      members[c].push_back(v);
    }
    for (std::size_t c = 0; c < members.size(); ++c)
      for (std::size_t v : members[c]) {
        order.push_back(v);
        color.push_back(c + 1);
      }
  }

  const Graph& g_;
  std::size_t target_;
  bool enumerate_;
  std::atomic<std::size_t>& best_;
  std::uint64_t& nodes_;
  std::vector<std::vector<std::size_t>>& out_;
};

/// Root vertex order: descending degree, index as tie-break.
std::vector<std::size_t> root_order(const Graph& g) {
  std::vector<std::size_t> deg(g.verts.size());
  for (std::size_t i = 0; i < g.verts.size(); ++i) deg[i] = g.adj[i].count();
  std::vector<std::size_t> order(g.verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  return order;
}

struct Branch {
  std::size_t v;
  Bitset cand;
};

std::vector<Branch> root_branches(const Graph& g) {
  auto order = root_order(g);
  const std::size_t V = g.verts.size();
  Bitset seen(V);
  std::vector<Branch> out;
  // branch i: cliques containing order[i] and none of order[0..i-1]
  for (std::size_t i = 0; i < V; ++i) {
    std::size_t v = order[i];
    Bitset cand = g.adj[v];
    for (std::size_t j = 0; j < cand.w.size(); ++j) cand.w[j] &= ~seen.w[j];
    out.push_back({v, std::move(cand)});
    seen.set(v);
  }
  return out;
}

/// Phase 1: maximum size. Parallel over root branches with a shared,
/// monotonically increasing incumbent.
std::size_t solve_max(const Graph& g, unsigned workers, std::uint64_t& nodes) {
  auto branches = root_branches(g);
  std::atomic<std::size_t> best{0};
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total_nodes{1};
  unsigned nw = std::max(1u, workers);
  auto work = [&]() {
    std::vector<std::vector<std::size_t>> sink;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= branches.size()) break;
      std::uint64_t local_nodes = 0;
      CliqueSolver solver(g, 0, false, best, local_nodes, sink);
      std::vector<std::size_t> clique{branches[i].v};
      Bitset bs(g.verts.size());
      bs.set(branches[i].v);
      solver.run(clique, bs, branches[i].cand);
      total_nodes += local_nodes;
    }
  };
  if (nw == 1) {
    work();
  } else {
    std::vector<std::future<void>> fs;
    for (unsigned t = 0; t < nw; ++t)
      fs.push_back(std::async(std::launch::async, work));
    for (auto& f : fs) f.get();
  }
  nodes += total_nodes.load();
  // the empty family: admissible only when it escapes every exclusion set,
  // which it never does if exclusions exist (the empty set is a subset of all)
  return best.load();
}

/// Phase 2: witnesses of the known maximum size, deterministic sequential
/// DFS (first-found for a single witness, full enumeration otherwise).
std::vector<std::vector<std::size_t>> solve_witnesses(const Graph& g,
                                                      std::size_t target,
                                                      bool enumerate,
                                                      std::uint64_t& nodes) {
  std::vector<std::vector<std::size_t>> out;
  if (target == 0) return out;
  std::atomic<std::size_t> best{enumerate ? std::size_t(0) : target - 1};
  auto branches = root_branches(g);
  for (const auto& br : branches) {
    std::uint64_t local_nodes = 0;
    CliqueSolver solver(g, target, enumerate, best, local_nodes, out);
    std::vector<std::size_t> clique{br.v};
    Bitset bs(g.verts.size());
    bs.set(br.v);
    solver.run(clique, bs, br.cand);
    nodes += local_nodes;
    if (!enumerate && !out.empty()) break;
  }
  return out;
}

Family to_family(const Graph& g, const std::vector<std::size_t>& clique) {
  std::vector<Subspace> members;
  members.reserve(clique.size());
  for (std::size_t v : clique) members.push_back(g.verts[v]);
  return Family(*g.field, g.n, std::move(members));
}

Certificate solve(const Field& f, unsigned n, const Constraints& cs,
                  const std::vector<Family>& exclusions, const Options& opt) {
  Graph g = build_graph(f, n, cs, exclusions, opt.vertex_budget);
  Certificate cert;
  cert.n = n;
  cert.q = f.q();
  cert.constraints = cs;
  cert.exclusion_count = exclusions.size();

  if (opt.naive) {
    // Exhaustive subset scan over the whole lattice, inadmissible vertices
    // included; cross-validation oracle for the branch-and-bound path.
    std::vector<Subspace> verts = lattice(f, n);
    const std::size_t V = verts.size();
    if (V > 20) throw BudgetExceeded("naive subset scan limited to 20 vertices");
    std::vector<std::uint64_t> nbr(V);
    std::vector<std::uint64_t> excl(exclusions.size(), 0);
    std::uint64_t adm = 0;
    for (std::size_t i = 0; i < V; ++i) {
      if (vertex_ok(cs, verts[i])) adm |= std::uint64_t(1) << i;
      nbr[i] = std::uint64_t(1) << i;
      for (std::size_t j = 0; j < V; ++j)
        if (j != i && edge_ok(cs, verts[i], verts[j]))
          nbr[i] |= std::uint64_t(1) << j;
    }
    for (std::size_t e = 0; e < exclusions.size(); ++e)
      for (std::size_t i = 0; i < V; ++i)
        if (exclusions[e].has(verts[i])) excl[e] |= std::uint64_t(1) << i;
    std::size_t best = 0;
    std::vector<std::uint64_t> best_masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << V); ++mask) {
      ++cert.nodes;
      std::size_t sz = std::size_t(__builtin_popcountll(mask));
      if (sz < best) continue;
      bool ok = (mask & ~adm) == 0;
      for (std::uint64_t m = mask; m && ok; m &= m - 1) {
        std::size_t v = std::size_t(__builtin_ctzll(m));
        ok = (mask & ~nbr[v]) == 0;
      }
      for (std::uint64_t e : excl) {
        if (!ok) break;
        if ((mask & ~e) == 0) ok = false;
      }
      if (!ok) continue;
      if (sz > best) {
        best = sz;
        best_masks.clear();
      }
      best_masks.push_back(mask);
    }
    cert.maximum = best;
    for (std::uint64_t mask : best_masks) {
      std::vector<Subspace> members;
      for (std::uint64_t m = mask; m; m &= m - 1)
        members.push_back(verts[std::size_t(__builtin_ctzll(m))]);
      cert.witnesses.push_back(Family(f, n, std::move(members)));
      if (!opt.enumerate_all) break;
    }
    std::sort(cert.witnesses.begin(), cert.witnesses.end());
    cert.complete = true;
    return cert;
  }

  cert.maximum = solve_max(g, opt.workers, cert.nodes);
  if (cert.maximum > 0) {
    auto cliques =
        solve_witnesses(g, cert.maximum, opt.enumerate_all, cert.nodes);
    for (const auto& c : cliques) cert.witnesses.push_back(to_family(g, c));
    std::sort(cert.witnesses.begin(), cert.witnesses.end());
  }
  cert.complete = true;
  return cert;
}

}  // namespace

Certificate max_family(const Field& f, unsigned n, const Constraints& cs,
                       const std::vector<Family>& exclusions,
                       const Options& opt) {
  return solve(f, n, cs, exclusions, opt);
}

Certificate max_s_union(const Field& f, unsigned n, unsigned s,
                        bool exclude_optimal, const Options& opt) {
  if (s < 2 || s >= n) throw BadParameters("need 2 <= s < n");
  Constraints cs;
  cs.s_union = s;
  std::vector<Family> exclusions;
  if (exclude_optimal) {
    if (s % 2 == 0) {
      exclusions.push_back(build_K(f, n, s));
    } else {
      for (const auto& e : all_subspaces(f, n, 1))
        exclusions.push_back(build_K(f, n, s, e));
    }
  }
  return solve(f, n, cs, exclusions, opt);
}

Certificate max_s_union_antichain(const Field& f, unsigned n, unsigned s,
                                  bool exclude_optimal, const Options& opt) {
  if (s < 2 || s > n) throw BadParameters("need 2 <= s <= n");
  Constraints cs;
  cs.s_union = s;
  cs.antichain = true;
  // the d = 1 case of the even suboptimal antichain theorem constrains only
  // same-dimension pairs; see Constraints::union_same_dim_only
  if (s == 2 && s < n) cs.union_same_dim_only = true;
  std::vector<Family> exclusions;
  if (exclude_optimal) {
    if (s == n) {
      exclusions.push_back(full_layer(f, n, n / 2));
      if (n % 2 == 1) exclusions.push_back(full_layer(f, n, (n + 1) / 2));
    } else if (s % 2 == 0) {
      exclusions.push_back(full_layer(f, n, s / 2));
    } else {
      // odd s < n: the optimal antichains are not a single orbit, so the
      // exclusion set is computed by a prior enumeration
      Options inner = opt;
      inner.enumerate_all = true;
      Certificate optimal = solve(f, n, cs, {}, inner);
      exclusions = optimal.witnesses;
    }
  }
  return solve(f, n, cs, exclusions, opt);
}

ConjectureReport conjecture_scan(const Field& f, unsigned n, unsigned d,
                                 const Options& opt) {
  if (d < 1 || 2 * d + 1 >= n)
    throw BadParameters("conjecture scan needs 1 <= d and 2d + 1 < n");
  unsigned s = 2 * d + 1;
  ConjectureReport rep;
  rep.n = n;
  rep.q = f.q();
  rep.d = d;

  Constraints cs;
  cs.s_union = s;
  cs.antichain = true;
  Options all = opt;
  all.enumerate_all = true;
  rep.optimal = solve(f, n, cs, {}, all);
  rep.suboptimal = solve(f, n, cs, rep.optimal.witnesses, all);

  rep.conjectured_value =
      gaussian_binomial(n, d, f.q()) - f.q() * gaussian_binomial(d, 1, f.q());
  rep.value_matches = BigNat(rep.suboptimal.maximum) == rep.conjectured_value;

  std::vector<Family> b_orbit;
  for (const auto& w : all_subspaces(f, n, d + 1))
    b_orbit.push_back(build_B(f, n, s, w));
  rep.witnesses_match_B = true;
  for (const auto& wit : rep.suboptimal.witnesses)
    if (std::find(b_orbit.begin(), b_orbit.end(), wit) == b_orbit.end()) {
      rep.witnesses_match_B = false;
      break;
    }
  return rep;
}

Family random_s_union_family(const Field& f, unsigned n, unsigned s,
                             std::mt19937_64& rng) {
  std::vector<Subspace> pool;
  for (unsigned k = 0; k <= std::min(s, n); ++k)
    for_each_subspace(f, n, k, [&](const Subspace& x) { pool.push_back(x); });
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Subspace> members;
  for (const auto& cand : pool) {
    if ((rng() & 1) == 0) continue;
    bool ok = true;
    for (const auto& m : members)
      if (span(cand, m).dim() > s) {
        ok = false;
        break;
      }
    if (ok) members.push_back(cand);
  }
  return Family(f, n, std::move(members));
}

}  // namespace qlat::search
