#include "quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "errors.hpp"

namespace toss {

int StarQuiver::index_of(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return (int)i;
  throw toss_error("no vertex named " + name);
}

bool StarQuiver::is_acyclic() const {
  std::vector<int> indeg(vertices.size(), 0);
  for (auto& [u, v] : arrows) indeg[v]++;
  std::vector<int> stack;
  for (size_t i = 0; i < vertices.size(); ++i)
    if (indeg[i] == 0) stack.push_back((int)i);
  size_t seen = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++seen;
    for (auto& [a, b] : arrows)
      if (a == u && --indeg[b] == 0) stack.push_back(b);
  }
  return seen == vertices.size();
}

StarQuiver canonical_quiver(const WeightData& w) {
  StarQuiver q;
  q.vertices.push_back("P0");
  std::vector<std::vector<int>> chain_mid(w.branches());
  for (int i = 0; i < w.branches(); ++i)
    for (int j = 1; j < w.weights[i]; ++j) {
      chain_mid[i].push_back((int)q.vertices.size());
      q.vertices.push_back("P" + std::to_string(i + 1) + "^" + std::to_string(j));
    }
  int vinf = (int)q.vertices.size();
  q.vertices.push_back("Pinf");
  q.source = 0;
  q.sink = vinf;
  for (int i = 0; i < w.branches(); ++i) {
    int prev = 0;
    for (int m : chain_mid[i]) {
      q.arrows.emplace_back(prev, m);
      prev = m;
    }
    q.arrows.emplace_back(prev, vinf);
  }
  return q;
}

StarQuiver section_quiver(const WeightData& w) {
  if (w.type == EuclideanType::A) return canonical_quiver(w);

  StarQuiver q;
  auto add = [&](const std::string& n) {
    q.vertices.push_back(n);
    return (int)q.vertices.size() - 1;
  };
  auto arrow = [&](int u, int v) { q.arrows.emplace_back(u, v); };

  if (w.type == EuclideanType::D) {
    const int n = w.affine_n;
    int p0 = add("P0");
    int x0 = add("X0");
    std::vector<int> xs;
    for (int i = 1; i <= n - 3; ++i) xs.push_back(add("X" + std::to_string(i)));
    int p11 = add("P1^1");
    int p21 = add("P2^1");
    arrow(p0, xs[0]);
    arrow(x0, xs[0]);
    for (size_t i = 0; i + 1 < xs.size(); ++i) arrow(xs[i], xs[i + 1]);
    arrow(xs.back(), p11);
    arrow(xs.back(), p21);
    return q;
  }

  // type E: X_0 is the triple source; the arms follow the affine diagram
  const int n = w.affine_n;
  for (int i = 0; i < w.rank; ++i) add("X" + std::to_string(i));
  arrow(0, 1);
  arrow(0, 2);
  arrow(0, 3);
  if (n == 6) {
    arrow(1, 4);  // X1 -> X4
    arrow(2, 5);  // X2 -> X5 (= P2^1)
    arrow(3, 6);  // X3 -> X6 (= P3^1)
  } else if (n == 7) {
    arrow(2, 4);  // X2 -> X4 -> X6 (= tau^{-1} P3^1)
    arrow(4, 6);
    arrow(3, 5);  // X3 -> X5 -> X7 (= P2^1)
    arrow(5, 7);
  } else {
    arrow(2, 4);  // X2 -> X4
    arrow(3, 5);  // X3 -> X5 -> X6 -> X7 -> X8 (= tau P2^1)
    arrow(5, 6);
    arrow(6, 7);
    arrow(7, 8);
  }
  return q;
}

namespace {

std::vector<std::multiset<int>> degree_profile(const StarQuiver& q,
                                               const std::vector<std::vector<int>>& adj) {
  std::vector<std::multiset<int>> prof(q.vertices.size());
  for (size_t u = 0; u < q.vertices.size(); ++u)
    for (int v : adj[u]) prof[u].insert((int)adj[v].size());
  return prof;
}

std::vector<std::vector<int>> undirected_adj(const StarQuiver& q) {
  std::vector<std::vector<int>> adj(q.vertices.size());
  for (auto& [u, v] : q.arrows) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool extend(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
            std::vector<int>& map_ab, std::vector<char>& used, size_t u) {
  if (u == a.size()) return true;
  for (size_t v = 0; v < b.size(); ++v) {
    if (used[v] || a[u].size() != b[v].size()) continue;
    // adjacency with already-mapped vertices must match as multisets
    std::multiset<int> need, have;
    for (int x : a[u])
      if (map_ab[x] >= 0) need.insert(map_ab[x]);
    for (int y : b[v])
      if (std::find(map_ab.begin(), map_ab.begin() + u, (int)y) != map_ab.begin() + u)
        have.insert((int)y);
    if (need != have) continue;
    map_ab[u] = (int)v;
    used[v] = 1;
    if (extend(a, b, map_ab, used, u + 1)) return true;
    map_ab[u] = -1;
    used[v] = 0;
  }
  return false;
}

}  // namespace

bool underlying_graph_isomorphic(const StarQuiver& qa, const StarQuiver& qb) {
  if (qa.vertices.size() != qb.vertices.size() || qa.arrows.size() != qb.arrows.size())
    return false;
  auto a = undirected_adj(qa), b = undirected_adj(qb);
  auto pa = degree_profile(qa, a), pb = degree_profile(qb, b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map_ab(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  return extend(a, b, map_ab, used, 0);
}

}  // namespace toss
