#include "doctest.h"
#include "xfkit/errors.hpp"
#include "xfkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

using namespace xfkit;

namespace {

// Independent oracle: explicit degree counting and a depth-first cycle search.
bool oracle_minimal_join(int n, const std::set<Node>& terminals, const std::vector<Edge>& edges) {
  std::vector<int> degree(n + 1, 0);
  std::vector<std::vector<Node>> adj(n + 1);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Node v = 1; v <= n; ++v)
    if ((degree[v] % 2 == 1) != (terminals.count(v) == 1)) return false;
  std::vector<int> seen(n + 1, 0);
  std::function<bool(Node, Node)> has_cycle = [&](Node v, Node from) {
    seen[v] = 1;
    for (Node w : adj[v]) {
      if (w == from) continue;
      if (seen[w] || has_cycle(w, v)) return true;
    }
    return false;
  };
  for (Node v = 1; v <= n; ++v)
    if (!seen[v] && has_cycle(v, 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("edge indexing is lexicographic and total") {
  const EdgeSpace s = EdgeSpace::all_terminals(5);
  CHECK(s.edge_count() == 10);
  std::size_t expect = 0;
  for (Node u = 1; u <= 5; ++u)
    for (Node v = u + 1; v <= 5; ++v) {
      CHECK(s.index(u, v) == expect);
      CHECK(s.index(v, u) == expect);
      CHECK(s.edge(expect) == Edge{u, v});
      ++expect;
    }
  CHECK_THROWS_AS(s.index(1, 1), MalformedInput);
  CHECK_THROWS_AS(s.index(0, 2), MalformedInput);
  CHECK(s.parse_edges("12,34") == std::vector<std::size_t>{0, 7});
  CHECK(s.parse_edges("1-2, 3-4") == std::vector<std::size_t>{0, 7});
}

TEST_CASE("T-cut counts") {
  CHECK(enumerate_tcuts(EdgeSpace::all_terminals(4)).size() == 4);
  CHECK(enumerate_tcuts(EdgeSpace::all_terminals(6)).size() == 16);
  CHECK(enumerate_tcuts(EdgeSpace(3, {1, 2})).size() == 2);
  CHECK(enumerate_tcuts(EdgeSpace(4, {1, 2})).size() == 4);
  CHECK(enumerate_tcuts(EdgeSpace(5, {1, 2, 3, 4})).size() == 8);
  CHECK(enumerate_tcuts(EdgeSpace(2, {1, 2})).size() == 1);
  CHECK_THROWS_AS(enumerate_tcuts(EdgeSpace(4, {1, 2, 3})), DomainError);
  const auto cuts = enumerate_tcuts(EdgeSpace::all_terminals(4));
  for (const auto& c : cuts) CHECK(c.edges.size() == 3);
}

TEST_CASE("minimal T-join counts match frozen brute-force values") {
  CHECK(enumerate_minimal_tjoins(EdgeSpace::all_terminals(4)).size() == 7);
  CHECK(enumerate_minimal_tjoins(EdgeSpace(4, {1, 2})).size() == 5);
  CHECK(enumerate_minimal_tjoins(EdgeSpace(5, {1, 2, 3, 4})).size() == 26);
  CHECK(enumerate_minimal_tjoins(EdgeSpace::all_terminals(6)).size() == 171);
  CHECK(enumerate_minimal_tjoins(EdgeSpace(3, {1, 2})).size() == 2);
  CHECK(enumerate_minimal_tjoins(EdgeSpace(6, {1, 2})).size() == 65);
  const auto two = enumerate_minimal_tjoins(EdgeSpace(2, {1, 2}));
  REQUIRE(two.size() == 1);
  CHECK(two[0].edges == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(enumerate_minimal_tjoins(EdgeSpace(5, {1, 2, 3})), DomainError);
  CHECK_THROWS_AS(enumerate_minimal_tjoins(EdgeSpace::all_terminals(8)), DomainError);
}

TEST_CASE("join enumeration agrees with the degree/DFS oracle exhaustively") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << n); ++tm) {
      std::vector<Node> t;
      std::set<Node> ts;
      for (int b = 0; b < n; ++b)
        if (tm & (std::uint64_t{1} << b)) {
          t.push_back(b + 1);
          ts.insert(b + 1);
        }
      if (t.size() % 2) continue;
      const EdgeSpace s(n, t);
      const auto joins = enumerate_minimal_tjoins(s);
      std::set<std::vector<std::size_t>> found;
      for (const auto& j : joins) found.insert(j.edges);
      std::size_t expected = 0;
      const std::size_t m = s.edge_count();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Edge> edges;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (std::uint64_t{1} << i)) {
            edges.push_back(s.edge(i));
            idx.push_back(i);
          }
        if (!oracle_minimal_join(n, ts, edges)) continue;
        ++expected;
        CHECK(found.count(idx) == 1);
      }
      CHECK(joins.size() == expected);
    }
  }
}

TEST_CASE("T-path joins for two terminals on K4") {
  const EdgeSpace s(4, {1, 2});
  std::set<std::vector<std::size_t>> got;
  for (const auto& j : enumerate_minimal_tjoins(s)) got.insert(j.edges);
  const std::set<std::vector<std::size_t>> expected{
      s.parse_edges("12"), s.parse_edges("13,23"), s.parse_edges("14,24"), s.parse_edges("13,34,24"),
      s.parse_edges("14,34,23")};
  CHECK(got == expected);
}

TEST_CASE("perfect matchings") {
  CHECK(enumerate_perfect_matchings(EdgeSpace::all_terminals(2)).size() == 1);
  CHECK(enumerate_perfect_matchings(EdgeSpace::all_terminals(4)).size() == 3);
  CHECK(enumerate_perfect_matchings(EdgeSpace::all_terminals(6)).size() == 15);
  CHECK(enumerate_perfect_matchings(EdgeSpace::all_terminals(8)).size() == 105);
  CHECK_THROWS_AS(enumerate_perfect_matchings(EdgeSpace::all_terminals(5)), DomainError);
}

TEST_CASE("join predicates") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  CHECK(is_minimal_tjoin(s, s.parse_edges("12,34")));
  CHECK_FALSE(is_tjoin(s, s.parse_edges("12,23,34,14")));
  CHECK(is_minimal_tjoin(s, s.parse_edges("13,23,34")));
  // a T-join that is not minimal: matching plus a triangle
  CHECK(is_tjoin(s, s.parse_edges("12,34,13,14")) == false);
  CHECK(is_tjoin(s, s.parse_edges("12,13,14,23,24,34")));
  CHECK_FALSE(is_minimal_tjoin(s, s.parse_edges("12,13,14,23,24,34")));
}

TEST_CASE("characteristic vectors") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  CHECK(is_zero(characteristic_vector(s, std::vector<std::size_t>{})));
  CHECK(characteristic_vector(s, s.parse_edges("12")) == unit_vector(6, 0));
  CHECK(characteristic_vector(s, s.cut({1})) == Vector{1, 1, 1, 0, 0, 0});
}

TEST_CASE("combinatorial properties on small graphs") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << n); ++tm) {
      std::vector<Node> t;
      for (int b = 0; b < n; ++b)
        if (tm & (std::uint64_t{1} << b)) t.push_back(b + 1);
      if (t.size() % 2 || t.empty()) continue;
      const EdgeSpace s(n, t);
      const auto joins = enumerate_minimal_tjoins(s);
      const auto cuts = enumerate_tcuts(s);
      const EdgeSpace empty_t(n, {});
      for (const auto& a : joins)
        for (const auto& b : joins) {
          std::vector<std::size_t> sym;
          std::set_symmetric_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                        std::back_inserter(sym));
          CHECK(is_tjoin(empty_t, sym));
        }
      for (const auto& c : cuts)
        for (const auto& j : joins) {
          std::vector<std::size_t> meet;
          std::set_intersection(c.edges.begin(), c.edges.end(), j.edges.begin(), j.edges.end(),
                                std::back_inserter(meet));
          CHECK(!meet.empty());
        }
      for (const auto& c : cuts) {
        std::vector<Node> complement;
        for (Node v = 1; v <= n; ++v)
          if (std::find(c.shore.begin(), c.shore.end(), v) == c.shore.end()) complement.push_back(v);
        CHECK(s.cut(complement) == c.edges);
        CHECK(c.shore.front() == 1);
      }
    }
  }
}
