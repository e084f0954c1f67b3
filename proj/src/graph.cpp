#include "xfkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "xfkit/errors.hpp"

namespace xfkit {

namespace {

constexpr int kMaxNodes = 62;

std::uint64_t node_bit(Node v) { return std::uint64_t{1} << v; }

void require_even_terminals(const EdgeSpace& space) {
  if (space.terminals().size() % 2 != 0)
    throw DomainError("|T| = " + std::to_string(space.terminals().size()) + " is odd; T-joins require |T| even");
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  int v = 0;
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw MalformedInput("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

EdgeSpace::EdgeSpace(int n, std::vector<Node> terminals) : n_(n), terminals_(std::move(terminals)) {
  if (n < 1 || n > kMaxNodes) throw MalformedInput("node count must be in [1, 62], got " + std::to_string(n));
  std::sort(terminals_.begin(), terminals_.end());
  if (std::adjacent_find(terminals_.begin(), terminals_.end()) != terminals_.end())
    throw MalformedInput("terminal set has repeated nodes");
  for (Node t : terminals_) {
    check_node(t);
    terminal_mask_ |= node_bit(t);
  }
  for (Node u = 1; u <= n; ++u)
    for (Node v = u + 1; v <= n; ++v) edges_.emplace_back(u, v);
}

EdgeSpace EdgeSpace::all_terminals(int n) {
  std::vector<Node> t(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(t.begin(), t.end(), 1);
  return EdgeSpace(n, std::move(t));
}

void EdgeSpace::check_node(Node v) const {
  if (v < 1 || v > n_) throw MalformedInput("node " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

bool EdgeSpace::is_terminal(Node v) const { return (terminal_mask_ & node_bit(v)) != 0; }

std::size_t EdgeSpace::index(Node u, Node v) const {
  check_node(u);
  check_node(v);
  if (u == v) throw MalformedInput("loop edge {" + std::to_string(u) + "," + std::to_string(u) + "}");
  if (u > v) std::swap(u, v);
  const auto a = static_cast<std::size_t>(u - 1);
  const auto nn = static_cast<std::size_t>(n_);
  return a * nn - a * (a + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

std::string EdgeSpace::edge_label(std::size_t i) const {
  const Edge e = edge(i);
  if (n_ < 10) return std::to_string(e.first) + std::to_string(e.second);
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

std::vector<std::string> EdgeSpace::edge_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < edge_count(); ++i) out.push_back("x" + edge_label(i));
  return out;
}

std::vector<std::size_t> EdgeSpace::cut(const std::vector<Node>& shore) const {
  std::uint64_t mask = 0;
  for (Node v : shore) {
    check_node(v);
    mask |= node_bit(v);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const bool a = (mask & node_bit(edges_[i].first)) != 0, b = (mask & node_bit(edges_[i].second)) != 0;
    if (a != b) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> EdgeSpace::induced(const std::vector<Node>& nodes) const {
  std::uint64_t mask = 0;
  for (Node v : nodes) {
    check_node(v);
    mask |= node_bit(v);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if ((mask & node_bit(edges_[i].first)) && (mask & node_bit(edges_[i].second))) out.push_back(i);
  return out;
}

std::vector<std::size_t> EdgeSpace::parse_edges(std::string_view text) const {
  std::vector<std::size_t> out;
  text = trim(text);
  if (text.empty()) return out;
  for (std::string_view part : split(text, ',')) {
    part = trim(part);
    Node u, v;
    if (const auto dash = part.find('-'); dash != std::string_view::npos) {
      u = parse_int(part.substr(0, dash));
      v = parse_int(part.substr(dash + 1));
    } else if (part.size() == 2) {
      u = part[0] - '0';
      v = part[1] - '0';
      if (u < 0 || u > 9 || v < 0 || v > 9) throw MalformedInput("bad edge '" + std::string(part) + "'");
    } else {
      throw MalformedInput("bad edge '" + std::string(part) + "' (use 12 or 1-2)");
    }
    out.push_back(index(u, v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw MalformedInput("repeated edge in list");
  return out;
}

std::vector<EdgeSubset> enumerate_tcuts(const EdgeSpace& space) {
  require_even_terminals(space);
  if (space.n() < 2) throw DomainError("T-cuts need n >= 2");
  if (space.n() > 24) throw DomainError("cut enumeration refused above n = 24");
  std::vector<EdgeSubset> out;
  const int rest = space.n() - 1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rest); ++m) {
    std::vector<Node> shore{1};
    for (int b = 0; b < rest; ++b)
      if (m & (std::uint64_t{1} << b)) shore.push_back(b + 2);
    std::size_t odd = 0;
    for (Node v : shore) odd += space.is_terminal(v) ? 1 : 0;
    if (odd % 2 == 0) continue;
    EdgeSubset s;
    s.kind = SubsetKind::tcut;
    s.edges = space.cut(shore);
    s.shore = std::move(shore);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<EdgeSubset> enumerate_minimal_tjoins(const EdgeSpace& space) {
  require_even_terminals(space);
  if (space.n() > kEnumerationCap)
    throw DomainError("brute-force T-join enumeration is capped at n <= " + std::to_string(kEnumerationCap));
  const std::size_t m = space.edge_count();
  std::vector<std::uint64_t> parity(m);
  for (std::size_t i = 0; i < m; ++i) parity[i] = node_bit(space.edge(i).first) ^ node_bit(space.edge(i).second);
  std::vector<EdgeSubset> out;
  std::vector<std::size_t> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) p ^= parity[i];
    if (p != space.terminal_mask()) continue;
    edges.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) edges.push_back(i);
    if (!is_acyclic(space, edges)) continue;
    out.push_back({SubsetKind::tjoin, edges, {}});
  }
  std::sort(out.begin(), out.end(), [](const EdgeSubset& a, const EdgeSubset& b) { return a.edges < b.edges; });
  return out;
}

std::vector<EdgeSubset> enumerate_perfect_matchings(const EdgeSpace& space) {
  if (space.n() % 2 != 0) throw DomainError("perfect matchings need n even, got n = " + std::to_string(space.n()));
  if (space.n() > 14) throw DomainError("perfect matching enumeration refused above n = 14");
  std::vector<EdgeSubset> out;
  std::vector<bool> used(static_cast<std::size_t>(space.n()) + 1, false);
  std::vector<std::size_t> current;
  std::function<void()> rec = [&]() {
    Node u = 1;
    while (u <= space.n() && used[u]) ++u;
    if (u > space.n()) {
      std::vector<std::size_t> e = current;
      std::sort(e.begin(), e.end());
      out.push_back({SubsetKind::matching, std::move(e), {}});
      return;
    }
    used[u] = true;
    for (Node v = u + 1; v <= space.n(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.push_back(space.index(u, v));
      rec();
      current.pop_back();
      used[v] = false;
    }
    used[u] = false;
  };
  rec();
  std::sort(out.begin(), out.end(), [](const EdgeSubset& a, const EdgeSubset& b) { return a.edges < b.edges; });
  return out;
}

bool is_tjoin(const EdgeSpace& space, const std::vector<std::size_t>& edges) {
  std::uint64_t p = 0;
  for (std::size_t i : edges) {
    if (i >= space.edge_count()) throw MalformedInput("edge index out of range");
    p ^= node_bit(space.edge(i).first) ^ node_bit(space.edge(i).second);
  }
  return p == space.terminal_mask();
}

bool is_acyclic(const EdgeSpace& space, const std::vector<std::size_t>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(space.n()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i : edges) {
    const Edge e = space.edge(i);
    const int a = find_root(parent, e.first), b = find_root(parent, e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_minimal_tjoin(const EdgeSpace& space, const std::vector<std::size_t>& edges) {
  return is_tjoin(space, edges) && is_acyclic(space, edges);
}

Vector characteristic_vector(const EdgeSpace& space, const std::vector<std::size_t>& edges) {
  Vector x(space.edge_count());
  for (std::size_t i : edges) x.at(i) = 1;
  return x;
}

std::string format_edges(const EdgeSpace& space, const std::vector<std::size_t>& edges) {
  std::string s;
  for (std::size_t i : edges) {
    if (!s.empty()) s += ",";
    s += space.edge_label(i);
  }
  return "{" + s + "}";
}

std::string format_nodes(const std::vector<Node>& nodes) {
  std::string s;
  for (Node v : nodes) {
    if (!s.empty()) s += ",";
    s += std::to_string(v);
  }
  return "{" + s + "}";
}

std::vector<Node> parse_nodes(std::string_view text, int n) {
  text = trim(text);
  std::vector<Node> out;
  if (text == "all") {
    for (Node v = 1; v <= n; ++v) out.push_back(v);
    return out;
  }
  if (text.empty()) return out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_int(part));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xfkit
