#include "nlg/generators.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nlg {

namespace {

constexpr double kOrthTol = 1e-12;

void set_uniform_pi(GameSpec& g, const std::vector<std::pair<int, int>>& pairs) {
  const Rational w(1, static_cast<std::int64_t>(pairs.size()));
  for (auto [s, t] : pairs) g.pi.push_back({s, t, ProbValue(w)});
}

}  // namespace

ValidatedGame chsh() {
  GameSpec g = GameSpec::blank(2, 2, 2, 2);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      pairs.push_back({s, t});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, (a ^ b) == (s & t));
    }
  set_uniform_pi(g, pairs);
  return validate(g);
}

ValidatedGame odd_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    fail(ErrorCode::EvenOrSmallN, "odd cycle needs odd n >= 3, got " + std::to_string(n));
  GameSpec g = GameSpec::blank(n, n, 2, 2);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n; ++s) {
    pairs.push_back({s, s});
    pairs.push_back({s, (s + 1) % n});
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int adjacent = ((s + 1) % n == t) ? 1 : 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, (a ^ b) == adjacent);
    }
  set_uniform_pi(g, pairs);
  return validate(g);
}

std::array<int, 3> magic_square_triple_cells(int s) {
  // s in 0..2: rows; s in 3..5: columns. Cells are t = 3*i + j.
  if (s < 3) return {3 * s, 3 * s + 1, 3 * s + 2};
  return {s - 3, s - 3 + 3, s - 3 + 6};
}

ValidatedGame magic_square() {
  GameSpec g = GameSpec::blank(6, 9, 8, 2);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < 6; ++s) {
    const auto cells = magic_square_triple_cells(s);
    const int want_parity = s < 3 ? 0 : 1;  // rows even, columns odd
    for (int k = 0; k < 3; ++k) pairs.push_back({s, cells[k]});
    for (int t = 0; t < 9; ++t) {
      int pos = -1;
      for (int k = 0; k < 3; ++k)
        if (cells[k] == t) pos = k;
      for (int a = 0; a < 8; ++a) {
        const int parity = ((a >> 0) ^ (a >> 1) ^ (a >> 2)) & 1;
        for (int b = 0; b < 2; ++b) {
          bool ok = pos >= 0 && parity == want_parity && ((a >> pos) & 1) == b;
          g.set_win(s, t, a, b, ok);
        }
      }
    }
    g.s_labels.push_back(s < 3 ? "row" + std::to_string(s) : "col" + std::to_string(s - 3));
  }
  for (int t = 0; t < 9; ++t)
    g.t_labels.push_back("cell" + std::to_string(t / 3) + std::to_string(t % 3));
  set_uniform_pi(g, pairs);
  return validate(g);
}

void KsVectorSet::check() const {
  const int n = static_cast<int>(vectors.size());
  if (n == 0) fail(ErrorCode::InvalidTriples, "empty vector set");
  for (int i = 0; i < n; ++i)
    if (std::abs(vectors[i].norm() - 1.0) > kOrthTol)
      fail(ErrorCode::InvalidTriples, "vector " + std::to_string(i) + " is not normalized");
  std::set<std::pair<int, int>> covered;
  for (const auto& tr : triples) {
    for (int k = 0; k < 3; ++k)
      if (tr[k] < 0 || tr[k] >= n)
        fail(ErrorCode::InvalidTriples, "triple index out of range");
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        if (tr[a] == tr[b]) fail(ErrorCode::InvalidTriples, "triple repeats a vector");
        if (std::abs(vectors[tr[a]].dot(vectors[tr[b]])) > kOrthTol)
          fail(ErrorCode::InvalidTriples,
               "triple (" + std::to_string(tr[0]) + ", " + std::to_string(tr[1]) + ", " +
                   std::to_string(tr[2]) + ") is not orthogonal");
        covered.insert({std::min(tr[a], tr[b]), std::max(tr[a], tr[b])});
      }
  }
  // The standing assumption: orthogonal pairs always sit inside a triple.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(vectors[i].dot(vectors[j])) <= kOrthTol && !covered.count({i, j}))
        fail(ErrorCode::InvalidTriples, "orthogonal pair (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") is not part of any triple");
}

ValidatedGame kochen_specker(const KsVectorSet& ks) {
  ks.check();
  const int n_triples = static_cast<int>(ks.triples.size());
  const int n_vectors = static_cast<int>(ks.vectors.size());
  if (n_triples == 0) fail(ErrorCode::InvalidTriples, "vector set declares no triples");

  // Alice gets a triple and answers which member is colored 1; Bob gets a
  // member vector and answers its color. Win iff the shared vector gets the
  // same color from both.
  GameSpec g = GameSpec::blank(n_triples, n_vectors, 3, 2);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n_triples; ++s) {
    const auto& tr = ks.triples[s];
    for (int k = 0; k < 3; ++k) pairs.push_back({s, tr[k]});
    for (int t = 0; t < n_vectors; ++t) {
      int pos = -1;
      for (int k = 0; k < 3; ++k)
        if (tr[k] == t) pos = k;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b) {
          const int alice_color = (a == pos) ? 1 : 0;
          g.set_win(s, t, a, b, pos >= 0 && alice_color == b);
        }
    }
  }
  set_uniform_pi(g, pairs);
  return validate(g);
}

ValidatedGame graph_coloring(const Graph& graph, int k) {
  if (graph.n_v == 0) fail(ErrorCode::EmptyGraph, "graph has no vertices");
  if (k < 1) fail(ErrorCode::InvalidArgument, "need at least one color");
  for (auto [u, v] : graph.edges)
    if (u < 0 || v < 0 || u >= graph.n_v || v >= graph.n_v || u == v)
      fail(ErrorCode::IndexOutOfRange, "bad edge in graph");

  const int n = graph.n_v;
  GameSpec g = GameSpec::blank(n, n, k, k);
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> edge_set;
  for (auto [u, v] : graph.edges) edge_set.insert({std::min(u, v), std::max(u, v)});
  for (int s = 0; s < n; ++s) pairs.push_back({s, s});
  for (auto e : edge_set) pairs.push_back(e);

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const bool same = (s == t);
      const bool adjacent =
          edge_set.count({std::min(s, t), std::max(s, t)}) > 0 && s != t;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          g.set_win(s, t, a, b, (same && a == b) || (adjacent && a != b));
    }
  set_uniform_pi(g, pairs);
  return validate(g);
}

Graph hamming_graph(int n) {
  if (n != 2 && n != 4 && n != 8) {
    if (n > 8) fail(ErrorCode::TooLarge, "hamming graph capped at n = 8, got " + std::to_string(n));
    fail(ErrorCode::InvalidArgument, "n must be one of {2, 4, 8}");
  }
  Graph g;
  g.n_v = 1 << n;
  for (int u = 0; u < g.n_v; ++u)
    for (int v = u + 1; v < g.n_v; ++v)
      if (__builtin_popcount(static_cast<unsigned>(u ^ v)) == n / 2) g.edges.push_back({u, v});
  return g;
}

bool clause_satisfied(const std::array<Literal, 3>& clause, const std::array<int, 3>& bits) {
  for (int k = 0; k < 3; ++k)
    if ((bits[k] != 0) != clause[k].negated) return true;
  return false;
}

ValidatedGame three_sat(const CnfFormula& f) {
  if (f.clauses.empty()) fail(ErrorCode::InvalidArgument, "formula has no clauses");
  if (f.n_vars < 1) fail(ErrorCode::InvalidArgument, "formula has no variables");
  for (const auto& c : f.clauses)
    for (const Literal& l : c)
      if (l.var < 0 || l.var >= f.n_vars)
        fail(ErrorCode::IndexOutOfRange, "literal variable out of range");

  const int m = static_cast<int>(f.clauses.size());
  GameSpec g = GameSpec::blank(m, f.n_vars, 8, 2);
  std::set<std::pair<int, int>> incident;
  for (int s = 0; s < m; ++s)
    for (const Literal& l : f.clauses[s]) incident.insert({s, l.var});

  for (int s = 0; s < m; ++s) {
    const auto& clause = f.clauses[s];
    for (int a = 0; a < 8; ++a) {
      const std::array<int, 3> bits = {(a >> 0) & 1, (a >> 1) & 1, (a >> 2) & 1};
      // Positions of a repeated variable must agree, otherwise the answer
      // does not induce an assignment and loses.
      bool consistent = true;
      for (int i = 0; i < 3 && consistent; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (clause[i].var == clause[j].var && bits[i] != bits[j]) {
            consistent = false;
            break;
          }
      const bool satisfied = consistent && clause_satisfied(clause, bits);
      for (int t = 0; t < f.n_vars; ++t) {
        if (!incident.count({s, t})) continue;
        int value = -1;
        for (int k = 0; k < 3; ++k)
          if (clause[k].var == t) value = bits[k];
        for (int b = 0; b < 2; ++b)
          g.set_win(s, t, a, b, satisfied && value == b);
      }
    }
  }
  set_uniform_pi(g, std::vector<std::pair<int, int>>(incident.begin(), incident.end()));
  return validate(g);
}

CnfFormula magic_square_formula() {
  CnfFormula f;
  f.n_vars = 9;  // x_ij at index 3*i + j
  // Four clauses encode each parity condition; rows want even parity
  // (odd number of negations per clause), columns odd (even number).
  const std::array<std::array<int, 3>, 4> even_masks = {{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const std::array<std::array<int, 3>, 4> odd_masks = {{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
  for (int s = 0; s < 6; ++s) {
    const auto cells = magic_square_triple_cells(s);
    const auto& masks = (s < 3) ? even_masks : odd_masks;
    for (const auto& mask : masks) {
      std::array<Literal, 3> clause;
      for (int k = 0; k < 3; ++k) clause[k] = {cells[k], mask[k] != 0};
      f.clauses.push_back(clause);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Kochen-Specker vector file
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

// Components are binary64 or exact "a/sqrt(b)" strings.
double parse_component(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) fail(ErrorCode::SchemaViolation, "vector component must be number or string");
  const std::string s = v.get<std::string>();
  const std::string marker = "/sqrt(";
  const auto pos = s.find(marker);
  if (pos == std::string::npos || s.back() != ')')
    fail(ErrorCode::ParseError, "bad component literal '" + s + "'");
  try {
    const double a = std::stod(s.substr(0, pos));
    const double b = std::stod(s.substr(pos + marker.size(), s.size() - pos - marker.size() - 1));
    if (b <= 0) fail(ErrorCode::ParseError, "bad radicand in '" + s + "'");
    return a / std::sqrt(b);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad component literal '" + s + "'");
  }
}

}  // namespace

KsVectorSet parse_ks_vectors(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("vectors") || !j.contains("triples"))
    fail(ErrorCode::SchemaViolation, "vector set needs 'vectors' and 'triples'");
  KsVectorSet ks;
  for (const json& v : j["vectors"]) {
    if (!v.is_array() || v.size() != 3)
      fail(ErrorCode::SchemaViolation, "vectors must be [x, y, z] arrays");
    ks.vectors.emplace_back(parse_component(v[0]), parse_component(v[1]), parse_component(v[2]));
  }
  for (const json& t : j["triples"]) {
    if (!t.is_array() || t.size() != 3)
      fail(ErrorCode::SchemaViolation, "triples must be [i, j, k] arrays");
    ks.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return ks;
}

KsVectorSet load_ks_vectors(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ks_vectors(buf.str());
}

const KsVectorSet& ks_asset() {
  static const KsVectorSet set = [] {
    KsVectorSet ks = parse_ks_vectors(ks_asset_json());
    ks.check();
    return ks;
  }();
  return set;
}

}  // namespace nlg
