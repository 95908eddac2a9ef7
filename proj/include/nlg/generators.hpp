#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"

namespace nlg {

struct Graph {
  int n_v = 0;
  std::vector<std::pair<int, int>> edges;  // stored with first < second
};

struct Literal {
  int var = 0;
  bool negated = false;
};

struct CnfFormula {
  int n_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

struct KsVectorSet {
  std::vector<Eigen::Vector3d> vectors;       // unit vectors in R^3
  std::vector<std::array<int, 3>> triples;    // indices of mutually orthogonal triples

  // Throws InvalidTriples unless: every vector is normalized, every declared
  // triple is pairwise orthogonal (tolerance 1e-12), and every orthogonal
  // pair among the vectors appears inside some declared triple.
  void check() const;
};

ValidatedGame chsh();
ValidatedGame odd_cycle(int n);
ValidatedGame magic_square();
ValidatedGame kochen_specker(const KsVectorSet& ks);
ValidatedGame graph_coloring(const Graph& g, int k);
Graph hamming_graph(int n);
ValidatedGame three_sat(const CnfFormula& f);
CnfFormula magic_square_formula();

// The row/column question of the magic square (and of the clause blocks of
// the 24-clause formula): cell indices of triple s in answer-bit order.
std::array<int, 3> magic_square_triple_cells(int s);

// Shipped Kochen-Specker vector set (embedded copy of data/ks_vectors.json).
const KsVectorSet& ks_asset();
const char* ks_asset_json();

KsVectorSet parse_ks_vectors(const std::string& json_text);
KsVectorSet load_ks_vectors(const std::string& path);

bool clause_satisfied(const std::array<Literal, 3>& clause, const std::array<int, 3>& bits);

}  // namespace nlg
