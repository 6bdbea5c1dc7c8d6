#pragma once

// Expressions in the comp operations with up to three free cochain variables.
// Evaluating on a basis input yields a polynomial in the matrix entries of the
// variables; since every expression is multilinear, two expressions agree on all
// basis tuples exactly when these polynomials agree.

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "entwine/compalg/compalg.hpp"

namespace entwine::compalg::detail {

constexpr int kMaxVars = 3;
// For each variable, the flat index of the basis cochain it contributes, or -1.
using Mono = std::array<std::int32_t, kMaxVars>;

struct Term {
  std::uint32_t out;
  Mono mono;
  Scalar coeff;
};
using SymVec = std::vector<Term>;

class Evaluator {
 public:
  explicit Evaluator(const CompContext& ctx);

  int leaf(const Cochain& c);
  int var(int v, std::size_t degree);
  // Returns -1 when the result would have degree -1 (both degrees 0).
  int comp(int a, std::size_t i, int b);
  int sum(const std::vector<std::pair<Scalar, int>>& terms);
  int difference(int a, int b);

  std::size_t degree(int node) const { return nodes_.at(node).degree; }
  std::size_t num_inputs(int node) const;
  const SymVec& eval(int node, std::size_t input);

  // Zero check over every input; the witness names the first offending monomial.
  CheckResult check_zero(int node, const std::string& name, const std::vector<std::string>& var_names);

 private:
  enum class Kind : std::uint8_t { Leaf, Var, Comp, Sum };
  struct Node {
    Node(Kind k, std::size_t d) : kind(k), degree(d) {}
    Kind kind;
    std::size_t degree = 0;
    int leaf = -1, var = -1, a = -1, b = -1;
    std::size_t i = 0;
    std::vector<std::pair<Scalar, int>> terms;
  };

  SymVec compute(int node, std::size_t input);
  SymVec comp_algebra(const Node& n, std::size_t input);
  SymVec comp_coalgebra(const Node& n, std::size_t input);
  const std::vector<exactla::SparseRow>& action_columns(std::size_t i);
  const std::vector<exactla::SparseRow>& coaction_columns(std::size_t i);

  const CompContext& ctx_;
  std::size_t da_, dc_;
  std::deque<std::vector<exactla::SparseRow>> leaf_cols_;
  std::vector<std::size_t> leaf_in_;
  std::vector<std::size_t> var_degree_;
  std::vector<Node> nodes_;
  std::vector<std::vector<SymVec>> memo_;
  std::vector<std::vector<char>> done_;
  // deques: nested evaluation may append while a caller still holds a column
  std::deque<std::vector<exactla::SparseRow>> act_cols_, coact_cols_;
};

void canonicalize(SymVec& v);

}  // namespace entwine::compalg::detail
