#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/errors.hpp"
#include "homalg/rational.hpp"

namespace homalg {

/// Product label of a diweighted vertex: left is ⊣, right is ⊢.
enum class Side : std::uint8_t { left = 0, right = 1 };

/// Vertex data carried by internal vertices of the three tree kinds.
struct NoLabel {
  friend bool operator==(NoLabel, NoLabel) = default;
};

struct Weight {
  unsigned value = 0;
  friend bool operator==(Weight, Weight) = default;
};

struct DiWeight {
  unsigned value = 0;
  Side side = Side::left;
  friend bool operator==(DiWeight, DiWeight) = default;
};

/// Planar binary tree with data on each internal vertex. A default
/// constructed tree is the 1-tree (a single leaf). Values are immutable and
/// share subtrees.
///
/// The canonical order compares arity first, then shape (left subtree arity,
/// then left subtree, then right subtree), then the vertex weights read in
/// pre-order, then (diweighted only) the side labels read in pre-order.
template <class Label>
class PlanarTree {
 public:
  PlanarTree() = default;

  static PlanarTree leaf() { return PlanarTree(); }
  static PlanarTree node(PlanarTree left, PlanarTree right, Label label = {});

  bool is_leaf() const noexcept { return node_ == nullptr; }
  std::size_t arity() const noexcept { return node_ ? node_->arity : 1; }
  std::size_t internal_vertices() const noexcept { return arity() - 1; }
  /// Sum of all vertex weights; always 0 for plain trees.
  std::uint64_t total_weight() const noexcept { return node_ ? node_->total_weight : 0; }

  /// Children and data of the lowest internal vertex. Throw NoLowestVertex
  /// on the 1-tree.
  const PlanarTree& left() const;
  const PlanarTree& right() const;
  const Label& label() const;

  /// Vertex data in pre-order (lowest vertex first).
  std::vector<Label> preorder_labels() const;

  /// Structural hash, consistent with ==.
  std::size_t hash() const noexcept;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Node;
  explicit PlanarTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static int compare(const PlanarTree& a, const PlanarTree& b);
  static int compare_shape(const PlanarTree& a, const PlanarTree& b);

  std::shared_ptr<const Node> node_;
};

template <class Label>
struct PlanarTree<Label>::Node {
  PlanarTree left;
  PlanarTree right;
  Label label;
  std::size_t arity;
  std::uint64_t total_weight;
};

using Tree = PlanarTree<NoLabel>;
using WeightedTree = PlanarTree<Weight>;
using DiweightedTree = PlanarTree<DiWeight>;

extern template class PlanarTree<NoLabel>;
extern template class PlanarTree<Weight>;
extern template class PlanarTree<DiWeight>;

// -- grafting, shift, decomposition ------------------------------------------

Tree graft(const Tree& left, const Tree& right);

/// New lowest vertex gets weight 0; inner weights are preserved.
WeightedTree graft_weighted(const WeightedTree& left, const WeightedTree& right);

/// τ[m]: adds m to the weight of the lowest internal vertex.
WeightedTree shift_weight(const WeightedTree& tree, unsigned m);

struct WeightedDecomposition {
  WeightedTree left;
  WeightedTree right;
  unsigned weight;
};

/// Unique (τ1, τ2, r) with τ = (τ1 ∨ τ2)[r].
WeightedDecomposition decompose_weighted(const WeightedTree& tree);

DiweightedTree graft_di(const DiweightedTree& left, const DiweightedTree& right, Side side);
DiweightedTree shift_di(const DiweightedTree& tree, unsigned m);

struct DiDecomposition {
  DiweightedTree left;
  DiweightedTree right;
  Side side;
  unsigned weight;
};

DiDecomposition decompose_di(const DiweightedTree& tree);

/// Forgets vertex data.
Tree underlying_tree(const WeightedTree& tree);
Tree underlying_tree(const DiweightedTree& tree);

// -- enumeration ---------------------------------------------------------------

/// C_n = (2n)! / (n! (n+1)!).
Integer catalan(unsigned n);

/// All n-trees in canonical order. Throws InvalidArgument for n = 0.
std::vector<Tree> enumerate_trees(std::size_t n);

/// All weighted n-trees of total weight ≤ max_weight, in canonical order.
std::vector<WeightedTree> enumerate_weighted(std::size_t n, unsigned max_weight);

/// All diweighted n-trees of total weight ≤ max_weight, in canonical order.
std::vector<DiweightedTree> enumerate_diweighted(std::size_t n, unsigned max_weight);

/// Rebuilds a weighted tree from a shape and its pre-order weights.
WeightedTree with_weights(const Tree& shape, const std::vector<unsigned>& preorder);
DiweightedTree with_diweights(const Tree& shape, const std::vector<DiWeight>& preorder);

// -- text notation ---------------------------------------------------------------
//
//   tree   := "i" | "(" tree op tree ")" suffix*
//   op     := "v" | "vl" | "vr"
//   suffix := "[" nonneg-int "]"
//
// Whitespace is ignored. "{" "}" are accepted as parentheses and "∨" as "v".
// Repeated suffixes add up. A parenthesized tree without an operator is a
// plain grouping. Formatting always emits the canonical form.

std::string format(const Tree& tree);
std::string format(const WeightedTree& tree);
std::string format(const DiweightedTree& tree);

Tree parse_tree(std::string_view text);
WeightedTree parse_weighted_tree(std::string_view text);
DiweightedTree parse_diweighted_tree(std::string_view text);

}  // namespace homalg
