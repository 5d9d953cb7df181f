#pragma once

/// @file trees.hpp
/// @brief (n,g)-decorated trees: enumeration, weights N(Gamma) and sums S_{g,n}.
///
/// A decorated tree is a rooted unordered tree with n labeled leaves
/// (labels nm = 1..n), g unary vertices and n-1 binary vertices. Internal
/// vertices carry distinct step labels cp in {1..2g+n-1} that strictly
/// increase away from the root; a unary vertex with label a needs a > 1 and
/// a-1 unused, and every leaf hangs off a binary vertex.
///
/// Trees are generated as recursion histories: starting from n single-leaf
/// roots and step t = 2g+n-1, each move either joins two roots under a
/// binary vertex labeled t (t -= 1) or caps a root with >= 2 leaves by a
/// unary vertex labeled t (t -= 2, genus budget -= 1). Every decorated tree
/// arises from exactly one history.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

enum class VertexKind : std::uint8_t { leaf, unary, binary };

struct Vertex {
  VertexKind kind = VertexKind::leaf;
  int label = 0;  // nm for leaves, cp for internal vertices
  int first = -1;
  int second = -1;
};

/// Vertices are stored children first: every child index is smaller than
/// its parent's index.
class DecoratedTree {
 public:
  /// Throws std::invalid_argument unless children precede parents.
  static DecoratedTree from_vertices(std::vector<Vertex> vertices, int root);
  static DecoratedTree leaf(int nm);
  static DecoratedTree unary(int cp, const DecoratedTree& child);
  static DecoratedTree binary(int cp, const DecoratedTree& a, const DecoratedTree& b);

  std::span<const Vertex> vertices() const { return vertices_; }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  int root() const { return root_; }

  int leaf_count() const;
  int unary_count() const;
  int binary_count() const;
  int genus() const { return unary_count(); }
  /// ml(v): number of leaves below v (1 for a leaf).
  int descendant_leaves(int v) const;

 private:
  friend class HistoryWalker;
  friend void parse_encoding(std::string_view text, DecoratedTree& into);
  int append(const DecoratedTree& other);

  std::vector<Vertex> vertices_;
  int root_ = -1;
};

/// One move of a history. Children are named by their smallest leaf label.
struct HistoryStep {
  int step = 0;
  VertexKind kind = VertexKind::binary;
  int first = 0;
  int second = -1;  // -1 for unary moves

  friend bool operator==(const HistoryStep&, const HistoryStep&) = default;
};

/// Receives each finished tree with its history and canonical encoding.
/// The references are only valid during the call. Return false to stop.
using HistoryVisitor =
    std::function<bool(const DecoratedTree&, std::span<const HistoryStep>, std::string_view)>;

/// Depth-first walk over all histories of (n,g)-decorated trees. Returns
/// false if the visitor stopped the walk.
bool for_each_history(int genus, int n, const HistoryVisitor& visit);

/// All (n,g)-decorated trees, in walk order.
std::vector<DecoratedTree> enumerate_trees(int genus, int n);

/// Number of histories (equivalently trees) without materializing them.
std::uint64_t count_trees(int genus, int n);

/// N(Gamma) = n^{-(n+g-1)} prod_binary ml/cp prod_unary (ml^3-ml)/(12 cp).
/// Throws std::invalid_argument for an invalid tree.
Rational tree_weight(const DecoratedTree& tree);

/// S_{g,n}: sum of N(Gamma) over all (n,g)-decorated trees.
Rational tree_sum(int genus, int n);

/// "L<nm>", "U<cp>(child)", "B<cp>(x,y)" with x <= y as strings.
std::string canonical_encoding(const DecoratedTree& tree);
/// Inverse of canonical_encoding; throws std::invalid_argument on bad text.
DecoratedTree parse_encoding(std::string_view text);
/// Same, reusing the storage of `into`; `into` is unspecified after a throw.
void parse_encoding(std::string_view text, DecoratedTree& into);

/// The unique history producing `tree`, ordered by descending step.
std::vector<HistoryStep> history_of(const DecoratedTree& tree);
void history_of(const DecoratedTree& tree, std::vector<HistoryStep>& out);

struct TreeValidation {
  bool ok = true;
  std::string violated_rule;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Checks every decorated-tree condition; reports the first violation.
TreeValidation validate_tree(const DecoratedTree& tree);

}  // namespace hodge
