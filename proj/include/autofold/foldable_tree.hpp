#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autofold/lexer.hpp"

namespace autofold {

enum class NodeKind : uint8_t { Root, Block, Comment, Imports, LineComments };

std::string_view node_kind_name(NodeKind kind);

// A foldable region of one file. Ids are dense breadth-first from the root;
// child spans are strictly inside the parent span (strictly later first line)
// and sibling spans are pairwise disjoint.
struct FoldableNode {
  int id = 0;
  NodeKind kind = NodeKind::Root;
  int start_line = 1;
  int end_line = 0;
  std::optional<int> parent_id;
  std::vector<int> child_ids;     // ordered by start line
  std::string header_text;        // first non-empty line of the span, right-trimmed
  std::string close_delimiter;    // appended after the ellipsis when folded
};

struct FoldableTree {
  std::string file_id;
  std::vector<FoldableNode> nodes;  // indexed by id, nodes[0] is the root
  int total_lines = 0;              // L_0

  const FoldableNode& root() const { return nodes.front(); }
  // L_i: lines covered by the node's span.
  int line_count(int id) const {
    const FoldableNode& nd = nodes[static_cast<std::size_t>(id)];
    return nd.end_line - nd.start_line + 1;
  }
};

struct TreeOptions {
  bool fold_line_comments = false;
};

// Builds the region tree from a lexed token stream. Unbalanced open braces
// close at end of file; regions that cannot satisfy the span invariants are
// simply not foldable.
FoldableTree build_foldable_tree(const std::vector<LexToken>& tokens, int total_lines,
                                 std::string_view text, const TreeOptions& opts = {});

// Lines unique to the node: (L_i - 1) - sum over children of (L_j - 1).
int node_cost(const FoldableTree& tree, int id);

// True when `unfold` selects a rooted contiguous subtree (root on, no child
// on with its parent off).
bool is_rooted_contiguous(const FoldableTree& tree, const std::vector<uint8_t>& unfold);

// Replaces each folded node whose parent is unfolded with its one-line fold
// marker; all other lines are emitted verbatim. `unfold` must be a rooted
// contiguous subtree indicator, otherwise std::invalid_argument is thrown.
std::string render_folded(const FoldableTree& tree, const std::vector<uint8_t>& unfold,
                          std::string_view text);

}  // namespace autofold
