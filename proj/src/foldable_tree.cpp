#include "autofold/foldable_tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace autofold {

namespace {

struct Candidate {
  NodeKind kind;
  int start = 0;
  int end = 0;
};

struct TmpNode {
  NodeKind kind;
  int start = 0;
  int end = 0;
  int parent = -1;
  std::vector<int> children;  // indices into the temp pool, ordered by start
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string_view rtrim(std::string_view s) {
  std::size_t end = s.size();
  while (end > 0) {
    const char c = s[end - 1];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      --end;
    } else {
      break;
    }
  }
  return s.substr(0, end);
}

bool is_blank(std::string_view s) { return rtrim(s).empty(); }

std::vector<Candidate> collect_candidates(const std::vector<LexToken>& tokens, int total_lines,
                                          const TreeOptions& opts) {
  std::vector<Candidate> cands;

  // Brace blocks. Stray close braces are ignored; unclosed opens end at the
  // last line of the file.
  std::vector<int> open_lines;
  for (const LexToken& tok : tokens) {
    if (tok.kind == LexKind::OpenBrace) {
      open_lines.push_back(tok.start_line);
    } else if (tok.kind == LexKind::CloseBrace) {
      if (open_lines.empty()) continue;
      const int start = open_lines.back();
      open_lines.pop_back();
      if (tok.end_line - start + 1 >= 2) cands.push_back({NodeKind::Block, start, tok.end_line});
    }
  }
  for (int start : open_lines) {
    if (total_lines - start + 1 >= 2) cands.push_back({NodeKind::Block, start, total_lines});
  }

  for (const LexToken& tok : tokens) {
    if (tok.kind == LexKind::BlockComment && tok.end_line - tok.start_line + 1 >= 2) {
      cands.push_back({NodeKind::Comment, tok.start_line, tok.end_line});
    }
  }

  // Maximal runs of consecutive import statements; any other token breaks a run.
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].kind != LexKind::ImportStatement) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && tokens[j + 1].kind == LexKind::ImportStatement) ++j;
    const int start = tokens[i].start_line;
    const int end = tokens[j].end_line;
    if (end - start + 1 >= 2) cands.push_back({NodeKind::Imports, start, end});
    i = j + 1;
  }

  if (opts.fold_line_comments) {
    // Whole-line comments: nothing else appears before them on their line.
    std::vector<int> comment_lines;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (tokens[t].kind != LexKind::LineComment) continue;
      if (t > 0 && tokens[t - 1].end_line == tokens[t].start_line) continue;
      comment_lines.push_back(tokens[t].start_line);
    }
    std::size_t k = 0;
    while (k < comment_lines.size()) {
      std::size_t j = k;
      while (j + 1 < comment_lines.size() && comment_lines[j + 1] == comment_lines[j] + 1) ++j;
      const int start = comment_lines[k];
      const int end = comment_lines[j];
      if (end - start + 1 >= 2) cands.push_back({NodeKind::LineComments, start, end});
      k = j + 1;
    }
  }

  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end > b.end;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return cands;
}

std::string close_delimiter_for(NodeKind kind) {
  switch (kind) {
    case NodeKind::Block:
      return "}";
    case NodeKind::Comment:
      return " */";
    default:
      return "";
  }
}

}  // namespace

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Root:
      return "ROOT";
    case NodeKind::Block:
      return "BLOCK";
    case NodeKind::Comment:
      return "COMMENT";
    case NodeKind::Imports:
      return "IMPORTS";
    case NodeKind::LineComments:
      return "LINE_COMMENTS";
  }
  return "?";
}

FoldableTree build_foldable_tree(const std::vector<LexToken>& tokens, int total_lines,
                                 std::string_view text, const TreeOptions& opts) {
  std::vector<TmpNode> pool;
  pool.push_back({NodeKind::Root, 1, std::max(total_lines, 0), -1, {}});

  auto find_parent = [&pool](int s, int e) {
    int cur = 0;
    for (;;) {
      int next = -1;
      for (int child : pool[static_cast<std::size_t>(cur)].children) {
        const TmpNode& cn = pool[static_cast<std::size_t>(child)];
        if (cn.start <= s && e <= cn.end) {
          next = child;
          break;
        }
      }
      if (next < 0) return cur;
      cur = next;
    }
  };

  for (const Candidate& cand : collect_candidates(tokens, total_lines, opts)) {
    int s = cand.start;
    int e = cand.end;
    bool dropped = false;

    // The first line of a region belongs to that region, so a child may not
    // start on its parent's first line. Blocks sharing the line are dropped;
    // comment-like regions shrink past it instead, mirroring how editors fold
    // everything after the first line.
    int parent = find_parent(s, e);
    while (pool[static_cast<std::size_t>(parent)].start == s) {
      if (cand.kind == NodeKind::Block) {
        dropped = true;
        break;
      }
      ++s;
      if (e - s + 1 < 2) {
        dropped = true;
        break;
      }
      parent = find_parent(s, e);
    }
    if (dropped) continue;

    TmpNode& par = pool[static_cast<std::size_t>(parent)];
    std::vector<int> absorbed;
    for (int child : par.children) {
      const TmpNode& cn = pool[static_cast<std::size_t>(child)];
      if (cn.end < s || e < cn.start) continue;  // disjoint sibling
      if (s < cn.start && cn.end <= e) {
        absorbed.push_back(child);  // becomes a child of the new node
      } else {
        dropped = true;  // partial overlap (or a same-start nesting violation)
        break;
      }
    }
    if (dropped) continue;

    const int idx = static_cast<int>(pool.size());
    pool.push_back({cand.kind, s, e, parent, absorbed});
    TmpNode& parent_node = pool[static_cast<std::size_t>(parent)];
    std::vector<int> kept;
    kept.reserve(parent_node.children.size() + 1);
    for (int child : parent_node.children) {
      if (std::find(absorbed.begin(), absorbed.end(), child) == absorbed.end()) kept.push_back(child);
    }
    kept.push_back(idx);
    std::sort(kept.begin(), kept.end(), [&pool](int a, int b) {
      return pool[static_cast<std::size_t>(a)].start < pool[static_cast<std::size_t>(b)].start;
    });
    parent_node.children = std::move(kept);
    for (int child : absorbed) pool[static_cast<std::size_t>(child)].parent = idx;
  }

  // Relabel breadth-first.
  std::vector<int> order;
  order.reserve(pool.size());
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    order.push_back(cur);
    for (int child : pool[static_cast<std::size_t>(cur)].children) queue.push_back(child);
  }
  std::vector<int> new_id(pool.size(), -1);
  for (std::size_t b = 0; b < order.size(); ++b) new_id[static_cast<std::size_t>(order[b])] = static_cast<int>(b);

  const std::vector<std::string_view> lines = split_lines(text);
  auto header_of = [&lines](int start, int end) {
    for (int ln = start; ln <= end; ++ln) {
      if (ln < 1 || ln > static_cast<int>(lines.size())) continue;
      std::string_view body = lines[static_cast<std::size_t>(ln - 1)];
      if (!is_blank(body)) return std::string(rtrim(body));
    }
    return std::string();
  };

  FoldableTree tree;
  tree.total_lines = total_lines;
  tree.nodes.resize(pool.size());
  for (std::size_t p = 0; p < pool.size(); ++p) {
    const TmpNode& src = pool[p];
    FoldableNode& dst = tree.nodes[static_cast<std::size_t>(new_id[p])];
    dst.id = new_id[p];
    dst.kind = src.kind;
    dst.start_line = src.start;
    dst.end_line = src.end;
    if (src.parent >= 0) dst.parent_id = new_id[static_cast<std::size_t>(src.parent)];
    dst.child_ids.clear();
    for (int child : src.children) dst.child_ids.push_back(new_id[static_cast<std::size_t>(child)]);
    std::sort(dst.child_ids.begin(), dst.child_ids.end());
    dst.header_text = header_of(src.start, src.end);
    dst.close_delimiter = close_delimiter_for(src.kind);
  }
  return tree;
}

int node_cost(const FoldableTree& tree, int id) {
  const FoldableNode& nd = tree.nodes.at(static_cast<std::size_t>(id));
  const int span = nd.end_line - nd.start_line + 1;
  if (span <= 0) return 0;  // empty file root
  int cost = span - 1;
  for (int child : nd.child_ids) cost -= tree.line_count(child) - 1;
  return cost;
}

bool is_rooted_contiguous(const FoldableTree& tree, const std::vector<uint8_t>& unfold) {
  if (unfold.size() != tree.nodes.size() || tree.nodes.empty()) return false;
  if (!unfold[0]) return false;
  for (const FoldableNode& nd : tree.nodes) {
    if (nd.parent_id && unfold[static_cast<std::size_t>(nd.id)] &&
        !unfold[static_cast<std::size_t>(*nd.parent_id)]) {
      return false;
    }
  }
  return true;
}

std::string render_folded(const FoldableTree& tree, const std::vector<uint8_t>& unfold,
                          std::string_view text) {
  if (!is_rooted_contiguous(tree, unfold)) {
    throw std::invalid_argument("render_folded: unfold vector is not a rooted contiguous subtree");
  }
  if (tree.total_lines == 0) return std::string();

  // Frontier nodes (folded, parent unfolded) have pairwise disjoint spans.
  // Map each frontier start line to the node folded there.
  std::vector<int> fold_at(static_cast<std::size_t>(tree.total_lines) + 1, -1);
  for (const FoldableNode& nd : tree.nodes) {
    if (!nd.parent_id) continue;
    if (!unfold[static_cast<std::size_t>(nd.id)] && unfold[static_cast<std::size_t>(*nd.parent_id)]) {
      fold_at[static_cast<std::size_t>(nd.start_line)] = nd.id;
    }
  }

  const std::vector<std::string_view> lines = split_lines(text);
  const bool trailing_newline = !text.empty() && text.back() == '\n';

  std::string out;
  out.reserve(text.size());
  bool first = true;
  int ln = 1;
  while (ln <= tree.total_lines) {
    if (!first) out += '\n';
    first = false;
    const int folded = fold_at[static_cast<std::size_t>(ln)];
    if (folded >= 0) {
      const FoldableNode& nd = tree.nodes[static_cast<std::size_t>(folded)];
      out += nd.header_text;
      out += " ...";
      out += nd.close_delimiter;
      ln = nd.end_line + 1;
    } else {
      if (ln <= static_cast<int>(lines.size())) out += lines[static_cast<std::size_t>(ln - 1)];
      ++ln;
    }
  }
  if (trailing_newline) out += '\n';
  return out;
}

}  // namespace autofold
