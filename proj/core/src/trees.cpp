#include "hodge/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

namespace hodge {

// ---------------------------------------------------------------------------
// DecoratedTree

int DecoratedTree::append(const DecoratedTree& other) {
  const int offset = static_cast<int>(vertices_.size());
  for (Vertex v : other.vertices_) {
    if (v.first >= 0) v.first += offset;
    if (v.second >= 0) v.second += offset;
    vertices_.push_back(v);
  }
  return other.root_ + offset;
}

DecoratedTree DecoratedTree::from_vertices(std::vector<Vertex> vertices, int root) {
  const int size = static_cast<int>(vertices.size());
  if (root < 0 || root >= size) throw std::invalid_argument("tree root out of range");
  for (int v = 0; v < size; ++v) {
    const Vertex& x = vertices[static_cast<std::size_t>(v)];
    for (int c : {x.first, x.second}) {
      if (c >= v) throw std::invalid_argument("tree vertices must be stored children first");
    }
  }
  DecoratedTree t;
  t.vertices_ = std::move(vertices);
  t.root_ = root;
  return t;
}

DecoratedTree DecoratedTree::leaf(int nm) {
  DecoratedTree t;
  t.vertices_.push_back({VertexKind::leaf, nm, -1, -1});
  t.root_ = 0;
  return t;
}

DecoratedTree DecoratedTree::unary(int cp, const DecoratedTree& child) {
  DecoratedTree t;
  const int c = t.append(child);
  t.vertices_.push_back({VertexKind::unary, cp, c, -1});
  t.root_ = static_cast<int>(t.vertices_.size()) - 1;
  return t;
}

DecoratedTree DecoratedTree::binary(int cp, const DecoratedTree& a, const DecoratedTree& b) {
  DecoratedTree t;
  const int x = t.append(a);
  const int y = t.append(b);
  t.vertices_.push_back({VertexKind::binary, cp, x, y});
  t.root_ = static_cast<int>(t.vertices_.size()) - 1;
  return t;
}

namespace {

int count_kind(std::span<const Vertex> vs, VertexKind kind) {
  return static_cast<int>(std::count_if(vs.begin(), vs.end(), [kind](const Vertex& v) { return v.kind == kind; }));
}

}  // namespace

int DecoratedTree::leaf_count() const { return count_kind(vertices_, VertexKind::leaf); }
int DecoratedTree::unary_count() const { return count_kind(vertices_, VertexKind::unary); }
int DecoratedTree::binary_count() const { return count_kind(vertices_, VertexKind::binary); }

int DecoratedTree::descendant_leaves(int v) const {
  const Vertex& x = vertex(v);
  switch (x.kind) {
    case VertexKind::leaf: return 1;
    case VertexKind::unary: return descendant_leaves(x.first);
    case VertexKind::binary: return descendant_leaves(x.first) + descendant_leaves(x.second);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// History walk

class HistoryWalker {
 public:
  HistoryWalker(int genus, int n, const HistoryVisitor& visit) : visit_(visit), genus_(genus) {
    for (int j = 0; j < n; ++j) {
      tree_.vertices_.push_back({VertexKind::leaf, j + 1, -1, -1});
      const std::size_t offset = arena_.size();
      arena_ += 'L';
      arena_ += std::to_string(j + 1);
      roots_.push_back({j, j + 1, 1, offset, arena_.size() - offset});
    }
  }

  bool run() {
    if (roots_.empty() || genus_ < 0) return true;
    return walk(2 * genus_ + static_cast<int>(roots_.size()) - 1, genus_);
  }

 private:
  // A root's encoding lives in arena_[offset, offset + length). The arena
  // grows by one encoding per move and is truncated on backtrack.
  struct Root {
    int vertex;
    int min_leaf;
    int leaves;
    std::size_t offset;
    std::size_t length;
  };

  std::string_view encoding(const Root& r) const { return std::string_view(arena_).substr(r.offset, r.length); }

  void append_label(char kind, int step) {
    arena_ += kind;
    char digits[16];
    int len = 0;
    do {
      digits[len++] = static_cast<char>('0' + step % 10);
      step /= 10;
    } while (step > 0);
    while (len > 0) arena_ += digits[--len];
    arena_ += '(';
  }

  bool walk(int step, int genus_left) {
    if (roots_.size() == 1 && genus_left == 0) {
      tree_.root_ = roots_.front().vertex;
      return visit_(tree_, steps_, encoding(roots_.front()));
    }
    const std::size_t k = roots_.size();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (!join(a, b, step, genus_left)) return false;
      }
    }
    if (genus_left > 0) {
      for (std::size_t r = 0; r < k; ++r) {
        if (roots_[r].leaves >= 2 && !cap(r, step, genus_left)) return false;
      }
    }
    return true;
  }

  bool join(std::size_t a, std::size_t b, int step, int genus_left) {
    const Root ra = roots_[a];
    const Root rb = roots_[b];
    const bool a_first = encoding(ra) <= encoding(rb);
    const Root& x = a_first ? ra : rb;
    const Root& y = a_first ? rb : ra;
    tree_.vertices_.push_back({VertexKind::binary, step, x.vertex, y.vertex});
    const int lo = std::min(ra.min_leaf, rb.min_leaf);
    steps_.push_back({step, VertexKind::binary, lo, std::max(ra.min_leaf, rb.min_leaf)});

    const std::size_t mark = arena_.size();
    append_label('B', step);
    arena_.append(arena_, x.offset, x.length);
    arena_ += ',';
    arena_.append(arena_, y.offset, y.length);
    arena_ += ')';

    const std::size_t last = roots_.size() - 1;
    roots_[a] = Root{static_cast<int>(tree_.vertices_.size()) - 1, lo, ra.leaves + rb.leaves, mark,
                     arena_.size() - mark};
    const Root moved = roots_[last];
    roots_[b] = moved;
    roots_.pop_back();

    const bool go_on = walk(step - 1, genus_left);

    roots_.push_back(moved);
    roots_[b] = rb;
    roots_[a] = ra;
    arena_.resize(mark);
    tree_.vertices_.pop_back();
    steps_.pop_back();
    return go_on;
  }

  bool cap(std::size_t r, int step, int genus_left) {
    const Root saved = roots_[r];
    tree_.vertices_.push_back({VertexKind::unary, step, saved.vertex, -1});
    steps_.push_back({step, VertexKind::unary, saved.min_leaf, -1});

    const std::size_t mark = arena_.size();
    append_label('U', step);
    arena_.append(arena_, saved.offset, saved.length);
    arena_ += ')';
    roots_[r].vertex = static_cast<int>(tree_.vertices_.size()) - 1;
    roots_[r].offset = mark;
    roots_[r].length = arena_.size() - mark;

    const bool go_on = walk(step - 2, genus_left - 1);

    roots_[r] = saved;
    arena_.resize(mark);
    tree_.vertices_.pop_back();
    steps_.pop_back();
    return go_on;
  }

  const HistoryVisitor& visit_;
  int genus_;
  DecoratedTree tree_;
  std::vector<Root> roots_;
  std::vector<HistoryStep> steps_;
  std::string arena_;
};

bool for_each_history(int genus, int n, const HistoryVisitor& visit) {
  if (n < 1) throw std::invalid_argument("tree enumeration needs n >= 1");
  if (genus < 0) throw std::invalid_argument("tree enumeration needs g >= 0");
  HistoryWalker walker(genus, n, visit);
  return walker.run();
}

std::vector<DecoratedTree> enumerate_trees(int genus, int n) {
  std::vector<DecoratedTree> trees;
  for_each_history(genus, n, [&](const DecoratedTree& t, std::span<const HistoryStep>, std::string_view) {
    trees.push_back(t);
    return true;
  });
  return trees;
}

// ---------------------------------------------------------------------------
// Weight sums without materialized trees.
//
// Scaling N(Gamma) by D = n^{n+g-1} 12^g (2g+n-1)! leaves the integer
//   prod_binary ml * prod_unary (ml^3 - ml)(cp - 1),
// because the cp labels and the skipped labels cp-1 of unary vertices
// together fill {1..2g+n-1}.

namespace {

__extension__ typedef unsigned __int128 u128;

mpz_class to_mpz(u128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  mpz_class lo(static_cast<unsigned long>(v & ~0UL));
  return (hi << 64) + lo;
}

struct Accumulator {
  u128 partial = 0;
  mpz_class total = 0;

  void add(u128 v) {
    if (partial + v < partial) {
      total += to_mpz(partial);
      partial = 0;
    }
    partial += v;
  }
  mpz_class result() const { return total + to_mpz(partial); }
};

u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("tree weight product exceeds 128 bits");
  }
  return out;
}

template <bool Weighted>
void sum_walk(std::vector<int>& sizes, std::size_t k, int step, int genus_left, u128 product,
              Accumulator& acc) {
  if (k == 1 && genus_left == 0) {
    acc.add(product);
    return;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const int sa = sizes[a];
      const int sb = sizes[b];
      const int moved = sizes[k - 1];
      sizes[a] = sa + sb;
      sizes[b] = moved;
      sum_walk<Weighted>(sizes, k - 1, step - 1, genus_left,
                         Weighted ? checked_mul(product, static_cast<u128>(sa + sb)) : product, acc);
      sizes[k - 1] = moved;
      sizes[b] = sb;
      sizes[a] = sa;
    }
  }
  if (genus_left > 0) {
    for (std::size_t r = 0; r < k; ++r) {
      const u128 ml = static_cast<u128>(sizes[r]);
      if (ml < 2) continue;
      const u128 factor = (ml * ml * ml - ml) * static_cast<u128>(step - 1);
      sum_walk<Weighted>(sizes, k, step - 2, genus_left - 1,
                         Weighted ? checked_mul(product, factor) : product, acc);
    }
  }
}

template <bool Weighted>
mpz_class walk_total(int genus, int n) {
  if (n < 1) throw std::invalid_argument("tree enumeration needs n >= 1");
  if (genus < 0) throw std::invalid_argument("tree enumeration needs g >= 0");
  std::vector<int> sizes(static_cast<std::size_t>(n), 1);
  Accumulator acc;
  sum_walk<Weighted>(sizes, sizes.size(), 2 * genus + n - 1, genus, 1, acc);
  return acc.result();
}

}  // namespace

std::uint64_t count_trees(int genus, int n) {
  const mpz_class total = walk_total<false>(genus, n);
  if (!total.fits_ulong_p()) throw std::overflow_error("tree count exceeds 64 bits");
  return total.get_ui();
}

Rational tree_sum(int genus, int n) {
  const mpz_class scaled = walk_total<true>(genus, n);
  mpz_class denom, tmp;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n + genus - 1));
  mpz_ui_pow_ui(tmp.get_mpz_t(), 12, static_cast<unsigned long>(genus));
  denom *= tmp;
  mpz_fac_ui(tmp.get_mpz_t(), static_cast<unsigned long>(2 * genus + n - 1));
  denom *= tmp;
  return Rational(scaled, denom);
}

Rational tree_weight(const DecoratedTree& tree) {
  if (auto check = validate_tree(tree); !check) {
    throw std::invalid_argument("invalid decorated tree: " + check.violated_rule);
  }
  const int n = tree.leaf_count();
  const int g = tree.unary_count();
  Rational w = Rational(1) / Rational(n).pow(n + g - 1);
  const auto vs = tree.vertices();
  for (int v = 0; v < static_cast<int>(vs.size()); ++v) {
    const long long ml = tree.descendant_leaves(v);
    const long long cp = vs[v].label;
    if (vs[v].kind == VertexKind::binary) {
      w *= Rational(ml, cp);
    } else if (vs[v].kind == VertexKind::unary) {
      w *= Rational(ml * ml * ml - ml, 12 * cp);
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

std::string encode_vertex(const DecoratedTree& t, int v) {
  const Vertex& x = t.vertex(v);
  switch (x.kind) {
    case VertexKind::leaf: return "L" + std::to_string(x.label);
    case VertexKind::unary: return "U" + std::to_string(x.label) + "(" + encode_vertex(t, x.first) + ")";
    case VertexKind::binary: {
      std::string a = encode_vertex(t, x.first);
      std::string b = encode_vertex(t, x.second);
      if (b < a) std::swap(a, b);
      return "B" + std::to_string(x.label) + "(" + a + "," + b + ")";
    }
  }
  return {};
}

class EncodingParser {
 public:
  explicit EncodingParser(std::string_view text) : text_(text) {}

  DecoratedTree parse(std::vector<Vertex>& out) {
    out.clear();
    out.reserve(text_.size() / 3 + 1);
    vertices_ = &out;
    const int root = node();
    if (pos_ != text_.size()) fail("trailing characters");
    return DecoratedTree::from_vertices(std::move(out), root);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad tree encoding at offset " + std::to_string(pos_) + ": " + why);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) fail("label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  int push(Vertex v) {
    vertices_->push_back(v);
    return static_cast<int>(vertices_->size()) - 1;
  }

  int node() {
    if (pos_ >= text_.size()) fail("unexpected end");
    const char kind = text_[pos_++];
    if (kind == 'L') return push({VertexKind::leaf, number(), -1, -1});
    if (kind != 'U' && kind != 'B') {
      --pos_;
      fail("unknown vertex kind");
    }
    const int cp = number();
    expect('(');
    const int first = node();
    if (kind == 'U') {
      expect(')');
      return push({VertexKind::unary, cp, first, -1});
    }
    expect(',');
    const int second = node();
    expect(')');
    return push({VertexKind::binary, cp, first, second});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Vertex>* vertices_ = nullptr;
};

}  // namespace

std::string canonical_encoding(const DecoratedTree& tree) {
  if (tree.root() < 0) return {};
  return encode_vertex(tree, tree.root());
}

DecoratedTree parse_encoding(std::string_view text) {
  std::vector<Vertex> storage;
  return EncodingParser(text).parse(storage);
}

void parse_encoding(std::string_view text, DecoratedTree& into) {
  into = EncodingParser(text).parse(into.vertices_);
}

void history_of(const DecoratedTree& tree, std::vector<HistoryStep>& steps) {
  const auto vs = tree.vertices();
  thread_local std::vector<int> min_leaf;
  min_leaf.assign(vs.size(), 0);
  steps.clear();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const Vertex& x = vs[v];
    if (x.kind == VertexKind::leaf) {
      min_leaf[v] = x.label;
      continue;
    }
    const int a = min_leaf[static_cast<std::size_t>(x.first)];
    if (x.kind == VertexKind::unary) {
      min_leaf[v] = a;
      steps.push_back({x.label, VertexKind::unary, a, -1});
    } else {
      const int b = min_leaf[static_cast<std::size_t>(x.second)];
      min_leaf[v] = std::min(a, b);
      steps.push_back({x.label, VertexKind::binary, std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(steps.begin(), steps.end(), [](const HistoryStep& l, const HistoryStep& r) { return l.step > r.step; });
}

std::vector<HistoryStep> history_of(const DecoratedTree& tree) {
  std::vector<HistoryStep> steps;
  history_of(tree, steps);
  return steps;
}

// ---------------------------------------------------------------------------
// Validation

TreeValidation validate_tree(const DecoratedTree& tree) {
  auto fail = [](const char* rule) { return TreeValidation{false, rule}; };
  const auto vs = tree.vertices();
  const int size = static_cast<int>(vs.size());
  if (tree.root() < 0 || tree.root() >= size) return fail("structure: missing root");

  int n = 0;
  int g = 0;
  for (const Vertex& x : vs) {
    n += x.kind == VertexKind::leaf;
    g += x.kind == VertexKind::unary;
  }
  const int steps = 2 * g + n - 1;

  // One scratch block: parent[size], nm_seen[n+1], label_use[steps+1].
  thread_local std::vector<int> scratch;
  scratch.assign(static_cast<std::size_t>(size + n + steps + 2), 0);
  int* parent = scratch.data();
  int* nm_seen = parent + size;
  int* label_use = nm_seen + n + 1;

  for (int v = 0; v < size; ++v) parent[v] = -1;
  int attached = 0;
  for (int v = 0; v < size; ++v) {
    const Vertex& x = vs[static_cast<std::size_t>(v)];
    const int arity = x.kind == VertexKind::leaf ? 0 : x.kind == VertexKind::unary ? 1 : 2;
    const int kids[2] = {x.first, x.second};
    for (int c = 0; c < 2; ++c) {
      const bool present = kids[c] >= 0;
      if (present != (c < arity)) return fail("structure: child count does not match vertex kind");
      if (!present) continue;
      if (kids[c] >= v || parent[kids[c]] != -1 || kids[c] == tree.root()) return fail("structure: not a tree");
      parent[kids[c]] = v;
      ++attached;
    }
  }
  if (attached != size - 1) return fail("structure: unreachable vertices");

  for (const Vertex& x : vs) {
    if (x.kind != VertexKind::leaf) continue;
    if (x.label < 1 || x.label > n || nm_seen[x.label]) {
      return fail("nm-bijection: leaf labels must be a permutation of 1..n");
    }
    nm_seen[x.label] = 1;
  }

  for (int v = 0; v < size; ++v) {
    if (vs[v].kind == VertexKind::leaf && parent[v] >= 0 && vs[parent[v]].kind != VertexKind::binary) {
      return fail("leaf-parent: every leaf's parent must be binary");
    }
  }

  // label_use: 1 = cp label, 2 = skipped label below a unary vertex.
  for (const Vertex& x : vs) {
    if (x.kind == VertexKind::leaf) continue;
    if (x.label < 1 || x.label > steps) return fail("cp-range: cp must lie in 1..2g+n-1");
    if (label_use[x.label]) return fail("cp-injective: cp labels must be distinct");
    label_use[x.label] = 1;
  }

  for (const Vertex& x : vs) {
    if (x.kind != VertexKind::unary) continue;
    if (x.label <= 1 || label_use[x.label - 1] == 1) {
      return fail("unary-skip: a unary label a needs a > 1 and a-1 unused");
    }
    label_use[x.label - 1] = 2;
  }

  for (int v = 0; v < size; ++v) {
    if (vs[v].kind == VertexKind::leaf || parent[v] < 0) continue;
    if (vs[v].label <= vs[parent[v]].label) {
      return fail("descent: cp must increase strictly away from the root");
    }
  }

  const Vertex& root = vs[static_cast<std::size_t>(tree.root())];
  if ((root.kind == VertexKind::unary && root.label != 2) ||
      (root.kind == VertexKind::binary && root.label != 1)) {
    return fail("root-label: root cp must be 2 (unary) or 1 (binary)");
  }

  for (int a = 1; a <= steps; ++a) {
    if (!label_use[a]) return fail("completeness: cp labels and unary skips must fill 1..2g+n-1");
  }
  return {};
}

}  // namespace hodge
