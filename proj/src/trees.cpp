#include "homalg/trees.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

namespace homalg {

namespace {

template <class Label>
std::uint64_t weight_of(const Label& label) {
  if constexpr (std::is_same_v<Label, NoLabel>) {
    return 0;
  } else {
    return label.value;
  }
}

template <class Label>
int side_of(const Label& label) {
  if constexpr (std::is_same_v<Label, DiWeight>) {
    return static_cast<int>(label.side);
  } else {
    return 0;
  }
}

template <class Label>
int compare_labels(const PlanarTree<Label>& x, const PlanarTree<Label>& y, bool sides) {
  if (x.is_leaf()) return 0;
  const Label& lx = x.label();
  const Label& ly = y.label();
  if (sides) {
    if (side_of(lx) != side_of(ly)) return side_of(lx) < side_of(ly) ? -1 : 1;
  } else if (weight_of(lx) != weight_of(ly)) {
    return weight_of(lx) < weight_of(ly) ? -1 : 1;
  }
  if (int c = compare_labels(x.left(), y.left(), sides); c != 0) return c;
  return compare_labels(x.right(), y.right(), sides);
}

}  // namespace

template <class Label>
PlanarTree<Label> PlanarTree<Label>::node(PlanarTree left, PlanarTree right, Label label) {
  std::size_t arity = left.arity() + right.arity();
  std::uint64_t total = left.total_weight() + right.total_weight() + weight_of(label);
  return PlanarTree(std::make_shared<const Node>(
      Node{std::move(left), std::move(right), label, arity, total}));
}

template <class Label>
const PlanarTree<Label>& PlanarTree<Label>::left() const {
  if (!node_) throw NoLowestVertex();
  return node_->left;
}

template <class Label>
const PlanarTree<Label>& PlanarTree<Label>::right() const {
  if (!node_) throw NoLowestVertex();
  return node_->right;
}

template <class Label>
const Label& PlanarTree<Label>::label() const {
  if (!node_) throw NoLowestVertex();
  return node_->label;
}

template <class Label>
std::vector<Label> PlanarTree<Label>::preorder_labels() const {
  std::vector<Label> out;
  out.reserve(internal_vertices());
  std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& t) {
    if (t.is_leaf()) return;
    out.push_back(t.node_->label);
    walk(t.node_->left);
    walk(t.node_->right);
  };
  walk(*this);
  return out;
}

template <class Label>
std::size_t PlanarTree<Label>::hash() const noexcept {
  if (!node_) return 0x9e3779b97f4a7c15ULL;
  std::size_t h = node_->left.hash() * 0x100000001b3ULL;
  h ^= node_->right.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = h * 31 + weight_of(node_->label) * 2 + static_cast<std::size_t>(side_of(node_->label));
  return h;
}

template <class Label>
int PlanarTree<Label>::compare_shape(const PlanarTree& a, const PlanarTree& b) {
  if (a.node_ == b.node_) return 0;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  if (a.is_leaf()) return 0;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.left.arity() != y.left.arity()) return x.left.arity() < y.left.arity() ? -1 : 1;
  if (int c = compare_shape(x.left, y.left); c != 0) return c;
  return compare_shape(x.right, y.right);
}

template <class Label>
int PlanarTree<Label>::compare(const PlanarTree& a, const PlanarTree& b) {
  if (a.node_ == b.node_) return 0;
  if (int c = compare_shape(a, b); c != 0) return c;
  if constexpr (std::is_same_v<Label, NoLabel>) {
    return 0;
  } else {
    // Same shape: weights in pre-order, then sides in pre-order.
    if (int c = compare_labels(a, b, false); c != 0) return c;
    return compare_labels(a, b, true);
  }
}

template class PlanarTree<NoLabel>;
template class PlanarTree<Weight>;
template class PlanarTree<DiWeight>;

// ---------------------------------------------------------------------------

Tree graft(const Tree& left, const Tree& right) { return Tree::node(left, right); }

WeightedTree graft_weighted(const WeightedTree& left, const WeightedTree& right) {
  return WeightedTree::node(left, right, Weight{0});
}

WeightedTree shift_weight(const WeightedTree& tree, unsigned m) {
  if (tree.is_leaf()) throw NoLowestVertex();
  return WeightedTree::node(tree.left(), tree.right(), Weight{tree.label().value + m});
}

WeightedDecomposition decompose_weighted(const WeightedTree& tree) {
  if (tree.is_leaf()) throw NoLowestVertex();
  return {tree.left(), tree.right(), tree.label().value};
}

DiweightedTree graft_di(const DiweightedTree& left, const DiweightedTree& right, Side side) {
  return DiweightedTree::node(left, right, DiWeight{0, side});
}

DiweightedTree shift_di(const DiweightedTree& tree, unsigned m) {
  if (tree.is_leaf()) throw NoLowestVertex();
  DiWeight w = tree.label();
  w.value += m;
  return DiweightedTree::node(tree.left(), tree.right(), w);
}

DiDecomposition decompose_di(const DiweightedTree& tree) {
  if (tree.is_leaf()) throw NoLowestVertex();
  return {tree.left(), tree.right(), tree.label().side, tree.label().value};
}

namespace {

template <class Label>
Tree forget(const PlanarTree<Label>& t) {
  if (t.is_leaf()) return Tree::leaf();
  return graft(forget(t.left()), forget(t.right()));
}

}  // namespace

Tree underlying_tree(const WeightedTree& tree) { return forget(tree); }
Tree underlying_tree(const DiweightedTree& tree) { return forget(tree); }

// ---------------------------------------------------------------------------

Integer catalan(unsigned n) {
  Integer num;
  Integer den_a;
  Integer den_b;
  mpz_fac_ui(num.get_mpz_t(), 2UL * n);
  mpz_fac_ui(den_a.get_mpz_t(), n);
  mpz_fac_ui(den_b.get_mpz_t(), n + 1UL);
  return num / (den_a * den_b);
}

namespace {

// Shapes are immutable and shared, so one cache serves every caller.
const std::vector<Tree>& shapes_of_arity(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Tree>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Tree> out;
  if (n == 1) {
    out.push_back(Tree::leaf());
  } else {
    for (std::size_t k = 1; k < n; ++k) {
      const auto& lefts = shapes_of_arity(k);
      const auto& rights = shapes_of_arity(n - k);
      for (const Tree& l : lefts)
        for (const Tree& r : rights) out.push_back(graft(l, r));
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(out)).first->second;
}

// Weight vectors of the given length with sum ≤ budget, lexicographic.
void for_each_composition(std::size_t length, unsigned budget,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> current(length, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == length) {
      visit(current);
      return;
    }
    for (unsigned w = 0; w <= left; ++w) {
      current[i] = w;
      rec(i + 1, left - w);
    }
    current[i] = 0;
  };
  rec(0, budget);
}

template <class Label>
PlanarTree<Label> relabel(const Tree& shape, const std::vector<Label>& preorder, std::size_t& cursor) {
  if (shape.is_leaf()) return PlanarTree<Label>::leaf();
  Label here = preorder.at(cursor++);
  PlanarTree<Label> l = relabel(shape.left(), preorder, cursor);
  PlanarTree<Label> r = relabel(shape.right(), preorder, cursor);
  return PlanarTree<Label>::node(std::move(l), std::move(r), here);
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n == 0) throw InvalidArgument("tree arity must be at least 1");
  return shapes_of_arity(n);
}

WeightedTree with_weights(const Tree& shape, const std::vector<unsigned>& preorder) {
  if (preorder.size() != shape.internal_vertices()) {
    throw InvalidArgument("weight count differs from the number of internal vertices");
  }
  std::vector<Weight> labels;
  labels.reserve(preorder.size());
  for (unsigned w : preorder) labels.push_back(Weight{w});
  std::size_t cursor = 0;
  return relabel(shape, labels, cursor);
}

DiweightedTree with_diweights(const Tree& shape, const std::vector<DiWeight>& preorder) {
  if (preorder.size() != shape.internal_vertices()) {
    throw InvalidArgument("label count differs from the number of internal vertices");
  }
  std::size_t cursor = 0;
  return relabel(shape, preorder, cursor);
}

std::vector<WeightedTree> enumerate_weighted(std::size_t n, unsigned max_weight) {
  if (n == 0) throw InvalidArgument("tree arity must be at least 1");
  std::vector<WeightedTree> out;
  for (const Tree& shape : shapes_of_arity(n)) {
    for_each_composition(n - 1, max_weight, [&](const std::vector<unsigned>& weights) {
      out.push_back(with_weights(shape, weights));
    });
  }
  return out;
}

std::vector<DiweightedTree> enumerate_diweighted(std::size_t n, unsigned max_weight) {
  if (n == 0) throw InvalidArgument("tree arity must be at least 1");
  std::vector<DiweightedTree> out;
  const std::size_t vertices = n - 1;
  const std::size_t side_patterns = std::size_t{1} << vertices;
  std::vector<DiWeight> labels(vertices);
  for (const Tree& shape : shapes_of_arity(n)) {
    for_each_composition(vertices, max_weight, [&](const std::vector<unsigned>& weights) {
      for (std::size_t mask = 0; mask < side_patterns; ++mask) {
        for (std::size_t v = 0; v < vertices; ++v) {
          // The first vertex in pre-order is the most significant bit so
          // that side patterns come out in lexicographic order.
          bool right = (mask >> (vertices - 1 - v)) & 1U;
          labels[v] = DiWeight{weights[v], right ? Side::right : Side::left};
        }
        out.push_back(with_diweights(shape, labels));
      }
    });
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class Label>
void emit(const PlanarTree<Label>& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'i';
    return;
  }
  out += '(';
  emit(t.left(), out);
  if constexpr (std::is_same_v<Label, DiWeight>) {
    out += t.label().side == Side::left ? " vl " : " vr ";
  } else {
    out += " v ";
  }
  emit(t.right(), out);
  out += ')';
  if constexpr (!std::is_same_v<Label, NoLabel>) {
    if (t.label().value != 0) out += "[" + std::to_string(t.label().value) + "]";
  }
}

enum class Op { plain, left, right };

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  template <class Label>
  PlanarTree<Label> parse_all() {
    PlanarTree<Label> t = parse<Label>();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool open() { return match("(") || match("{"); }

  void close(char opener) {
    skip_space();
    char expected = opener == '{' ? '}' : ')';
    if (pos_ >= text_.size() || text_[pos_] != expected) fail(std::string("expected '") + expected + "'");
    ++pos_;
  }

  bool peek_close() {
    skip_space();
    return pos_ < text_.size() && (text_[pos_] == ')' || text_[pos_] == '}');
  }

  std::optional<Op> parse_op() {
    skip_space();
    if (match("\xE2\x88\xA8")) {  // ∨
      if (match("_l")) return Op::left;
      if (match("_r")) return Op::right;
      return Op::plain;
    }
    if (pos_ < text_.size() && text_[pos_] == 'v') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == 'l') {
        ++pos_;
        return Op::left;
      }
      if (pos_ < text_.size() && text_[pos_] == 'r') {
        ++pos_;
        return Op::right;
      }
      return Op::plain;
    }
    return std::nullopt;
  }

  unsigned parse_suffixes() {
    unsigned total = 0;
    while (match("[")) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer weight");
      unsigned long value = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (value > 1000000UL) fail("weight too large");
      total += static_cast<unsigned>(value);
      if (!match("]")) fail("expected ']'");
    }
    return total;
  }

  template <class Label>
  PlanarTree<Label> parse() {
    skip_space();
    if (match("i")) return PlanarTree<Label>::leaf();
    if (!open()) fail("expected 'i' or '('");
    char opener = text_[pos_ - 1];
    PlanarTree<Label> left = parse<Label>();
    if (peek_close()) {
      // Grouping parentheses around a complete tree.
      close(opener);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '[') fail("weight suffix on a grouping without operator");
      return left;
    }
    std::size_t op_pos = (skip_space(), pos_);
    std::optional<Op> op = parse_op();
    if (!op) fail("expected operator 'v', 'vl' or 'vr'");
    PlanarTree<Label> right = parse<Label>();
    close(opener);
    std::size_t suffix_pos = (skip_space(), pos_);
    unsigned weight = parse_suffixes();

    if constexpr (std::is_same_v<Label, NoLabel>) {
      if (*op != Op::plain) { pos_ = op_pos; fail("'vl'/'vr' are only legal in diweighted trees"); }
      if (weight != 0 || pos_ != suffix_pos) { pos_ = suffix_pos; fail("plain trees carry no weights"); }
      return PlanarTree<Label>::node(std::move(left), std::move(right));
    } else if constexpr (std::is_same_v<Label, Weight>) {
      if (*op != Op::plain) { pos_ = op_pos; fail("'vl'/'vr' are only legal in diweighted trees"); }
      return PlanarTree<Label>::node(std::move(left), std::move(right), Weight{weight});
    } else {
      if (*op == Op::plain) { pos_ = op_pos; fail("'v' is only legal in weighted trees"); }
      return PlanarTree<Label>::node(std::move(left), std::move(right),
                                     DiWeight{weight, *op == Op::left ? Side::left : Side::right});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const Tree& tree) {
  std::string out;
  emit(tree, out);
  return out;
}

std::string format(const WeightedTree& tree) {
  std::string out;
  emit(tree, out);
  return out;
}

std::string format(const DiweightedTree& tree) {
  std::string out;
  emit(tree, out);
  return out;
}

Tree parse_tree(std::string_view text) { return TreeParser(text).parse_all<NoLabel>(); }
WeightedTree parse_weighted_tree(std::string_view text) { return TreeParser(text).parse_all<Weight>(); }
DiweightedTree parse_diweighted_tree(std::string_view text) { return TreeParser(text).parse_all<DiWeight>(); }

}  // namespace homalg
