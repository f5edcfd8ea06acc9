#include "epc/canon.hpp"

#include <algorithm>
#include <climits>
#include <cstring>

namespace epc {

namespace {

using Perm = std::array<std::uint8_t, kMaxOrder>;

// Ordered partition of the vertex set; cells[i] is a vertex mask.
struct Partition {
  std::array<Row, kMaxOrder> cells;
  int count = 0;
};

constexpr int kQueueCapacity = 4 * kMaxOrder;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Partition root;
    root.cells[0] = g_.vertex_mask();
    root.count = 1;
    Row queue[kQueueCapacity];
    queue[0] = root.cells[0];
    refine(root, queue, 1);
    search(root, 0);

    std::array<Row, kMaxOrder> rows{};
    std::copy_n(best_rows_.begin(), n_, rows.begin());
    CanonicalForm out{Graph::from_rows(n_, rows), best_lab_};
    return out;
  }

 private:
  // Splits cells by neighbor counts into splitter cells until equitable.
  // Pieces are ordered by ascending count, which keeps the result
  // independent of vertex labels.
  void refine(Partition& p, Row* queue, int tail) const {
    int head = 0;
    Row bucket[kMaxOrder + 1];
    while (head < tail && p.count < n_) {
      const Row splitter = queue[head++];
      for (int ci = 0; ci < p.count; ++ci) {
        const Row cell = p.cells[ci];
        if ((cell & (cell - 1)) == 0) continue;
        std::uint8_t counts[kMaxOrder];
        int lo = kMaxOrder + 1;
        int hi = -1;
        for (Row r = cell; r; r &= r - 1) {
          const int x = first_vertex(r);
          const int c = popcount(g_.neighbors(x) & splitter);
          counts[x] = static_cast<std::uint8_t>(c);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        for (int k = lo; k <= hi; ++k) bucket[k] = 0;
        for (Row r = cell; r; r &= r - 1) {
          const int x = first_vertex(r);
          bucket[counts[x]] |= bit(x);
        }
        int pieces = 0;
        for (int k = lo; k <= hi; ++k) pieces += bucket[k] != 0;
        std::memmove(&p.cells[ci + pieces], &p.cells[ci + 1], sizeof(Row) * (p.count - ci - 1));
        int at = ci;
        for (int k = lo; k <= hi; ++k) {
          if (!bucket[k]) continue;
          p.cells[at++] = bucket[k];
          if (tail < kQueueCapacity) queue[tail++] = bucket[k];
        }
        p.count += pieces - 1;
        ci += pieces - 1;
      }
    }
  }

  bool fixes_prefix(const Perm& a, int depth) const {
    for (int i = 0; i < depth; ++i) {
      if (a[seq_[i]] != seq_[i]) return false;
    }
    return true;
  }

  Row orbit(int v, int depth) const {
    Row orb = bit(v);
    for (bool grew = true; grew;) {
      grew = false;
      for (const Perm& a : autos_) {
        if (!fixes_prefix(a, depth)) continue;
        Row img = 0;
        for (Row r = orb; r; r &= r - 1) img |= bit(a[first_vertex(r)]);
        if (img & ~orb) {
          orb |= img;
          grew = true;
        }
      }
    }
    return orb;
  }

  // Returns the depth of the node whose remaining children should be tried
  // next, INT_MAX when the subtree finished normally.
  int search(const Partition& p, int depth) {
    if (p.count == n_) return leaf(p, depth);

    int target = -1;
    int target_size = 0;
    for (int ci = 0; ci < p.count; ++ci) {
      const int s = popcount(p.cells[ci]);
      if (s > 1 && s > target_size) {
        target = ci;
        target_size = s;
      }
    }
    const Row cell = p.cells[target];
    Row explored = 0;
    for (Row r = cell; r; r &= r - 1) {
      const int v = first_vertex(r);
      if (explored && !autos_.empty() && (orbit(v, depth) & explored)) continue;
      explored |= bit(v);

      Partition child;
      child.count = p.count + 1;
      std::copy_n(p.cells.begin(), target, child.cells.begin());
      child.cells[target] = bit(v);
      child.cells[target + 1] = cell & ~bit(v);
      std::copy_n(p.cells.begin() + target + 1, p.count - target - 1, child.cells.begin() + target + 2);
      Row queue[kQueueCapacity];
      queue[0] = bit(v);
      refine(child, queue, 1);

      seq_[depth] = static_cast<std::uint8_t>(v);
      const int resume = search(child, depth + 1);
      if (resume < depth) return resume;
    }
    return INT_MAX;
  }

  int common_prefix(const Perm& other, int other_depth, int depth) const {
    int c = 0;
    while (c < depth && c < other_depth && seq_[c] == other[c]) ++c;
    return c;
  }

  int leaf(const Partition& p, int depth) {
    Perm lab{};
    Perm pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(first_vertex(p.cells[i]));
      pos[lab[i]] = static_cast<std::uint8_t>(i);
    }
    std::array<Row, kMaxOrder> rows;
    for (int i = 0; i < n_; ++i) {
      Row r = 0;
      for (Row nb = g_.neighbors(lab[i]); nb; nb &= nb - 1) r |= bit(pos[first_vertex(nb)]);
      rows[i] = r;
    }

    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_lab_ = best_lab_ = lab;
      first_seq_ = best_seq_ = seq_;
      first_depth_ = best_depth_ = depth;
      return INT_MAX;
    }
    if (std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
      record_automorphism(first_lab_, lab);
      return common_prefix(first_seq_, first_depth_, depth);
    }
    const auto cmp = std::lexicographical_compare_three_way(rows.begin(), rows.begin() + n_, best_rows_.begin(),
                                                            best_rows_.begin() + n_);
    if (cmp < 0) {
      best_rows_ = rows;
      best_lab_ = lab;
      best_seq_ = seq_;
      best_depth_ = depth;
      return INT_MAX;
    }
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
      return common_prefix(best_seq_, best_depth_, depth);
    }
    return INT_MAX;
  }

  // Both labelings give the same relabeled graph, so mapping one onto the
  // other position by position is an automorphism.
  void record_automorphism(const Perm& from, const Perm& to) {
    Perm a{};
    for (int i = 0; i < n_; ++i) a[from[i]] = to[i];
    autos_.push_back(a);
  }

  const Graph& g_;
  int n_;
  Perm seq_{};
  bool have_first_ = false;
  std::array<Row, kMaxOrder> first_rows_{}, best_rows_{};
  Perm first_lab_{}, best_lab_{}, first_seq_{}, best_seq_{};
  int first_depth_ = 0, best_depth_ = 0;
  std::vector<Perm> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

CanonicalCode canonical_code(const Graph& g) {
  const Graph c = canonical_graph(g);
  const int n = c.order();
  CanonicalCode code;
  code.order = n;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  code.bits.assign((pairs + 7) / 8, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (c.adjacent(i, j)) code.bits[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
    }
  }
  return code;
}

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 + 2 * bits.size());
  out.push_back(digits[(order >> 4) & 0xf]);
  out.push_back(digits[order & 0xf]);
  for (std::uint8_t b : bits) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_graph(g) == canonical_graph(h);
}

}  // namespace epc
