#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "macref/ratfunc.hpp"

namespace macref {

// Weakly decreasing sequence of positive integers; indexes Young diagrams,
// Hilbert-scheme fixed points and matrix rows/columns throughout.
//
// Box convention: s = (i, j) with column i >= 0 and row j >= 0 lies in λ iff
// i < λ_{j+1}. Then a(s) = λ_{j+1} − 1 − i, l(s) = #{j' > j : λ_{j'+1} > i},
// a'(s) = i, l'(s) = j.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition empty() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // |λ|
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
    bool is_empty() const { return parts_.empty(); }

    Partition transpose() const;

    long n_stat() const;            // n(λ) = Σ (i−1) λ_i
    long n_stat_transpose() const;  // n(λ^t)
    long norm_sq() const;           // ‖λ‖² = Σ λ_i²
    long kappa() const;             // κ(λ) = 2(n(λ^t) − n(λ))

    bool contains_box(int col, int row) const;
    // (a, l, a', l') of a box
    std::tuple<int, int, int, int> arm_leg(int col, int row) const;
    // all boxes, row-major: (col, row)
    std::vector<std::pair<int, int>> boxes() const;

    // the λ̄ of the level-rank truncation: repeatedly remove full columns of
    // height N until fewer than N rows remain
    Partition strip_full_columns(int N) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);  // deterministic total order

    // dominance partial order: a ⊴ b (same size assumed by callers)
    static bool dominated_by(const Partition& a, const Partition& b);

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// All partitions of size 0..n, same per-degree order.
std::vector<Partition> partitions_up_to(int n);

struct PartitionStats {
    int size;
    long n;
    long n_transpose;
    long norm_sq;
    long kappa;
    Partition transpose;
};

PartitionStats partition_stats(const Partition& p);

// B_λ(q,t) = Σ_{s∈λ} q^{a'(s)} t^{l'(s)} and A_λ = 1 − (1−q)(1−t) B_λ.
std::pair<RatFunc, RatFunc> box_generating(const Partition& p);

// c_λ(q,t) = ∏ (1 − q^{a} t^{l+1}) and c'_λ(q,t) = ∏ (1 − q^{a+1} t^{l}).
std::pair<RatFunc, RatFunc> hook_products(const Partition& p);

// B_λ as a plain polynomial (for use as a plethystic alphabet).
Poly<Rat> box_poly(const Partition& p);
// B_λ(q^{aq}·t^{at-ish}) variants are built by callers via adams/substitute.

} // namespace macref
