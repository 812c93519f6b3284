#include "macref/partition.hpp"

#include <algorithm>
#include <numeric>

namespace macref {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int col = 0; col < parts_[0]; ++col)
        for (int row = 0; row < length(); ++row)
            if (parts_[static_cast<size_t>(row)] > col) ++t[static_cast<size_t>(col)];
    return Partition(std::move(t));
}

long Partition::n_stat() const {
    long n = 0;
    for (int i = 0; i < length(); ++i) n += static_cast<long>(i) * parts_[static_cast<size_t>(i)];
    return n;
}

long Partition::n_stat_transpose() const { return transpose().n_stat(); }

long Partition::norm_sq() const {
    long s = 0;
    for (int p : parts_) s += static_cast<long>(p) * p;
    return s;
}

long Partition::kappa() const { return 2 * (n_stat_transpose() - n_stat()); }

bool Partition::contains_box(int col, int row) const {
    return col >= 0 && row >= 0 && row < length() && col < parts_[static_cast<size_t>(row)];
}

std::tuple<int, int, int, int> Partition::arm_leg(int col, int row) const {
    if (!contains_box(col, row)) throw box_outside_diagram_error();
    int a = parts_[static_cast<size_t>(row)] - 1 - col;
    int l = 0;
    for (int r = row + 1; r < length(); ++r)
        if (parts_[static_cast<size_t>(r)] > col) ++l;
    return {a, l, col, row};
}

std::vector<std::pair<int, int>> Partition::boxes() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(size()));
    for (int row = 0; row < length(); ++row)
        for (int col = 0; col < parts_[static_cast<size_t>(row)]; ++col)
            out.push_back({col, row});
    return out;
}

Partition Partition::strip_full_columns(int N) const {
    if (length() > N) throw too_many_rows_error();
    if (length() < N) return *this;
    int cut = parts_.back();
    std::vector<int> out;
    out.reserve(parts_.size());
    for (int p : parts_)
        if (p - cut > 0) out.push_back(p - cut);
    return Partition(std::move(out));
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // reverse-lexicographic within a degree: (n) first
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

bool Partition::dominated_by(const Partition& a, const Partition& b) {
    long pa = 0, pb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return a.size() == b.size();
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    // descending enumeration: first part from n down to 1
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto ps = partitions_of(d);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

PartitionStats partition_stats(const Partition& p) {
    return PartitionStats{p.size(), p.n_stat(), p.n_stat_transpose(), p.norm_sq(), p.kappa(),
                          p.transpose()};
}

Poly<Rat> box_poly(const Partition& p) {
    std::vector<Poly<Rat>::Term> ts;
    for (auto [col, row] : p.boxes()) {
        Mono m = mono_zero();
        m[VQ] = col;
        m[VT] = row;
        ts.push_back({m, Rat(1)});
    }
    return Poly<Rat>::from_terms(1, std::move(ts));
}

std::pair<RatFunc, RatFunc> box_generating(const Partition& p) {
    RatFunc B = RatFunc(box_poly(p));
    RatFunc one_minus_q = RatFunc::one() - RatFunc::variable(VQ);
    RatFunc one_minus_t = RatFunc::one() - RatFunc::variable(VT);
    RatFunc A = RatFunc::one() - one_minus_q * one_minus_t * B;
    return {B, A};
}

std::pair<RatFunc, RatFunc> hook_products(const Partition& p) {
    RatFunc c = RatFunc::one(), cp = RatFunc::one();
    for (auto [col, row] : p.boxes()) {
        auto [a, l, ac, lc] = p.arm_leg(col, row);
        (void)ac;
        (void)lc;
        Poly<Rat> f = Poly<Rat>::one();
        Mono m = mono_zero();
        m[VQ] = a;
        m[VT] = l + 1;
        f = f - Poly<Rat>::from_terms(1, {{m, Rat(1)}});
        c *= RatFunc(f);
        Poly<Rat> g = Poly<Rat>::one();
        Mono m2 = mono_zero();
        m2[VQ] = a + 1;
        m2[VT] = l;
        g = g - Poly<Rat>::from_terms(1, {{m2, Rat(1)}});
        cp *= RatFunc(g);
    }
    return {c, cp};
}

} // namespace macref
