#ifndef ASAI_PARTITION_HPP
#define ASAI_PARTITION_HPP

#include <vector>

namespace asai {

// Partitions are weakly decreasing tuples of nonnegative integers. Trailing
// zeros are allowed and carry no information.
using Partition = std::vector<long>;

inline bool is_partition(const Partition& lam) {
    for (size_t k = 0; k < lam.size(); ++k) {
        if (lam[k] < 0) return false;
        if (k > 0 && lam[k] > lam[k - 1]) return false;
    }
    return true;
}

inline long partition_weight(const Partition& lam) {
    long w = 0;
    for (long p : lam) w += p;
    return w;
}

inline long nonzero_parts(const Partition& lam) {
    long m = 0;
    for (long p : lam)
        if (p != 0) ++m;
    return m;
}

inline Partition doubled(const Partition& lam) {
    Partition d = lam;
    for (long& p : d) p *= 2;
    return d;
}

// All partitions of `size` into at most `max_parts` parts, each padded with
// zeros to exactly max_parts entries, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(long size, long max_parts) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, long remaining, long cap) -> void {
        if (remaining == 0) {
            Partition p = cur;
            p.resize(max_parts, 0);
            out.push_back(std::move(p));
            return;
        }
        if (static_cast<long>(cur.size()) == max_parts) return;
        for (long next = std::min(remaining, cap); next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    if (size == 0) {
        out.push_back(Partition(max_parts, 0));
        return out;
    }
    if (max_parts <= 0) return out;
    rec(rec, size, size);
    return out;
}

// Partitions of every size 0..max_size, ascending in size.
inline std::vector<Partition> partitions_up_to(long max_size, long max_parts) {
    std::vector<Partition> out;
    for (long k = 0; k <= max_size; ++k) {
        auto layer = partitions_of(k, max_parts);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace asai

#endif
