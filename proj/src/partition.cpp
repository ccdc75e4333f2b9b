#include "theta/partition.hpp"

namespace theta {

namespace {

void gen(int remaining, int max_part, int slots, std::vector<int>& cur,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int size, int max_len) {
    std::vector<Partition> out;
    if (size < 0 || max_len < 0) return out;
    std::vector<int> cur;
    gen(size, size, max_len, cur, out);
    return out;
}

} // namespace theta
