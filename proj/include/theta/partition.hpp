#pragma once

#include <vector>
#include <string>

namespace theta {

// Weakly decreasing positive parts; trailing zeros trimmed on construction.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { trim(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { trim(); }

    void trim() {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }
    bool empty() const { return parts.empty(); }

    bool is_valid() const {
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) return false;
        return parts.empty() || parts.back() >= 1;
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (parts[i] < mu.parts[i]) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts.empty()) return Partition{};
        c.resize(parts[0], 0);
        for (int p : parts)
            for (int j = 0; j < p; ++j) c[j]++;
        return Partition(std::move(c));
    }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// All partitions of total `size` with at most `max_len` parts.
std::vector<Partition> partitions_of(int size, int max_len);

} // namespace theta
