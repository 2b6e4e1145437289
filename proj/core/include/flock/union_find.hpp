#pragma once

#include <numeric>
#include <vector>

namespace flock {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];  // path halving
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
    }

    bool same(int a, int b) { return find(a) == find(b); }
    int component_size(int x) { return size_[find(x)]; }
    int component_count() const { return components_; }
    int size() const { return static_cast<int>(parent_.size()); }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

}  // namespace flock
