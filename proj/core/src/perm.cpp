#include "hocat/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace hocat {

Perm::Perm(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Perm: image is not a bijection");
        seen[v - 1] = true;
    }
}

Perm Perm::transposition(int n, int i) {
    assert(i >= 1 && i < n);
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::reversal(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= degree(); ++i) v[img_[i - 1] - 1] = i;
    return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& rhs) const {
    assert(degree() == rhs.degree());
    std::vector<int> v(img_.size());
    for (int i = 1; i <= degree(); ++i) v[i - 1] = img_[rhs.img_[i - 1] - 1];
    return Perm(std::move(v));
}

Perm Perm::block_sum(const Perm& rhs) const {
    std::vector<int> v;
    v.reserve(img_.size() + rhs.img_.size());
    for (int x : img_) v.push_back(x);
    int n = degree();
    for (int x : rhs.img_) v.push_back(x + n);
    return Perm(std::move(v));
}

Perm Perm::block_perm(const Perm& p, const std::vector<int>& sizes) {
    int n = p.degree();
    assert(static_cast<int>(sizes.size()) == n);
    std::vector<int> old_off(n + 1, 0);
    for (int i = 1; i <= n; ++i) old_off[i] = old_off[i - 1] + sizes[i - 1];
    Perm pinv = p.inverse();
    // new layout lists block p^{-1}(1), p^{-1}(2), ...
    std::vector<int> new_off(n + 1, 0);
    for (int s = 1; s <= n; ++s) new_off[s] = new_off[s - 1] + sizes[pinv(s) - 1];
    std::vector<int> v(old_off[n]);
    for (int i = 1; i <= n; ++i) {
        int slot = p(i);
        for (int j = 1; j <= sizes[i - 1]; ++j)
            v[old_off[i - 1] + j - 1] = new_off[slot - 1] + j;
    }
    return Perm(std::move(v));
}

int Perm::inversions() const {
    int n = degree(), c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img_[i] > img_[j]) ++c;
    return c;
}

std::string Perm::str() const {
    std::string s = "(";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(img_[i]);
    }
    return s + ")";
}

std::vector<Perm> Perm::all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Perm sorting_perm(const std::vector<int>& values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return values[a - 1] < values[b - 1]; });
    return Perm(std::move(idx));
}

} // namespace hocat
