#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hocat {

// A permutation of {1..n}, stored as the image sequence img[i-1] = p(i).
// Products compose like functions: (p*q)(i) = p(q(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                          // identity on {1..n}
    explicit Perm(std::vector<int> image);         // 1-based images

    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int i);       // swaps i, i+1
    static Perm reversal(int n);                   // i -> n+1-i

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }

    bool is_identity() const;
    Perm inverse() const;
    Perm operator*(const Perm& rhs) const;         // function composition
    bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
    bool operator!=(const Perm& rhs) const { return !(*this == rhs); }
    bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

    // Direct sum: acts on {1..n+m}, this on the first block, rhs shifted.
    Perm block_sum(const Perm& rhs) const;

    // The permutation of {1..sum(sizes)} that moves the i-th size-block to
    // where this permutation sends the letter i, keeping blocks intact.
    // block_perm(p, sizes)(offset_i + j) = offset'_{p(i)} + j, where offset'
    // is computed in the rearranged layout.  This is the block permutation
    // appearing in the operad equivariance law.
    static Perm block_perm(const Perm& p, const std::vector<int>& sizes);

    int inversions() const;                        // Coxeter length
    const std::vector<int>& image() const { return img_; }
    std::string str() const;

    // All n! permutations of {1..n}, lexicographic by image.
    static std::vector<Perm> all(int n);

private:
    std::vector<int> img_;
};

// Sorting permutation: returns p with values[p(i)-1] ascending and p
// minimal (stable).  values must be distinct.
Perm sorting_perm(const std::vector<int>& values);

} // namespace hocat
