#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "hocat/sset.hpp"

namespace hocat {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

struct SNFResult {
    std::vector<BigInt> diagonal;  // d1 | d2 | ... (zeros trail)
    IntMatrix U, V;                // U * m * V = D, both unimodular
};

// Exact Smith normal form with minimal-absolute-value pivoting.
SNFResult smith_normal_form(const IntMatrix& m);

// U * m * V == diag check, for tests.
bool snf_certifies(const IntMatrix& m, const SNFResult& r);

// Chain complex of an (already truncated) simplicial set on its
// nondegenerate simplices: boundary[n] maps C_n -> C_{n-1}.
struct ChainComplex {
    std::vector<int> dims;            // nondegenerate counts per dimension
    std::vector<IntMatrix> boundary;  // boundary[n], n >= 1
    CheckReport validate() const;     // dd = 0
};

ChainComplex chain_complex(const TruncSSet& x);

struct HomologyResult {
    int trusted = 0;  // homology reported for dimensions 0..trusted
    std::vector<int> betti;
    std::vector<std::vector<BigInt>> torsion;  // divisibility chains

    bool operator==(const HomologyResult& o) const {
        return trusted == o.trusted && betti == o.betti && torsion == o.torsion;
    }
    std::string str() const;
};

// Integral homology in the trusted range 0..cap-1.
HomologyResult homology(const TruncSSet& x);

} // namespace hocat
