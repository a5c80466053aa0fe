#include "hocat/bar.hpp"

#include <random>

namespace hocat {

int BarComplex::face_obj(int l, int i, int obj) const {
    const FreeAlgebra& F = level[l];
    const auto& fo = F.objs[obj];
    if (i == 0) {
        // evaluate in the layer below
        const Algebra& lower = l == 0 ? *base : *level[l - 1].alg;
        return evaluate(lower, fo.A, fo.xs);
    }
    if (l == 0) throw std::invalid_argument("bar face out of range");
    std::vector<int> mapped;
    for (int w : fo.xs) mapped.push_back(face_obj(l - 1, i - 1, w));
    return level[l - 1].intern_obj(fo.A, mapped);
}

int BarComplex::face_mor(int l, int i, int mor) const {
    const FreeAlgebra& F = level[l];
    const auto& fm = F.mors[mor];
    return face_mor_data(l, i, {fm.am, fm.gs});
}

int BarComplex::face_mor_data(int l, int i, const MorData& m) const {
    if (i == 0) {
        const Algebra& lower = l == 0 ? *base : *level[l - 1].alg;
        return evaluate_mor(lower, m.am, m.gs);
    }
    if (l == 0) throw std::invalid_argument("bar face out of range");
    std::vector<int> mapped;
    for (int g : m.gs) mapped.push_back(face_mor(l - 1, i - 1, g));
    return level[l - 1].intern_mor(m.am, mapped);
}

int BarComplex::degen_obj(int l, int i, int obj) const {
    if (i == -1) {
        // wrap with the operad unit
        return level[l + 1].intern_obj(base->op->unit(), {obj});
    }
    const FreeAlgebra& F = level[l];
    const auto& fo = F.objs[obj];
    if (l == 0) throw std::invalid_argument("bar degeneracy out of range");
    std::vector<int> mapped;
    for (int w : fo.xs) mapped.push_back(degen_obj(l - 1, i - 1, w));
    return level[l + 1].intern_obj(fo.A, mapped);
}

BarComplex::MorData BarComplex::degen_mor(int l, int i, int mor) const {
    if (i == -1) {
        const Algebra& here = l < 0 ? *base : *level[l].alg;
        (void)here;
        OperadMor unit_id = base->op->identity(base->op->unit());
        return {unit_id, {mor}};
    }
    const FreeAlgebra& F = level[l];
    const auto& fm = F.mors[mor];
    if (l == 0) throw std::invalid_argument("bar degeneracy out of range");
    std::vector<int> mapped;
    for (int g : fm.gs) {
        auto md = degen_mor(l - 1, i - 1, g);
        mapped.push_back(level[l].intern_mor(md.am, md.gs));
    }
    return {fm.am, mapped};
}

BarComplex bar_complex(std::shared_ptr<const Algebra> X, int degrees, int cap,
                       const EnumBudget& bd) {
    if (degrees > 3)
        throw std::invalid_argument("bar_complex: degrees capped at 3");
    BarComplex B;
    B.base = X;
    B.cap = cap;
    B.degrees = degrees;
    const FinCat* prev = &X->carrier;
    for (int l = 0; l <= degrees; ++l) {
        B.level.push_back(free_algebra(*prev, X->op, cap, bd));
        prev = &B.level.back().alg->carrier;
    }
    return B;
}

CheckReport check_bar(const BarComplex& B, int sample, unsigned seed) {
    CheckReport rep;
    rep.subject = "bar construction identities";
    std::mt19937 rng(seed);
    auto upto = [&](int n) {
        return n <= 1 ? 0 : std::uniform_int_distribution<int>(0, n - 1)(rng);
    };

    // object-level identities on everything materialized
    for (int l = 0; l <= B.degrees; ++l) {
        int nobj = static_cast<int>(B.level[l].objs.size());
        for (int o = 0; o < nobj; ++o) {
            // d0 s_{-1} = id
            if (l < B.degrees) {
                ++rep.checked;
                try {
                    if (B.face_obj(l + 1, 0, B.degen_obj(l, -1, o)) != o)
                        rep.fail("d0 s-1 = id", "level " + std::to_string(l));
                } catch (const CapError&) {
                    ++rep.skipped;
                }
            }
            // d_i d_j = d_{j-1} d_i for i < j (includes the augmented
            // relation eps d0 = eps d1 at the bottom)
            if (l >= 1) {
                for (int j = 1; j <= l + 1; ++j)
                    for (int i = 0; i < j; ++i) {
                        ++rep.checked;
                        try {
                            int a = B.face_obj(l - 1, i, B.face_obj(l, j, o));
                            int b = B.face_obj(l - 1, j - 1, B.face_obj(l, i, o));
                            if (a != b)
                                rep.fail("dd identity",
                                         "level " + std::to_string(l) + " d" +
                                             std::to_string(i) + " d" + std::to_string(j));
                        } catch (const CapError&) {
                            ++rep.skipped;
                        }
                    }
            }
            // d_i s_{-1} = s_{-1} d_{i-1} for i > 0
            if (l >= 1 && l < B.degrees) {
                for (int i = 1; i <= l + 1; ++i) {
                    ++rep.checked;
                    try {
                        int a = B.face_obj(l + 1, i, B.degen_obj(l, -1, o));
                        int b = B.degen_obj(l - 1, -1, B.face_obj(l, i - 1, o));
                        if (a != b) rep.fail("ds-1 identity", "level " + std::to_string(l));
                    } catch (const CapError&) {
                        ++rep.skipped;
                    }
                }
            }
            // s_{-1} s_i = s_{i+1} s_{-1}
            if (l + 2 <= B.degrees && l >= 1) {
                for (int i = -1; i < l; ++i) {
                    ++rep.checked;
                    try {
                        int a = B.degen_obj(l + 1, -1, B.degen_obj(l, i, o));
                        int b = B.degen_obj(l + 1, i + 1, B.degen_obj(l, -1, o));
                        if (a != b) rep.fail("ss identity", "level " + std::to_string(l));
                    } catch (const CapError&) {
                        ++rep.skipped;
                    }
                }
            }
        }
    }

    // morphism-level identities, sampled
    for (int t = 0; t < sample; ++t) {
        int l = upto(std::min(B.degrees, 1) + 1);
        int nm = static_cast<int>(B.level[l].mors.size());
        if (nm == 0) continue;
        int m = upto(nm);
        ++rep.checked;
        try {
            if (l < B.degrees) {
                auto s = B.degen_mor(l, -1, m);
                if (B.face_mor_data(l + 1, 0, s) != m)
                    rep.fail("d0 s-1 = id (morphisms)", "level " + std::to_string(l));
            }
            if (l >= 1) {
                for (int j = 1; j <= l + 1; ++j)
                    for (int i = 0; i < j; ++i) {
                        int a = B.face_mor(l - 1, i, B.face_mor(l, j, m));
                        int b = B.face_mor(l - 1, j - 1, B.face_mor(l, i, m));
                        if (a != b) rep.fail("dd identity (morphisms)", "");
                    }
            }
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }
    return rep;
}

} // namespace hocat
