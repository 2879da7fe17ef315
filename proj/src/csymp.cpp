#include "retorix/csymp.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "retorix/hochster.hpp"

namespace retorix {

namespace {

struct Candidate {
    int p = 0;
    uint64_t omega = 0;
    int index = 0;
};

// Basis classes of the requested degrees over the row space of Λ, ordered
// by increasing |ω| then ω then index.
std::vector<Candidate> candidate_classes(const SimplicialComplex& K, const Gf2Matrix& lambda,
                                         const std::vector<int>& degrees) {
    const GradedBettiTable table = graded_betti(K, lambda);
    std::vector<Candidate> out;
    for (const auto& [key, dim] : table.entries) {
        const auto [p, omega] = key;
        if (std::find(degrees.begin(), degrees.end(), p) == degrees.end()) continue;
        for (int i = 0; i < dim; ++i) out.push_back({p, omega, i});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        const int wa = popcount64(a.omega), wb = popcount64(b.omega);
        if (wa != wb) return wa < wb;
        if (a.omega != b.omega) return a.omega < b.omega;
        if (a.p != b.p) return a.p < b.p;
        return a.index < b.index;
    });
    if (static_cast<int>(out.size()) > kCsympClassGuard)
        throw capacity_error("too many candidate classes for the c-symplectic search");
    return out;
}

struct Search {
    const GradedBasis& basis;
    const std::vector<Candidate>& candidates;
    uint64_t full = 0;
    int max_total_degree = 0;
    std::optional<int> exact_count;  // decide: exactly n classes
    // Failure memo: (next start, classes used, partial class) that cannot be
    // completed. Exact rational coordinates make the key sound.
    std::set<std::tuple<size_t, int, int, uint64_t, QVector>> failed;
    std::vector<int> chosen;

    bool done(const CohomologyClass& partial, int used) const {
        if (partial.is_zero()) return false;
        if (exact_count && used != *exact_count) return false;
        return partial.omega == full;
    }

    bool extend(size_t start, int used, const CohomologyClass* partial) {
        if (partial && done(*partial, used)) return true;
        if (exact_count && used >= *exact_count) return false;
        if (partial && partial->p >= max_total_degree) return false;
        for (size_t i = start; i < candidates.size(); ++i) {
            const Candidate& c = candidates[i];
            if (partial && partial->p + c.p > max_total_degree) continue;
            CohomologyClass next =
                partial ? cup(basis, *partial, basis.basis_class(c.p, c.omega, c.index), ProductMode::kRule)
                        : basis.basis_class(c.p, c.omega, c.index);
            if (next.is_zero()) continue;
            auto key = std::make_tuple(i, used + 1, next.p, next.omega, next.coords);
            if (failed.count(key)) continue;
            chosen.push_back(static_cast<int>(i));
            if (extend(i, used + 1, &next)) return true;
            chosen.pop_back();
            failed.insert(std::move(key));
        }
        return false;
    }
};

CsympWitness make_witness(const GradedBasis& basis, const std::vector<Candidate>& candidates,
                          const std::vector<int>& chosen) {
    CsympWitness w;
    for (int i : chosen) {
        const Candidate& c = candidates[static_cast<size_t>(i)];
        w.classes.push_back(basis.basis_class(c.p, c.omega, c.index));
    }
    CohomologyClass acc = w.classes.front();
    for (size_t i = 1; i < w.classes.size(); ++i) acc = cup(basis, acc, w.classes[i], ProductMode::kRule);
    w.product = acc;
    return w;
}

}  // namespace

void verify_witness(const SimplicialComplex& K, const CsympWitness& witness) {
    if (witness.classes.empty()) throw internal_error("witness without classes");
    uint64_t acc_omega = 0;
    for (const auto& cls : witness.classes) {
        if (!cochain_is_zero(differential(K, cls.representative)))
            throw internal_error("witness class representative is not a cocycle");
        acc_omega ^= cls.omega;
    }
    if (acc_omega != K.ambient_mask())
        throw internal_error("witness ω's do not symmetric-difference to [m]");
    GradedBasis basis(K);
    CohomologyClass acc = witness.classes.front();
    for (size_t i = 1; i < witness.classes.size(); ++i) {
        // full mode: the graded law is certified on every step
        FullCupResult step = cup_full_components(basis, acc, witness.classes[i]);
        for (const auto& [omega, component] : step.off_components) {
            auto wtn = basis.exactness_witness(acc.p + witness.classes[i].p, omega, component);
            if (!wtn) throw internal_error("off-component of a witness product is not exact");
        }
        acc = step.projected;
    }
    if (acc.is_zero()) throw internal_error("witness product vanishes");
    if (acc.omega != witness.product.omega || acc.coords != witness.product.coords)
        throw internal_error("witness product does not reproduce");
}

CsympResult decide_c_symplectic(const SimplicialComplex& K, const Gf2Matrix* lambda) {
    CsympResult out;
    if (K.is_void() || K.top_card() < 1) {
        out.reason = "no facets";
        return out;
    }
    if (!K.is_pure() || K.top_card() % 2 != 0) {
        out.reason = "odd dimension";
        return out;
    }
    const int n = K.top_card() / 2;
    const Gf2Matrix lam = lambda ? *lambda : Gf2Matrix::identity(K.vertex_count());

    const std::vector<Candidate> candidates = candidate_classes(K, lam, {2});
    GradedBasis basis(K);
    Search search{basis, candidates, K.ambient_mask(), 2 * n, n, {}, {}};
    if (search.extend(0, 0, nullptr)) {
        out.value = true;
        out.witness = make_witness(basis, candidates, search.chosen);
        verify_witness(K, *out.witness);
    } else {
        out.reason = "no nonzero product of degree-2 classes reaches the top";
    }
    return out;
}

CsympWitness flag_witness(const SimplicialComplex& K) {
    if (K.is_void() || K.top_card() < 1) throw domain_error("flag witness needs a nonempty complex");
    if (!K.is_pure()) throw domain_error("flag witness requires a pure complex");
    if (!is_flag(K)) throw domain_error("flag witness requires a flag complex");
    const int n = K.top_card();
    const int m = K.vertex_count();

    const uint64_t facet = K.facet_masks().front();
    std::vector<int> fv = Gf2Vector(m, facet).vertices();

    // w_i = the vertex opposite v_i across the codimension-two face F - v_i.
    std::vector<int> w(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const uint64_t face = facet & ~(uint64_t{1} << (fv[static_cast<size_t>(i)] - 1));
        const SimplicialComplex lk = link_of(K, face);
        std::vector<int> pts;
        for (uint64_t f : lk.facet_masks()) {
            if (popcount64(f) != 1) throw domain_error("codimension-two face link is not a point pair");
            pts.push_back(std::countr_zero(f) + 1);
        }
        if (pts.size() != 2) throw domain_error("codimension-two face link is not a point pair");
        const int other = (pts[0] == fv[static_cast<size_t>(i)]) ? pts[1] : pts[0];
        if (other == fv[static_cast<size_t>(i)]) throw domain_error("degenerate codimension-two link");
        w[static_cast<size_t>(i)] = other;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[static_cast<size_t>(i)] == w[static_cast<size_t>(j)])
                throw internal_error("opposite vertices collide; complex cannot be flag");

    // Greedy labeling ℓ on V(K) \ facet: ℓ(w_i) = i, and ℓ(v) != i whenever
    // {v, v_i} is an edge. Labels per vertex are independent, so the
    // smallest feasible label works; infeasibility contradicts flagness.
    std::vector<int> label(static_cast<size_t>(m) + 1, 0);  // 1-based, 0 = unlabeled
    auto feasible = [&](int v, int i) {
        const uint64_t edge =
            (uint64_t{1} << (v - 1)) | (uint64_t{1} << (fv[static_cast<size_t>(i - 1)] - 1));
        return !K.is_face(edge);
    };
    for (int i = 1; i <= n; ++i) {
        if (!feasible(w[static_cast<size_t>(i - 1)], i))
            throw internal_error("forced label infeasible; counterexample to the flag construction");
        label[static_cast<size_t>(w[static_cast<size_t>(i - 1)])] = i;
    }
    for (int v = 1; v <= m; ++v) {
        if (facet & (uint64_t{1} << (v - 1))) continue;
        if (!K.is_face(uint64_t{1} << (v - 1))) continue;  // ghost vertices stay unlabeled
        if (label[static_cast<size_t>(v)] != 0) continue;
        int found = 0;
        for (int i = 1; i <= n; ++i)
            if (feasible(v, i)) { found = i; break; }
        if (found == 0)
            throw internal_error("unlabeled vertex adjacent to every facet vertex; counterexample");
        label[static_cast<size_t>(v)] = found;
    }

    // α_i = [u_{v_i} Π_{ℓ(v)=i} t_v]
    GradedBasis basis(K);
    CsympWitness out;
    for (int i = 1; i <= n; ++i) {
        uint64_t omega = uint64_t{1} << (fv[static_cast<size_t>(i - 1)] - 1);
        for (int v = 1; v <= m; ++v)
            if (label[static_cast<size_t>(v)] == i) omega |= uint64_t{1} << (v - 1);
        Cochain rep{{Monomial(uint64_t{1} << (fv[static_cast<size_t>(i - 1)] - 1), omega), Rational(1)}};
        if (!cochain_is_zero(differential(K, rep)))
            throw internal_error("flag construction produced a non-cocycle");
        out.classes.push_back(basis.class_from_cocycle(1, omega, rep));
    }
    CohomologyClass acc = out.classes.front();
    for (size_t i = 1; i < out.classes.size(); ++i)
        acc = cup(basis, acc, out.classes[i], ProductMode::kRule);
    if (acc.is_zero()) throw internal_error("flag witness product vanishes; counterexample");
    out.product = acc;
    verify_witness(K, out);
    return out;
}

CsympResult almost_c_symplectic(const SimplicialComplex& K) {
    CsympResult out;
    if (K.is_void() || K.top_card() < 1) {
        out.reason = "no facets";
        return out;
    }
    if (is_flag(K) && K.is_pure()) {
        try {
            out.value = true;
            out.witness = flag_witness(K);
            return out;
        } catch (const domain_error&) {
            out.value = false;  // fall through to the general search
        }
    }

    const Gf2Matrix lam = Gf2Matrix::identity(K.vertex_count());
    const std::vector<Candidate> candidates = candidate_classes(K, lam, {1, 2});
    GradedBasis basis(K);
    Search search{basis, candidates, K.ambient_mask(), K.top_card(), std::nullopt, {}, {}};
    if (search.extend(0, 0, nullptr)) {
        out.value = true;
        out.witness = make_witness(basis, candidates, search.chosen);
        verify_witness(K, *out.witness);
    } else {
        out.value = false;
        out.reason = "no class set with nonzero product covers [m]";
    }
    return out;
}

}  // namespace retorix
