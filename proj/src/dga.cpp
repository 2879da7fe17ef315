#include "retorix/dga.hpp"

#include <algorithm>

#include "retorix/hochster.hpp"
#include "retorix/parallel.hpp"

namespace retorix {

namespace {

struct Gen {
    int idx;    // 1-based
    bool is_u;
};

std::vector<Gen> word_of(const Monomial& m) {
    std::vector<Gen> w;
    uint64_t rest = m.omega;
    while (rest) {
        const int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        w.push_back({v, ((m.sigma >> (v - 1)) & 1) != 0});
    }
    return w;
}

}  // namespace

std::optional<SignedMonomial> mul_monomial(const Monomial& a, const Monomial& b, ProductMode mode) {
    std::vector<Gen> w = word_of(a);
    int sign = 1;
    for (const Gen& g : word_of(b)) {
        // Moving g leftward to its slot: a u flips sign for every u it passes.
        if (g.is_u) {
            int flips = 0;
            for (const Gen& h : w)
                if (h.idx > g.idx && h.is_u) ++flips;
            if (flips & 1) sign = -sign;
        }
        auto it = std::lower_bound(w.begin(), w.end(), g.idx,
                                   [](const Gen& h, int idx) { return h.idx < idx; });
        if (it != w.end() && it->idx == g.idx) {
            // Same-index collision, left factor first.
            if (it->is_u && g.is_u) return std::nullopt;  // u·u = 0
            if (mode == ProductMode::kRule && (it->is_u != g.is_u)) return std::nullopt;
            if (it->is_u && !g.is_u) {
                // u·t = u: keep
            } else if (!it->is_u && g.is_u) {
                // t·u = -u
                it->is_u = true;
                sign = -sign;
            } else {
                // t·t = 1
                w.erase(it);
            }
        } else {
            w.insert(it, g);
        }
    }
    SignedMonomial out;
    out.sign = sign;
    uint64_t sigma = 0, omega = 0;
    for (const Gen& h : w) {
        omega |= uint64_t{1} << (h.idx - 1);
        if (h.is_u) sigma |= uint64_t{1} << (h.idx - 1);
    }
    out.mono = Monomial(sigma, omega);
    return out;
}

void cochain_add_term(Cochain& c, const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    Cochain out = a;
    for (const auto& [m, v] : b) cochain_add_term(out, m, v);
    return out;
}

Cochain cochain_scale(const Cochain& a, const Rational& s) {
    Cochain out;
    if (s == 0) return out;
    for (const auto& [m, v] : a) out.emplace(m, v * s);
    return out;
}

bool cochain_is_zero(const Cochain& a) { return a.empty(); }

Cochain cochain_mul(const SimplicialComplex& K, const Cochain& a, const Cochain& b, ProductMode mode) {
    Cochain out;
    for (const auto& [ma, va] : a) {
        for (const auto& [mb, vb] : b) {
            auto prod = mul_monomial(ma, mb, mode);
            if (!prod) continue;
            if (!K.is_face(prod->mono.sigma)) continue;  // Stanley-Reisner
            cochain_add_term(out, prod->mono, va * vb * prod->sign);
        }
    }
    return out;
}

Cochain differential(const SimplicialComplex& K, const Cochain& c) {
    Cochain out;
    for (const auto& [m, v] : c) {
        uint64_t rest = m.omega & ~m.sigma;
        while (rest) {
            const int i = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            const uint64_t bit = uint64_t{1} << (i - 1);
            const uint64_t new_sigma = m.sigma | bit;
            if (!K.is_face(new_sigma)) continue;
            const uint64_t below = bit - 1;
            const int sign = (popcount64(m.sigma & below) & 1) ? -1 : 1;
            cochain_add_term(out, Monomial(new_sigma, m.omega), v * sign);
        }
    }
    return out;
}

Cochain act(const Gf2Vector& g, const Cochain& c) {
    Cochain out;
    for (const auto& [m, v] : c) {
        const int parity = popcount64(m.omega & g.bits()) & 1;
        out.emplace(m, parity ? -v : v);
    }
    return out;
}

std::map<uint64_t, Cochain> split_by_omega(const Cochain& c) {
    std::map<uint64_t, Cochain> out;
    for (const auto& [m, v] : c) out[m.omega].emplace(m, v);
    return out;
}

// ---------------------------------------------------------------------------
// GradedBasis

struct GradedBasis::Tower {
    uint64_t omega = 0;
    int top = -1;                                // top cardinality of K_ω
    std::vector<std::vector<uint64_t>> sigmas;   // [p] = faces of card p
    std::vector<QMatrix> d;                      // d[p]: R^{p,ω} -> R^{p+1,ω}
    std::vector<Piece> pieces;                   // [p]
};

struct GradedBasis::State {
    SimplicialComplex K;
    long long face_guard = 0;
    std::mutex mutex;
    std::map<uint64_t, std::shared_ptr<Tower>> towers;
};

GradedBasis::GradedBasis(const SimplicialComplex& K, long long face_guard)
    : state_(std::make_shared<State>()) {
    state_->K = K;
    state_->face_guard = face_guard;
}

const SimplicialComplex& GradedBasis::complex() const { return state_->K; }

const GradedBasis::Tower& GradedBasis::tower(uint64_t omega) const {
    {
        std::lock_guard<std::mutex> lock(state_->mutex);
        auto it = state_->towers.find(omega);
        if (it != state_->towers.end()) return *it->second;
    }

    auto t = std::make_shared<Tower>();
    t->omega = omega;
    const SimplicialComplex sub = induced_subcomplex(state_->K, omega);
    if (sub.is_void()) throw domain_error("cohomology basis of the void complex is empty");
    if (sub.face_count() > state_->face_guard)
        throw capacity_error("R^K_ω exceeds the face guard for basis construction");
    t->top = sub.top_card();

    const ReducedComplexQ simp = build_reduced_complex(sub);
    t->sigmas.resize(static_cast<size_t>(t->top) + 1);
    for (int p = 0; p <= t->top; ++p) t->sigmas[static_cast<size_t>(p)] = sub.faces_of_card(p);

    // Differential matrices from the DGA side, then the f_ω chain-map
    // assertion against the simplicial coboundary.
    t->d.resize(static_cast<size_t>(t->top) + 1);
    for (int p = 0; p <= t->top; ++p) {
        const auto& lower = t->sigmas[static_cast<size_t>(p)];
        const auto* upper = p + 1 <= t->top ? &t->sigmas[static_cast<size_t>(p + 1)] : nullptr;
        QMatrix mat(upper ? static_cast<int>(upper->size()) : 0, static_cast<int>(lower.size()));
        for (size_t col = 0; col < lower.size(); ++col) {
            Cochain dm = differential(state_->K, Cochain{{Monomial(lower[col], omega), Rational(1)}});
            for (const auto& [mono, v] : dm) {
                if (mono.omega != omega) throw internal_error("differential left R^K_ω");
                if (!upper) throw internal_error("differential above the top degree");
                const auto it = std::lower_bound(upper->begin(), upper->end(), mono.sigma);
                if (it == upper->end() || *it != mono.sigma)
                    throw internal_error("differential produced a non-face");
                mat.at(static_cast<int>(it - upper->begin()), static_cast<int>(col)) = v;
            }
        }
        // chain-map check: d on u_σt_{ω∖σ} must match δ on σ* entrywise
        const SparseCoboundary& delta = simp.delta[static_cast<size_t>(p)];
        for (size_t col = 0; col < lower.size(); ++col) {
            QVector dense(static_cast<size_t>(mat.rows()), Rational(0));
            for (const auto& [row, val] : delta.columns[col]) dense[static_cast<size_t>(row)] = val;
            for (int row = 0; row < mat.rows(); ++row)
                if (mat.at(row, static_cast<int>(col)) != dense[static_cast<size_t>(row)])
                    throw internal_error("f_ω chain-map property failed: sign conventions disagree");
        }
        t->d[static_cast<size_t>(p)] = std::move(mat);
    }

    // Quotient bases per degree, dimensions checked against the
    // independent simplicial ranks.
    const std::vector<long long> rb = reduced_betti(sub);
    t->pieces.resize(static_cast<size_t>(t->top) + 1);
    for (int p = 0; p <= t->top; ++p) {
        Piece& piece = t->pieces[static_cast<size_t>(p)];
        piece.p = p;
        piece.omega = omega;
        piece.sigmas = t->sigmas[static_cast<size_t>(p)];
        const QMatrix& dp = t->d[static_cast<size_t>(p)];
        std::vector<QVector> Z = kernel_basis_q(dp);
        std::vector<QVector> B;
        if (p >= 1) {
            const QMatrix& dprev = t->d[static_cast<size_t>(p - 1)];
            for (int col = 0; col < dprev.cols(); ++col) {
                QVector image(static_cast<size_t>(dprev.rows()), Rational(0));
                for (int row = 0; row < dprev.rows(); ++row) image[static_cast<size_t>(row)] = dprev.at(row, col);
                B.push_back(std::move(image));
            }
        }
        piece.quotient = QuotientBasis(Z, B);
        const long long expected = (static_cast<size_t>(p) < rb.size()) ? rb[static_cast<size_t>(p)] : 0;
        if (piece.quotient.dimension() != expected)
            throw internal_error("H^{p,ω} dimension disagrees with the simplicial side");
        for (const QVector& rep : piece.quotient.representatives()) {
            Cochain c;
            for (size_t i = 0; i < rep.size(); ++i)
                if (rep[i] != 0) c.emplace(Monomial(piece.sigmas[i], omega), rep[i]);
            piece.reps.push_back(std::move(c));
        }
    }

    std::lock_guard<std::mutex> lock(state_->mutex);
    auto [it, inserted] = state_->towers.try_emplace(omega, t);
    return *it->second;
}

const GradedBasis::Piece& GradedBasis::piece(int p, uint64_t omega) const {
    if (p < 0) throw domain_error("negative cohomological degree");
    const Tower& t = tower(omega);
    if (p > t.top) throw domain_error("no basis piece above the top degree of R^K_ω");
    return t.pieces[static_cast<size_t>(p)];
}

CohomologyClass GradedBasis::basis_class(int p, uint64_t omega, int index) const {
    const Piece& pc = piece(p, omega);
    if (index < 0 || index >= pc.dimension()) throw domain_error("basis index out of range");
    CohomologyClass out;
    out.p = p;
    out.omega = omega;
    out.coords.assign(static_cast<size_t>(pc.dimension()), Rational(0));
    out.coords[static_cast<size_t>(index)] = 1;
    out.representative = pc.reps[static_cast<size_t>(index)];
    return out;
}

QVector GradedBasis::vectorize(const Piece& pc, const Cochain& c) const {
    QVector v(pc.sigmas.size(), Rational(0));
    for (const auto& [m, coeff] : c) {
        if (m.omega != pc.omega || m.degree() != pc.p)
            throw internal_error("cochain is not homogeneous of the expected bidegree");
        const auto it = std::lower_bound(pc.sigmas.begin(), pc.sigmas.end(), m.sigma);
        if (it == pc.sigmas.end() || *it != m.sigma) throw internal_error("monomial outside R^{p,ω}");
        v[static_cast<size_t>(it - pc.sigmas.begin())] = coeff;
    }
    return v;
}

CohomologyClass GradedBasis::class_from_cocycle(int p, uint64_t omega, const Cochain& rep) const {
    const Tower& t = tower(omega);
    CohomologyClass out;
    out.p = p;
    out.omega = omega;
    out.representative = rep;
    if (p > t.top) {
        if (!rep.empty()) throw internal_error("nonzero cochain above the top degree");
        out.coords = {};
        return out;
    }
    const Piece& pc = t.pieces[static_cast<size_t>(p)];
    try {
        out.coords = pc.quotient.coordinates(vectorize(pc, rep));
    } catch (const domain_error&) {
        throw internal_error("expected a cocycle representative; coordinates do not exist");
    }
    return out;
}

std::optional<Cochain> GradedBasis::exactness_witness(int p, uint64_t omega, const Cochain& z) const {
    const Tower& t = tower(omega);
    if (z.empty()) return Cochain{};
    if (p > t.top || p < 1) return std::nullopt;
    const QMatrix& d = t.d[static_cast<size_t>(p - 1)];  // R^{p-1} -> R^p
    const Piece& target = t.pieces[static_cast<size_t>(p)];
    QVector zv = vectorize(target, z);
    // Solve d x = z by elimination on the augmented matrix.
    QMatrix aug(d.rows(), d.cols() + 1);
    for (int i = 0; i < d.rows(); ++i) {
        for (int j = 0; j < d.cols(); ++j) aug.at(i, j) = d.at(i, j);
        aug.at(i, d.cols()) = zv[static_cast<size_t>(i)];
    }
    QRref r = rref_q(aug);
    QVector x(static_cast<size_t>(d.cols()), Rational(0));
    for (int i = 0; i < r.rank; ++i) {
        const int pc = r.pivot_cols[static_cast<size_t>(i)];
        if (pc == d.cols()) return std::nullopt;  // inconsistent: z not in the image
        x[static_cast<size_t>(pc)] = r.reduced.at(i, d.cols());
    }
    Cochain w;
    const auto& lower = t.sigmas[static_cast<size_t>(p - 1)];
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) w.emplace(Monomial(lower[j], omega), x[j]);
    return w;
}

GradedBasis cohomology_basis(const SimplicialComplex& K, const std::vector<Gf2Vector>& omegas) {
    GradedBasis basis(K);
    parallel_for(static_cast<int>(omegas.size()), [&](int i) {
        basis.piece(0, omegas[static_cast<size_t>(i)].bits());
    });
    return basis;
}

CohomologyClass cup(const GradedBasis& basis, const CohomologyClass& x, const CohomologyClass& y,
                    ProductMode mode) {
    const uint64_t target = x.omega ^ y.omega;
    const Cochain raw = cochain_mul(basis.complex(), x.representative, y.representative, mode);
    Cochain projected;
    for (const auto& [m, v] : raw)
        if (m.omega == target) projected.emplace(m, v);
    return basis.class_from_cocycle(x.p + y.p, target, projected);
}

FullCupResult cup_full_components(const GradedBasis& basis, const CohomologyClass& x,
                                  const CohomologyClass& y) {
    FullCupResult out;
    const uint64_t target = x.omega ^ y.omega;
    const Cochain raw = cochain_mul(basis.complex(), x.representative, y.representative, ProductMode::kFull);
    auto parts = split_by_omega(raw);
    Cochain projected;
    if (auto it = parts.find(target); it != parts.end()) {
        projected = it->second;
        parts.erase(it);
    }
    out.projected = basis.class_from_cocycle(x.p + y.p, target, projected);
    out.off_components = std::move(parts);
    return out;
}

RingStructure ring_structure(const SimplicialComplex& K, const Gf2Matrix& lambda, int max_degree) {
    RingStructure out;
    out.m = K.vertex_count();
    if (max_degree < 0) max_degree = K.top_card() + 1;
    out.characteristic = is_characteristic(K, lambda).ok;

    const std::vector<Gf2Vector> omegas = row_space(lambda);
    GradedBasis basis = cohomology_basis(K, omegas);

    struct Indexed {
        int p;
        uint64_t omega;
        int idx;
    };
    std::vector<Indexed> classes;
    for (const Gf2Vector& w : omegas) {
        const SimplicialComplex sub = induced_subcomplex(K, w.bits());
        if (sub.is_void()) continue;
        for (int p = 0; p <= std::min(max_degree, sub.top_card()); ++p) {
            const auto& pc = basis.piece(p, w.bits());
            for (int i = 0; i < pc.dimension(); ++i) classes.push_back({p, w.bits(), i});
        }
    }
    std::sort(classes.begin(), classes.end(), [](const Indexed& a, const Indexed& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.omega != b.omega) return a.omega < b.omega;
        return a.idx < b.idx;
    });

    for (const Indexed& c : classes) {
        const auto& pc = basis.piece(c.p, c.omega);
        out.basis.push_back({c.p, c.omega, pc.reps[static_cast<size_t>(c.idx)]});
    }
    for (size_t i = 0; i < classes.size(); ++i) {
        for (size_t j = i; j < classes.size(); ++j) {
            const int p = classes[i].p + classes[j].p;
            if (p > max_degree) continue;
            CohomologyClass xi = basis.basis_class(classes[i].p, classes[i].omega, classes[i].idx);
            CohomologyClass yj = basis.basis_class(classes[j].p, classes[j].omega, classes[j].idx);
            CohomologyClass prod = cup(basis, xi, yj, ProductMode::kRule);
            out.products.push_back({static_cast<int>(i), static_cast<int>(j), p, prod.omega,
                                    prod.coords});
        }
    }
    return out;
}

}  // namespace retorix
