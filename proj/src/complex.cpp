#include "retorix/complex.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace retorix {

namespace {

// Keep only inclusion-maximal masks.
std::vector<uint64_t> maximal_masks(std::vector<uint64_t> masks) {
    std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
        return popcount64(a) > popcount64(b);
    });
    std::vector<uint64_t> kept;
    for (uint64_t f : masks) {
        bool contained = false;
        for (uint64_t g : kept)
            if ((f & g) == f) { contained = true; break; }
        if (!contained) kept.push_back(f);
    }
    return kept;
}

}  // namespace

bool lex_mask_less(uint64_t a, uint64_t b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& o)
    : m_(o.m_), active_(o.active_), facets_(o.facets_) {}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& o) {
    if (this != &o) {
        m_ = o.m_;
        active_ = o.active_;
        facets_ = o.facets_;
        std::lock_guard<std::mutex> lock(cache_mutex_);
        face_cache_.clear();
        face_cache_built_.clear();
    }
    return *this;
}

SimplicialComplex::SimplicialComplex(SimplicialComplex&& o) noexcept
    : m_(o.m_), active_(o.active_), facets_(std::move(o.facets_)),
      face_cache_(std::move(o.face_cache_)), face_cache_built_(std::move(o.face_cache_built_)) {}

SimplicialComplex& SimplicialComplex::operator=(SimplicialComplex&& o) noexcept {
    if (this != &o) {
        m_ = o.m_;
        active_ = o.active_;
        facets_ = std::move(o.facets_);
        face_cache_ = std::move(o.face_cache_);
        face_cache_built_ = std::move(o.face_cache_built_);
    }
    return *this;
}

SimplicialComplex::SimplicialComplex(int m, const std::vector<std::vector<int>>& facets) {
    if (m < 0) throw domain_error("vertex count must be nonnegative");
    if (m > 64) throw capacity_error("at most 64 vertices are supported");
    std::vector<uint64_t> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        uint64_t mask = 0;
        for (int v : f) {
            if (v < 1 || v > m) throw domain_error("facet vertex out of range [1, m]");
            mask |= uint64_t{1} << (v - 1);
        }
        masks.push_back(mask);
    }
    *this = from_facet_masks(m, std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(int m) {
    SimplicialComplex out;
    if (m < 0) throw domain_error("vertex count must be nonnegative");
    if (m > 64) throw capacity_error("at most 64 vertices are supported");
    out.m_ = m;
    out.active_ = mask_all(m);
    return out;
}

SimplicialComplex SimplicialComplex::empty_complex(int m) {
    SimplicialComplex out = void_complex(m);
    out.facets_ = {0};
    return out;
}

SimplicialComplex SimplicialComplex::from_facet_masks(int m, std::vector<uint64_t> facets) {
    SimplicialComplex out = void_complex(m);
    for (uint64_t f : facets)
        if (f & ~mask_all(m)) throw domain_error("facet vertex out of range [1, m]");
    std::vector<uint64_t> kept = maximal_masks(std::move(facets));
    std::sort(kept.begin(), kept.end(), lex_mask_less);
    out.facets_ = std::move(kept);
    return out;
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (uint64_t f : facets_) out.push_back(Gf2Vector(m_, f).vertices());
    return out;
}

int SimplicialComplex::top_card() const {
    int best = -1;
    for (uint64_t f : facets_) best = std::max(best, popcount64(f));
    return best;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    const int c = popcount64(facets_[0]);
    for (uint64_t f : facets_)
        if (popcount64(f) != c) return false;
    return true;
}

bool SimplicialComplex::is_face(uint64_t sigma) const {
    for (uint64_t f : facets_)
        if ((sigma & f) == sigma) return true;
    return false;
}

const std::vector<uint64_t>& SimplicialComplex::faces_of_card(int card) const {
    if (card < 0) throw domain_error("face cardinality must be nonnegative");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (static_cast<size_t>(card) >= face_cache_.size()) {
        face_cache_.resize(static_cast<size_t>(card) + 1);
        face_cache_built_.resize(static_cast<size_t>(card) + 1, false);
    }
    if (!face_cache_built_[static_cast<size_t>(card)]) {
        std::vector<uint64_t> cells;
        if (card == 0) {
            if (!is_void()) cells.push_back(0);
        } else {
            for (uint64_t f : facets_) {
                const int fc = popcount64(f);
                if (fc < card) continue;
                std::vector<int> verts = Gf2Vector(m_, f).vertices();
                std::vector<int> idx(static_cast<size_t>(card));
                for (int i = 0; i < card; ++i) idx[static_cast<size_t>(i)] = i;
                while (true) {
                    uint64_t mask = 0;
                    for (int i : idx) mask |= uint64_t{1} << (verts[static_cast<size_t>(i)] - 1);
                    cells.push_back(mask);
                    int pos = card - 1;
                    while (pos >= 0 && idx[static_cast<size_t>(pos)] == fc - card + pos) --pos;
                    if (pos < 0) break;
                    ++idx[static_cast<size_t>(pos)];
                    for (int i = pos + 1; i < card; ++i)
                        idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
                }
            }
            std::sort(cells.begin(), cells.end());
            cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        }
        face_cache_[static_cast<size_t>(card)] = std::move(cells);
        face_cache_built_[static_cast<size_t>(card)] = true;
    }
    return face_cache_[static_cast<size_t>(card)];
}

long long SimplicialComplex::face_count() const {
    long long total = 0;
    for (int c = 0; c <= top_card(); ++c) total += static_cast<long long>(faces_of_card(c).size());
    return total;
}

uint64_t SimplicialComplex::support() const {
    uint64_t s = 0;
    for (uint64_t f : facets_) s |= f;
    return s;
}

SimplicialComplex SimplicialComplex::with_active(uint64_t active) const {
    SimplicialComplex out(*this);
    out.active_ = active & mask_all(m_);
    return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, uint64_t omega) {
    omega &= K.ambient_mask();
    std::vector<uint64_t> restricted;
    restricted.reserve(K.facet_masks().size());
    for (uint64_t f : K.facet_masks()) restricted.push_back(f & omega);
    return SimplicialComplex::from_facet_masks(K.vertex_count(), std::move(restricted)).with_active(omega);
}

SimplicialComplex simplicial_join(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.vertex_count() == 0) return L;
    if (L.vertex_count() == 0) return K;
    const int m = K.vertex_count() + L.vertex_count();
    if (m > 64) throw capacity_error("join exceeds 64 vertices");
    std::vector<uint64_t> facets;
    facets.reserve(K.facet_masks().size() * L.facet_masks().size());
    for (uint64_t f : K.facet_masks())
        for (uint64_t g : L.facet_masks())
            facets.push_back(f | (g << K.vertex_count()));
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

std::vector<uint64_t> minimal_non_faces(const SimplicialComplex& K) {
    if (K.is_void()) return {0};  // even ∅ is not a face
    // Minimal non-faces = minimal transversals of the facet complements:
    // σ is a non-face iff it meets [m] \ F for every facet F.
    const uint64_t ambient = K.ambient_mask();
    std::vector<uint64_t> transversals = {0};
    for (uint64_t f : K.facet_masks()) {
        const uint64_t comp = ambient & ~f;
        std::vector<uint64_t> next;
        std::vector<uint64_t> to_extend;
        for (uint64_t t : transversals) {
            if (t & comp)
                next.push_back(t);
            else
                to_extend.push_back(t);
        }
        for (uint64_t t : to_extend) {
            uint64_t rest = comp;
            while (rest) {
                const uint64_t bit = rest & (~rest + 1);
                rest &= rest - 1;
                const uint64_t cand = t | bit;
                bool dominated = false;
                for (uint64_t kept : next)
                    if ((kept & cand) == kept) { dominated = true; break; }
                if (!dominated) next.push_back(cand);
            }
        }
        // re-minimalize
        std::sort(next.begin(), next.end(), [](uint64_t a, uint64_t b) {
            return popcount64(a) < popcount64(b);
        });
        std::vector<uint64_t> minimal;
        for (uint64_t t : next) {
            bool dominated = false;
            for (uint64_t kept : minimal)
                if ((kept & t) == kept) { dominated = true; break; }
            if (!dominated) minimal.push_back(t);
        }
        transversals = std::move(minimal);
        if (transversals.empty()) break;  // K is the full simplex
    }
    std::sort(transversals.begin(), transversals.end(), lex_mask_less);
    return transversals;
}

bool is_flag(const SimplicialComplex& K) {
    for (uint64_t nf : minimal_non_faces(K))
        if (popcount64(nf) > 2) return false;
    return true;
}

SimplicialComplex link_of(const SimplicialComplex& K, uint64_t sigma) {
    if (!K.is_face(sigma)) throw domain_error("link requires σ to be a face");
    std::vector<uint64_t> facets;
    for (uint64_t f : K.facet_masks())
        if ((sigma & f) == sigma) facets.push_back(f & ~sigma);
    return SimplicialComplex::from_facet_masks(K.vertex_count(), std::move(facets));
}

SimplicialComplex make_simplex_boundary(int n) {
    if (n < 1) throw domain_error("simplex boundary needs n >= 1");
    const int m = n + 1;
    if (m > 64) throw capacity_error("at most 64 vertices are supported");
    std::vector<uint64_t> facets;
    const uint64_t full = mask_all(m);
    for (int v = 1; v <= m; ++v) facets.push_back(full & ~(uint64_t{1} << (v - 1)));
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

SimplicialComplex make_polygon(int k) {
    if (k < 3) throw domain_error("polygon needs k >= 3");
    if (k > 64) throw capacity_error("at most 64 vertices are supported");
    std::vector<uint64_t> facets;
    for (int i = 1; i <= k; ++i) {
        const int j = (i % k) + 1;
        facets.push_back((uint64_t{1} << (i - 1)) | (uint64_t{1} << (j - 1)));
    }
    return SimplicialComplex::from_facet_masks(k, std::move(facets));
}

SimplicialComplex make_crosspolytope(int n) {
    if (n < 1) throw domain_error("crosspolytope needs n >= 1");
    return make_product_simplices_boundary(std::vector<int>(static_cast<size_t>(n), 1));
}

SimplicialComplex make_product_simplices_boundary(const std::vector<int>& sizes) {
    if (sizes.empty()) throw domain_error("need at least one simplex factor");
    int n = 0;
    const int k = static_cast<int>(sizes.size());
    for (int s : sizes) {
        if (s < 1) throw domain_error("simplex factor sizes must be >= 1");
        n += s;
    }
    const int m = n + k;
    if (m > 64) throw capacity_error("at most 64 vertices are supported");

    // block i = {off_i+1, ..., off_i+n_i} ∪ {n+i}
    std::vector<uint64_t> blocks;
    int off = 0;
    for (int i = 0; i < k; ++i) {
        uint64_t b = 0;
        for (int a = 1; a <= sizes[static_cast<size_t>(i)]; ++a) b |= uint64_t{1} << (off + a - 1);
        b |= uint64_t{1} << (n + i);
        blocks.push_back(b);
        off += sizes[static_cast<size_t>(i)];
    }

    // Facets drop exactly one vertex from each block.
    std::vector<uint64_t> facets = {mask_all(m)};
    for (uint64_t b : blocks) {
        std::vector<uint64_t> next;
        uint64_t rest = b;
        while (rest) {
            const uint64_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            for (uint64_t f : facets) next.push_back(f & ~bit);
        }
        facets = std::move(next);
    }
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

SimplicialComplex standard_complex(const std::string& spec) {
    const size_t colon = spec.find(':');
    if (colon == std::string::npos) throw domain_error("complex spec must look like 'cross:3'");
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    auto parse_int = [](const std::string& s) {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw domain_error("malformed number in complex spec");
        return v;
    };
    if (kind == "cross") return make_crosspolytope(parse_int(args));
    if (kind == "polygon") return make_polygon(parse_int(args));
    if (kind == "simplex") return make_simplex_boundary(parse_int(args));
    if (kind == "prodsimp") {
        std::vector<int> sizes;
        size_t pos = 0;
        while (pos <= args.size()) {
            size_t comma = args.find(',', pos);
            if (comma == std::string::npos) comma = args.size();
            sizes.push_back(parse_int(args.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return make_product_simplices_boundary(sizes);
    }
    throw domain_error("unknown complex family '" + kind + "'");
}

SimplicialComplex complex_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, true);
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw domain_error("complex JSON must be {\"m\": int, \"facets\": [[...]]}");
    const int m = j.at("m").get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex(m, facets);
}

std::string complex_to_json_text(const SimplicialComplex& K) {
    nlohmann::json j;
    j["m"] = K.vertex_count();
    j["facets"] = K.facet_lists();
    return j.dump();
}

}  // namespace retorix
