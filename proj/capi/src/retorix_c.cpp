#include "retorix.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "retorix/bott.hpp"
#include "retorix/complex.hpp"
#include "retorix/engine.hpp"
#include "retorix/errors.hpp"
#include "retorix/gf2.hpp"
#include "nlohmann/json.hpp"

struct rtx_complex {
    retorix::SimplicialComplex value;
};

struct rtx_matrix {
    retorix::Gf2Matrix value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
rtx_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return RTX_OK;
    } catch (const retorix::capacity_error& e) {
        g_last_error = e.what();
        return RTX_ERR_CAPACITY;
    } catch (const retorix::domain_error& e) {
        g_last_error = e.what();
        return RTX_ERR_DOMAIN;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return RTX_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return RTX_ERR_CAPACITY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RTX_ERR_INTERNAL;
    }
}

rtx_status emit(const nlohmann::json& j, char** json_out) {
    if (!json_out) {
        g_last_error = "null output pointer";
        return RTX_ERR_DOMAIN;
    }
    *json_out = dup_string(j.dump());
    if (!*json_out) {
        g_last_error = "out of memory";
        return RTX_ERR_CAPACITY;
    }
    return RTX_OK;
}

// Generalized block data as the flat k x n matrix 𝔸 itself: row i carries
// the blocks (i,1)..(i,k), block (i,j) occupying the n_j columns of block j.
retorix::BottSpec parse_generalized(const retorix::Gf2Matrix& data, const std::string& blocks_arg) {
    std::vector<int> sizes;
    size_t pos = 0;
    while (pos <= blocks_arg.size()) {
        size_t comma = blocks_arg.find(',', pos);
        if (comma == std::string::npos) comma = blocks_arg.size();
        sizes.push_back(std::stoi(blocks_arg.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    const int k = static_cast<int>(sizes.size());
    int n = 0;
    std::vector<int> offsets;
    for (int s : sizes) {
        offsets.push_back(n);
        n += s;
    }
    if (data.rows() != k || data.cols() != n)
        throw retorix::domain_error("generalized block data must be the k x n block matrix");
    std::map<std::pair<int, int>, retorix::Gf2Vector> blocks;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            uint64_t bits = 0;
            for (int a = 0; a < sizes[static_cast<size_t>(j - 1)]; ++a)
                if (data.get(i - 1, offsets[static_cast<size_t>(j - 1)] + a + 1))
                    bits |= uint64_t{1} << a;
            if (bits == 0) continue;
            if (i >= j) throw retorix::domain_error("generalized blocks must be strictly upper triangular");
            blocks.emplace(std::make_pair(i, j),
                           retorix::Gf2Vector(sizes[static_cast<size_t>(j - 1)], bits));
        }
    }
    return retorix::BottSpec::generalized_spec(std::move(sizes), std::move(blocks));
}

}  // namespace

extern "C" {

rtx_status rtx_complex_parse(const char* text, rtx_complex** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        auto holder = std::make_unique<rtx_complex>();
        holder->value = retorix::engine::parse_complex_text(text);
        *out = holder.release();
    });
}

void rtx_complex_free(rtx_complex* k) { delete k; }

rtx_status rtx_matrix_parse(const char* text, rtx_matrix** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        auto holder = std::make_unique<rtx_matrix>();
        holder->value = retorix::parse_gf2_matrix(text);
        *out = holder.release();
    });
}

rtx_status rtx_matrix_identity(int m, rtx_matrix** out) {
    if (!out) {
        g_last_error = "null argument";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        auto holder = std::make_unique<rtx_matrix>();
        holder->value = retorix::Gf2Matrix::identity(m);
        *out = holder.release();
    });
}

void rtx_matrix_free(rtx_matrix* m) { delete m; }

rtx_status rtx_betti(const rtx_complex* k, const rtx_matrix* lambda, char** json_out) {
    if (!k) {
        g_last_error = "null complex";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const retorix::Gf2Matrix lam =
            lambda ? lambda->value : retorix::Gf2Matrix::identity(k->value.vertex_count());
        const auto j = retorix::engine::betti_job(k->value, lam);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_ring(const rtx_complex* k, const rtx_matrix* lambda, int max_degree, char** json_out) {
    if (!k) {
        g_last_error = "null complex";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const retorix::Gf2Matrix lam =
            lambda ? lambda->value : retorix::Gf2Matrix::identity(k->value.vertex_count());
        const auto j = retorix::engine::ring_job(k->value, lam, max_degree);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_bott(const rtx_matrix* matrix, const char* blocks, int dim, char** json_out) {
    if (!matrix) {
        g_last_error = "null matrix";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const retorix::BottSpec spec = blocks ? parse_generalized(matrix->value, blocks)
                                              : retorix::BottSpec::real(matrix->value);
        const auto j = retorix::engine::bott_job(spec, dim);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_bott_from_deps(const rtx_matrix* deps, int dim, char** json_out) {
    if (!deps) {
        g_last_error = "null matrix";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const auto j =
            retorix::engine::bott_deps_job(deps->value.cols(), deps->value.row_vectors(), dim);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_matroid_circuits(const rtx_matrix* m, char** json_out) {
    if (!m) {
        g_last_error = "null matrix";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const auto j = retorix::engine::matroid_circuits_job(m->value);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_matroid_triangularize(const rtx_matrix* m, char** json_out) {
    if (!m) {
        g_last_error = "null matrix";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const auto j = retorix::engine::matroid_triangularize_job(m->value);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_matroid_count(int n, char** json_out) {
    return guarded([&] {
        const auto j = retorix::engine::matroid_count_job(n);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_csymp(const rtx_complex* k, const rtx_matrix* lambda, int almost, char** json_out) {
    if (!k) {
        g_last_error = "null complex";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const auto j = retorix::engine::csymp_job(k->value, lambda ? &lambda->value : nullptr,
                                                  almost != 0);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_check(const rtx_complex* k, const rtx_matrix* lambda, char** json_out) {
    if (!k) {
        g_last_error = "null complex";
        return RTX_ERR_DOMAIN;
    }
    return guarded([&] {
        const retorix::Gf2Matrix lam =
            lambda ? lambda->value : retorix::Gf2Matrix::identity(k->value.vertex_count());
        const auto j = retorix::engine::check_job(k->value, lam);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_repro(char** json_out) {
    return guarded([&] {
        const auto j = retorix::engine::repro_job();
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

rtx_status rtx_selftest(uint64_t seed, int cases, char** json_out) {
    return guarded([&] {
        const auto j = retorix::engine::selftest_job(seed, cases);
        if (emit(j, json_out) != RTX_OK) throw retorix::domain_error(g_last_error);
    });
}

const char* rtx_last_error(void) { return g_last_error.c_str(); }

void rtx_string_free(char* s) { std::free(s); }

}  // extern "C"
