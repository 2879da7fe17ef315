/*
 * retorix — exact cohomology rings of real toric spaces.
 *
 * C interface to the engine. All handles are opaque; every computation
 * returns a status code and, on success, a heap-allocated JSON string that
 * must be released with rtx_string_free(). On failure rtx_last_error()
 * returns a thread-local description of the problem.
 */
#ifndef RETORIX_H
#define RETORIX_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtx_status {
    RTX_OK = 0,
    RTX_ERR_DOMAIN = 1,   /* invalid input or violated precondition */
    RTX_ERR_CAPACITY = 2, /* an enumeration guard was exceeded */
    RTX_ERR_PARSE = 3,    /* malformed file or argument */
    RTX_ERR_INTERNAL = 4  /* engine bug; please report */
} rtx_status;

typedef struct rtx_complex rtx_complex;
typedef struct rtx_matrix rtx_matrix;

/* A complex is given either as JSON {"m": int, "facets": [[...]]} or as a
 * standard-family spec: "cross:n", "prodsimp:n1,n2,...", "polygon:k",
 * "simplex:n". */
rtx_status rtx_complex_parse(const char* text, rtx_complex** out);
void rtx_complex_free(rtx_complex* k);

/* GF(2) matrices: one row per line of '0'/'1' (optional spaces), or an
 * inline JSON array [[0,1],...]. */
rtx_status rtx_matrix_parse(const char* text, rtx_matrix** out);
rtx_status rtx_matrix_identity(int m, rtx_matrix** out);
void rtx_matrix_free(rtx_matrix* m);

/* Graded Betti numbers of M^R(K, Λ); lambda NULL means Λ = identity. */
rtx_status rtx_betti(const rtx_complex* k, const rtx_matrix* lambda, char** json_out);

/* Basis and structure constants of the cohomology ring up to max_degree
 * (max_degree < 0 picks the dimension bound). */
rtx_status rtx_ring(const rtx_complex* k, const rtx_matrix* lambda, int max_degree, char** json_out);

/* (Generalized) real Bott manifold from a strictly upper triangular matrix.
 * blocks: NULL for the real case; "n1,n2,..." for the generalized case, in
 * which case the matrix argument is the flat k x n block matrix 𝔸 (row i
 * carries the blocks (i,j), block (i,j) filling the n_j columns of block j,
 * zero unless i < j). dim < 0 picks the manifold dimension. */
rtx_status rtx_bott(const rtx_matrix* matrix, const char* blocks, int dim, char** json_out);

/* Same, but from GF(2) dependency relations (rows of the matrix). */
rtx_status rtx_bott_from_deps(const rtx_matrix* deps, int dim, char** json_out);

rtx_status rtx_matroid_circuits(const rtx_matrix* m, char** json_out);
rtx_status rtx_matroid_triangularize(const rtx_matrix* m, char** json_out);
rtx_status rtx_matroid_count(int n, char** json_out);

/* Cohomologically-symplectic decision (almost = 0) or the mixed
 * degree-1/2 witness search (almost = 1, lambda ignored). */
rtx_status rtx_csymp(const rtx_complex* k, const rtx_matrix* lambda, int almost, char** json_out);

/* Characteristic-function and Euler-characteristic validation. */
rtx_status rtx_check(const rtx_complex* k, const rtx_matrix* lambda, char** json_out);

/* Built-in reproduction fixtures; all_pass reports the aggregate. */
rtx_status rtx_repro(char** json_out);

/* Randomized property suites; deterministic for a fixed seed. */
rtx_status rtx_selftest(uint64_t seed, int cases, char** json_out);

const char* rtx_last_error(void);
void rtx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RETORIX_H */
