/*
 * hopfinv C API: exact degree-by-degree invariants of free associative
 * algebras under generator-presented Hopf actions.
 *
 * Usage pattern: parse a spec document into an opaque handle, call
 * operations against the handle, read results as JSON payload strings,
 * release both. Every function returns a status code; on failure,
 * hopfinv_last_error() holds a thread-local message. Payload strings are
 * allocated by the library and must be released with hopfinv_free_string().
 *
 * All numeric data in payloads uses exact scalar literals ("-3/5", "4").
 */

#ifndef HOPFINV_H
#define HOPFINV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hopfinv_status {
    HOPFINV_OK = 0,
    HOPFINV_ERR_PARSE = 1,
    HOPFINV_ERR_VALIDATION = 2,
    HOPFINV_ERR_SIZE_CAP = 3,
    HOPFINV_ERR_DIVISION_BY_ZERO = 4,
    HOPFINV_ERR_RANK_MISMATCH = 5,
    HOPFINV_ERR_FIELD_MISMATCH = 6,
    HOPFINV_ERR_DEGREE_MISMATCH = 7,
    HOPFINV_ERR_UNKNOWN_GENERATOR = 8,
    HOPFINV_ERR_NOT_SCALAR = 9,
    HOPFINV_ERR_NOT_JORDAN_SHAPE = 10,
    HOPFINV_ERR_NOT_SCALAR_SIGMA_TAU = 11,
    HOPFINV_ERR_INVALID_INDEX = 12,
    HOPFINV_ERR_INVALID_ARGUMENT = 13,
    HOPFINV_ERR_PRECONDITION_FAILED = 14,
    HOPFINV_ERR_CANCELLATION_DETECTED = 15,
    HOPFINV_ERR_INTERNAL = 16
} hopfinv_status;

/* Opaque handle to a parsed action spec. */
typedef struct hopfinv_spec hopfinv_spec;

const char* hopfinv_status_name(hopfinv_status status);

/* Thread-local message describing the most recent failure in this thread. */
const char* hopfinv_last_error(void);

void hopfinv_free_string(char* s);

/* ---- spec lifecycle ---------------------------------------------------- */

/* Structural parse of a spec JSON document. Validation findings are
 * computed and stored with the handle; operations that need a valid spec
 * fail with HOPFINV_ERR_VALIDATION when error findings are present. */
hopfinv_status hopfinv_spec_parse(const char* json_text, hopfinv_spec** out);
hopfinv_status hopfinv_spec_serialize(const hopfinv_spec* spec, char** json_out);
void hopfinv_spec_free(hopfinv_spec* spec);

/* ---- operations (JSON payload out-params) ------------------------------ */

/* {"findings":[{"severity":"error"|"warning","message":...},...],
 *  "error_count":n,"warning_count":m} */
hopfinv_status hopfinv_validate(const hopfinv_spec* spec, char** json_out);

/* {"verdict":"scalar","bases":{name:literal,...}} or
 * {"verdict":"linear-non-scalar"} */
hopfinv_status hopfinv_classify(const hopfinv_spec* spec, char** json_out);

/* {"cap":c,"found":true,"degree":t} or {"cap":c,"found":false} */
hopfinv_status hopfinv_minimal_degree(const hopfinv_spec* spec, uint32_t cap,
                                      char** json_out);

/* {"degree":n,"dim_ambient":...,"dim":...,"basis":[poly-literal,...]} */
hopfinv_status hopfinv_invariant_basis(const hopfinv_spec* spec, uint32_t degree,
                                       uint64_t size_cap, char** json_out);

/* {"horizon":N,"rank":r,"field":...,"classification":...,
 *  "scalar_bases":{...}?,"minimal_degree":t|null,
 *  "rows":[{"degree":..,"dim_ambient":..,"dim_invariants":..,
 *           "dim_decomposable":..,"new_generators":..},...],
 *  "verdict":"..."} */
hopfinv_status hopfinv_probe(const hopfinv_spec* spec, uint32_t max_degree,
                             uint64_t size_cap, char** json_out);

/* field: "rational" | "q" | "p:<prime>"; eta, mu: scalar literals.
 * {"field":...,"n":n,"eta":...,"mu":...,"value":...} */
hopfinv_status hopfinv_cn(const char* field, uint32_t n, const char* eta,
                          const char* mu, char** json_out);

/* {"delta":...,"i":i,"n":n,"eta":...,"mu":...,"eigenvalue":...,
 *  "block":{"start":b,"end":s},"element":poly-literal,
 *  "verify":{...}?,"frobenius":{...}?} */
hopfinv_status hopfinv_jair(const hopfinv_spec* spec, const char* delta,
                            uint32_t i, uint32_t n, int verify,
                            int frobenius_check, char** json_out);

/* Checks closure of the computed invariant bases under the splice operator
 * for all i+j+k <= max_degree.
 * {"max_degree":N,"inserts_checked":c,"violations":[...]} */
hopfinv_status hopfinv_insert_check(const hopfinv_spec* spec, uint32_t max_degree,
                                    uint64_t size_cap, char** json_out);

/* poly_text: polynomial literal such as "x2*x2 + x1*x1".
 * {"x":x,"k":k,"input":...,"output":...,"prefix_word":...,
 *  "prefix_present":true,"invariant":true} */
hopfinv_status hopfinv_prefix_pump(const hopfinv_spec* spec, const char* poly_text,
                                   uint32_t x, uint32_t k, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* HOPFINV_H */
