/*
 * Copyright 2026 The qhe-iqp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the Z-one-time-pad homomorphic encryption scheme for IQP
 * circuits and its verification tools.
 *
 * Objects are opaque handles created by qhe_*_parse / qhe_*_create style
 * functions and released with the matching qhe_*_free. Every fallible call
 * returns a qhe_status; on failure a description is available from
 * qhe_last_error() on the same thread. Strings returned through char**
 * out-parameters are heap allocated and must be released with
 * qhe_string_free().
 */
#ifndef QHE_QHE_H_
#define QHE_QHE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QHE_BUILDING_LIBRARY)
#define QHE_API __attribute__((visibility("default")))
#else
#define QHE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhe_status {
    QHE_OK = 0,
    QHE_ERR_INVALID_ARGUMENT = 1,
    QHE_ERR_PARSE = 2,
    QHE_ERR_NOT_IQP = 3,
    QHE_ERR_PARAMS_MISMATCH = 4,
    QHE_ERR_REMEASURE = 5,
    QHE_ERR_DIMENSION = 6,
    QHE_ERR_INFEASIBLE = 7,
    QHE_ERR_IO = 8,
    QHE_ERR_TRANSPORT = 9,
    QHE_ERR_INTERNAL = 10
} qhe_status;

typedef struct qhe_key qhe_key;
typedef struct qhe_state qhe_state;
typedef struct qhe_circuit qhe_circuit;
typedef struct qhe_ciphertext qhe_ciphertext;

QHE_API const char *qhe_last_error(void);
QHE_API const char *qhe_status_string(qhe_status status);
QHE_API void qhe_string_free(char *s);

/* Keys ------------------------------------------------------------------ */

/* k = 0 selects the default max(kappa, n_max). */
QHE_API qhe_status qhe_key_generate(int kappa, int n_max, int k, uint64_t seed, qhe_key **out);
QHE_API qhe_status qhe_key_parse(const char *text, qhe_key **out);
QHE_API qhe_status qhe_key_serialize(const qhe_key *key, char **out);
/* Description length in bits, k * kappa. */
QHE_API size_t qhe_key_bits(const qhe_key *key);
QHE_API void qhe_key_free(qhe_key *key);

/* Plaintext states ------------------------------------------------------- */

QHE_API qhe_status qhe_state_parse(const char *text, qhe_state **out);
QHE_API qhe_status qhe_state_serialize(const qhe_state *state, char **out);
/* Product state from one label per qubit: 0 1 + - r (|+i>) l (|-i>). */
QHE_API qhe_status qhe_state_product(const char *labels, qhe_state **out);
QHE_API int qhe_state_qubits(const qhe_state *state);
/* 1 when no Pauli term with a nonzero coefficient has a bare Z. */
QHE_API int qhe_state_is_xy(const qhe_state *state);
QHE_API qhe_status qhe_state_trace_distance(const qhe_state *a, const qhe_state *b, double *out);
QHE_API void qhe_state_free(qhe_state *state);

/* Circuits -------------------------------------------------------------- */

/* Parses and validates; QHE_ERR_NOT_IQP names the first rejected gate. */
QHE_API qhe_status qhe_circuit_parse(const char *text, qhe_circuit **out);
QHE_API qhe_status qhe_circuit_serialize(const qhe_circuit *circuit, char **out);
QHE_API int qhe_circuit_qubits(const qhe_circuit *circuit);
QHE_API void qhe_circuit_free(qhe_circuit *circuit);
/* Exact plaintext run: JSON {"outcomes": {"01": p, ...}, ...}. */
QHE_API qhe_status qhe_circuit_run(const qhe_circuit *circuit, const qhe_state *state, char **out_json);

/* Scheme ---------------------------------------------------------------- */

QHE_API qhe_status qhe_ciphertext_parse(const char *text, qhe_ciphertext **out);
QHE_API qhe_status qhe_ciphertext_serialize(const qhe_ciphertext *ct, char **out);
QHE_API int qhe_ciphertext_qubits(const qhe_ciphertext *ct);
QHE_API void qhe_ciphertext_free(qhe_ciphertext *ct);

/* outside_xy (optional) is set to 1 when the plaintext is outside the space
 * where the pad hides it; encryption still succeeds. */
QHE_API qhe_status qhe_encrypt(const qhe_key *key, const qhe_state *state, uint64_t seed, qhe_ciphertext **out,
                               int *outside_xy);
/* Takes no key. seed drives measurement sampling. */
QHE_API qhe_status qhe_evaluate(const qhe_circuit *circuit, const qhe_ciphertext *ct, uint64_t seed,
                                qhe_ciphertext **out);
/* bits receives one entry per ciphertext qubit: 0/1 for measured qubits,
 * -1 otherwise; bits_len must be at least qhe_ciphertext_qubits(ct).
 * out_state receives the state of the unmeasured qubits (may be NULL). */
QHE_API qhe_status qhe_decrypt(const qhe_key *key, const qhe_ciphertext *ct, int *bits, size_t bits_len,
                               qhe_state **out_state);

/* Verification ---------------------------------------------------------- */

QHE_API qhe_status qhe_binary_entropy(double p, double *out);
QHE_API qhe_status qhe_qpir_lower_bound(double n, double delta, double epsilon, double *out);
QHE_API qhe_status qhe_amplify_weak_to_strong(double eps_weak, int n_max, double *out);
QHE_API qhe_status qhe_collision_bound(int kappa, int n_max, double *out);

/* Each writes a JSON report and sets *passed to 1 or 0. */
QHE_API qhe_status qhe_verify_correctness(int cases, int max_qubits, int max_gates, int kappa, int k, uint64_t seed,
                                          double tolerance, char **report, int *passed);
/* mode: "exact" or "analytic". */
QHE_API qhe_status qhe_verify_security(int kappa, int n_max, int k, int pairs, const char *mode, uint64_t seed,
                                       double tolerance, char **report, int *passed);
QHE_API qhe_status qhe_verify_bounds(double delta, double epsilon, int p_max, char **report, int *passed);

/* Delegation ------------------------------------------------------------ */

/* Serves `sessions` loopback connections on `port` (0 = ephemeral). When
 * ready_fd >= 0 the bound port is written to it as decimal text and a
 * newline before the first accept. */
QHE_API qhe_status qhe_serve(int port, int sessions, uint64_t seed, int ready_fd);
/* transport: "inproc" or "socket". Writes the transcript JSON (summary and
 * every frame) and the total variation of the decrypted outcome histogram
 * from the exact distribution. */
QHE_API qhe_status qhe_demo(const char *transport, int port, const char *circuit_text, int runs, uint64_t seed,
                            int kappa, char **transcript_json, double *total_variation, int *audit_clean);

#ifdef __cplusplus
}
#endif

#endif /* QHE_QHE_H_ */
