#ifndef FIBWORD_H
#define FIBWORD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FwStatus {
  FW_STATUS_OK = 0,
  FW_STATUS_NULL_POINTER = 1,
  FW_STATUS_INVALID_ARGUMENT = 2,
  FW_STATUS_BUFFER_TOO_SMALL = 3,
  FW_STATUS_INTERNAL = 4,
} FwStatus;

typedef enum FwWordKind {
  FW_WORD_KIND_MORPHIC = 0,
  FW_WORD_KIND_MECHANICAL = 1,
  FW_WORD_KIND_Y = 2,
  FW_WORD_KIND_Q = 3,
  FW_WORD_KIND_FIB_AB = 4,
} FwWordKind;

typedef enum FwClaimStatus {
  FW_CLAIM_STATUS_VERIFIED = 0,
  FW_CLAIM_STATUS_REFUTED = 1,
} FwClaimStatus;

/**
 * Opaque list of claim verdicts.
 */
typedef struct FwClaims FwClaims;

/**
 * Opaque finite word.
 */
typedef struct FwWord FwWord;

/**
 * Symbol counts of the length-`n` prefix.
 */
typedef struct FwDensityCounts {
  uint64_t n;
  uint64_t count0;
  uint64_t count1;
} FwDensityCounts;

/**
 * Sweep bounds for [`fw_claims_run`]; start from [`fw_budget_default`].
 */
typedef struct FwBudget {
  uint64_t sweep;
  uint64_t prefix;
  uint64_t complexity_max;
  uint64_t table_m_max;
  uint64_t word_index_max;
  uint32_t alpha_max;
  uint64_t pow_k_max;
  uint32_t series_k_max;
  uint64_t doubling_n_max;
  uint32_t binet_n_max;
  uint64_t genfunc_n;
  uint64_t zeckendorf_max;
} FwBudget;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *fw_version(void);

/**
 * Length in bytes of the last error message on this thread, 0 if none.
 */
size_t fw_last_error_length(void);

/**
 * Copies the last error message (NUL-terminated) into `buf`.
 *
 * # Safety
 * `buf` must point to `cap` writable bytes.
 */
enum FwStatus fw_last_error_message(char *buf, size_t cap);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void fw_string_free(char *s);

/**
 * Builds a word: prefix of length `n` (morphic, mechanical) or the `n`-th
 * member of the `y`, `q` or Fibonacci-word family.
 *
 * # Safety
 * `out` must be a valid pointer to a `FwWord*` slot.
 */
enum FwStatus fw_word_generate(enum FwWordKind kind, uint64_t n, struct FwWord **out);

/**
 * Number of symbols in the word.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum FwStatus fw_word_len(const struct FwWord *word, size_t *out);

/**
 * Copies the word as a NUL-terminated string into `buf`. `written`, if not
 * null, receives the number of bytes needed including the terminator.
 *
 * # Safety
 * `word` must be a live handle; `buf` must point to `cap` writable bytes.
 */
enum FwStatus fw_word_copy(const struct FwWord *word, char *buf, size_t cap, size_t *written);

/**
 * Releases a word. Null is ignored.
 *
 * # Safety
 * `word` must come from [`fw_word_generate`] and not be freed twice.
 */
void fw_word_free(struct FwWord *word);

/**
 * `floor(n phi)` for `n >= 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FwStatus fw_beatty_phi(uint64_t n, uint64_t *out);

/**
 * `floor(n phi^2)` for `n >= 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FwStatus fw_beatty_phi2(uint64_t n, uint64_t *out);

/**
 * Number of 1s among the first `n` symbols of the Fibonacci word.
 *
 * # Safety
 * `out` must be writable.
 */
enum FwStatus fw_count_ones(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FwStatus fw_density_counts(uint64_t n, struct FwDensityCounts *out);

/**
 * Fills `out` with the default sweep bounds.
 *
 * # Safety
 * `out` must be writable.
 */
enum FwStatus fw_budget_default(struct FwBudget *out);

/**
 * Evaluates every registered claim. `budget` may be null for the defaults.
 *
 * # Safety
 * `budget` must be null or readable; `out` must be writable.
 */
enum FwStatus fw_claims_run(const struct FwBudget *budget, struct FwClaims **out);

/**
 * # Safety
 * `claims` must be a live handle; `out` must be writable.
 */
enum FwStatus fw_claims_len(const struct FwClaims *claims, size_t *out);

/**
 * # Safety
 * `claims` must be a live handle; `out` must be writable.
 */
enum FwStatus fw_claims_status(const struct FwClaims *claims,
                               size_t index,
                               enum FwClaimStatus *out);

/**
 * Claim id; release with [`fw_string_free`].
 *
 * # Safety
 * `claims` must be a live handle; `out` must be writable.
 */
enum FwStatus fw_claims_id(const struct FwClaims *claims, size_t index, char **out);

/**
 * Witness text; release with [`fw_string_free`].
 *
 * # Safety
 * `claims` must be a live handle; `out` must be writable.
 */
enum FwStatus fw_claims_witness(const struct FwClaims *claims, size_t index, char **out);

/**
 * One claim record as JSON; release with [`fw_string_free`].
 *
 * # Safety
 * `claims` must be a live handle; `out` must be writable.
 */
enum FwStatus fw_claims_json(const struct FwClaims *claims, size_t index, char **out);

/**
 * Releases a claims handle. Null is ignored.
 *
 * # Safety
 * `claims` must come from [`fw_claims_run`] and not be freed twice.
 */
void fw_claims_free(struct FwClaims *claims);

/**
 * Runs the command-line front end on `argc`/`argv` and returns a newly
 * allocated copy of its standard output in `out` and its exit code in
 * `exit_code`.
 *
 * # Safety
 * `argv` must hold `argc` valid NUL-terminated strings; `out` and
 * `exit_code` must be writable.
 */
enum FwStatus fw_cli_run(size_t argc, const char *const *argv, char **out, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBWORD_H */
