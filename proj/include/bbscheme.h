#ifndef BBSCHEME_H
#define BBSCHEME_H

#include <stddef.h>

#if defined(__GNUC__)
#define BBS_API __attribute__((visibility("default")))
#else
#define BBS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Border basis and Groebner basis schemes over the rationals.
 *
 * A session holds an order ideal, a term ordering, an output format and
 * Buchberger cutoffs. Each command returns a status and, unless the status is
 * BBS_PRECONDITION or worse, a result whose text is the command output.
 * Handles are not thread-safe; separate sessions are independent. */

typedef struct bbs_session bbs_session;
typedef struct bbs_result bbs_result;

typedef enum bbs_status {
  BBS_OK = 0,
  BBS_CHECK_FAILED = 1,     /* ran to completion; a verified property does not hold */
  BBS_PRECONDITION = 2,     /* input violates a mathematical precondition */
  BBS_RESOURCE_LIMIT = 3,   /* a Buchberger cutoff was hit */
  BBS_PARSE_ERROR = 4,      /* malformed text or JSON */
  BBS_INTERNAL = 5,
  BBS_INVALID_ARGUMENT = 6  /* null handle, missing setting, unknown keyword */
} bbs_status;

typedef enum bbs_format { BBS_FORMAT_TEXT = 0, BBS_FORMAT_JSON = 1 } bbs_format;

BBS_API const char* bbs_status_name(bbs_status status);
BBS_API const char* bbs_version(void);

BBS_API bbs_status bbs_session_new(bbs_session** out);
BBS_API void bbs_session_free(bbs_session* session);
/* Message of the last failing call on this session; "" after success. */
BBS_API const char* bbs_session_error(const bbs_session* session);

/* Comma-separated terms such as "1, x, y, x*y". nvars = 0 infers the number
 * of variables from the names used (x, y, z or x1..xn). */
BBS_API bbs_status bbs_session_set_order_ideal(bbs_session* session, const char* terms, unsigned nvars);
/* "lex", "deglex" or "degrevlex" with x1 > x2 > ... */
BBS_API bbs_status bbs_session_set_ordering(bbs_session* session, const char* name);
BBS_API bbs_status bbs_session_set_format(bbs_session* session, bbs_format format);
/* Zero keeps the current value. */
BBS_API bbs_status bbs_session_set_cutoffs(bbs_session* session, size_t max_basis_size, unsigned max_degree,
                                   size_t max_reductions);

/* Commands. `route` and `cross_check` take "substitution", "reduction" or
 * "elimination"; `cross_check` may be NULL. `reducer` is "first" or "last".
 * `point_json` is {"c": {"i,j": "p/q"}} with absent keys meaning 0.
 * `ideal` is a comma-separated polynomial list. `t0` may be NULL. */
BBS_API bbs_status bbs_validate(bbs_session* session, bbs_result** out);
BBS_API bbs_status bbs_border_scheme(bbs_session* session, bbs_result** out);
BBS_API bbs_status bbs_gb_scheme(bbs_session* session, const char* route, const char* cross_check, const char* reducer,
                         bbs_result** out);
BBS_API bbs_status bbs_weights(bbs_session* session, bbs_result** out);
BBS_API bbs_status bbs_check_point(bbs_session* session, const char* point_json, bbs_result** out);
BBS_API bbs_status bbs_round_trip(bbs_session* session, const char* ideal, bbs_result** out);
BBS_API bbs_status bbs_deform(bbs_session* session, const char* point_json, const char* t0, bbs_result** out);
BBS_API bbs_status bbs_affine_cell(bbs_session* session, bbs_result** out);
/* `which` is "border-scheme", "gb-scheme" or a polynomial list. */
BBS_API bbs_status bbs_dimension(bbs_session* session, const char* which, int preprocess_linear, bbs_result** out);

BBS_API const char* bbs_result_text(const bbs_result* result);
BBS_API void bbs_result_free(bbs_result* result);

#ifdef __cplusplus
}
#endif

#endif
