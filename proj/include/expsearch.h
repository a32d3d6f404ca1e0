/* expsearch: expanding-search game strategies and bounds on rooted networks.
 *
 * C interface of the shared library. Networks are opaque handles; every
 * computation returns a JSON (or CSV) document as a malloc'd NUL-terminated
 * string that the caller releases with exs_string_free. Functions return
 * EXS_OK on success; on failure *err (when non-NULL) receives a malloc'd
 * message, also released with exs_string_free.
 *
 * Rational quantities appear in payloads as {"exact": "p/q", "approx": f}.
 */
#ifndef EXPSEARCH_H
#define EXPSEARCH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct exs_network exs_network;

typedef enum exs_status {
  EXS_OK = 0,
  EXS_ERR_PARSE = 1,          /* malformed input document or number */
  EXS_ERR_INVALID = 2,        /* network/strategy/hider invariant violated */
  EXS_ERR_UNSUPPORTED = 3,    /* operation undefined for this input (e.g. not a tree) */
  EXS_ERR_CAP_EXCEEDED = 4,   /* oracle enumeration passed its cap */
  EXS_ERR_NO_CONVERGENCE = 5, /* iterative solver missed its tolerance */
  EXS_ERR_BAD_ARGUMENT = 6,
  EXS_ERR_INTERNAL = 7
} exs_status;

const char* exs_version(void);

void exs_string_free(char* s);

/* --- networks ----------------------------------------------------------- */

exs_status exs_network_from_json(const char* json_text, exs_network** out, char** err);

/* Built-in fixtures: qbar, circle_spike, star, fig4, circle, parallel3,
 * qbar_prime, qbar_double_prime. alpha ("p/q" or decimal, may be NULL for the
 * default 1/2) parameterizes circle_spike; n (<=0 for the default 4)
 * parameterizes star. */
exs_status exs_fixture(const char* name, const char* alpha, long n, exs_network** out, char** err);

void exs_network_free(exs_network* net);

exs_status exs_network_to_json(const exs_network* net, char** out, char** err);
exs_status exs_network_to_dot(const exs_network* net, char** out, char** err);

/* Counts, total measure and the validation verdict. */
exs_status exs_inspect(const exs_network* net, char** json_out, char** err);

/* Promote an interior point (arc id, offset) to a node. */
exs_status exs_subdivide(const exs_network* net, const char* arc_id, const char* offset,
                         exs_network** out, char** err);

/* --- computations -------------------------------------------------------- */

/* Bridges, blocks, mu1/mu2, bridge ratio, height, bridge tree (JSON + DOT). */
exs_status exs_decompose(const exs_network* net, char** json_out, char** err);

/* EBD distribution, D, game value and branch probabilities (trees only). */
exs_status exs_tree_solve(const exs_network* net, char** json_out, char** err);

/* Optimal search against a known hider distribution on a tree. */
exs_status exs_bayes(const exs_network* net, const char* hider_json, char** json_out, char** err);

/* Block-optimal strategy: S1, S2, per-block searches, worst case, factor. */
exs_status exs_beta(const exs_network* net, char** json_out, char** err);

/* Bridge-optimal strategy; h sets the hider grid for the reported worst case. */
exs_status exs_gamma(const exs_network* net, const char* h, char** json_out, char** err);

/* Lower/upper bounds, factors and the pushed uniform distribution. */
exs_status exs_bounds(const exs_network* net, char** json_out, char** err);

/* Factor curve rows r,f,g,combined as CSV, breakpoints included. */
exs_status exs_bound_curve(const char* step, char** csv_out, char** err);

/* Closed-form circle-with-spike solution for 0 <= alpha < 1. */
exs_status exs_circle_spike(const char* alpha, char** json_out, char** err);

/* Expected time of a lottery strategy against a hider distribution. */
exs_status exs_evaluate(const exs_network* net, const char* strategy_json, const char* hider_json,
                        char** json_out, char** err);

/* Exact desk-scale game solve. flags: bit 0 = include dominated hider
 * candidates, bit 1 = iterative solver instead of the exact one (seeded by
 * `seed`, tolerance eps). */
exs_status exs_oracle(const exs_network* net, const char* h, const char* eps, long cap, int flags,
                      unsigned long long seed, char** json_out, char** err);

#define EXS_ORACLE_NO_DOMINANCE 1
#define EXS_ORACLE_ITERATIVE 2

/* Full payoff matrix as CSV (row per search, column per candidate). */
exs_status exs_oracle_matrix(const exs_network* net, const char* h, long cap, int flags,
                             char** csv_out, char** err);

/* Names and one-line descriptions of the built-in fixtures. */
exs_status exs_fixture_list(char** json_out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* EXPSEARCH_H */
