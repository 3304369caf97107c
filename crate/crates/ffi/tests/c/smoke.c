#include <math.h>
#include <stdio.h>
#include <string.h>

#include "g3.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    G3Multivector e1 = {{0, 1, 0, 0, 0, 0, 0, 0}};
    G3Multivector e2 = {{0, 0, 1, 0, 0, 0, 0, 0}};
    G3Multivector out;
    CHECK(g3_mul(&e1, &e2, &out) == G3_STATUS_OK);
    CHECK(out.c[6] == 1.0);

    G3Expr *e = NULL;
    CHECK(g3_expr_parse("1/u+", &e) == G3_STATUS_OK);
    CHECK(g3_expr_eval(e, &out) == G3_STATUS_NON_INVERTIBLE);
    CHECK(strstr(g3_last_error(), "not invertible") != NULL);
    g3_expr_free(e);

    CHECK(g3_expr_parse("e1 +", &e) == G3_STATUS_SYNTAX);

    double h[4] = {0, 1, 0, 0};
    G3Trajectory *t = NULL;
    CHECK(g3_evolve(h, 1.0, 3.141592653589793, 3, &t) == G3_STATUS_OK);
    CHECK(g3_trajectory_len(t) == 3);
    G3Sample s;
    CHECK(g3_trajectory_get(t, 1, &s) == G3_STATUS_OK);
    CHECK(s.has_flavor == 1 && s.p_e < 1e-12);
    CHECK(g3_trajectory_get(t, 3, &s) == G3_STATUS_OUT_OF_RANGE);
    g3_trajectory_free(t);

    puts("ok");
    return 0;
}
