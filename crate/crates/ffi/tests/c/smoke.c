#include <math.h>
#include <stdio.h>
#include <stdlib.h>

#include "bicomplex.h"

#define CHECK(expr)                                                         \
    do {                                                                    \
        BcStatus status_ = (expr);                                          \
        if (status_ != BC_STATUS_OK) {                                      \
            fprintf(stderr, "%s failed (%d): %s\n", #expr, (int)status_,    \
                    bc_last_error());                                       \
            return 1;                                                       \
        }                                                                   \
    } while (0)

int main(void) {
    const double a_data[16] = {1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1};
    const double b_data[16] = {0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1};
    BcMatrix *a = NULL, *b = NULL, *t = NULL;
    CHECK(bc_matrix_new(2, 2, a_data, BC_REPR_CARTESIAN, &a));
    CHECK(bc_matrix_new(2, 2, b_data, BC_REPR_CARTESIAN, &b));
    CHECK(bc_tensor(a, b, BC_TENSOR_ROUTE_IDEMPOTENT, &t));

    double entries[64];
    CHECK(bc_matrix_entries(t, BC_REPR_IDEMPOTENT, entries, 64));
    /* e1 component of entry (1,1) is 4 - 2i */
    double re = entries[4 * 5], im = entries[4 * 5 + 1];
    if (fabs(re - 4.0) > 1e-12 || fabs(im + 2.0) > 1e-12) {
        fprintf(stderr, "unexpected entry %g%+gi\n", re, im);
        return 1;
    }

    bool positive = true;
    CHECK(bc_is_hyperbolic_positive(a, 1e-10, BC_POSITIVITY_METHOD_EIGEN, &positive));
    if (positive) {
        fprintf(stderr, "example matrix reported positive\n");
        return 1;
    }

    BcMatrix *fa = NULL, *fb = NULL;
    double residual[2];
    BcStatus s = bc_recover_factors(a, 2, 3, 1e-10, &fa, &fb, residual);
    if (s != BC_STATUS_SHAPE_MISMATCH || bc_last_error()[0] == '\0') {
        fprintf(stderr, "expected a shape error, got %d\n", (int)s);
        return 1;
    }

    char *json = NULL;
    CHECK(bc_matrix_to_json(t, BC_REPR_CARTESIAN, &json));
    bc_string_free(json);

    bc_matrix_free(a);
    bc_matrix_free(b);
    bc_matrix_free(t);
    printf("ok\n");
    return 0;
}
