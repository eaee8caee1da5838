/* Petersen graph through the C API: metric dimension and localization number. */
#include <stdio.h>

#include "locdim.h"

int main(void) {
    LocdimGraph *g = NULL;
    if (locdim_graph_petersen(&g) != LOCDIM_STATUS_OK) {
        fprintf(stderr, "%s\n", locdim_last_error());
        return 1;
    }
    size_t lo = 0, hi = 0;
    if (locdim_metric_dimension(g, 0, &lo, &hi) != LOCDIM_STATUS_OK || lo != 3 || hi != 3) {
        return 1;
    }
    printf("beta %zu\n", lo);
    if (locdim_localization_number(g, 0, &lo, &hi) != LOCDIM_STATUS_OK || lo != 3 || hi != 3) {
        return 1;
    }
    printf("zeta %zu\n", lo);
    locdim_graph_free(g);

    if (locdim_graph_polarity(6, &g) != LOCDIM_STATUS_INVALID_INPUT) {
        return 1;
    }
    printf("error: %s\n", locdim_last_error());
    return 0;
}
