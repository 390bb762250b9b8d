#include <stdio.h>
#include "ribbonpoly.h"

int main(int argc, char **argv) {
    const char *src = argc > 1 ? argv[1] : "(1, 2, 3, 1, 2, 3)";
    RpGraph *g = NULL;
    if (rp_graph_parse(src, &g) != RP_STATUS_OK) {
        fprintf(stderr, "%s\n", rp_last_error_message());
        return 2;
    }
    RpPoly *p = NULL;
    RpStatus st = rp_vertex_polynomial(g, RP_SUBGROUP_FULL, RP_METHOD_RECURSIVE, &p);
    if (st != RP_STATUS_OK) {
        fprintf(stderr, "%s\n", rp_last_error_message());
        rp_graph_free(g);
        return st == RP_STATUS_GUARD_EXCEEDED ? 3 : 2;
    }
    char *s = NULL;
    rp_poly_to_string(p, &s);
    printf("%s\n", s);
    rp_string_free(s);
    rp_poly_free(p);
    rp_graph_free(g);
    return 0;
}
