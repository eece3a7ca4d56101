#include <stdio.h>
#include <string.h>
#include "alpha2_minors.h"

int main(void) {
    A2Graph *g = NULL;
    if (a2_graph_from_graph6("Dhc", &g) != A2_STATUS_OK) return 1;
    size_t chi = 0;
    if (a2_chromatic_number(g, &chi) != A2_STATUS_OK || chi != 3) return 2;
    A2Certificate *c = NULL;
    if (a2_construct_chi_minor(g, 1, &c) != A2_STATUS_OK) return 3;
    char *json = NULL;
    if (a2_certificate_to_json(c, &json) != A2_STATUS_OK) return 4;
    if (strstr(json, "\"validated\": true") == NULL) return 5;
    a2_string_free(json);
    a2_certificate_free(c);
    if (a2_construct_half_minor(g, 2, &c) != A2_STATUS_PRECONDITION) return 6;
    if (a2_last_error_message() == NULL) return 7;
    a2_graph_free(g);
    puts("ok");
    return 0;
}
