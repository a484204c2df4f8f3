#include <stdio.h>
#include <string.h>

#include "loopsym.h"

int main(void) {
    uint32_t shape[] = {3, 2};
    LsPoly *s = NULL;
    if (ls_loop_schur(2, 3, shape, 2, 1, &s) != LS_STATUS_OK) {
        fprintf(stderr, "schur: %s\n", ls_last_error_message());
        return 1;
    }
    char *text = ls_poly_to_string(s);
    int ok = strcmp(text, "x1^(1)*x1^(2)*x1^(3)*x2^(1)*x2^(2) + x1^(1)*x1^(3)*x2^(1)*x2^(2)^2") == 0;
    printf("%s\n", text);
    ls_string_free(text);
    ls_poly_free(s);

    bool holds = false;
    if (ls_verify_roa(2, 3, shape, 2, 2, &holds) != LS_STATUS_OK || !holds) {
        return 1;
    }
    uint32_t one[] = {1};
    if (ls_verify_mn(2, 2, one, 1, 1, 1, false, &holds) != LS_STATUS_HYPOTHESIS_NOT_MET) {
        return 1;
    }
    return ok ? 0 : 1;
}
