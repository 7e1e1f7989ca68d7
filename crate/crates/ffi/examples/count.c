#include <stdio.h>
#include "hypermaps.h"

int main(void) {
    uint64_t b[] = {1, 2, 2};
    HmCountResult *r = NULL;
    if (hm_count(5, b, 3, &r) != HM_STATUS_OK) {
        fprintf(stderr, "%s\n", hm_last_error_message());
        return 1;
    }
    char *json = NULL;
    hm_count_result_to_json(r, &json);
    printf("%s\n", json);
    hm_string_free(json);
    hm_count_result_free(r);
    return 0;
}
