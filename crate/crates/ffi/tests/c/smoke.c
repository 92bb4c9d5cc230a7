#include <stdio.h>
#include <string.h>
#include "langford_forge.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            const char *msg = lf_last_error_message();                \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,   \
                    #cond, msg ? msg : "no error");                   \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    LfSequence *seq = NULL;
    CHECK(lf_sequence_parse("4,2,3,2,4,3,1,1", 1, &seq) == LF_STATUS_OK);

    size_t idx[4] = {0, 0, 1, 1};
    LfSequence *big = NULL;
    CHECK(lf_expand(seq, 3, idx, 4, 0, &big) == LF_STATUS_OK);

    char *text = NULL;
    CHECK(lf_sequence_to_text(big, &text) == LF_STATUS_OK);
    CHECK(strcmp(text, "12,13,11,6,7,5,10,8,9,6,5,7,12,11,13,8,10,9,4,2,3,2,4,3") == 0);
    puts(text);
    lf_string_free(text);

    uint64_t count = 0;
    CHECK(lf_sn_count(5, &count) == LF_STATUS_OK && count == 6);
    CHECK(lf_sequence_parse("1,1,2,2", 1, &seq) == LF_STATUS_INVALID_SEQUENCE);

    lf_sequence_free(big);
    return 0;
}
