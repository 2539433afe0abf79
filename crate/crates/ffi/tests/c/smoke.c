#include <stdio.h>
#include "qsemicat.h"

static int check(QsStatus s, const char *what) {
    if (s != QS_STATUS_OK) {
        const char *msg = qs_last_error();
        fprintf(stderr, "%s: %s (%s)\n", what, qs_status_name(s), msg ? msg : "");
        return 1;
    }
    return 0;
}

int main(int argc, char **argv) {
    if (argc < 2) {
        fprintf(stderr, "usage: smoke <workspace.json>\n");
        return 2;
    }
    QsWorkspace *ws = NULL;
    if (check(qs_workspace_load(argv[1], &ws), "load")) return 1;

    uint64_t n = 0;
    if (check(qs_presheaf_count(ws, "A", "*", QS_PRESHEAF_CLASS_REGULAR, QS_VARIANCE_CONTRAVARIANT, 1000, &n),
              "count")) return 1;
    printf("regular presheaves: %llu\n", (unsigned long long)n);

    bool eq = true;
    if (check(qs_morita(ws, "A", "C", 100000, &eq), "morita")) return 1;
    printf("morita A C: %d\n", eq ? 1 : 0);

    char *json = NULL;
    if (check(qs_validate_json(ws, &json), "validate")) return 1;
    printf("%s\n", json);
    qs_string_free(json);

    if (qs_is_regular(ws, "missing", &eq) != QS_STATUS_PARSE) return 1;
    printf("error: %s\n", qs_last_error());

    qs_workspace_free(ws);
    return 0;
}
