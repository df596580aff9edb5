#include <math.h>
#include <stdio.h>
#include <string.h>

#include "relsub.h"

int main(void) {
    RelsubReport *report = NULL;
    if (relsub_verify("clifford", 1, 1, 1e-10, &report) != RELSUB_STATUS_OK) return 10;
    if (relsub_report_passed(report) != 1 || relsub_report_max_residual(report) != 0.0) return 11;
    char *json = NULL;
    if (relsub_report_json(report, &json) != RELSUB_STATUS_OK) return 12;
    if (strstr(json, "\"suite\":\"clifford\"") == NULL) return 13;
    relsub_string_free(json);
    relsub_report_free(report);

    RelsubSolution *sol = NULL;
    if (relsub_solve("dkp1", 0.3, -1.0, 2.0, 1.5, 1e-10, &sol) != RELSUB_STATUS_OK) return 20;
    if (relsub_solution_dimension(sol) != 3) return 21;
    relsub_solution_free(sol);

    if (relsub_verify("weyl", 1, 1, 1e-10, &report) != RELSUB_STATUS_USAGE) return 30;
    if (relsub_last_error() == NULL) return 31;
    if (relsub_check_p4() != RELSUB_STATUS_OK) return 40;
    printf("relsub %s ok\n", relsub_version());
    return 0;
}
