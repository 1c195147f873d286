/* The public header must compile as C. */
#include <stdio.h>
#include <string.h>

#include "alphadet/alphadet.h"

int main(void) {
  ad_context* ctx = NULL;
  ad_report* report = NULL;
  char buf[32];
  if (ad_context_new(&ctx) != AD_OK) return 1;
  if (ad_run(ctx, "content", "{\"lambda\": \"2,1\"}", &report) != AD_OK) return 2;
  if (!strstr(ad_report_json(report), "(1+alpha)(1-alpha)")) return 3;
  ad_report_free(report);
  if (ad_alpha_det_eval(ctx, "[[\"1\",\"1\"],[\"1\",\"1\"]]", "1", buf, sizeof buf, NULL) != AD_OK) return 4;
  if (strcmp(buf, "2") != 0) return 5;
  ad_context_free(ctx);
  puts("ok");
  return 0;
}
