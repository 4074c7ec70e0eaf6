#include <stdio.h>
#include <string.h>

#include "fibword.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  FwWord *w = NULL;
  CHECK(fw_word_generate(FW_WORD_KIND_MECHANICAL, 13, &w) == FW_STATUS_OK);
  size_t len = 0;
  CHECK(fw_word_len(w, &len) == FW_STATUS_OK && len == 13);
  char small[4];
  size_t need = 0;
  CHECK(fw_word_copy(w, small, sizeof small, &need) == FW_STATUS_BUFFER_TOO_SMALL);
  CHECK(need == 14);
  char buf[64];
  CHECK(fw_word_copy(w, buf, sizeof buf, NULL) == FW_STATUS_OK);
  CHECK(strcmp(buf, "0100101001001") == 0);
  fw_word_free(w);

  uint64_t v = 0;
  CHECK(fw_beatty_phi(30, &v) == FW_STATUS_OK && v == 48);
  CHECK(fw_beatty_phi2(30, &v) == FW_STATUS_OK && v == 78);
  CHECK(fw_beatty_phi(0, &v) == FW_STATUS_INVALID_ARGUMENT);
  CHECK(fw_last_error_length() > 0);
  char msg[256];
  CHECK(fw_last_error_message(msg, sizeof msg) == FW_STATUS_OK);
  CHECK(strlen(msg) > 0);

  FwDensityCounts d;
  CHECK(fw_density_counts(13, &d) == FW_STATUS_OK);
  CHECK(d.count0 == 8 && d.count1 == 5);
  CHECK(fw_count_ones(13, NULL) == FW_STATUS_NULL_POINTER);

  const char *argv[] = {"--format", "csv", "beatty", "2"};
  char *out = NULL;
  int32_t code = -1;
  CHECK(fw_cli_run(4, argv, &out, &code) == FW_STATUS_OK);
  CHECK(code == 0);
  CHECK(strcmp(out, "n,f1,f2\n1,1,2\n2,3,5\n") == 0);
  fw_string_free(out);

  printf("ok %s\n", fw_version());
  return 0;
}
