/*
 * strokelink C API
 *
 * Stroke-order and stroke-count independent online handwriting recognition by
 * template matching. All objects are opaque handles created and released
 * through this interface. Functions returning sl_status report details of the
 * most recent failure on the calling thread through sl_last_error().
 */
#ifndef STROKELINK_H
#define STROKELINK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STROKELINK_BUILDING)
#    define SL_API __declspec(dllexport)
#  else
#    define SL_API __declspec(dllimport)
#  endif
#else
#  define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
  SL_OK = 0,
  SL_ERR_INVALID_ARGUMENT = 1,
  SL_ERR_PARSE = 2,
  SL_ERR_IO = 3,
  SL_ERR_DUPLICATE_LABEL = 4,
  SL_ERR_EMPTY_STORE = 5,
  SL_ERR_INTERNAL = 6
} sl_status;

typedef enum sl_normalization {
  SL_NORM_LINEAR = 0,
  SL_NORM_MOMENT = 1,
  SL_NORM_DOT_DENSITY = 2,
  SL_NORM_LINE_DENSITY = 3
} sl_normalization;

typedef struct sl_config {
  sl_normalization normalization;
  int alpha;                 /* dot density only; default 2 */
  int target_size;
  double feature_spacing;
  double aspect_guard_ratio;
  int passes_coarse;         /* L for coarse linking */
  int passes_fine;           /* L for fine linking */
  int directional_threshold; /* S */
  size_t coarse_keep;
  size_t fine_keep;
  int stroke_count_window;   /* negative disables */
} sl_config;

typedef struct sl_recognizer sl_recognizer;
typedef struct sl_candidates sl_candidates;
typedef struct sl_records sl_records;
typedef struct sl_server sl_server;

SL_API const char* sl_version(void);
SL_API const char* sl_status_string(sl_status status);
/* Message for the last failing call on this thread; "" if none. */
SL_API const char* sl_last_error(void);

SL_API void sl_config_default(sl_config* cfg);
SL_API const char* sl_normalization_name(sl_normalization n);
/* Returns SL_ERR_INVALID_ARGUMENT for an unknown name. */
SL_API sl_status sl_normalization_from_name(const char* name, sl_normalization* out);

/* ---- records ---------------------------------------------------------- */

/* Path "-" reads standard input. */
SL_API sl_status sl_records_load(const char* path, sl_records** out);
SL_API sl_status sl_records_parse(const char* text, size_t len, sl_records** out);
SL_API void sl_records_free(sl_records* records);
SL_API size_t sl_records_count(const sl_records* records);
/* NULL for an unlabeled record or an out-of-range index. */
SL_API const char* sl_records_label(const sl_records* records, size_t index);
/* Points are packed x0,y0,x1,y1,... across all strokes; stroke_lengths gives
 * the point count of each stroke. Pointers stay valid until the records are
 * freed. */
SL_API sl_status sl_records_strokes(const sl_records* records, size_t index, const int32_t** xy,
                                    const size_t** stroke_lengths, size_t* stroke_count);

/* ---- recognizer ------------------------------------------------------- */

SL_API sl_status sl_recognizer_load(const char* path, const sl_config* cfg, sl_recognizer** out);
/* Every record must be labeled; labels must be unique. */
SL_API sl_status sl_recognizer_from_records(const sl_records* records, const sl_config* cfg,
                                            sl_recognizer** out);
SL_API void sl_recognizer_free(sl_recognizer* rec);
SL_API size_t sl_recognizer_template_count(const sl_recognizer* rec);
SL_API sl_status sl_recognizer_get_config(const sl_recognizer* rec, sl_config* out);
/* Label, stroke count and total feature point count of a stored template. */
SL_API sl_status sl_recognizer_template_info(const sl_recognizer* rec, size_t index, const char** label,
                                             size_t* stroke_count, size_t* point_count);

/* Recognizes raw pen input laid out as in sl_records_strokes. top = 0 uses
 * the configured fine_keep. */
SL_API sl_status sl_recognize(const sl_recognizer* rec, const int32_t* xy, const size_t* stroke_lengths,
                              size_t stroke_count, size_t top, sl_candidates** out);
SL_API void sl_candidates_free(sl_candidates* c);
SL_API size_t sl_candidates_count(const sl_candidates* c);
SL_API const char* sl_candidates_label(const sl_candidates* c, size_t index);
SL_API double sl_candidates_score(const sl_candidates* c, size_t index);

/* ---- service ---------------------------------------------------------- */

/* JSON request handlers. rec may be NULL (reported as 503). The response
 * body must be released with sl_string_free. */
SL_API sl_status sl_handle_recognize_json(const sl_recognizer* rec, const char* body, size_t len,
                                          int* http_status, char** response);
SL_API sl_status sl_handle_health_json(const sl_recognizer* rec, int* http_status, char** response);
SL_API void sl_string_free(char* s);

SL_API sl_status sl_server_create(sl_server** out);
SL_API void sl_server_free(sl_server* server);
/* The server keeps its own reference; rec may be freed afterwards. */
SL_API sl_status sl_server_set_recognizer(sl_server* server, const sl_recognizer* rec);
/* Returns the bound port (port 0 picks one), or -1. */
SL_API int sl_server_bind(sl_server* server, const char* host, int port);
/* Blocks until sl_server_stop. */
SL_API sl_status sl_server_listen(sl_server* server);
SL_API void sl_server_stop(sl_server* server);

#ifdef __cplusplus
}
#endif

#endif /* STROKELINK_H */
