/* Copyright 2026 The Ginaz Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * C interface to the Arabic speaker/listener gender rewriter.
 *
 * Every function returns a ginaz_status. On failure a message is available
 * from ginaz_last_error() until the next call on the same thread. Strings
 * returned through `char**` are owned by the caller and released with
 * ginaz_string_free(). A loaded model is immutable and may be shared across
 * threads.
 */

#ifndef GINAZ_GINAZ_H_
#define GINAZ_GINAZ_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(GINAZ_BUILDING_LIBRARY)
#define GINAZ_API __attribute__((visibility("default")))
#else
#define GINAZ_API
#endif

typedef enum ginaz_status {
  GINAZ_OK = 0,
  GINAZ_ERR_INVALID_ARGUMENT = 1, /* bad argument or request */
  GINAZ_ERR_DECODE = 2,           /* input is not valid UTF-8 */
  GINAZ_ERR_PARSE = 3,            /* malformed corpus or rule file */
  GINAZ_ERR_MODEL = 4,            /* training input cannot build a model */
  GINAZ_ERR_BUNDLE = 5,           /* model directory missing or corrupt */
  GINAZ_ERR_IO = 6,               /* file system failure */
  GINAZ_ERR_TRANSPORT = 7,        /* translation backend unreachable */
  GINAZ_ERR_UNTRANSLATABLE = 8,   /* no translation for an English sentence */
  GINAZ_ERR_INTERNAL = 9
} ginaz_status;

typedef enum ginaz_format {
  GINAZ_FORMAT_TEXT = 0,
  GINAZ_FORMAT_JSON = 1
} ginaz_format;

typedef struct ginaz_model ginaz_model;

/* Library version, e.g. "1.0.0". Static storage. */
GINAZ_API const char* ginaz_version(void);

/* Message for the last failure on this thread, "" if none. */
GINAZ_API const char* ginaz_last_error(void);

GINAZ_API void ginaz_string_free(char* s);

/* Builds a model from a corpus and a rule table and writes it to out_dir. */
GINAZ_API ginaz_status ginaz_train(const char* corpus_path,
                                   const char* rules_path, const char* out_dir);

GINAZ_API ginaz_status ginaz_model_load(const char* dir, ginaz_model** out);
GINAZ_API void ginaz_model_free(ginaz_model* model);

/* "<format version>-<manifest checksum>". Valid while the model lives. */
GINAZ_API const char* ginaz_model_version(const ginaz_model* model);

/* Rewrites `text` for the selected targets. `speaker` and `listener` are
 * comma separated subsets of "m,f" (NULL or "" for none). English sentences
 * are translated first. */
GINAZ_API ginaz_status ginaz_rewrite(const ginaz_model* model,
                                     const char* text, const char* speaker,
                                     const char* listener, ginaz_format format,
                                     char** out);

/* Runs one API request ("POST /api/rewrite" or "GET /api/health") without a
 * socket. Writes the HTTP status and the JSON body. */
GINAZ_API ginaz_status ginaz_handle_request(const ginaz_model* model,
                                            const char* method,
                                            const char* path, const char* body,
                                            int* http_status, char** out_body);

/* Scores the model on a corpus file; TSV lines "metric\tsplit\tvalue". */
GINAZ_API ginaz_status ginaz_eval(const ginaz_model* model,
                                  const char* corpus_path, const char* split,
                                  char** out_tsv);

/* Serves the HTTP API (and `static_dir` at "/", if not NULL) until the
 * process is terminated. */
GINAZ_API ginaz_status ginaz_serve(const ginaz_model* model, const char* host,
                                   int port, const char* static_dir);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* GINAZ_GINAZ_H_ */
