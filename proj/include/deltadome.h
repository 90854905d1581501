/* Copyright 2026 The Deltadome Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the deltadome library.
 *
 * Every fallible call returns DD_OK or an error code; the message behind
 * the most recent failure on the calling thread is kept by dd_last_error.
 * Strings handed out through char** parameters are NUL terminated, owned
 * by the caller, and released with dd_string_free. Meshes are opaque
 * handles released with dd_mesh_free. Structured results cross the
 * boundary as JSON text.
 *
 * A base polygon is passed as its edge word: the integer edge lengths in
 * boundary order, one entry per corner of an equiangular polygon with that
 * many corners.
 *
 * Calls taking an eps use it as the verification tolerance when positive
 * and fall back to the defaults otherwise.
 */

#ifndef DELTADOME_H_
#define DELTADOME_H_

#ifdef __cplusplus
extern "C" {
#endif

enum {
  DD_OK = 0,
  DD_ERR_INVALID_ARGUMENT = 1,
  DD_ERR_NOT_CLOSED = 2,
  DD_ERR_NOT_DOMEABLE = 3,
  DD_ERR_APEX_DEGENERATE = 4,
  DD_ERR_NOT_POLYIAMOND = 5,
  DD_ERR_BAND_MISMATCH = 6,
  DD_ERR_DEGENERATE_MESH = 7,
  DD_ERR_PARSE = 8,
  DD_ERR_OUT_OF_RANGE = 9,
  DD_ERR_INTERNAL = 10
};

typedef struct dd_mesh dd_mesh;

/* Static storage; never freed by the caller. */
const char* dd_version(void);
const char* dd_status_name(int status);

/* Message from the most recent failing call on this thread. Valid until
 * the next failing call; empty when nothing has failed yet. */
const char* dd_last_error(void);

void dd_string_free(char* text);
void dd_mesh_free(dd_mesh* mesh);

/* Decides whether the edge word admits a dome and reports the closure and
 * admissibility conditions plus the construction plan as JSON. */
int dd_decide(const long long* edges, int n, char** out_json);

/* Builds the dome over the edge word and verifies it before returning. */
int dd_build(const long long* edges, int n, double eps, dd_mesh** out_mesh);

/* Reads a mesh from OBJ or mesh JSON text, detected by the first byte. */
int dd_mesh_parse(const char* text, dd_mesh** out_mesh);

int dd_mesh_obj(const dd_mesh* mesh, char** out_text);
int dd_mesh_json(const dd_mesh* mesh, char** out_text);

/* Vertex, edge and face counts. Any of the out pointers may be NULL. */
int dd_mesh_counts(const dd_mesh* mesh, int* out_v, int* out_e, int* out_f);

int dd_mesh_vertex(const dd_mesh* mesh, int index, double out_xyz[3]);

/* Index of the designated base face, -1 when none is marked. */
int dd_mesh_base(const dd_mesh* mesh, int* out_base);

/* Marks base_face as the base and moves the mesh into its frame: the face
 * plane becomes z = 0 with the face normal pointing down. */
int dd_mesh_set_base(dd_mesh* mesh, int base_face);

/* Copy of the mesh with every dome face split into its unit triangles. */
int dd_mesh_triangulate(const dd_mesh* mesh, double eps, dd_mesh** out_mesh);

/* Runs the full audit. edges may be NULL to audit against no base spec.
 * out_passed and out_json may each be NULL; a failed audit still returns
 * DD_OK, with the verdict in *out_passed and the report in *out_json. */
int dd_verify(const dd_mesh* mesh, const long long* edges, int n, double eps,
              int* out_passed, char** out_json);

typedef struct dd_search_budget {
  int max_dome_vertices;
  int max_flat_vertices;
  long long max_templates;
  int restarts;
  unsigned int seed;
  double wall_clock_seconds;
} dd_search_budget;

/* Fills in the default budget; adjust fields before passing to dd_search. */
void dd_search_budget_init(dd_search_budget* budget);

/* Walks the dome templates over the edge word and tries to embed each.
 * budget NULL means the defaults. The outcome is reported as JSON; when a
 * dome is found and out_mesh is not NULL, *out_mesh receives it, otherwise
 * *out_mesh is NULL. Finding nothing is still DD_OK. */
int dd_search(const long long* edges, int n, const dd_search_budget* budget,
              double eps, char** out_json, dd_mesh** out_mesh);

/* Samples vertex stars, classifies each, and reports the sweep as JSON. */
int dd_gauss_sweep(int count, unsigned int seed, double eps, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DELTADOME_H_ */
