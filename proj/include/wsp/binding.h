#ifndef WSP_BINDING_H_
#define WSP_BINDING_H_

/* C entry point for embedding the toolkit (e.g. compiled to WebAssembly for
 * the browser front end).
 *
 * Request:  {"command": "wspd", "points": [[x, y], ...],
 *            "params": {"s": 2, "t": 2, "k": 1}}     (params optional)
 * Response: the Scene JSON the CLI would write for the same input, or
 *           {"error": {"code": "...", "message": "..."}}.
 *
 * The returned string is heap allocated; release it with wsp_free(). */

#ifdef __cplusplus
extern "C" {
#endif

char* wsp_compute_scene(const char* request_json);
void wsp_free(char* response);

#ifdef __cplusplus
}
#endif

#endif  // WSP_BINDING_H_
