/* tslint:disable */
/* eslint-disable */

/**
 * Betti table of `R/I` for an ideal spec, with the invariants read off it.
 */
export function betti(spec_json: string, field: number): string;

/**
 * Reduced Hilbert series of `R/I` and the first coefficients of its expansion.
 */
export function hilbert(spec_json: string, field: number, terms: number): string;

/**
 * `reg(J^s)` from the engine against the closed-form prediction for the
 * complete multipartite graph with the given part sizes, `s = 1..=max_s`.
 */
export function regularity_curve(parts: string, max_s: number, field: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly betti: (a: number, b: number, c: number) => [number, number, number, number];
    readonly hilbert: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly regularity_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
