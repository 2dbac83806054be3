/* tslint:disable */
/* eslint-disable */

/**
 * `Φ(a)`, `Δ(a)`, `lδ(a)` for `{"lift": descriptor, "point": matrix}`.
 */
export function evaluate(p: number, f: number, prec: number, input: string): string;

/**
 * Matrix Legendre symbol `Φ(1)` of `{"q": matrix, "sign"?}`.
 */
export function legendre(p: number, f: number, prec: number, input: string): string;

/**
 * The conjugation-obstruction witness at `{"point": [a, b, c, d]}`.
 */
export function witness(p: number, f: number, prec: number, input: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly evaluate: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly legendre: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly witness: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
