/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const quotient: (a: number, b: number, c: number, d: number) => [number, number];
export const random_finite: (a: number, b: number, c: bigint) => [number, number];
export const real_eigen: (a: number, b: bigint) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
