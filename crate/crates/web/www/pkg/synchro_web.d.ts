/* tslint:disable */
/* eslint-disable */

/**
 * An automaton built from a CNF formula.
 */
export class Gadget {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Builds the level-`r` gadget for DIMACS text `cnf`, optionally
     * re-encoded over a binary alphabet.
     */
    constructor(cnf: string, r: number, binary: boolean);
    /**
     * Exact minimum and greedy reset words, with their ratio.
     */
    solve(max_visited_sets: number): string;
    summary(): string;
    /**
     * Image cardinality after each prefix of `word`.
     */
    trace(word: string): string;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_gadget_free: (a: number, b: number) => void;
    readonly gadget_new: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly gadget_solve: (a: number, b: number) => [number, number];
    readonly gadget_summary: (a: number) => [number, number];
    readonly gadget_trace: (a: number, b: number, c: number) => [number, number, number, number];
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
