/* tslint:disable */
/* eslint-disable */

export class SpectrumView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * NaN when the band runs off the frequency grid.
     */
    readonly bandwidth_3db: number;
    /**
     * NaN when the bandwidth is undefined.
     */
    readonly capacity: number;
    readonly frequencies: Float64Array;
    readonly mutual: number;
    readonly peak_db: number;
    readonly peak_frequency: number;
    readonly tuned_db: Float64Array;
    readonly untuned_db: Float64Array;
}

export function angle_sweep(x_eye: number, z_eye: number, step: number): Float64Array;

export function field_map(tx_angle: number, half_width: number, n: number): Float64Array;

export function spectrum(tx_angle: number, x_eye: number, z_eye: number, r_source: number, r_load: number): SpectrumView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_spectrumview_free: (a: number, b: number) => void;
    readonly angle_sweep: (a: number, b: number, c: number) => [number, number, number, number];
    readonly field_map: (a: number, b: number, c: number) => [number, number, number, number];
    readonly spectrum: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly spectrumview_bandwidth_3db: (a: number) => number;
    readonly spectrumview_capacity: (a: number) => number;
    readonly spectrumview_frequencies: (a: number) => [number, number];
    readonly spectrumview_mutual: (a: number) => number;
    readonly spectrumview_peak_db: (a: number) => number;
    readonly spectrumview_peak_frequency: (a: number) => number;
    readonly spectrumview_tuned_db: (a: number) => [number, number];
    readonly spectrumview_untuned_db: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
