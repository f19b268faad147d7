/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_spectrumview_free: (a: number, b: number) => void;
export const angle_sweep: (a: number, b: number, c: number) => [number, number, number, number];
export const field_map: (a: number, b: number, c: number) => [number, number, number, number];
export const spectrum: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const spectrumview_bandwidth_3db: (a: number) => number;
export const spectrumview_capacity: (a: number) => number;
export const spectrumview_frequencies: (a: number) => [number, number];
export const spectrumview_mutual: (a: number) => number;
export const spectrumview_peak_db: (a: number) => number;
export const spectrumview_peak_frequency: (a: number) => number;
export const spectrumview_tuned_db: (a: number) => [number, number];
export const spectrumview_untuned_db: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
