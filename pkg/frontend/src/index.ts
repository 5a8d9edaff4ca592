export { parseTranscript, TranscriptError } from "./transcript.js";
export type { TimedTranscript, TimedWord } from "./transcript.js";
export { countSyllables, countSyllablesAll } from "./syllables.js";
export { extractTimingMeasures, DEFAULT_TIMING_OPTIONS } from "./timing.js";
export type { TimingOptions } from "./timing.js";
export { extractTextMeasures } from "./text.js";
export { emitMeasures, renderMeasureDocument, EmitError } from "./emit.js";
export type { MeasureDocument } from "./emit.js";
export { loadLexicons, parseLexicon, emptyLexicons, lexiconVersions } from "./lexicons.js";
export type { Lexicon, Lexicons } from "./lexicons.js";
export { ALL_MEASURE_IDS } from "./measures.js";
export type { MeasureValue, PartialMeasures } from "./measures.js";
