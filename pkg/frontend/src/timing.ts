/**
 * Timing-derived measures: reaction time, pause count and speech speed.
 */

import { PartialMeasures } from "./measures.js";
import { countSyllablesAll } from "./syllables.js";
import { TimedTranscript, TranscriptError } from "./transcript.js";

export interface TimingOptions {
  /** Inter-word gaps longer than this many seconds count as pauses. */
  pauseThresholdS: number;
}

export const DEFAULT_TIMING_OPTIONS: TimingOptions = { pauseThresholdS: 0.5 };

const SOURCE = "measure-extractor 0.1.0 (timing)";

/**
 * reaction_time: start of the first word, in seconds.
 * pauses: count of inter-word gaps longer than the threshold.
 * speech_speed: syllables per second of speaking time, where speaking time
 * is the span from the first word start to the last word end minus the
 * pause gaps. Null with a warning when that span is zero.
 */
export function extractTimingMeasures(
  t: TimedTranscript,
  options: TimingOptions = DEFAULT_TIMING_OPTIONS,
): PartialMeasures {
  if (t.words.length === 0) {
    throw new TranscriptError("cannot extract timing measures from an empty transcript");
  }
  const warnings: string[] = [];
  const first = t.words[0];
  const last = t.words[t.words.length - 1];

  let pauses = 0;
  let pausedTime = 0;
  for (let i = 1; i < t.words.length; i++) {
    const gap = t.words[i].start - t.words[i - 1].end;
    if (gap > options.pauseThresholdS) {
      pauses += 1;
      pausedTime += gap;
    }
  }

  const speakingTime = last.end - first.start - pausedTime;
  const syllables = countSyllablesAll(t.words.map((w) => w.token));
  let speechSpeed: number | null = null;
  if (speakingTime > 0) {
    speechSpeed = syllables / speakingTime;
  } else {
    warnings.push("speech_speed: zero speaking time, emitted as null");
  }

  return {
    videoId: t.videoId,
    values: {
      reaction_time: first.start,
      pauses,
      speech_speed: speechSpeed,
    },
    warnings,
    provenance: {
      reaction_time: SOURCE,
      pauses: SOURCE,
      speech_speed: SOURCE,
    },
  };
}
