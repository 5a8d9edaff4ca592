/** Shared shape of a partially extracted measure set. */

export type MeasureValue = number | string | null;

export interface PartialMeasures {
  videoId: string;
  values: Record<string, MeasureValue>;
  warnings: string[];
  /** measure id -> free-form source string, copied into the output meta */
  provenance: Record<string, string>;
}

/** Measure ids understood by the scoring engine; ids this extractor cannot
 * derive are emitted as null. */
export const ALL_MEASURE_IDS = [
  "reaction_time", "mood", "pauses", "voice_uniformity", "speech_speed",
  "concreteness", "organisation", "crutches", "originality", "redundancy",
  "pos_profile", "polarity", "congruence", "constancy_of_ideas",
  "topic_relevance", "topic_depth", "topic_coherence",
  "gaze", "blink", "mouth_movement", "head_motion", "gesture_profile",
] as const;
