/**
 * Timed-transcript input format (`*.transcript.json`).
 *
 * One document per video: an id, a BCP-47 language tag, the word list with
 * start/end timestamps in seconds, and the total media duration.
 */

export interface TimedWord {
  token: string;
  /** Start of the word in seconds from the beginning of the video. */
  start: number;
  /** End of the word in seconds; end >= start. */
  end: number;
}

export interface TimedTranscript {
  videoId: string;
  language: string;
  words: TimedWord[];
  /** Total media duration in seconds. */
  duration: number;
}

export class TranscriptError extends Error {}

/** Parse and validate a transcript document. Throws TranscriptError with a
 * field path on any schema violation. */
export function parseTranscript(text: string): TimedTranscript {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new TranscriptError(`transcript parse error: ${(err as Error).message}`);
  }
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new TranscriptError("transcript must be a JSON object");
  }
  const doc = data as Record<string, unknown>;
  const videoId = doc.video_id;
  if (typeof videoId !== "string" || videoId === "") {
    throw new TranscriptError("video_id: missing or not a string");
  }
  const language = doc.language;
  if (typeof language !== "string" || language === "") {
    throw new TranscriptError("language: missing or not a string");
  }
  const duration = doc.duration;
  if (typeof duration !== "number" || !Number.isFinite(duration) || duration < 0) {
    throw new TranscriptError("duration: missing or not a nonnegative number");
  }
  const rawWords = doc.words;
  if (!Array.isArray(rawWords)) {
    throw new TranscriptError("words: missing or not an array");
  }
  const words: TimedWord[] = rawWords.map((raw, i) => {
    if (!Array.isArray(raw) || raw.length !== 3) {
      throw new TranscriptError(`words[${i}]: expected [token, start, end]`);
    }
    const [token, start, end] = raw as unknown[];
    if (typeof token !== "string" || token === "") {
      throw new TranscriptError(`words[${i}]: token must be a non-empty string`);
    }
    if (typeof start !== "number" || typeof end !== "number" ||
        !Number.isFinite(start) || !Number.isFinite(end)) {
      throw new TranscriptError(`words[${i}]: timestamps must be finite numbers`);
    }
    if (end < start) {
      throw new TranscriptError(`words[${i}]: end ${end} before start ${start}`);
    }
    return { token, start, end };
  });
  for (let i = 1; i < words.length; i++) {
    if (words[i].start < words[i - 1].start) {
      throw new TranscriptError(`words[${i}]: start times must be non-decreasing`);
    }
  }
  return { videoId, language, words, duration };
}
