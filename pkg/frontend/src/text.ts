/**
 * Lexicon-based text measures from the transcript tokens.
 *
 * Scores are simple documented ratios on the engine's 0-10 scale:
 * - crutches: filler-lexicon hits per 100 tokens
 * - redundancy: 10 * (1 - distinct/total tokens)
 * - polarity: positive vs negative lexicon vote
 * - concreteness: concrete-noun share of tokens, scaled by 5, capped at 10
 * - originality: share of tokens outside the common-words lexicon, times 10
 * - pos_profile: adjective share (suffix heuristic) against a 20% ceiling
 *
 * Measures whose lexicon is empty, and every measure for an unsupported
 * language, are emitted as null with a warning.
 */

import { Lexicons } from "./lexicons.js";
import { MeasureValue, PartialMeasures } from "./measures.js";
import { TimedTranscript } from "./transcript.js";

const SOURCE = "measure-extractor 0.1.0 (text)";
const CONCRETE_SCALE = 5;
const ADJECTIVE_CEILING = 0.2;
const ADJECTIVE_SUFFIX = /(ous|ful|ive|able|ible|al|ic|ish|less|est)$/;

const TEXT_MEASURES = [
  "crutches", "redundancy", "polarity", "concreteness", "originality", "pos_profile",
] as const;

function tokenize(t: TimedTranscript): string[] {
  return t.words
    .map((w) => w.token.toLowerCase().replace(/[^a-z']/g, ""))
    .filter((token) => token !== "");
}

function allNull(videoId: string, warning: string): PartialMeasures {
  const values: Record<string, MeasureValue> = {};
  const provenance: Record<string, string> = {};
  for (const id of TEXT_MEASURES) {
    values[id] = null;
    provenance[id] = SOURCE;
  }
  return { videoId, values, warnings: [warning], provenance };
}

export function extractTextMeasures(t: TimedTranscript, lexicons: Lexicons): PartialMeasures {
  const language = t.language.toLowerCase().split("-")[0];
  if (language !== lexicons.language) {
    return allNull(t.videoId,
      `language ${t.language}: no matching lexicons, text measures emitted as null`);
  }
  const tokens = tokenize(t);
  if (tokens.length === 0) {
    return allNull(t.videoId, "no tokenizable text, text measures emitted as null");
  }

  const warnings: string[] = [];
  const values: Record<string, MeasureValue> = {};
  const provenance: Record<string, string> = {};
  const total = tokens.length;

  const hits = (words: Set<string>): number =>
    tokens.filter((token) => words.has(token)).length;

  const withLexicon = (
    id: string,
    lexicon: { words: Set<string>; version: string },
    compute: () => MeasureValue,
  ): void => {
    provenance[id] = SOURCE;
    if (lexicon.words.size === 0) {
      values[id] = null;
      warnings.push(`${id}: empty lexicon, emitted as null`);
      return;
    }
    values[id] = compute();
  };

  withLexicon("crutches", lexicons.fillers,
    () => (hits(lexicons.fillers.words) / total) * 100);

  provenance.redundancy = SOURCE;
  values.redundancy = 10 * (1 - new Set(tokens).size / total);

  const posLex = lexicons.positive;
  const negLex = lexicons.negative;
  provenance.polarity = SOURCE;
  if (posLex.words.size === 0 || negLex.words.size === 0) {
    values.polarity = null;
    warnings.push("polarity: empty lexicon, emitted as null");
  } else {
    const pos = hits(posLex.words);
    const neg = hits(negLex.words);
    values.polarity = pos > neg ? "positive" : neg > pos ? "negative" : "neutral";
  }

  withLexicon("concreteness", lexicons.concrete,
    () => Math.min(10, (hits(lexicons.concrete.words) / total) * CONCRETE_SCALE * 10));

  withLexicon("originality", lexicons.common, () => {
    const unusual = tokens.filter((token) => !lexicons.common.words.has(token)).length;
    return 10 * (unusual / total);
  });

  provenance.pos_profile = SOURCE;
  const adjectives = tokens.filter((token) => ADJECTIVE_SUFFIX.test(token)).length;
  values.pos_profile = Math.min(10, (adjectives / total / ADJECTIVE_CEILING) * 10);

  return { videoId: t.videoId, values, warnings, provenance };
}
