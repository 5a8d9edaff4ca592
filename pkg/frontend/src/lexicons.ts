/**
 * Plain-text word lexicons. Each file is one word per line; lines starting
 * with "#" are comments, and a "# version: X" header records the lexicon
 * version that ends up in the output meta block.
 */

import { readFileSync } from "node:fs";
import { join, dirname } from "node:path";
import { fileURLToPath } from "node:url";

export interface Lexicon {
  words: Set<string>;
  version: string;
}

export interface Lexicons {
  language: string;
  fillers: Lexicon;
  positive: Lexicon;
  negative: Lexicon;
  concrete: Lexicon;
  common: Lexicon;
}

export function parseLexicon(text: string): Lexicon {
  let version = "unversioned";
  const words = new Set<string>();
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (line === "") continue;
    if (line.startsWith("#")) {
      const match = line.match(/^#\s*version:\s*(\S+)/);
      if (match) version = match[1];
      continue;
    }
    words.add(line.toLowerCase());
  }
  return { words, version };
}

export function emptyLexicons(language: string): Lexicons {
  const empty = (): Lexicon => ({ words: new Set(), version: "empty" });
  return {
    language,
    fillers: empty(),
    positive: empty(),
    negative: empty(),
    concrete: empty(),
    common: empty(),
  };
}

const DATA_DIR = join(dirname(fileURLToPath(import.meta.url)), "..", "data");

/** Load the shipped lexicons for a language; only English is bundled. */
export function loadLexicons(language: string, dataDir: string = DATA_DIR): Lexicons {
  const load = (name: string): Lexicon =>
    parseLexicon(readFileSync(join(dataDir, `${name}.${language}.txt`), "utf-8"));
  return {
    language,
    fillers: load("fillers"),
    positive: load("positive"),
    negative: load("negative"),
    concrete: load("concrete"),
    common: load("common"),
  };
}

export function lexiconVersions(l: Lexicons): Record<string, string> {
  return {
    fillers: l.fillers.version,
    positive: l.positive.version,
    negative: l.negative.version,
    concrete: l.concrete.version,
    common: l.common.version,
  };
}
