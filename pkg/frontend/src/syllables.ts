/** Vowel-group syllable counting heuristic for English-like text. */

const VOWEL_GROUP = /[aeiouy]+/g;

/** Count syllables in one token: the number of contiguous vowel groups,
 * minus a trailing silent "e" when it forms its own group, with a floor of
 * one syllable for any token containing a letter. */
export function countSyllables(token: string): number {
  const word = token.toLowerCase().replace(/[^a-z]/g, "");
  if (word === "") {
    return 0;
  }
  const groups = word.match(VOWEL_GROUP) ?? [];
  let count = groups.length;
  // silent final "e" as in "more", but not a lone vowel as in "be"
  if (count > 1 && word.endsWith("e") && !word.endsWith("ee") &&
      groups[groups.length - 1] === "e") {
    count -= 1;
  }
  return Math.max(count, 1);
}

export function countSyllablesAll(tokens: string[]): number {
  return tokens.reduce((total, token) => total + countSyllables(token), 0);
}
