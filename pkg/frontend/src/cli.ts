#!/usr/bin/env node
/**
 * extract <transcript.json> [-o <measures.json>] [--pause-threshold <s>]
 *
 * Reads a timed transcript, extracts the timing and text measures and
 * writes a measure document the scoring engine accepts.
 * Exit codes: 0 success, 1 domain error, 2 I/O error.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { EmitError, emitMeasures, renderMeasureDocument } from "./emit.js";
import { emptyLexicons, lexiconVersions, loadLexicons } from "./lexicons.js";
import { extractTextMeasures } from "./text.js";
import { extractTimingMeasures } from "./timing.js";
import { parseTranscript, TranscriptError } from "./transcript.js";

function fail(code: number, message: string): never {
  process.stderr.write(`error: ${message}\n`);
  process.exit(code);
}

export function run(argv: string[]): void {
  const args = [...argv];
  let output: string | null = null;
  let pauseThresholdS = 0.5;
  const positional: string[] = [];
  while (args.length > 0) {
    const arg = args.shift() as string;
    if (arg === "-o" || arg === "--output") {
      const value = args.shift();
      if (value === undefined) fail(1, `${arg} needs a value`);
      output = value;
    } else if (arg === "--pause-threshold") {
      const value = Number(args.shift());
      if (!Number.isFinite(value) || value < 0) fail(1, "--pause-threshold needs a nonnegative number");
      pauseThresholdS = value;
    } else if (arg.startsWith("-")) {
      fail(1, `unknown option ${arg}`);
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 1) {
    fail(1, "usage: extract <transcript.json> [-o <measures.json>] [--pause-threshold <s>]");
  }

  let text: string;
  try {
    text = readFileSync(positional[0], "utf-8");
  } catch (err) {
    fail(2, `cannot read transcript: ${(err as Error).message}`);
  }

  try {
    const transcript = parseTranscript(text);
    const language = transcript.language.toLowerCase().split("-")[0];
    let lexicons;
    try {
      lexicons = loadLexicons(language);
    } catch {
      lexicons = emptyLexicons("none");
    }
    const parts = [
      extractTimingMeasures(transcript, { pauseThresholdS }),
      extractTextMeasures(transcript, lexicons),
    ];
    const doc = emitMeasures(parts, lexiconVersions(lexicons));
    const rendered = renderMeasureDocument(doc);
    if (output) {
      try {
        writeFileSync(output, rendered, "utf-8");
      } catch (err) {
        fail(2, `cannot write output: ${(err as Error).message}`);
      }
    } else {
      process.stdout.write(rendered);
    }
  } catch (err) {
    if (err instanceof TranscriptError || err instanceof EmitError) {
      fail(1, err.message);
    }
    throw err;
  }
}

run(process.argv.slice(2));
