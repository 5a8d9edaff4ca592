/**
 * Merge partial measure sets into one schema-valid measure document.
 */

import { ALL_MEASURE_IDS, MeasureValue, PartialMeasures } from "./measures.js";

export class EmitError extends Error {}

export interface MeasureDocument {
  video_id: string;
  measures: Record<string, MeasureValue>;
  meta: {
    extractor: string;
    provenance: Record<string, string>;
    lexicons?: Record<string, string>;
    warnings?: string[];
  };
}

/** Merge the parts into one document. Every known measure id is present;
 * ids no part produced are null. Conflicting video ids or duplicate
 * measures across parts are errors. */
export function emitMeasures(
  parts: PartialMeasures[],
  lexiconVersions?: Record<string, string>,
): MeasureDocument {
  if (parts.length === 0) {
    throw new EmitError("no measure parts to merge");
  }
  const videoId = parts[0].videoId;
  for (const part of parts) {
    if (part.videoId !== videoId) {
      throw new EmitError(`conflicting video ids: ${videoId} vs ${part.videoId}`);
    }
  }

  const measures: Record<string, MeasureValue> = {};
  for (const id of ALL_MEASURE_IDS) {
    measures[id] = null;
  }
  const provenance: Record<string, string> = {};
  const warnings: string[] = [];
  for (const part of parts) {
    for (const [id, value] of Object.entries(part.values)) {
      if (!(id in measures)) {
        throw new EmitError(`unknown measure id ${id}`);
      }
      if (measures[id] !== null) {
        throw new EmitError(`measure ${id} produced by more than one part`);
      }
      measures[id] = value;
    }
    Object.assign(provenance, part.provenance);
    warnings.push(...part.warnings);
  }

  const meta: MeasureDocument["meta"] = {
    extractor: "measure-extractor 0.1.0",
    provenance,
  };
  if (lexiconVersions) {
    meta.lexicons = lexiconVersions;
  }
  if (warnings.length > 0) {
    meta.warnings = warnings;
  }
  return { video_id: videoId, measures, meta };
}

export function renderMeasureDocument(doc: MeasureDocument): string {
  return JSON.stringify(doc, null, 1) + "\n";
}
