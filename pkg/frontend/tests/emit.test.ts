import { describe, expect, it } from "vitest";

import { EmitError, emitMeasures } from "../src/emit.js";
import { ALL_MEASURE_IDS, PartialMeasures } from "../src/measures.js";

function part(videoId: string, values: PartialMeasures["values"],
              warnings: string[] = []): PartialMeasures {
  const provenance: Record<string, string> = {};
  for (const id of Object.keys(values)) provenance[id] = "test";
  return { videoId, values, warnings, provenance };
}

describe("emitMeasures", () => {
  it("merges parts and nulls unresolved measures", () => {
    const doc = emitMeasures([
      part("v", { pauses: 2, speech_speed: 6.78 }),
      part("v", { crutches: 5.0, polarity: "neutral" }),
    ]);
    expect(doc.video_id).toBe("v");
    expect(Object.keys(doc.measures).sort()).toEqual([...ALL_MEASURE_IDS].sort());
    expect(doc.measures.pauses).toBe(2);
    expect(doc.measures.polarity).toBe("neutral");
    expect(doc.measures.gaze).toBeNull();
    expect(doc.meta.provenance.crutches).toBe("test");
  });

  it("records lexicon versions and warnings in meta", () => {
    const doc = emitMeasures(
      [part("v", { pauses: 0 }, ["polarity: empty lexicon, emitted as null"])],
      { fillers: "1.0.0" });
    expect(doc.meta.lexicons).toEqual({ fillers: "1.0.0" });
    expect(doc.meta.warnings).toEqual(["polarity: empty lexicon, emitted as null"]);
  });

  it("rejects conflicting video ids", () => {
    expect(() => emitMeasures([part("a", {}), part("b", {})])).toThrow(EmitError);
  });

  it("rejects an empty part list", () => {
    expect(() => emitMeasures([])).toThrow(EmitError);
  });

  it("rejects duplicate measures across parts", () => {
    expect(() => emitMeasures([
      part("v", { pauses: 1 }),
      part("v", { pauses: 2 }),
    ])).toThrow(/more than one part/);
  });

  it("rejects unknown measure ids", () => {
    expect(() => emitMeasures([part("v", { charisma: 9 })])).toThrow(/unknown measure/);
  });
});
