import { describe, expect, it } from "vitest";

import {
  ConversionError,
  NativeError,
  desymmetrize,
  poolArrays,
  rewireArrays,
  triangulateArrays,
  version,
} from "../src/index.js";

describe("rewireArrays", () => {
  it("connects two isolated nodes with a symmetric tree edge", () => {
    const result = rewireArrays([0, 0, 1, 0], 2, [], 1, 1);
    expect(Array.from(result.edgeIndex)).toEqual([0, 1, 1, 0]);
    expect(Array.from(result.edgeTag)).toEqual([1, 1]);
    expect(Array.from(result.edgeAttr)).toEqual([1, 0, -1, 0]); // exact +0 on the y axis
  });

  it("passes a single-node graph through unchanged", () => {
    const result = rewireArrays([0.5, 0.5], 2, [], 1, 1);
    expect(result.edgeIndex.length).toBe(0);
    expect(result.edgeTag.length).toBe(0);
    expect(result.edgeAttr.length).toBe(0);
  });

  it("accepts already-symmetrized input edges", () => {
    const direct = rewireArrays([0, 0, 1, 0, 2, 0], 2, [0, 1, 1, 2], 2, 1);
    const doubled = rewireArrays(
      [0, 0, 1, 0, 2, 0], 2, [0, 1, 1, 2, 1, 0, 2, 1], 2, 1);
    expect(Array.from(doubled.edgeIndex)).toEqual(Array.from(direct.edgeIndex));
    expect(Array.from(doubled.edgeTag)).toEqual(Array.from(direct.edgeTag));
  });

  it("keeps mesh tags on collisions", () => {
    const result = rewireArrays([0, 0, 1, 0], 2, [0, 1], 1, 1);
    expect(Array.from(result.edgeIndex)).toEqual([0, 1, 1, 0]);
    expect(Array.from(result.edgeTag)).toEqual([0, 0]);
  });
});

describe("poolArrays", () => {
  it("matches the path-5 hand enumeration", () => {
    const positions = [0, 0, 1, 0, 2, 0, 3, 0, 4, 0];
    const edgeIndex = [0, 1, 2, 3, 1, 2, 3, 4];
    const stagesOut = poolArrays(positions, 2, edgeIndex, 1);
    expect(stagesOut).toHaveLength(1);
    const stage = stagesOut[0];
    expect(Array.from(stage.keptNodes)).toEqual([0, 2, 4]);
    expect(desymmetrize(stage.coarseEdgeIndex)).toEqual([[0, 1], [1, 2]]);
    expect(Array.from(stage.fineToCoarse)).toEqual([0, 0, 1, 1, 2]);
  });

  it("yields one trivial stage for a single node", () => {
    const stagesOut = poolArrays([0, 0], 2, [], 3);
    expect(stagesOut).toHaveLength(1);
    expect(Array.from(stagesOut[0].keptNodes)).toEqual([0]);
    expect(stagesOut[0].coarseEdgeIndex.length).toBe(0);
  });

  it("maps every fine node to a valid coarse index at every stage", () => {
    const side = 6;
    const positions: number[] = [];
    const sources: number[] = [];
    const targets: number[] = [];
    for (let r = 0; r < side; r++) {
      for (let c = 0; c < side; c++) {
        positions.push(r, c);
        if (c + 1 < side) { sources.push(r * side + c); targets.push(r * side + c + 1); }
        if (r + 1 < side) { sources.push(r * side + c); targets.push((r + 1) * side + c); }
      }
    }
    const stagesOut = poolArrays(positions, 2, [...sources, ...targets], 4);
    expect(stagesOut.length).toBeGreaterThan(1);
    for (const stage of stagesOut) {
      const coarseCount = stage.keptNodes.length;
      for (const coarse of stage.fineToCoarse) {
        expect(coarse).toBeGreaterThanOrEqual(0);
        expect(coarse).toBeLessThan(coarseCount);
      }
    }
  });
});

describe("triangulateArrays", () => {
  it("returns 6 directed entries for a triangle", () => {
    const edgeIndex = triangulateArrays([0, 0, 1, 0, 0, 1], 2);
    expect(edgeIndex.length).toBe(12); // flat (2, 6)
    expect(desymmetrize(edgeIndex)).toEqual([[0, 1], [0, 2], [1, 2]]);
  });

  it("returns 10 directed entries for a square (hull + one diagonal)", () => {
    const edgeIndex = triangulateArrays([0, 0, 1, 0, 1, 1, 0, 1], 2);
    expect(edgeIndex.length / 2).toBe(10);
    expect(desymmetrize(edgeIndex)).toContainEqual([0, 2]);
  });

  it("propagates the native collinearity diagnostic verbatim", () => {
    expect(() => triangulateArrays([0, 0, 1, 1, 2, 2], 2))
      .toThrowError(NativeError);
    try {
      triangulateArrays([0, 0, 1, 1, 2, 2], 2);
    } catch (error) {
      const native = error as NativeError;
      expect(native.message).toBe("error: no triangulation: all points collinear");
      expect(native.exitCode).toBe(1);
    }
  });
});

describe("input validation", () => {
  it("rejects ragged position arrays, naming the field", () => {
    expect(() => rewireArrays([0, 0, 1], 2, [], 1))
      .toThrowError(/positions: length 3 is not a multiple of dim 2/);
  });

  it("rejects non-finite positions", () => {
    expect(() => triangulateArrays([0, 0, 1, Number.NaN, 2, 0], 2))
      .toThrowError(ConversionError);
  });

  it("rejects malformed edge indices", () => {
    expect(() => rewireArrays([0, 0, 1, 0], 2, [0, 1, 1], 1))
      .toThrowError(/edge_index: length 3/);
    expect(() => rewireArrays([0, 0, 1, 0], 2, [0, 5], 1))
      .toThrowError(/edge_index: index 5 out of range/);
    expect(() => rewireArrays([0, 0, 1, 0], 2, [1, 1], 1))
      .toThrowError(/edge_index: self-loop at column 0/);
  });

  it("rejects non-positive hyperparameters", () => {
    expect(() => rewireArrays([0, 0, 1, 0], 2, [], 0)).toThrowError(/levels/);
    expect(() => poolArrays([0, 0, 1, 0], 2, [], 0)).toThrowError(/stages/);
  });
});

describe("version", () => {
  it("matches the native library version", async () => {
    const { spawnSync } = await import("node:child_process");
    const cli = (process.env.TREEWIRE_CLI ?? "python3 -m treewire").split(" ");
    const probe = spawnSync(cli[0], [...cli.slice(1), "--version"], {
      encoding: "utf8",
    });
    const native = probe.stdout.trim().split(" ").pop();
    expect(version()).toMatch(/^\d+\.\d+\.\d+$/);
    expect(version()).toBe(native);
  });
});
