import { mkdtempSync, readFileSync, rmSync, writeFileSync, existsSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import {
  checkPositions,
  checkPositiveInt,
  edgesFileText,
  parseEdgeFile,
  pointsFileText,
  symmetrize,
  toUndirectedPairs,
} from "./convert.js";
import { runCli, version } from "./runner.js";

export { ConversionError, NativeError } from "./errors.js";
export { desymmetrize, symmetrize } from "./convert.js";
export { version };

export interface RewireResult {
  /** Flat (2, 2E) edge index: canonical undirected list then flipped copy. */
  edgeIndex: Int32Array;
  /** Per directed edge: 0 = original mesh edge, 1 = added tree edge. */
  edgeTag: Uint8Array;
  /** Per directed edge, D reals: target position minus source position. */
  edgeAttr: Float64Array;
}

export interface PoolStageArrays {
  /** Fine indices of the kept (even BFS front) nodes, ascending. */
  keptNodes: Int32Array;
  /** Symmetrized edge index over re-indexed kept nodes. */
  coarseEdgeIndex: Int32Array;
  /** Coarse index of every fine node's nearest kept node. */
  fineToCoarse: Int32Array;
}

function withWorkdir<T>(body: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "treewire-"));
  try {
    return body(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/**
 * Supplement a mesh graph with hierarchical tree edges.
 *
 * Semantics match the native rewire followed by attribute filling, with the
 * output symmetrized (both directions present) for message-passing use;
 * de-symmetrizing recovers the native canonical edge list exactly.
 */
export function rewireArrays(
  positions: ArrayLike<number>,
  dim: number,
  edgeIndex: ArrayLike<number>,
  levels: number,
  mergeExponent = 1,
): RewireResult {
  const nNodes = checkPositions(positions, dim);
  const pairs = toUndirectedPairs(edgeIndex, nNodes);
  checkPositiveInt("levels", levels);
  checkPositiveInt("merge_exponent", mergeExponent);

  const tagged = withWorkdir((dir) => {
    const pointsPath = join(dir, "points.txt");
    const edgesPath = join(dir, "edges.txt");
    const outPath = join(dir, "rewired.txt");
    writeFileSync(pointsPath, pointsFileText(positions, dim));
    writeFileSync(edgesPath, edgesFileText(pairs));
    runCli(["rewire", pointsPath, edgesPath,
            "--levels", String(levels),
            "--merge-exponent", String(mergeExponent),
            "-o", outPath]);
    return parseEdgeFile(readFileSync(outPath, "utf8"));
  });

  const e = tagged.pairs.length;
  const edgeTag = new Uint8Array(2 * e);
  edgeTag.set(tagged.tags, 0);
  edgeTag.set(tagged.tags, e);
  const edgeAttr = new Float64Array(2 * e * dim);
  for (let i = 0; i < e; i++) {
    const [u, v] = tagged.pairs[i];
    for (let axis = 0; axis < dim; axis++) {
      // per directed edge: target minus source for the stored orientation
      edgeAttr[i * dim + axis] =
        positions[v * dim + axis] - positions[u * dim + axis];
      edgeAttr[(e + i) * dim + axis] =
        positions[u * dim + axis] - positions[v * dim + axis];
    }
  }
  return { edgeIndex: symmetrize(tagged.pairs), edgeTag, edgeAttr };
}

/**
 * Build a bi-stride pooling pyramid; one entry per coarsening stage.
 */
export function poolArrays(
  positions: ArrayLike<number>,
  dim: number,
  edgeIndex: ArrayLike<number>,
  stages: number,
): PoolStageArrays[] {
  const nNodes = checkPositions(positions, dim);
  const pairs = toUndirectedPairs(edgeIndex, nNodes);
  checkPositiveInt("stages", stages);

  return withWorkdir((dir) => {
    const pointsPath = join(dir, "points.txt");
    const edgesPath = join(dir, "edges.txt");
    const prefix = join(dir, "pyramid");
    writeFileSync(pointsPath, pointsFileText(positions, dim));
    writeFileSync(edgesPath, edgesFileText(pairs));
    runCli(["pool", pointsPath, edgesPath, "--stages", String(stages),
            "-o", prefix]);

    const result: PoolStageArrays[] = [];
    for (let stage = 1; stage <= stages; stage++) {
      const edgeFile = `${prefix}_stage${stage}.edges`;
      const mapFile = `${prefix}_stage${stage}.map`;
      if (!existsSync(mapFile)) break;
      const coarse = parseEdgeFile(readFileSync(edgeFile, "utf8"));
      const kept: number[] = [];
      const fineToCoarse: number[] = [];
      for (const raw of readFileSync(mapFile, "utf8").split("\n")) {
        const line = raw.trim();
        if (!line) continue;
        const [fine, coarseIndex, front] = line.split(/\s+/).map(Number);
        fineToCoarse[fine] = coarseIndex;
        if (front % 2 === 0) kept.push(fine);
      }
      result.push({
        keptNodes: Int32Array.from(kept),
        coarseEdgeIndex: symmetrize(coarse.pairs),
        fineToCoarse: Int32Array.from(fineToCoarse),
      });
    }
    return result;
  });
}

/**
 * Delaunay-triangulate a planar point set; returns the symmetrized edge
 * index of the triangulation's derived edge set.
 */
export function triangulateArrays(
  positions: ArrayLike<number>,
  dim: number,
): Int32Array {
  checkPositions(positions, dim);
  const parsed = withWorkdir((dir) => {
    const pointsPath = join(dir, "points.txt");
    const outPath = join(dir, "mesh.txt");
    writeFileSync(pointsPath, pointsFileText(positions, dim));
    runCli(["triangulate", pointsPath, "-o", outPath]);
    return parseEdgeFile(readFileSync(outPath, "utf8"));
  });
  return symmetrize(parsed.pairs);
}
