import { ConversionError } from "./errors.js";

/**
 * Array-layout conventions:
 *
 * - positions: flat N*D reals, row-major (node index varies slowest);
 * - edge index: flat 2*E integers, source row then target row, the
 *   column-pair layout graph-learning toolkits expect;
 * - undirected native edges are symmetrized on output as the canonical
 *   (u < v, sorted) list followed by its flipped copy, so taking the
 *   first half of each row de-symmetrizes back to the native ordering.
 */

export function checkPositiveInt(field: string, value: number): number {
  if (!Number.isInteger(value) || value < 1) {
    throw new ConversionError(field, `expected a positive integer, got ${value}`);
  }
  return value;
}

export function checkPositions(positions: ArrayLike<number>, dim: number): number {
  checkPositiveInt("dim", dim);
  if (positions.length === 0) {
    throw new ConversionError("positions", "must not be empty");
  }
  if (positions.length % dim !== 0) {
    throw new ConversionError(
      "positions", `length ${positions.length} is not a multiple of dim ${dim}`);
  }
  for (let i = 0; i < positions.length; i++) {
    if (!Number.isFinite(positions[i])) {
      throw new ConversionError("positions", `non-finite value at index ${i}`);
    }
  }
  return positions.length / dim;
}

/** Collapse a directed/flat edge index to sorted undirected pairs. */
export function toUndirectedPairs(
  edgeIndex: ArrayLike<number>, nNodes: number): Array<[number, number]> {
  if (edgeIndex.length % 2 !== 0) {
    throw new ConversionError(
      "edge_index", `length ${edgeIndex.length} is not a multiple of 2`);
  }
  const count = edgeIndex.length / 2;
  const seen = new Set<number>();
  const pairs: Array<[number, number]> = [];
  for (let i = 0; i < count; i++) {
    const source = edgeIndex[i];
    const target = edgeIndex[count + i];
    for (const value of [source, target]) {
      if (!Number.isInteger(value) || value < 0 || value >= nNodes) {
        throw new ConversionError(
          "edge_index", `index ${value} out of range for ${nNodes} nodes`);
      }
    }
    if (source === target) {
      throw new ConversionError("edge_index", `self-loop at column ${i}`);
    }
    const u = Math.min(source, target);
    const v = Math.max(source, target);
    const key = u * nNodes + v;
    if (!seen.has(key)) {
      seen.add(key);
      pairs.push([u, v]);
    }
  }
  pairs.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  return pairs;
}

export function pointsFileText(positions: ArrayLike<number>, dim: number): string {
  const rows: string[] = [];
  for (let node = 0; node < positions.length / dim; node++) {
    const coords: string[] = [];
    for (let axis = 0; axis < dim; axis++) {
      coords.push(String(positions[node * dim + axis]));
    }
    rows.push(coords.join(" "));
  }
  return rows.join("\n") + "\n";
}

export function edgesFileText(pairs: Array<[number, number]>): string {
  return pairs.map(([u, v]) => `${u} ${v}`).join("\n") + (pairs.length ? "\n" : "");
}

export interface TaggedEdges {
  pairs: Array<[number, number]>;
  tags: Uint8Array;
}

/** Parse "u v [tag]" lines; tag T maps to 1, anything else to 0. */
export function parseEdgeFile(text: string): TaggedEdges {
  const pairs: Array<[number, number]> = [];
  const tags: number[] = [];
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (!line || line.startsWith("#")) continue;
    const fields = line.split(/\s+/);
    pairs.push([Number(fields[0]), Number(fields[1])]);
    tags.push(fields[2] === "T" ? 1 : 0);
  }
  return { pairs, tags: Uint8Array.from(tags) };
}

/** Canonical pairs + flipped copies, as a flat (2, 2E) row-major array. */
export function symmetrize(pairs: Array<[number, number]>): Int32Array {
  const e = pairs.length;
  const flat = new Int32Array(4 * e);
  for (let i = 0; i < e; i++) {
    flat[i] = pairs[i][0];              // sources, canonical half
    flat[e + i] = pairs[i][1];          // sources, flipped half
    flat[2 * e + i] = pairs[i][1];      // targets, canonical half
    flat[3 * e + i] = pairs[i][0];      // targets, flipped half
  }
  return flat;
}

/** First half of each row of a symmetrized edge index, as pairs. */
export function desymmetrize(edgeIndex: ArrayLike<number>): Array<[number, number]> {
  const total = edgeIndex.length / 2;
  const e = total / 2;
  const pairs: Array<[number, number]> = [];
  for (let i = 0; i < e; i++) {
    pairs.push([edgeIndex[i], edgeIndex[total + i]]);
  }
  return pairs;
}
