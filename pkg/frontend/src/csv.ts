/**
 * Readers for the CSV artifacts the kedmd package writes.
 *
 * Three formats are understood:
 *  - errors.csv        columns N,repeat,error (one row per sweep cell)
 *  - fit.csv           columns N,bound,A,B,delta (A/B/delta repeated per row)
 *  - trajectory CSVs   columns realization,step,x0..x{d-1}; the ensemble
 *                      mean carries realization id -1
 */

export interface SweepCell {
  n: number;
  repeat: number;
  error: number;
}

export interface PowerLawFit {
  /** Bound-curve samples (N, bound value). */
  points: { n: number; bound: number }[];
  /** Fitted amplitude A of error ~ A * N**B (NaN when not fitted). */
  amplitude: number;
  /** Fitted exponent B (NaN when not fitted). */
  exponent: number;
  /** Failure level delta the bound curve was evaluated at. */
  delta: number;
}

export interface TrajectoryBundle {
  /** realizations[r][k] is the state at step k of realization r. */
  realizations: number[][][];
  /** mean[k] is the ensemble mean at step k. */
  mean: number[][];
  dim: number;
}

/** Split CSV text into rows of fields (no quoting: the writers never quote). */
export function splitCsv(text: string): string[][] {
  return text
    .split("\n")
    .filter((line) => line.length > 0)
    .map((line) => line.split(","));
}

function requireHeader(actual: string[] | undefined, expected: string[], what: string): void {
  if (!actual || expected.some((name, i) => actual[i] !== name) || actual.length !== expected.length) {
    throw new Error(`${what}: expected header ${expected.join(",")}, got ${actual?.join(",")}`);
  }
}

function toNumber(field: string | undefined, what: string): number {
  if (field === undefined || field === "") {
    throw new Error(`${what}: missing numeric field`);
  }
  const value = Number(field);
  // "nan" (Python's float repr) legitimately parses to NaN in fit columns
  if (Number.isNaN(value) && field !== "nan" && field !== "NaN") {
    throw new Error(`${what}: not a number: ${field}`);
  }
  return value;
}

/** Parse an errors.csv produced by a sweep. */
export function parseErrorsCsv(text: string): SweepCell[] {
  const rows = splitCsv(text);
  requireHeader(rows[0], ["N", "repeat", "error"], "errors.csv");
  const cells = rows.slice(1).map((row, i) => ({
    n: toNumber(row[0], `errors.csv row ${i + 1}`),
    repeat: toNumber(row[1], `errors.csv row ${i + 1}`),
    error: toNumber(row[2], `errors.csv row ${i + 1}`),
  }));
  if (cells.length === 0) {
    throw new Error("errors.csv: no data rows");
  }
  return cells;
}

/** Parse a fit.csv (bound curve plus fitted power-law constants). */
export function parseFitCsv(text: string): PowerLawFit {
  const rows = splitCsv(text);
  requireHeader(rows[0], ["N", "bound", "A", "B", "delta"], "fit.csv");
  const body = rows.slice(1);
  if (body.length === 0) {
    throw new Error("fit.csv: no data rows");
  }
  const first = body[0]!;
  return {
    points: body.map((row, i) => ({
      n: toNumber(row[0], `fit.csv row ${i + 1}`),
      bound: toNumber(row[1], `fit.csv row ${i + 1}`),
    })),
    amplitude: toNumber(first[2], "fit.csv"),
    exponent: toNumber(first[3], "fit.csv"),
    delta: toNumber(first[4], "fit.csv"),
  };
}

/** Parse a trajectory-bundle CSV (realizations plus mean rows). */
export function parseBundleCsv(text: string): TrajectoryBundle {
  const rows = splitCsv(text);
  const header = rows[0];
  if (!header || header[0] !== "realization" || header[1] !== "step") {
    throw new Error(`trajectory csv: unexpected header ${header?.join(",")}`);
  }
  const dim = header.length - 2;
  if (dim < 1 || header.slice(2).some((name, i) => name !== `x${i}`)) {
    throw new Error(`trajectory csv: unexpected state columns ${header.slice(2).join(",")}`);
  }
  const realizations: number[][][] = [];
  const mean: number[][] = [];
  for (let i = 1; i < rows.length; i++) {
    const row = rows[i]!;
    const r = toNumber(row[0], `trajectory csv row ${i}`);
    const k = toNumber(row[1], `trajectory csv row ${i}`);
    const state = row.slice(2).map((v) => toNumber(v, `trajectory csv row ${i}`));
    if (state.length !== dim) {
      throw new Error(`trajectory csv row ${i}: expected ${dim} coordinates`);
    }
    if (r < 0) {
      mean[k] = state;
    } else {
      (realizations[r] ??= [])[k] = state;
    }
  }
  if (mean.length === 0 || realizations.length === 0) {
    throw new Error("trajectory csv: missing mean or realization rows");
  }
  return { realizations, mean, dim };
}

/** Per-N mean of the cell errors, ordered by ascending N. */
export function meanErrorsByN(cells: SweepCell[]): { n: number; error: number }[] {
  const sums = new Map<number, { total: number; count: number }>();
  for (const cell of cells) {
    const entry = sums.get(cell.n) ?? { total: 0, count: 0 };
    entry.total += cell.error;
    entry.count += 1;
    sums.set(cell.n, entry);
  }
  return [...sums.entries()]
    .map(([n, { total, count }]) => ({ n, error: total / count }))
    .sort((a, b) => a.n - b.n);
}
