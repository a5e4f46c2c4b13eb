/** Axis scales and tick generation for the SVG renderers. */

export interface Scale {
  /** Map a data value to a pixel coordinate. */
  (value: number): number;
  domain: [number, number];
  range: [number, number];
  ticks(count?: number): number[];
}

/** Linear scale mapping [d0, d1] onto [r0, r1]. */
export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.range = range;
  scale.ticks = (count = 5) => linearTicks(d0, d1, count);
  return scale;
}

/** Log10 scale; the domain must be strictly positive. */
export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new Error(`log scale needs a positive domain, got [${d0}, ${d1}]`);
  }
  const inner = linearScale([Math.log10(d0), Math.log10(d1)], range);
  const scale = ((value: number) => inner(Math.log10(value))) as Scale;
  scale.domain = domain;
  scale.range = range;
  scale.ticks = () => logTicks(d0, d1);
  return scale;
}

/** Round-valued ticks covering [lo, hi] at a 1/2/5 step. */
export function linearTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const rawStep = (hi - lo) / Math.max(1, count);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 5, 10].map((m) => m * power);
  const step = candidates.find((c) => c >= rawStep) ?? candidates[3]!;
  const first = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = first; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Powers of ten inside [lo, hi] (always at least the two endpoints' decades). */
export function logTicks(lo: number, hi: number): number[] {
  const first = Math.ceil(Math.log10(lo) - 1e-9);
  const last = Math.floor(Math.log10(hi) + 1e-9);
  const ticks: number[] = [];
  for (let e = first; e <= last; e++) {
    ticks.push(Math.pow(10, e));
  }
  return ticks.length > 0 ? ticks : [lo, hi];
}

/** Compact tick label: plain for moderate magnitudes, exponent otherwise. */
export function formatTick(value: number): string {
  if (value === 0) {
    return "0";
  }
  const magnitude = Math.abs(value);
  if (magnitude >= 1e4 || magnitude < 1e-3) {
    const exponent = Math.floor(Math.log10(magnitude));
    const mantissa = value / Math.pow(10, exponent);
    const head = Math.abs(mantissa - 1) < 1e-9 ? "" : `${trim(mantissa)}·`;
    return `${head}1e${exponent}`;
  }
  return trim(value);
}

function trim(value: number): string {
  return String(Number(value.toPrecision(6)));
}

/** [min, max] of an array (throws on empty input). */
export function extent(values: number[]): [number, number] {
  if (values.length === 0) {
    throw new Error("extent of empty array");
  }
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

/** Expand [lo, hi] by a relative margin on both sides. */
export function pad(domain: [number, number], fraction: number): [number, number] {
  const [lo, hi] = domain;
  const span = hi - lo || Math.abs(hi) || 1;
  return [lo - span * fraction, hi + span * fraction];
}

/** Expand a positive [lo, hi] multiplicatively (for log axes). */
export function padLog(domain: [number, number], factor: number): [number, number] {
  const [lo, hi] = domain;
  return [lo / factor, hi * factor];
}
