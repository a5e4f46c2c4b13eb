/**
 * Phase portraits of trajectory bundles.
 *
 * Three-dimensional states are projected orthographically at a fixed
 * viewing angle (yaw around the vertical axis, then pitch); realizations
 * are drawn as thin lines, the ensemble mean as a heavy line. Two bundles
 * (e.g. true system vs fitted surrogate) can be overlaid.
 */

import type { TrajectoryBundle } from "./csv.js";
import { extent, pad } from "./scale.js";
import { element, polylinePoints, svgDocument, text } from "./svg.js";

export interface PortraitOptions {
  title?: string;
  width?: number;
  height?: number;
  /** Yaw/pitch in radians for 3-D inputs. */
  yaw?: number;
  pitch?: number;
  /** Labels for the first and second bundle in the legend. */
  labels?: [string, string];
}

const STYLE = {
  first: { line: "#9ecae1", mean: "#2171b5" },
  second: { line: "#fdae6b", mean: "#e6550d" },
  axis: "#444444",
};

export const DEFAULT_YAW = Math.PI / 6;
export const DEFAULT_PITCH = Math.PI / 9;

/**
 * Orthographic screen coordinates of a 3-D point: rotate by yaw around
 * the x3-axis, tilt by pitch, keep the first two rotated coordinates.
 */
export function project3d(state: number[], yaw: number, pitch: number): [number, number] {
  const [x = 0, y = 0, z = 0] = state;
  const cy = Math.cos(yaw);
  const sy = Math.sin(yaw);
  const cp = Math.cos(pitch);
  const sp = Math.sin(pitch);
  const u = cy * x + sy * y;
  const depth = -sy * x + cy * y;
  const v = cp * z - sp * depth;
  return [u, v];
}

/** Screen coordinates for any state dimension (1-D plots value vs step). */
function planePoint(state: number[], step: number, dim: number, yaw: number, pitch: number): [number, number] {
  if (dim >= 3) {
    return project3d(state, yaw, pitch);
  }
  if (dim === 2) {
    return [state[0] ?? 0, state[1] ?? 0];
  }
  return [step, state[0] ?? 0];
}

function bundlePaths(
  bundle: TrajectoryBundle,
  yaw: number,
  pitch: number,
): { lines: [number, number][][]; mean: [number, number][] } {
  const toPoint = (state: number[], k: number) => planePoint(state, k, bundle.dim, yaw, pitch);
  return {
    lines: bundle.realizations.map((track) => track.map(toPoint)),
    mean: bundle.mean.map(toPoint),
  };
}

/** Render one or two trajectory bundles as a standalone SVG. */
export function renderPhasePortrait(
  bundles: TrajectoryBundle[],
  options: PortraitOptions = {},
): string {
  if (bundles.length < 1 || bundles.length > 2) {
    throw new Error(`phase-portrait: expected 1 or 2 bundles, got ${bundles.length}`);
  }
  const width = options.width ?? 560;
  const height = options.height ?? 520;
  const yaw = options.yaw ?? DEFAULT_YAW;
  const pitch = options.pitch ?? DEFAULT_PITCH;
  const labels = options.labels ?? ["reference", "prediction"];
  const dim = bundles[0]!.dim;
  const title =
    options.title ?? (dim >= 3 ? "Phase portrait (fixed-angle projection)" : "Phase portrait");

  const projected = bundles.map((bundle) => bundlePaths(bundle, yaw, pitch));
  const allPoints = projected.flatMap(({ lines, mean }) => [...lines.flat(), ...mean]);
  const xDomain = pad(extent(allPoints.map((p) => p[0])), 0.07);
  const yDomain = pad(extent(allPoints.map((p) => p[1])), 0.07);

  const plot = { left: 24, top: 48, width: width - 48, height: height - 96 };
  const sx = (v: number) => plot.left + ((v - xDomain[0]) / (xDomain[1] - xDomain[0] || 1)) * plot.width;
  const sy = (v: number) => plot.top + plot.height - ((v - yDomain[0]) / (yDomain[1] - yDomain[0] || 1)) * plot.height;
  const toScreen = (points: [number, number][]) =>
    points.map(([px, py]) => [sx(px), sy(py)] as [number, number]);

  const parts: string[] = [
    text(title, { x: width / 2, y: 24, "text-anchor": "middle", "font-size": 15, fill: STYLE.axis, class: "title" }),
    element("rect", {
      x: plot.left, y: plot.top, width: plot.width, height: plot.height,
      fill: "none", stroke: STYLE.axis, "stroke-width": 1,
    }),
  ];

  projected.forEach(({ lines, mean }, i) => {
    const style = i === 0 ? STYLE.first : STYLE.second;
    for (const line of lines) {
      parts.push(
        element("polyline", {
          points: polylinePoints(toScreen(line)),
          fill: "none", stroke: style.line, "stroke-width": 1, opacity: 0.55, class: "realization",
        }),
      );
    }
    parts.push(
      element("polyline", {
        points: polylinePoints(toScreen(mean)),
        fill: "none", stroke: style.mean, "stroke-width": 2.5, class: "mean",
      }),
    );
    const start = toScreen(mean.slice(0, 1))[0]!;
    parts.push(element("circle", { cx: start[0], cy: start[1], r: 4, fill: style.mean, class: "start" }));
  });

  bundles.forEach((_, i) => {
    const style = i === 0 ? STYLE.first : STYLE.second;
    const y = height - 40 + i * 18;
    parts.push(
      element("line", { x1: plot.left, y1: y - 4, x2: plot.left + 22, y2: y - 4, stroke: style.mean, "stroke-width": 2.5 }),
      text(`${labels[i] ?? `bundle ${i}`} (mean + ${projected[i]!.lines.length} runs)`, {
        x: plot.left + 28, y, "font-size": 11, fill: STYLE.axis, class: "legend",
      }),
    );
  });
  if (dim >= 3) {
    parts.push(
      text(`view: yaw ${(yaw * 180 / Math.PI).toFixed(0)}°, pitch ${(pitch * 180 / Math.PI).toFixed(0)}°`, {
        x: width - 24, y: height - 22, "text-anchor": "end", "font-size": 10, fill: STYLE.axis,
      }),
    );
  }
  return svgDocument(width, height, parts);
}
