/**
 * Error-vs-N plot: per-cell scatter, per-N mean, fitted power law and the
 * theoretical bound curve, drawn twice -- linear axes and log-log axes.
 */

import { meanErrorsByN, type PowerLawFit, type SweepCell } from "./csv.js";
import { extent, formatTick, linearScale, logScale, pad, padLog, type Scale } from "./scale.js";
import { element, polylinePoints, svgDocument, text } from "./svg.js";

export interface ErrorCurveOptions {
  title?: string;
  width?: number;
  height?: number;
}

const COLORS = {
  cell: "#9ecae1",
  mean: "#2171b5",
  fit: "#e6550d",
  bound: "#31a354",
  axis: "#444444",
  grid: "#dddddd",
};

const PANEL = { width: 380, height: 280, left: 64, top: 56, gap: 60, bottom: 46 };

interface Panel {
  x: Scale;
  y: Scale;
  originX: number;
  originY: number;
}

function panelScales(
  kind: "linear" | "log",
  originX: number,
  originY: number,
  ns: number[],
  values: number[],
): Panel {
  if (kind === "linear") {
    const x = linearScale(pad(extent(ns), 0.06), [originX, originX + PANEL.width]);
    const y = linearScale(pad([0, extent(values)[1]], 0.06), [originY + PANEL.height, originY]);
    return { x, y, originX, originY };
  }
  const x = logScale(padLog(extent(ns), 1.15), [originX, originX + PANEL.width]);
  const y = logScale(padLog(extent(values), 1.4), [originY + PANEL.height, originY]);
  return { x, y, originX, originY };
}

function axes(panel: Panel, xLabel: string, yLabel: string, subtitle: string): string[] {
  const { x, y, originX, originY } = panel;
  const bottom = originY + PANEL.height;
  const parts: string[] = [];
  for (const tick of x.ticks()) {
    const px = x(tick);
    parts.push(
      element("line", { x1: px, y1: originY, x2: px, y2: bottom, stroke: COLORS.grid, "stroke-width": 1 }),
      text(formatTick(tick), { x: px, y: bottom + 16, "text-anchor": "middle", "font-size": 11, fill: COLORS.axis }),
    );
  }
  for (const tick of y.ticks()) {
    const py = y(tick);
    parts.push(
      element("line", { x1: originX, y1: py, x2: originX + PANEL.width, y2: py, stroke: COLORS.grid, "stroke-width": 1 }),
      text(formatTick(tick), { x: originX - 6, y: py + 4, "text-anchor": "end", "font-size": 11, fill: COLORS.axis }),
    );
  }
  parts.push(
    element("rect", {
      x: originX, y: originY, width: PANEL.width, height: PANEL.height,
      fill: "none", stroke: COLORS.axis, "stroke-width": 1,
    }),
    text(xLabel, { x: originX + PANEL.width / 2, y: bottom + 34, "text-anchor": "middle", "font-size": 12, fill: COLORS.axis }),
    text(yLabel, {
      x: originX - 46, y: originY + PANEL.height / 2, "text-anchor": "middle", "font-size": 12, fill: COLORS.axis,
      transform: `rotate(-90 ${originX - 46} ${originY + PANEL.height / 2})`,
    }),
    text(subtitle, { x: originX + PANEL.width / 2, y: originY - 8, "text-anchor": "middle", "font-size": 12, fill: COLORS.axis }),
  );
  return parts;
}

function layers(panel: Panel, cells: SweepCell[], fit: PowerLawFit | null, logPanel: boolean): string[] {
  const { x, y } = panel;
  const inY = (v: number) => (!logPanel || v > 0) && v >= Math.min(...y.domain) && v <= Math.max(...y.domain);
  const parts: string[] = [];

  for (const cell of cells) {
    if (!inY(cell.error)) continue;
    parts.push(
      element("circle", { cx: x(cell.n), cy: y(cell.error), r: 2.5, fill: COLORS.cell, class: "cell" }),
    );
  }

  const means = meanErrorsByN(cells).filter((m) => inY(m.error));
  parts.push(
    element("polyline", {
      points: polylinePoints(means.map((m) => [x(m.n), y(m.error)])),
      fill: "none", stroke: COLORS.mean, "stroke-width": 2, class: "mean",
    }),
  );

  if (fit !== null && Number.isFinite(fit.exponent) && Number.isFinite(fit.amplitude)) {
    const [nLo, nHi] = extent(cells.map((c) => c.n));
    const samples: [number, number][] = [];
    for (let i = 0; i <= 60; i++) {
      const n = logPanel
        ? nLo * Math.pow(nHi / nLo, i / 60)
        : nLo + ((nHi - nLo) * i) / 60;
      const value = fit.amplitude * Math.pow(n, fit.exponent);
      if (inY(value)) samples.push([x(n), y(value)]);
    }
    parts.push(
      element("polyline", {
        points: polylinePoints(samples),
        fill: "none", stroke: COLORS.fit, "stroke-width": 1.5, "stroke-dasharray": "6 3", class: "fit",
      }),
    );
  }

  if (fit !== null && fit.points.length > 0) {
    const bound = fit.points.filter((p) => inY(p.bound)).sort((a, b) => a.n - b.n);
    if (bound.length > 0) {
      parts.push(
        element("polyline", {
          points: polylinePoints(bound.map((p) => [x(p.n), y(p.bound)])),
          fill: "none", stroke: COLORS.bound, "stroke-width": 1.5, class: "bound",
        }),
      );
    }
  }
  return parts;
}

/** One-line legend entry: "A.BBB x N^(-0.XX)" with the fitted constants. */
export function fitLegendLabel(fit: PowerLawFit): string {
  if (!Number.isFinite(fit.exponent) || !Number.isFinite(fit.amplitude)) {
    return "fit: n/a";
  }
  return `fit ${Number(fit.amplitude.toPrecision(3))}·N^${fit.exponent.toFixed(2)}`;
}

function legend(fit: PowerLawFit | null, xRight: number, yTop: number): string[] {
  const entries: { label: string; color: string; dashed?: boolean; dot?: boolean }[] = [
    { label: "per-cell error", color: COLORS.cell, dot: true },
    { label: "mean per N", color: COLORS.mean },
  ];
  if (fit !== null) {
    entries.push({ label: fitLegendLabel(fit), color: COLORS.fit, dashed: true });
    entries.push({ label: `bound (delta=${formatTick(fit.delta)})`, color: COLORS.bound });
  }
  const parts: string[] = [];
  let yCursor = yTop;
  for (const entry of entries) {
    const swatchX = xRight - 170;
    if (entry.dot) {
      parts.push(element("circle", { cx: swatchX + 11, cy: yCursor - 4, r: 2.5, fill: entry.color }));
    } else {
      parts.push(
        element("line", {
          x1: swatchX, y1: yCursor - 4, x2: swatchX + 22, y2: yCursor - 4,
          stroke: entry.color, "stroke-width": 2,
          ...(entry.dashed ? { "stroke-dasharray": "6 3" } : {}),
        }),
      );
    }
    parts.push(text(entry.label, { x: swatchX + 28, y: yCursor, "font-size": 11, fill: COLORS.axis, class: "legend" }));
    yCursor += 16;
  }
  return parts;
}

/** Render a sweep (cells plus optional fit/bound info) as a standalone SVG. */
export function renderErrorCurve(
  cells: SweepCell[],
  fit: PowerLawFit | null = null,
  options: ErrorCurveOptions = {},
): string {
  if (cells.length === 0) {
    throw new Error("error-curve: no sweep cells to draw");
  }
  const width = options.width ?? 2 * PANEL.width + 2 * PANEL.left + PANEL.gap;
  const height = options.height ?? PANEL.height + PANEL.top + PANEL.bottom;
  const title = options.title ?? "Trajectory error vs training sample count";

  const ns = cells.map((c) => c.n);
  const values = cells.map((c) => c.error);
  const boundValues = fit?.points.map((p) => p.bound) ?? [];

  const linear = panelScales("linear", PANEL.left, PANEL.top, ns, [...values, ...boundValues]);
  const positives = [...values, ...boundValues].filter((v) => v > 0);
  const logOriginX = PANEL.left + PANEL.width + PANEL.gap + PANEL.left / 2;
  const parts: string[] = [
    text(title, { x: width / 2, y: 22, "text-anchor": "middle", "font-size": 15, fill: COLORS.axis, class: "title" }),
    ...axes(linear, "N", "error", "linear"),
    ...layers(linear, cells, fit, false),
  ];
  if (positives.length > 0) {
    const loglog = panelScales("log", logOriginX, PANEL.top, ns, positives);
    parts.push(...axes(loglog, "N", "error", "log-log"), ...layers(loglog, cells, fit, true));
  }
  parts.push(...legend(fit, width - 16, 40));
  return svgDocument(width, height, parts);
}
