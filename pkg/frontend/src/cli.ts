#!/usr/bin/env node
/**
 * Render kedmd CSV artifacts to SVG.
 *
 *   kedmd-plot --kind error-curve --in <sweep dir> --out plot.svg
 *   kedmd-plot --kind phase-portrait --in true.csv [--compare pred.csv] --out plot.svg
 *
 * The error-curve input is a sweep output directory holding errors.csv
 * (and, if present, fit.csv for the fitted power law and bound overlay).
 */

import { readFileSync, statSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { parseBundleCsv, parseErrorsCsv, parseFitCsv, type PowerLawFit } from "./csv.js";
import { renderErrorCurve } from "./errorCurve.js";
import { renderPhasePortrait } from "./phasePortrait.js";

export interface CliIo {
  log(message: string): void;
  error(message: string): void;
}

export function run(argv: string[], io: CliIo = { log: console.log, error: console.error }): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        kind: { type: "string" },
        in: { type: "string" },
        compare: { type: "string" },
        out: { type: "string" },
        title: { type: "string" },
      },
      allowPositionals: false,
    });
  } catch (err) {
    io.error(`error: ${(err as Error).message}`);
    return 1;
  }
  const { kind, in: input, compare, out, title } = parsed.values;
  if (!kind || !input || !out) {
    io.error("error: --kind, --in and --out are required " +
      "(kinds: error-curve, phase-portrait)");
    return 1;
  }

  let svg: string;
  try {
    if (kind === "error-curve") {
      svg = errorCurveFromDir(input, title);
    } else if (kind === "phase-portrait") {
      const bundles = [parseBundleCsv(readFileSync(input, "utf8"))];
      if (compare) {
        bundles.push(parseBundleCsv(readFileSync(compare, "utf8")));
      }
      svg = renderPhasePortrait(bundles, { title });
    } else {
      io.error(`error: unknown --kind ${kind} (kinds: error-curve, phase-portrait)`);
      return 1;
    }
    writeFileSync(out, svg);
  } catch (err) {
    io.error(`error: ${(err as Error).message}`);
    return 1;
  }
  io.log(`wrote ${out}`);
  return 0;
}

function errorCurveFromDir(input: string, title: string | undefined): string {
  const dir = statSync(input).isDirectory();
  const errorsPath = dir ? join(input, "errors.csv") : input;
  const cells = parseErrorsCsv(readFileSync(errorsPath, "utf8"));
  let fit: PowerLawFit | null = null;
  if (dir) {
    try {
      fit = parseFitCsv(readFileSync(join(input, "fit.csv"), "utf8"));
    } catch {
      fit = null; // errors.csv alone still renders; the overlays are optional
    }
  }
  return renderErrorCurve(cells, fit, { title });
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
