import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { run, type CliIo } from "../src/cli.js";

function capture(): { io: CliIo; logs: string[]; errors: string[] } {
  const logs: string[] = [];
  const errors: string[] = [];
  return {
    io: { log: (m) => logs.push(m), error: (m) => errors.push(m) },
    logs,
    errors,
  };
}

/** A sweep directory whose cells lie exactly on error = 2.5 * N^(-1/2). */
function writeSweepDir(): string {
  const dir = mkdtempSync(join(tmpdir(), "sweep-"));
  const ns = [25, 50, 100, 200, 400];
  const errors = ["N,repeat,error"];
  const fit = ["N,bound,A,B,delta"];
  for (const n of ns) {
    errors.push(`${n},0,${2.5 * Math.pow(n, -0.5)}`);
    fit.push(`${n},${10 * Math.pow(n, -0.5)},2.5,-0.5,0.1`);
  }
  writeFileSync(join(dir, "errors.csv"), errors.join("\n") + "\n");
  writeFileSync(join(dir, "fit.csv"), fit.join("\n") + "\n");
  return dir;
}

function writeBundleCsv(path: string): void {
  const lines = ["realization,step,x0,x1,x2"];
  for (let r = 0; r < 3; r++) {
    for (let k = 0; k < 4; k++) {
      lines.push(`${r},${k},${0.9 - 0.1 * k},${0.1 + 0.05 * k},${0.05 * k + 0.01 * r}`);
    }
  }
  for (let k = 0; k < 4; k++) {
    lines.push(`-1,${k},${0.9 - 0.1 * k},${0.1 + 0.05 * k},${0.05 * k + 0.01}`);
  }
  writeFileSync(path, lines.join("\n") + "\n");
}

describe("cli run", () => {
  it("renders an error curve from a sweep directory", () => {
    const dir = writeSweepDir();
    const out = join(dir, "curve.svg");
    const { io, logs } = capture();
    expect(run(["--kind", "error-curve", "--in", dir, "--out", out], io)).toBe(0);
    expect(logs[0]).toContain("curve.svg");
    const svg = readFileSync(out, "utf8");
    expect(svg).toContain("<svg xmlns=");
    expect(svg).toContain("N^-0.50"); // exact synthetic law shows as -0.50
    expect(svg).toContain('class="bound"');
  });

  it("renders a phase portrait with an overlay bundle", () => {
    const dir = mkdtempSync(join(tmpdir(), "bundle-"));
    const first = join(dir, "true.csv");
    const second = join(dir, "pred.csv");
    writeBundleCsv(first);
    writeBundleCsv(second);
    const out = join(dir, "portrait.svg");
    const { io } = capture();
    expect(
      run(["--kind", "phase-portrait", "--in", first, "--compare", second, "--out", out], io),
    ).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg.split('class="mean"').length - 1).toBe(2);
    expect(svg.split('class="realization"').length - 1).toBe(6);
  });

  it("fails with exit 1 on missing or unknown arguments", () => {
    const { io, errors } = capture();
    expect(run([], io)).toBe(1);
    expect(errors[0]).toMatch(/--kind, --in and --out are required/);
    expect(run(["--kind", "pie", "--in", "x", "--out", "y"], io)).toBe(1);
    expect(run(["--bogus"], io)).toBe(1);
  });

  it("fails with exit 1 when the input is unreadable or malformed", () => {
    const dir = mkdtempSync(join(tmpdir(), "bad-"));
    const { io, errors } = capture();
    expect(
      run(["--kind", "error-curve", "--in", join(dir, "missing"), "--out", join(dir, "o.svg")], io),
    ).toBe(1);
    expect(errors.length).toBe(1);
    const badCsv = join(dir, "bad.csv");
    writeFileSync(badCsv, "a,b\n1,2\n");
    expect(
      run(["--kind", "phase-portrait", "--in", badCsv, "--out", join(dir, "o.svg")], io),
    ).toBe(1);
  });
});
