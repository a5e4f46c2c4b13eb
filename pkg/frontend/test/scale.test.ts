import { describe, expect, it } from "vitest";

import {
  extent,
  formatTick,
  linearScale,
  linearTicks,
  logScale,
  logTicks,
  pad,
  padLog,
} from "../src/scale.js";

describe("linearScale", () => {
  it("maps domain endpoints onto range endpoints", () => {
    const scale = linearScale([0, 10], [100, 500]);
    expect(scale(0)).toBe(100);
    expect(scale(10)).toBe(500);
    expect(scale(5)).toBe(300);
  });

  it("supports inverted ranges (screen y axes)", () => {
    const scale = linearScale([0, 1], [200, 0]);
    expect(scale(0)).toBe(200);
    expect(scale(1)).toBe(0);
    expect(scale(0.25)).toBe(150);
  });
});

describe("logScale", () => {
  it("maps decades evenly", () => {
    const scale = logScale([1, 100], [0, 200]);
    expect(scale(1)).toBeCloseTo(0, 12);
    expect(scale(10)).toBeCloseTo(100, 12);
    expect(scale(100)).toBeCloseTo(200, 12);
  });

  it("rejects non-positive domains", () => {
    expect(() => logScale([0, 10], [0, 1])).toThrow(/positive/);
    expect(() => logScale([-1, 10], [0, 1])).toThrow(/positive/);
  });
});

describe("ticks", () => {
  it("linear ticks use 1/2/5 steps and cover the span", () => {
    expect(linearTicks(0, 10, 5)).toEqual([0, 2, 4, 6, 8, 10]);
    expect(linearTicks(0, 1, 5)).toEqual([0, 0.2, 0.4, 0.6, 0.8, 1].map((v) => expect.closeTo(v, 12)));
    expect(linearTicks(3, 3, 5)).toEqual([3]);
  });

  it("log ticks are the powers of ten in range", () => {
    expect(logTicks(0.01, 100)).toEqual([0.01, 0.1, 1, 10, 100]);
    expect(logTicks(25, 800)).toEqual([100]);
  });
});

describe("formatTick", () => {
  it("prints moderate magnitudes plainly and extremes as exponents", () => {
    expect(formatTick(0)).toBe("0");
    expect(formatTick(25)).toBe("25");
    expect(formatTick(0.25)).toBe("0.25");
    expect(formatTick(1e-15)).toBe("1e-15");
    expect(formatTick(200000)).toBe("2·1e5");
  });
});

describe("extent / pad", () => {
  it("finds min and max", () => {
    expect(extent([3, -1, 7, 2])).toEqual([-1, 7]);
    expect(() => extent([])).toThrow(/empty/);
  });

  it("pads additively and multiplicatively", () => {
    expect(pad([0, 10], 0.1)).toEqual([-1, 11]);
    expect(padLog([1, 100], 2)).toEqual([0.5, 200]);
  });
});
