export {
  meanErrorsByN,
  parseBundleCsv,
  parseErrorsCsv,
  parseFitCsv,
  splitCsv,
  type PowerLawFit,
  type SweepCell,
  type TrajectoryBundle,
} from "./csv.js";
export { fitLegendLabel, renderErrorCurve, type ErrorCurveOptions } from "./errorCurve.js";
export {
  DEFAULT_PITCH,
  DEFAULT_YAW,
  project3d,
  renderPhasePortrait,
  type PortraitOptions,
} from "./phasePortrait.js";
export { extent, formatTick, linearScale, linearTicks, logScale, logTicks, pad, padLog } from "./scale.js";
export { run } from "./cli.js";
